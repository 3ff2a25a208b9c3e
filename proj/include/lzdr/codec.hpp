#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lzdr/factor.hpp"

namespace lzdr {

/// Byte stream layout (all integers unsigned LEB128):
///
///   "LZDR" version scheme flags count
///   per factor: tag [first] [second] [length]
///
/// tag bits 0-1 hold the rule, bits 2-3 and 4-5 the kind of the first and
/// second reference (0 empty, 1 literal, 2 factor), bit 6 marks an explicit
/// length. A reference field holds the literal byte or the factor index. The
/// length is present only when it differs from the full length of the rule's
/// references (always for repetitions).
///
/// The greedy reference table of stdflex and altmax is not stored; the
/// decoder recomputes it from the bytes decoded so far.
inline constexpr std::uint8_t kFormatVersion = 1;

class DecodeError : public std::runtime_error {
public:
    enum class Kind {
        malformed_header,
        unexpected_end,
        forward_reference,
        invalid_length,
        malformed_factor,
        trailing_data,
    };

    DecodeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::vector<std::uint8_t> encode(const Parsing& p);

/// Size of encode(p) without building it.
std::size_t encoded_size(const Parsing& p);

struct Decoded {
    std::string text;
    Parsing parsing;
};

/// Rebuilds the text and the parsing; throws DecodeError.
Decoded decode_parsing(std::span<const std::uint8_t> bytes);

/// Rebuilds the text; throws DecodeError.
std::string decode(std::span<const std::uint8_t> bytes);

}  // namespace lzdr
