#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lzdr/factor.hpp"
#include "lzdr/text.hpp"

namespace lzdr {

/// Token X_k (1-based) is defined by assignment k-1 of the dictionary.
using Token = std::size_t;

struct Assignment {
    enum class Op : std::uint8_t {
        primitive,          ///< a single byte, or the empty string when `epsilon`
        concatenation,      ///< X_i X_j
        prefix_truncation,  ///< X_i[j..]
        suffix_truncation,  ///< X_i[1..j]
        repetition,         ///< (X_i)^j
    };

    Op op = Op::primitive;
    std::uint8_t byte = 0;
    bool epsilon = false;
    Token i = 0;
    std::size_t j = 0;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct CollageSystem {
    std::vector<Assignment> dictionary;
    std::vector<Token> sequence;

    /// ||D|| + |S|.
    std::size_t size() const { return dictionary.size() + sequence.size(); }
};

/// Collage system of an LZD, LZD+ or LZDR parsing; one token of S per
/// factor and at most four assignments per factor. Byte primitives are
/// shared. Throws std::invalid_argument for other schemes.
CollageSystem to_collage(const Parsing& p);

/// The string S expands to.
std::string expand(const CollageSystem& cs);

/// One assignment per line (`X3 = X1 X2`, `X4 = X3[1..5]`, `X5 = (X2)^3`,
/// `X6 = X4[3..]`, `X1 = 'a'`, `X7 = ''`) followed by `S = X1 X3 ...`.
std::string dump(const CollageSystem& cs);

}  // namespace lzdr
