#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lzdr/text.hpp"

namespace lzdr {

/// A reference inside a production rule: nothing, one literal byte, or a
/// previous factor (or greedy reference factor, for the flexible schemes).
struct Reference {
    enum class Kind : std::uint8_t { empty, literal, factor };

    Kind kind = Kind::empty;
    std::uint32_t value = 0;

    static Reference empty() { return {}; }
    static Reference literal(std::uint8_t c) { return {Kind::literal, c}; }
    static Reference factor(FactorIndex y) { return {Kind::factor, static_cast<std::uint32_t>(y)}; }

    bool is_empty() const { return kind == Kind::empty; }
    bool is_literal() const { return kind == Kind::literal; }
    bool is_factor() const { return kind == Kind::factor; }

    friend bool operator==(const Reference&, const Reference&) = default;
};

enum class Rule : std::uint8_t { combination, truncation, repetition };

/// One phrase. The string is
///   combination: (first second)[1..length]
///   truncation:  first[1..length]
///   repetition:  (first^inf)[1..length]
/// `second` is empty unless the rule is a combination.
struct Factor {
    Rule rule = Rule::combination;
    Reference first;
    Reference second;
    Length length = 0;
    Position begin = 0;

    Position end() const { return begin + length - 1; }

    friend bool operator==(const Factor&, const Factor&) = default;
};

enum class Scheme : std::uint8_t { lzd, lzdp, lzdr, lz78, lzw, lz78r, stdflex, altflex, altmax };

inline constexpr Scheme kAllSchemes[] = {Scheme::lzd,  Scheme::lzdp,  Scheme::lzdr,
                                         Scheme::lz78, Scheme::lzw,   Scheme::lz78r,
                                         Scheme::stdflex, Scheme::altflex, Scheme::altmax};

std::string_view scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

/// Inclusive span [begin..end] of the text.
struct Span {
    Position begin = 0;
    Position end = 0;

    Length length() const { return end - begin + 1; }

    friend bool operator==(const Span&, const Span&) = default;
};

/// Factors F_1..F_z tiling the text. For stdflex and altmax, factor
/// references index `references` (the greedy factors R_1, R_2, ...);
/// otherwise they index the factors themselves.
struct Parsing {
    Scheme scheme = Scheme::lzd;
    std::vector<Factor> factors;
    std::vector<Span> references;

    std::size_t size() const { return factors.size(); }
};

/// True for the schemes whose factor references point into `references`.
bool uses_reference_table(Scheme s);

/// True for LZDR and its flexible variants, where a truncation is the
/// repetition rule with exponent 1.
bool repetition_family(Scheme s);

/// Span of reference y (1-based).
Span reference_span(const Parsing& p, FactorIndex y);

/// Materializes one reference; the text supplies the bytes of factor spans.
std::string reference_string(const Text& t, const Parsing& p, const Reference& r);

/// Builds the string of factor F_x from its rule.
std::string factor_string(const Text& t, const Parsing& p, const Factor& f);

/// Checks tiling, per-rule bounds, that every reference was available when
/// its factor was emitted, and that every rule reproduces its span. Returns
/// an empty string on success, otherwise a description of the first problem.
std::string check_parsing(const Text& t, const Parsing& p);

/// Renders a factor in the notation of the worked examples, e.g.
/// `(F2,F4)[1..4]`, `c^4`, `(F6)^3[1..5]`. References into the greedy table
/// are written with `R`.
std::string describe(const Parsing& p, const Factor& f);

}  // namespace lzdr
