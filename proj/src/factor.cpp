#include "lzdr/factor.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lzdr {

namespace {

constexpr std::array<std::string_view, 9> kNames = {"lzd",   "lzd+",    "lzdr",    "lz78",  "lzw",
                                                    "lz78r", "stdflex", "altflex", "altmax"};

std::string literal_text(std::uint8_t c) {
    if (c >= 0x21 && c < 0x7f) return std::string(1, static_cast<char>(c));
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02X", c);
    return buf;
}

Length reference_length(const Parsing& p, const Reference& r) {
    switch (r.kind) {
        case Reference::Kind::empty: return 0;
        case Reference::Kind::literal: return 1;
        case Reference::Kind::factor: return reference_span(p, r.value).length();
    }
    return 0;
}

}  // namespace

std::string_view scheme_name(Scheme s) { return kNames[static_cast<std::size_t>(s)]; }

std::optional<Scheme> scheme_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<Scheme>(i);
    }
    if (name == "lzdp") return Scheme::lzdp;
    return std::nullopt;
}

bool repetition_family(Scheme s) {
    return s == Scheme::lzdr || s == Scheme::stdflex || s == Scheme::altflex || s == Scheme::altmax;
}

bool uses_reference_table(Scheme s) { return s == Scheme::stdflex || s == Scheme::altmax; }

Span reference_span(const Parsing& p, FactorIndex y) {
    if (uses_reference_table(p.scheme)) return p.references.at(y - 1);
    const Factor& f = p.factors.at(y - 1);
    return {f.begin, f.end()};
}

std::string reference_string(const Text& t, const Parsing& p, const Reference& r) {
    switch (r.kind) {
        case Reference::Kind::empty: return {};
        case Reference::Kind::literal: return std::string(1, static_cast<char>(r.value));
        case Reference::Kind::factor: {
            const Span s = reference_span(p, r.value);
            return std::string(t.substr(s.begin, s.end));
        }
    }
    return {};
}

std::string factor_string(const Text& t, const Parsing& p, const Factor& f) {
    std::string a = reference_string(t, p, f.first);
    switch (f.rule) {
        case Rule::combination: a += reference_string(t, p, f.second); break;
        case Rule::truncation: break;
        case Rule::repetition: {
            if (a.empty()) return {};
            std::string out(f.length, '\0');
            for (Length j = 0; j < f.length; ++j) out[j] = a[j % a.size()];
            return out;
        }
    }
    if (a.size() > f.length) a.resize(f.length);
    return a;
}

std::string check_parsing(const Text& t, const Parsing& p) {
    const bool table = uses_reference_table(p.scheme);
    for (std::size_t y = 0; y < p.references.size(); ++y) {
        const Span s = p.references[y];
        if (s.begin < 1 || s.end < s.begin || s.end > t.size()) {
            return "reference R" + std::to_string(y + 1) + " is not a span of the text";
        }
    }
    Position k = 1;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        const Factor& f = p.factors[i];
        const FactorIndex x = i + 1;
        const std::string where = "F" + std::to_string(x) + ": ";
        if (f.begin != k) return where + "does not start where the previous factor ended";
        if (f.length == 0 || f.end() > t.size()) return where + "bad length";
        for (const Reference* r : {&f.first, &f.second}) {
            if (r->is_literal() && r->value > 0xff) return where + "literal out of range";
            if (!r->is_factor()) continue;
            const FactorIndex y = r->value;
            if (y == 0) return where + "factor reference 0";
            if (table) {
                if (y > p.references.size()) return where + "unknown reference";
                if (p.references[y - 1].end >= f.begin) return where + "reference ends too late";
                if (p.scheme == Scheme::altmax && y >= x) return where + "forward reference";
            } else if (y >= x) {
                return where + "forward reference";
            }
        }
        const Length a = reference_length(p, f.first);
        const Length b = reference_length(p, f.second);
        if (f.first.is_empty()) return where + "empty first reference";
        switch (f.rule) {
            case Rule::combination:
                if (f.length > a + b) return where + "combination longer than its parts";
                break;
            case Rule::truncation:
                if (!f.first.is_factor() || !f.second.is_empty() || f.length > a) {
                    return where + "invalid truncation";
                }
                break;
            case Rule::repetition:
                if (!f.second.is_empty() || f.length < 2) return where + "invalid repetition";
                break;
        }
        if (factor_string(t, p, f) != t.substr(f.begin, f.end())) return where + "rule does not reproduce span";
        k = f.end() + 1;
    }
    if (k != t.size() + 1) return "factors do not cover the text";
    return {};
}

std::string describe(const Parsing& p, const Factor& f) {
    const char letter = uses_reference_table(p.scheme) ? 'R' : 'F';
    auto ref = [&](const Reference& r) {
        switch (r.kind) {
            case Reference::Kind::empty: return std::string(1, letter) + "0";
            case Reference::Kind::literal: return literal_text(static_cast<std::uint8_t>(r.value));
            case Reference::Kind::factor: return std::string(1, letter) + std::to_string(r.value);
        }
        return std::string();
    };
    const std::string range = "[1.." + std::to_string(f.length) + "]";
    switch (f.rule) {
        case Rule::combination: {
            std::string s = "(" + ref(f.first) + "," + ref(f.second) + ")";
            if (f.length < reference_length(p, f.first) + reference_length(p, f.second)) s += range;
            return s;
        }
        case Rule::truncation:
            if (repetition_family(p.scheme)) return "(" + ref(f.first) + ")^1" + range;
            return ref(f.first) + range;
        case Rule::repetition: {
            if (f.first.is_literal()) return ref(f.first) + "^" + std::to_string(f.length);
            const Length unit = reference_length(p, f.first);
            const Length reps = (f.length + unit - 1) / unit;
            std::string s = "(" + ref(f.first) + ")^" + std::to_string(reps);
            if (reps * unit != f.length) s += range;
            return s;
        }
    }
    return {};
}

}  // namespace lzdr
