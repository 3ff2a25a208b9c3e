#include "lzdr/collage.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lzdr {

namespace {

class Builder {
public:
    Token add(Assignment a, std::size_t length) {
        cs.dictionary.push_back(a);
        lengths.push_back(length);
        return cs.dictionary.size();
    }

    Token primitive(std::uint8_t c) {
        if (prims[c] == 0) prims[c] = add({Assignment::Op::primitive, c}, 1);
        return prims[c];
    }

    Token epsilon() {
        if (eps == 0) {
            Assignment a;
            a.epsilon = true;
            eps = add(a, 0);
        }
        return eps;
    }

    Token prefix(Token x, std::size_t len) {
        if (len == lengths[x - 1]) return x;
        return add({Assignment::Op::suffix_truncation, 0, false, x, len}, len);
    }

    CollageSystem cs;
    std::vector<std::size_t> lengths;
    std::array<Token, 256> prims{};
    Token eps = 0;
};

}  // namespace

CollageSystem to_collage(const Parsing& p) {
    if (p.scheme != Scheme::lzd && p.scheme != Scheme::lzdp && p.scheme != Scheme::lzdr) {
        throw std::invalid_argument("to_collage: only LZD, LZD+ and LZDR parsings are supported");
    }
    Builder b;
    std::vector<Token> of_factor;
    auto token = [&](const Reference& r) -> Token {
        switch (r.kind) {
            case Reference::Kind::empty: return b.epsilon();
            case Reference::Kind::literal: return b.primitive(static_cast<std::uint8_t>(r.value));
            case Reference::Kind::factor: return of_factor.at(r.value - 1);
        }
        return 0;
    };
    for (const Factor& f : p.factors) {
        Token x = 0;
        switch (f.rule) {
            case Rule::combination: {
                const Token a = token(f.first);
                if (f.second.is_empty()) {
                    x = b.prefix(a, f.length);
                } else {
                    const Token c = token(f.second);
                    const std::size_t len = b.lengths[a - 1] + b.lengths[c - 1];
                    x = b.prefix(b.add({Assignment::Op::concatenation, 0, false, a, c}, len), f.length);
                }
                break;
            }
            case Rule::truncation: x = b.prefix(token(f.first), f.length); break;
            case Rule::repetition: {
                const Token a = token(f.first);
                const std::size_t unit = b.lengths[a - 1];
                const std::size_t reps = (f.length + unit - 1) / unit;
                const Token r = reps == 1 ? a : b.add({Assignment::Op::repetition, 0, false, a, reps}, reps * unit);
                x = b.prefix(r, f.length);
                break;
            }
        }
        of_factor.push_back(x);
        b.cs.sequence.push_back(x);
    }
    return std::move(b.cs);
}

std::string expand(const CollageSystem& cs) {
    std::vector<std::string> value(cs.dictionary.size());
    for (std::size_t k = 0; k < cs.dictionary.size(); ++k) {
        const Assignment& a = cs.dictionary[k];
        auto at = [&](Token i) -> const std::string& {
            if (i == 0 || i > k) throw std::invalid_argument("expand: assignment references a later token");
            return value[i - 1];
        };
        switch (a.op) {
            case Assignment::Op::primitive:
                value[k] = a.epsilon ? std::string() : std::string(1, static_cast<char>(a.byte));
                break;
            case Assignment::Op::concatenation: value[k] = at(a.i) + at(static_cast<Token>(a.j)); break;
            case Assignment::Op::prefix_truncation: value[k] = at(a.i).substr(a.j - 1); break;
            case Assignment::Op::suffix_truncation: value[k] = at(a.i).substr(0, a.j); break;
            case Assignment::Op::repetition:
                for (std::size_t r = 0; r < a.j; ++r) value[k] += at(a.i);
                break;
        }
    }
    std::string out;
    for (const Token x : cs.sequence) out += value.at(x - 1);
    return out;
}

std::string dump(const CollageSystem& cs) {
    std::ostringstream out;
    for (std::size_t k = 0; k < cs.dictionary.size(); ++k) {
        const Assignment& a = cs.dictionary[k];
        out << 'X' << k + 1 << " = ";
        switch (a.op) {
            case Assignment::Op::primitive:
                if (a.epsilon) {
                    out << "''";
                } else if (a.byte >= 0x20 && a.byte < 0x7f && a.byte != '\'' && a.byte != '\\') {
                    out << '\'' << static_cast<char>(a.byte) << '\'';
                } else {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "'\\x%02X'", a.byte);
                    out << buf;
                }
                break;
            case Assignment::Op::concatenation: out << 'X' << a.i << " X" << a.j; break;
            case Assignment::Op::prefix_truncation: out << 'X' << a.i << '[' << a.j << "..]"; break;
            case Assignment::Op::suffix_truncation: out << 'X' << a.i << "[1.." << a.j << ']'; break;
            case Assignment::Op::repetition: out << "(X" << a.i << ")^" << a.j; break;
        }
        out << '\n';
    }
    out << 'S' << " =";
    for (const Token x : cs.sequence) out << " X" << x;
    out << '\n';
    return out.str();
}

}  // namespace lzdr
