#include "lzdr/codec.hpp"

#include <memory>
#include <optional>

#include "lzdr/flex.hpp"
#include "lzdr/greedy.hpp"
#include "lzdr/radix_trie.hpp"

namespace lzdr {

namespace {

constexpr std::uint8_t kMagic[4] = {'L', 'Z', 'D', 'R'};
constexpr std::uint8_t kExplicitLength = 0x40;
constexpr std::uint64_t kMaxRepetition = std::uint64_t{1} << 40;
constexpr std::size_t kSchemeCount = std::size(kAllSchemes);

std::size_t varint_size(std::uint64_t v) {
    std::size_t s = 1;
    while (v >= 0x80) {
        v >>= 7;
        ++s;
    }
    return s;
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

Length ref_length(const Parsing& p, const Reference& r) {
    if (r.is_factor()) return reference_span(p, r.value).length();
    return r.is_literal() ? 1 : 0;
}

/// Tag byte and whether the length must be written.
std::pair<std::uint8_t, bool> tag_of(const Parsing& p, const Factor& f) {
    Length full = 0;
    switch (f.rule) {
        case Rule::combination: full = ref_length(p, f.first) + ref_length(p, f.second); break;
        case Rule::truncation: full = ref_length(p, f.first); break;
        case Rule::repetition: full = 0; break;
    }
    const bool explicit_length = f.length != full;
    std::uint8_t tag = static_cast<std::uint8_t>(f.rule);
    tag |= static_cast<std::uint8_t>(static_cast<unsigned>(f.first.kind) << 2);
    tag |= static_cast<std::uint8_t>(static_cast<unsigned>(f.second.kind) << 4);
    if (explicit_length) tag |= kExplicitLength;
    return {tag, explicit_length};
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint8_t byte() {
        if (pos_ >= bytes_.size()) throw DecodeError(DecodeError::Kind::unexpected_end, "unexpected end of stream");
        return bytes_[pos_++];
    }

    std::uint64_t varint() {
        std::uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            const std::uint8_t b = byte();
            if (shift == 63 && b > 1) break;
            v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if ((b & 0x80) == 0) return v;
        }
        throw DecodeError(DecodeError::Kind::malformed_factor, "varint overflow");
    }

    bool done() const { return pos_ == bytes_.size(); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

/// Greedy LZDR factors of the decoded prefix. Factors ending before the last
/// decoded byte are final; a factor reaching the last byte is tentative. A
/// flexible factor referencing the tentative factor proves that it ends
/// there.
class StdflexReplay {
public:
    explicit StdflexReplay(const std::string& out) : out_(out), trie_(view_) {}

    void advance() {
        view_ = Text(out_);
        tentative_.reset();
        while (next_ <= out_.size()) {
            const Length len = greedy_len(view_, next_, trie_, {});
            const Position end = next_ + len - 1;
            if (end >= out_.size()) {
                tentative_ = Span{next_, out_.size()};
                return;
            }
            final_.push_back({next_, end});
            trie_.insert(next_, end, final_.size());
            next_ = end + 1;
        }
    }

    std::optional<Span> lookup(FactorIndex y) const {
        if (y >= 1 && y <= final_.size()) return final_[y - 1];
        if (y == final_.size() + 1 && tentative_) return tentative_;
        return std::nullopt;
    }

private:
    const std::string& out_;
    Text view_;
    RadixTrie trie_;
    std::vector<Span> final_;
    Position next_ = 1;
    std::optional<Span> tentative_;
};

/// R_w of altmax: the greedy factor at b(F_w) over the final R_y ending
/// before b(F_w). A pending R_w still reaches the end of the decoded prefix.
class AltmaxReplay {
public:
    explicit AltmaxReplay(const std::string& out) : out_(out), trie_(view_) {}

    void add_start(Position b) {
        begins_.push_back(b);
        ends_.push_back(kUnbounded);
        pending_.push_back(begins_.size());
    }

    void advance() {
        view_ = Text(out_);
        std::vector<FactorIndex> still;
        for (const FactorIndex w : pending_) {
            const Position b = begins_[w - 1];
            const Length len = greedy_len(view_, b, trie_, {b, {}});
            const Position end = b + len - 1;
            if (end >= out_.size()) {
                still.push_back(w);
                continue;
            }
            ends_[w - 1] = end;
            trie_.insert(b, end, w);
        }
        pending_ = std::move(still);
    }

    std::optional<Span> lookup(FactorIndex y) const {
        if (y < 1 || y > begins_.size()) return std::nullopt;
        const Position e = ends_[y - 1];
        return Span{begins_[y - 1], e == kUnbounded ? out_.size() : e};
    }

private:
    const std::string& out_;
    Text view_;
    RadixTrie trie_;
    std::vector<Position> begins_;
    std::vector<Position> ends_;
    std::vector<FactorIndex> pending_;
};

}  // namespace

std::vector<std::uint8_t> encode(const Parsing& p) {
    std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
    out.push_back(kFormatVersion);
    out.push_back(static_cast<std::uint8_t>(p.scheme));
    out.push_back(0);
    put_varint(out, p.factors.size());
    for (const Factor& f : p.factors) {
        const auto [tag, explicit_length] = tag_of(p, f);
        out.push_back(tag);
        if (!f.first.is_empty()) put_varint(out, f.first.value);
        if (!f.second.is_empty()) put_varint(out, f.second.value);
        if (explicit_length) put_varint(out, f.length);
    }
    return out;
}

std::size_t encoded_size(const Parsing& p) {
    std::size_t size = sizeof kMagic + 3 + varint_size(p.factors.size());
    for (const Factor& f : p.factors) {
        const auto [tag, explicit_length] = tag_of(p, f);
        size += 1;
        if (!f.first.is_empty()) size += varint_size(f.first.value);
        if (!f.second.is_empty()) size += varint_size(f.second.value);
        if (explicit_length) size += varint_size(f.length);
    }
    return size;
}

Decoded decode_parsing(std::span<const std::uint8_t> bytes) {
    using K = DecodeError::Kind;
    Reader in(bytes);
    for (const std::uint8_t m : kMagic) {
        if (in.byte() != m) throw DecodeError(K::malformed_header, "bad magic");
    }
    if (in.byte() != kFormatVersion) throw DecodeError(K::malformed_header, "unsupported version");
    const std::uint8_t scheme_id = in.byte();
    if (scheme_id >= kSchemeCount) throw DecodeError(K::malformed_header, "unknown scheme");
    if (in.byte() != 0) throw DecodeError(K::malformed_header, "unknown flags");
    const std::uint64_t count = in.varint();

    Decoded d;
    Parsing& p = d.parsing;
    p.scheme = static_cast<Scheme>(scheme_id);
    std::string& out = d.text;
    const bool table = uses_reference_table(p.scheme);
    auto stdflex = p.scheme == Scheme::stdflex ? std::make_unique<StdflexReplay>(out) : nullptr;
    auto altmax = p.scheme == Scheme::altmax ? std::make_unique<AltmaxReplay>(out) : nullptr;

    for (std::uint64_t x = 1; x <= count; ++x) {
        const Position k = out.size() + 1;
        if (stdflex) stdflex->advance();
        if (altmax) {
            if (x > 1) altmax->add_start(p.factors.back().begin);
            altmax->advance();
        }
        const std::uint8_t tag = in.byte();
        const unsigned rule = tag & 3;
        const unsigned first_kind = (tag >> 2) & 3;
        const unsigned second_kind = (tag >> 4) & 3;
        if ((tag & 0x80) != 0 || rule > 2 || first_kind > 2 || second_kind > 2) {
            throw DecodeError(K::malformed_factor, "bad tag byte");
        }
        Factor f;
        f.rule = static_cast<Rule>(rule);
        f.begin = k;
        std::string parts[2];
        Reference* refs[2] = {&f.first, &f.second};
        const unsigned kinds[2] = {first_kind, second_kind};
        for (int r = 0; r < 2; ++r) {
            refs[r]->kind = static_cast<Reference::Kind>(kinds[r]);
            if (refs[r]->is_empty()) continue;
            const std::uint64_t v = in.varint();
            if (refs[r]->is_literal()) {
                if (v > 0xff) throw DecodeError(K::malformed_factor, "literal out of range");
                refs[r]->value = static_cast<std::uint32_t>(v);
                parts[r] = std::string(1, static_cast<char>(v));
                continue;
            }
            if (v == 0 || v > 0xffffffffu) throw DecodeError(K::forward_reference, "forward reference");
            refs[r]->value = static_cast<std::uint32_t>(v);
            std::optional<Span> span;
            if (stdflex) {
                span = stdflex->lookup(v);
            } else if (altmax) {
                if (v < x) span = altmax->lookup(v);
            } else if (v < x) {
                span = Span{p.factors[v - 1].begin, p.factors[v - 1].end()};
            }
            if (!span) throw DecodeError(K::forward_reference, "forward reference");
            parts[r] = out.substr(span->begin - 1, span->length());
        }
        if (f.first.is_empty()) throw DecodeError(K::malformed_factor, "empty first reference");
        if (f.rule != Rule::combination && !f.second.is_empty()) {
            throw DecodeError(K::malformed_factor, "second reference outside a combination");
        }
        if (f.rule == Rule::truncation && !f.first.is_factor()) {
            throw DecodeError(K::malformed_factor, "truncation of a literal");
        }
        const Length full = f.rule == Rule::combination ? parts[0].size() + parts[1].size()
                          : f.rule == Rule::truncation ? parts[0].size()
                                                       : 0;
        const bool explicit_length = (tag & kExplicitLength) != 0;
        const std::uint64_t len = explicit_length ? in.varint() : full;
        if (f.rule == Rule::repetition) {
            if (!explicit_length || len < 2) throw DecodeError(K::invalid_length, "invalid repetition length");
            if (len > kMaxRepetition) throw DecodeError(K::invalid_length, "repetition length too large");
        } else if (len == 0 || len > full || (explicit_length && len == full)) {
            throw DecodeError(K::invalid_length, "length violates rule bounds");
        }
        f.length = len;
        if (f.rule == Rule::repetition) {
            const std::string& unit = parts[0];
            for (Length j = 0; j < len; ++j) out.push_back(unit[j % unit.size()]);
        } else {
            std::string s = parts[0] + parts[1];
            out.append(s, 0, len);
        }
        p.factors.push_back(f);
    }
    if (!in.done()) throw DecodeError(K::trailing_data, "trailing data after last factor");

    if (table) {
        const Text t(out);
        if (p.scheme == Scheme::stdflex) {
            for (const Factor& r : parse_greedy(t, Scheme::lzdr).factors) p.references.push_back({r.begin, r.end()});
        } else {
            RadixTrie trie(t);
            for (const Factor& f : p.factors) {
                const Length len = greedy_len(t, f.begin, trie, {f.begin, {}});
                p.references.push_back({f.begin, f.begin + len - 1});
                trie.insert(f.begin, f.begin + len - 1, p.references.size());
            }
        }
    }
    return d;
}

std::string decode(std::span<const std::uint8_t> bytes) { return decode_parsing(bytes).text; }

}  // namespace lzdr
