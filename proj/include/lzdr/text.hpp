#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>

namespace lzdr {

/// 1-based text position. Valid positions of a text of length n are [1..n];
/// n+1 denotes the (empty) suffix after the last byte.
using Position = std::size_t;
using Length = std::size_t;
using FactorIndex = std::size_t;

inline constexpr Position kUnbounded = std::numeric_limits<Position>::max();

/// Read-only view of the input bytes with 1-based indexing.
///
/// Text does not own its storage; the bytes must outlive every Text, trie and
/// parsing that refers to them. Edge labels and factor spans are stored as
/// positions into the text, never as copies.
class Text {
public:
    Text() = default;
    explicit Text(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
    explicit Text(std::string_view s)
        : bytes_(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()) {}

    std::size_t size() const { return bytes_.size(); }
    bool empty() const { return bytes_.empty(); }

    /// T[i] for 1 <= i <= n.
    std::uint8_t operator[](Position i) const { return bytes_[i - 1]; }

    std::span<const std::uint8_t> bytes() const { return bytes_; }

    /// T[b..e] as a string view; empty when b > e.
    std::string_view substr(Position b, Position e) const {
        if (b > e) return {};
        return {reinterpret_cast<const char*>(bytes_.data()) + (b - 1), e - b + 1};
    }

    std::string str() const { return std::string(substr(1, size())); }

private:
    std::span<const std::uint8_t> bytes_;
};

/// Length of the longest common prefix of T[i..i+max_len-1] and
/// T[j..j+max_len-1]. Comparisons past position n fail, so i = n+1 or
/// j = n+1 yields 0.
Length limited_lce(const Text& t, Position i, Position j, Length max_len);

/// Length of the longest common prefix of T[i..] and T[j..].
Length lce(const Text& t, Position i, Position j);

}  // namespace lzdr
