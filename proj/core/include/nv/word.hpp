#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nv/errors.hpp"

namespace nv {

/// A finite binary word, one coordinate of an address.
///
/// Packed into a single 64-bit value: the low 56 bits hold the bits of the
/// word (first bit in the least significant position), the top 8 bits hold
/// the length.  This keeps comparisons and prefix tests branch-light, which
/// matters in the relation sweeps where billions of word comparisons happen.
class Word {
public:
    static constexpr std::size_t kMaxBits = 56;

    constexpr Word() = default;

    static Word single(unsigned bit) { return Word((bit & 1u), 1); }

    /// Parses "010"-style text; the empty string is the empty word.
    static Word from_string(std::string_view text) {
        Word w;
        for (char ch : text) {
            if (ch != '0' && ch != '1')
                throw Error("invalid character in binary word: '" + std::string(1, ch) + "'");
            w = w.append(ch == '1' ? 1u : 0u);
        }
        return w;
    }

    constexpr std::size_t size() const { return static_cast<std::size_t>(repr_ >> kLenShift); }
    constexpr bool empty() const { return size() == 0; }

    constexpr unsigned bit(std::size_t i) const {
        return static_cast<unsigned>((repr_ >> i) & 1u);
    }
    constexpr unsigned last() const { return bit(size() - 1); }

    Word append(unsigned bit) const {
        std::size_t len = size();
        if (len >= kMaxBits)
            throw WordOverflow("word longer than 56 bits");
        return Word(payload() | (static_cast<std::uint64_t>(bit & 1u) << len), len + 1);
    }

    Word concat(Word other) const {
        std::size_t len = size() + other.size();
        if (len > kMaxBits)
            throw WordOverflow("word longer than 56 bits");
        return Word(payload() | (other.payload() << size()), len);
    }

    /// First k bits.
    constexpr Word prefix(std::size_t k) const {
        return Word(payload() & mask(k), k);
    }

    /// Drops the first k bits.
    constexpr Word suffix(std::size_t k) const {
        return Word(payload() >> k, size() - k);
    }

    constexpr Word drop_last() const { return prefix(size() - 1); }

    constexpr bool is_prefix_of(Word b) const {
        return size() <= b.size() && (b.payload() & mask(size())) == payload();
    }

    constexpr bool incomparable(Word b) const {
        return !is_prefix_of(b) && !b.is_prefix_of(*this);
    }

    friend constexpr bool operator==(Word a, Word b) { return a.repr_ == b.repr_; }

    /// Total order for canonical sorting: bitwise lexicographic, with a
    /// proper prefix ordered before its extensions.
    friend constexpr bool operator<(Word a, Word b) {
        std::size_t common = a.size() < b.size() ? a.size() : b.size();
        std::uint64_t diff = (a.payload() ^ b.payload()) & mask(common);
        if (diff != 0) {
            std::size_t i = static_cast<std::size_t>(__builtin_ctzll(diff));
            return a.bit(i) < b.bit(i);
        }
        return a.size() < b.size();
    }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (std::size_t i = 0; i < size(); ++i)
            s.push_back(static_cast<char>('0' + bit(i)));
        return s;
    }

private:
    constexpr Word(std::uint64_t payload, std::size_t len)
        : repr_(payload | (static_cast<std::uint64_t>(len) << kLenShift)) {}

    static constexpr unsigned kLenShift = 56;

    constexpr std::uint64_t payload() const { return repr_ & mask(kMaxBits); }

    static constexpr std::uint64_t mask(std::size_t k) {
        return k >= 64 ? ~0ull : ((1ull << k) - 1);
    }

    std::uint64_t repr_ = 0;
};

constexpr unsigned complement_bit(unsigned bit) { return bit ^ 1u; }

inline bool word_is_prefix(Word a, Word b) { return a.is_prefix_of(b); }
inline bool word_incomparable(Word a, Word b) { return a.incomparable(b); }

} // namespace nv
