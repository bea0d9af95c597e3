#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "nv/errors.hpp"
#include "nv/word.hpp"

namespace nv {

/// Weight of an address: m is the length of the longest coordinate, k is
/// how many coordinates attain that length.  Ordered lexicographically.
struct Weight {
    int m = 0;
    int k = 0;

    friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
};

/// An n-tuple of finite binary words; indexes the basic open set of points
/// of n-dimensional Cantor space having it as a coordinate-wise prefix.
///
/// Coordinates are addressed 1-based, matching the usual index range
/// 1 <= d <= n for dimensions.  Arity is fixed per value and every binary
/// operation checks it: elements of mV and nV must never mix.
class Address {
public:
    static constexpr int kMaxArity = 6;

    Address() = default;

    explicit Address(std::span<const Word> coords) {
        check_arity_value(static_cast<int>(coords.size()));
        n_ = static_cast<std::uint8_t>(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            w_[i] = coords[i];
    }

    Address(std::initializer_list<Word> coords)
        : Address(std::span<const Word>(coords.begin(), coords.size())) {}

    /// The address with every coordinate empty.
    static Address root(int n) {
        check_arity_value(n);
        Address a;
        a.n_ = static_cast<std::uint8_t>(n);
        return a;
    }

    /// The address whose only non-empty coordinate is w, in position d.
    static Address unit(int n, int d, Word w) {
        Address a = root(n);
        a.check_dim(d);
        a.w_[d - 1] = w;
        return a;
    }

    constexpr int arity() const { return n_; }

    const Word& coord(int d) const {
        check_dim(d);
        return w_[d - 1];
    }

    /// Appends one bit to coordinate d.
    Address append(int d, unsigned bit) const {
        check_dim(d);
        Address a = *this;
        a.w_[d - 1] = a.w_[d - 1].append(bit);
        return a;
    }

    /// Replaces coordinate d.
    Address with_coord(int d, Word w) const {
        check_dim(d);
        Address a = *this;
        a.w_[d - 1] = w;
        return a;
    }

    /// Coordinate-wise concatenation: this followed by other.
    Address concat(const Address& other) const {
        check_same_arity(other);
        Address a = *this;
        for (int i = 0; i < n_; ++i)
            a.w_[i] = a.w_[i].concat(other.w_[i]);
        return a;
    }

    /// The remainder of this address past the given coordinate-wise prefix.
    /// Requires prefix.is_prefix_of(*this).
    Address suffix_after(const Address& prefix) const {
        check_same_arity(prefix);
        Address a = root(n_);
        for (int i = 0; i < n_; ++i)
            a.w_[i] = w_[i].suffix(prefix.w_[i].size());
        return a;
    }

    bool is_prefix_of(const Address& b) const {
        check_same_arity(b);
        for (int i = 0; i < n_; ++i)
            if (!w_[i].is_prefix_of(b.w_[i]))
                return false;
        return true;
    }

    bool incomparable(const Address& b) const {
        check_same_arity(b);
        for (int i = 0; i < n_; ++i)
            if (w_[i].incomparable(b.w_[i]))
                return true;
        return false;
    }

    std::size_t total_length() const {
        std::size_t t = 0;
        for (int i = 0; i < n_; ++i)
            t += w_[i].size();
        return t;
    }

    Weight weight() const {
        int m = 0;
        for (int i = 0; i < n_; ++i)
            m = std::max<int>(m, static_cast<int>(w_[i].size()));
        int k = 0;
        for (int i = 0; i < n_; ++i)
            if (static_cast<int>(w_[i].size()) == m)
                ++k;
        return Weight{m, k};
    }

    friend bool operator==(const Address& a, const Address& b) {
        if (a.n_ != b.n_)
            return false;
        for (int i = 0; i < a.n_; ++i)
            if (!(a.w_[i] == b.w_[i]))
                return false;
        return true;
    }

    /// Total order used only for canonical sorting of cell lists.
    friend bool operator<(const Address& a, const Address& b) {
        if (a.n_ != b.n_)
            return a.n_ < b.n_;
        for (int i = 0; i < a.n_; ++i) {
            if (!(a.w_[i] == b.w_[i]))
                return a.w_[i] < b.w_[i];
        }
        return false;
    }

    /// Textual form "(w1,w2,...,wn)" with "-" for the empty word.
    std::string str() const;

    /// Parses the textual form above.  Throws ParseError.
    static Address parse(std::string_view text);

private:
    static void check_arity_value(int n) {
        if (n < 2 || n > kMaxArity)
            throw ArityMismatch("arity must lie in [2, " + std::to_string(kMaxArity) +
                                "], got " + std::to_string(n));
    }

    void check_dim(int d) const {
        if (d < 1 || d > n_)
            throw BadDimension("coordinate index " + std::to_string(d) +
                               " out of range 1.." + std::to_string(n_));
    }

    void check_same_arity(const Address& b) const {
        if (n_ != b.n_)
            throw ArityMismatch("address arity mismatch: " + std::to_string(n_) + " vs " +
                                std::to_string(b.n_));
    }

    std::array<Word, kMaxArity> w_{};
    std::uint8_t n_ = 0;
};

inline bool addr_prefix(const Address& a, const Address& b) { return a.is_prefix_of(b); }
inline bool addr_incomparable(const Address& a, const Address& b) { return a.incomparable(b); }
inline Address addr_concat(const Address& a, const Address& b) { return a.concat(b); }
inline Weight weight(const Address& a) { return a.weight(); }

} // namespace nv
