#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nv/address.hpp"

namespace nv {

/// An exact dyadic rational num / 2^log_den, kept in lowest terms
/// (num odd, or num == 0, or log_den == 0).  No floating point anywhere.
struct Dyadic {
    unsigned __int128 num = 0;
    unsigned log_den = 0;

    static Dyadic zero() { return {}; }
    static Dyadic one() { return {1, 0}; }
    static Dyadic half_power(unsigned e) { return Dyadic{1, e}.normalized(); }

    Dyadic normalized() const {
        Dyadic d = *this;
        while (d.log_den > 0 && d.num % 2 == 0) {
            d.num /= 2;
            --d.log_den;
        }
        return d;
    }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.log_den == b.log_den;
    }

    bool is_one() const { return num == 1 && log_den == 0; }

    std::string str() const;
};

/// Exact measure of the basic open set indexed by the address: 2^(-total length).
Dyadic measure(const Address& a);

enum class PartitionStatus { ok, overlap, gap };

/// Checks whether the cells tile n-dimensional Cantor space exactly:
/// pairwise incomparable and measures summing to 1.  Mixed arities or an
/// empty list throw; overlap/gap are reported as a status.
PartitionStatus validate_partition(std::span<const Address> cells);

/// The 4^n addresses whose coordinates all have length 2, ordered
/// lexicographically on the concatenation of their coordinates.  Index i in
/// this list is the standard enumeration used by the finite presentation.
std::vector<Address> enumerate_delta(int n);

/// Number of length-2-everywhere addresses for arity n, i.e. 4^n.
std::size_t delta_size(int n);

/// Index of a member of the enumeration above; throws if a coordinate does
/// not have length 2.
std::size_t delta_index(const Address& a);

/// The i-th address of the enumeration above, computed directly.
Address delta_at(int n, std::size_t index);

/// All addresses of arity n with total coordinate length <= bound, in a
/// fixed deterministic order: by total length, then earlier coordinates
/// take the longer share first, words of equal length lexicographic.
std::vector<Address> enumerate_addresses(int n, int total_length_bound);

} // namespace nv
