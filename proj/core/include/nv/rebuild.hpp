#pragma once

#include <map>
#include <utility>

#include "nv/element.hpp"
#include "nv/special.hpp"

namespace nv {

struct RebuildOptions {
    /// Skip this many valid helper grid cells before picking one; used to
    /// test that the construction is independent of the helper choice.
    /// Non-zero values bypass the result cache.
    int witness_skip = 0;
};

/// Shared scratch state for a run of reconstructions: the special elements,
/// the powers of c, the grid swaps, and a bounded memo of finished
/// reconstructions (stored in reduced form).
class RebuildContext {
public:
    explicit RebuildContext(int n);

    int arity() const { return n_; }
    const SpecialElements& special() const { return sp_; }
    const Element& c_power(int k) const;
    const Element& grid_swap(std::size_t i, std::size_t j);

    const Element* lookup(const Address& a, const Address& b) const;
    void store(const Address& a, const Address& b, const Element& e);

private:
    int n_;
    const SpecialElements& sp_;
    std::vector<Element> c_powers_;
    std::map<std::pair<std::size_t, std::size_t>, Element> swaps_;
    std::map<std::pair<Address, Address>, Element> memo_;
};

/// Rebuilds the transposition exchanging the basic open sets below a and b
/// using only grid permutations, powers of c, products and conjugation:
/// grid-level swaps seed the construction, single-long-coordinate cases
/// come from conjugating by powers of c, deeper weights are conjugates of
/// earlier stages, and short coordinates are resolved by splitting.
/// Postcondition: the result equals transposition(a, b) as a map.
Element rebuild_transposition(const Address& a, const Address& b,
                              RebuildContext* ctx = nullptr, const RebuildOptions& = {});

} // namespace nv
