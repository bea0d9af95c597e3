#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nv/address.hpp"
#include "nv/detail/small_vector.hpp"
#include "nv/partition.hpp"

namespace nv {

/// One prefix-replacement rule: points below dom move to the corresponding
/// point below cod.  Domain and codomain cells may have different measure
/// (baker's maps expand and contract).
struct Cell {
    Address dom;
    Address cod;
};

class Element;

namespace detail {
Element make_trusted_element(int n, SmallVector<Cell, 12>&& cells);
}

/// An element of the higher-dimensional Thompson group nV: a finite list of
/// cells whose domain addresses partition n-dimensional Cantor space and
/// whose codomain addresses do likewise.  Values are immutable after
/// construction and safe to share across threads.
///
/// Cells are kept sorted by domain address, so equal construction paths
/// produce bit-identical cell lists and serialization is reproducible.
class Element {
public:
    using CellList = detail::SmallVector<Cell, 12>;

    /// An empty placeholder of arity 0; the only useful thing to do with
    /// it is assign a real element over it.
    Element() = default;

    /// The identity map, one cell (root -> root).
    static Element identity(int n);

    /// Builds from explicit cells, validating both partitions.
    static Element from_cells(int n, std::span<const Cell> cells);

    int arity() const { return n_; }
    std::size_t cell_count() const { return cells_.size(); }
    const Cell& cell(std::size_t i) const { return cells_[i]; }
    const CellList& cells() const { return cells_; }

    /// Group inverse: swaps dom and cod in every cell.
    Element inverse() const;

    /// Greedily merges sibling cell pairs until none remain.  Advisory
    /// only: the result is the same map, usually with fewer cells, but no
    /// canonical-form claim is made and equality never relies on it.
    Element reduced() const;

    /// Image of an address, when the address is fine enough to lie inside
    /// a single domain cell; nullopt when it straddles cells.
    std::optional<Address> apply(const Address& a) const;

    /// g^k by repeated composition; negative exponents via the inverse.
    Element power(int k) const;

    /// Least k <= cap with g^k = 1, or nullopt.
    std::optional<int> order(int cap = 10000) const;

    bool is_identity() const;

    /// Extensional equality: both maps refined to a common domain
    /// partition and compared cell by cell.  Differing arity compares
    /// unequal rather than throwing.
    friend bool operator==(const Element& g, const Element& h);

    /// Left-to-right composition: w |-> h(g(w)), matching the convention
    /// of writing maps on the right.
    friend Element compose(const Element& g, const Element& h);

    friend Element detail::make_trusted_element(int n, CellList&& cells);

private:
    CellList cells_;
    std::uint8_t n_ = 0;
};

inline bool equals(const Element& g, const Element& h) { return g == h; }

/// g conjugated by h, i.e. h^-1 g h.
Element conjugate(const Element& g, const Element& h);

/// [g, h] = g^-1 h^-1 g h.
Element commutator(const Element& g, const Element& h);

/// The element exchanging the basic open sets below a and b by prefix swap
/// and fixing everything else.  Throws NotIncomparable when a, b overlap.
Element transposition(const Address& a, const Address& b);

/// The element acting as g inside the basic open set below prefix and as
/// the identity outside it.
Element localize(const Address& prefix, const Element& g);

/// A formal letter <a|b> of the transposition alphabet; the word algebra
/// acts on addresses through these.
class TranspositionSymbol {
public:
    TranspositionSymbol(const Address& a, const Address& b);

    const Address& first() const { return a_; }
    const Address& second() const { return b_; }

private:
    Address a_, b_;
};

/// Partial prefix-substitution action of one letter on an address.
std::optional<Address> bullet_step(const Address& a, const TranspositionSymbol& s);

/// Folds bullet_step over the word left to right; undefined as soon as one
/// step is undefined.  A function of the word, not of the element it spells.
std::optional<Address> bullet(const Address& a, std::span<const TranspositionSymbol> word);

/// The basic open sets tiling the complement of the union of the targets
/// (targets must be pairwise incomparable).   Deterministic: the split tree
/// always splits the lowest dimension with a remaining prefix.
std::vector<Address> complement_cells(std::span<const Address> targets, int n);

} // namespace nv
