#include "nv/element.hpp"

#include <algorithm>
#include <string>

namespace nv {

namespace {

void sort_cells(Element::CellList& cells) {
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.dom < b.dom; });
}

void check_same_arity(const Element& g, const Element& h) {
    if (g.arity() != h.arity())
        throw ArityMismatch("element arity mismatch: " + std::to_string(g.arity()) + " vs " +
                            std::to_string(h.arity()));
}

// Note: two addresses whose basic open sets overlap need not be
// prefix-related; coordinates can be nested in opposite directions, e.g.
// (11,1) and (1,10).  Everything below therefore branches on
// "not incomparable" (= sets intersect) rather than on prefix tests alone.

// The finest common region of two overlapping addresses: coordinate-wise
// the longer word.  Requires !a.incomparable(b).
Address overlap_address(const Address& a, const Address& b) {
    Address r = a;
    for (int d = 1; d <= a.arity(); ++d)
        if (b.coord(d).size() > a.coord(d).size())
            r = r.with_coord(d, b.coord(d));
    return r;
}

// Walks the split tree below node and collects the cells lying outside
// every target.  Splits the lowest dimension in which an intersecting
// target still has a remaining prefix.
void complement_walk(const Address& node, std::span<const Address> targets,
                     Element::CellList& out) {
    bool all_incomparable = true;
    for (const Address& t : targets) {
        if (t.is_prefix_of(node))
            return; // inside the union
        if (!t.incomparable(node))
            all_incomparable = false;
    }
    if (all_incomparable) {
        out.push_back(Cell{node, node});
        return;
    }
    int n = node.arity();
    int split = 0;
    for (const Address& t : targets) {
        if (t.incomparable(node))
            continue;
        for (int d = 1; d <= n && (split == 0 || d < split); ++d) {
            if (t.coord(d).size() > node.coord(d).size()) {
                split = d;
                break;
            }
        }
    }
    complement_walk(node.append(split, 0), targets, out);
    complement_walk(node.append(split, 1), targets, out);
}

bool sibling_pair(const Address& zero_side, const Address& one_side, int d) {
    int n = zero_side.arity();
    const Word& a = zero_side.coord(d);
    const Word& b = one_side.coord(d);
    if (a.empty() || b.empty() || a.size() != b.size())
        return false;
    if (a.last() != 0 || b.last() != 1 || !(a.drop_last() == b.drop_last()))
        return false;
    for (int i = 1; i <= n; ++i)
        if (i != d && !(zero_side.coord(i) == one_side.coord(i)))
            return false;
    return true;
}

Address drop_last_in(const Address& a, int d) {
    return a.with_coord(d, a.coord(d).drop_last());
}

} // namespace

namespace detail {

Element make_trusted_element(int n, Element::CellList&& cells) {
    sort_cells(cells);
    Element e;
    e.cells_ = std::move(cells);
    e.n_ = static_cast<std::uint8_t>(n);
    return e;
}

} // namespace detail

Element Element::identity(int n) {
    CellList cells;
    cells.push_back(Cell{Address::root(n), Address::root(n)});
    return detail::make_trusted_element(n, std::move(cells));
}

Element Element::from_cells(int n, std::span<const Cell> cells) {
    if (cells.empty())
        throw Error("an element needs at least one cell");
    std::vector<Address> doms, cods;
    doms.reserve(cells.size());
    cods.reserve(cells.size());
    for (const Cell& c : cells) {
        if (c.dom.arity() != n || c.cod.arity() != n)
            throw ArityMismatch("cell arity differs from element arity");
        doms.push_back(c.dom);
        cods.push_back(c.cod);
    }
    auto check = [](PartitionStatus st, const char* side) {
        if (st == PartitionStatus::overlap)
            throw NotAPartition(NotAPartition::Reason::overlap,
                                std::string(side) + " cells overlap");
        if (st == PartitionStatus::gap)
            throw NotAPartition(NotAPartition::Reason::gap,
                                std::string(side) + " cells leave a gap");
    };
    check(validate_partition(doms), "domain");
    check(validate_partition(cods), "codomain");
    CellList list;
    list.reserve(cells.size());
    for (const Cell& c : cells)
        list.push_back(c);
    return detail::make_trusted_element(n, std::move(list));
}

Element Element::inverse() const {
    CellList cells;
    cells.reserve(cells_.size());
    for (const Cell& c : cells_)
        cells.push_back(Cell{c.cod, c.dom});
    return detail::make_trusted_element(n_, std::move(cells));
}

Element Element::reduced() const {
    CellList cs = cells_;
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < cs.size() && !merged; ++i) {
            for (std::size_t j = 0; j < cs.size() && !merged; ++j) {
                if (i == j)
                    continue;
                for (int d = 1; d <= n_; ++d) {
                    if (sibling_pair(cs[i].dom, cs[j].dom, d) &&
                        sibling_pair(cs[i].cod, cs[j].cod, d)) {
                        cs[i] = Cell{drop_last_in(cs[i].dom, d), drop_last_in(cs[i].cod, d)};
                        cs.erase_at(j);
                        merged = true;
                        break;
                    }
                }
            }
        }
    }
    return detail::make_trusted_element(n_, std::move(cs));
}

std::optional<Address> Element::apply(const Address& a) const {
    for (const Cell& c : cells_)
        if (c.dom.is_prefix_of(a))
            return c.cod.concat(a.suffix_after(c.dom));
    return std::nullopt;
}

Element Element::power(int k) const {
    Element base = k < 0 ? inverse() : *this;
    int reps = k < 0 ? -k : k;
    Element acc = Element::identity(n_);
    for (int i = 0; i < reps; ++i)
        acc = compose(acc, base).reduced();
    return acc;
}

std::optional<int> Element::order(int cap) const {
    if (cap < 1)
        throw BadParameters("order cap must be >= 1");
    // Powers of an infinite-order element keep refining; once the pattern
    // count blows past any size a periodic element could cycle through at
    // this scale, give up rather than grind on.
    constexpr std::size_t kCellBudget = 1 << 12;
    Element acc = *this;
    for (int k = 1; k <= cap; ++k) {
        if (acc.is_identity())
            return k;
        if (acc.cell_count() > kCellBudget)
            return std::nullopt;
        acc = compose(acc, *this).reduced();
    }
    return std::nullopt;
}

bool Element::is_identity() const {
    for (const Cell& c : cells_)
        if (!(c.dom == c.cod))
            return false;
    return true;
}

bool operator==(const Element& g, const Element& h) {
    if (g.n_ != h.n_)
        return false;
    for (const Cell& gc : g.cells_) {
        for (const Cell& hc : h.cells_) {
            if (gc.dom.incomparable(hc.dom))
                continue;
            // Both cells see the overlap region; the two images of it must
            // agree.  This visits every point of the space at least once.
            Address region = overlap_address(gc.dom, hc.dom);
            Address via_g = gc.cod.concat(region.suffix_after(gc.dom));
            Address via_h = hc.cod.concat(region.suffix_after(hc.dom));
            if (!(via_g == via_h))
                return false;
        }
    }
    return true;
}

Element compose(const Element& g, const Element& h) {
    check_same_arity(g, h);
    int n = g.arity();
    Element::CellList out;
    Element::CellList pending = g.cells_;
    while (!pending.empty()) {
        Cell c = pending.back();
        pending.pop_back();
        const Cell* hit = nullptr;
        for (const Cell& hc : h.cells_) {
            if (hc.dom.is_prefix_of(c.cod)) {
                hit = &hc;
                break;
            }
        }
        if (hit) {
            out.push_back(Cell{c.dom, hit->cod.concat(c.cod.suffix_after(hit->dom))});
            continue;
        }
        // c.cod straddles h's domain cells: split in the lowest dimension
        // where an intersecting h cell has a remaining prefix.
        int split = 0;
        for (const Cell& hc : h.cells_) {
            if (c.cod.incomparable(hc.dom))
                continue;
            for (int d = 1; d <= n && (split == 0 || d < split); ++d) {
                if (hc.dom.coord(d).size() > c.cod.coord(d).size()) {
                    split = d;
                    break;
                }
            }
        }
        pending.push_back(Cell{c.dom.append(split, 0), c.cod.append(split, 0)});
        pending.push_back(Cell{c.dom.append(split, 1), c.cod.append(split, 1)});
    }
    return detail::make_trusted_element(n, std::move(out));
}

Element conjugate(const Element& g, const Element& h) {
    return compose(compose(h.inverse(), g), h);
}

Element commutator(const Element& g, const Element& h) {
    return compose(compose(compose(g.inverse(), h.inverse()), g), h);
}

Element transposition(const Address& a, const Address& b) {
    if (!a.incomparable(b))
        throw NotIncomparable("transposition needs incomparable addresses: " + a.str() +
                              " vs " + b.str());
    Element::CellList cells;
    cells.push_back(Cell{a, b});
    cells.push_back(Cell{b, a});
    const Address targets[] = {a, b};
    complement_walk(Address::root(a.arity()), targets, cells);
    return detail::make_trusted_element(a.arity(), std::move(cells));
}

Element localize(const Address& prefix, const Element& g) {
    if (prefix.arity() != g.arity())
        throw ArityMismatch("localization prefix arity differs from element arity");
    Element::CellList cells;
    cells.reserve(g.cell_count() + 2);
    for (const Cell& c : g.cells())
        cells.push_back(Cell{prefix.concat(c.dom), prefix.concat(c.cod)});
    const Address targets[] = {prefix};
    complement_walk(Address::root(g.arity()), targets, cells);
    return detail::make_trusted_element(g.arity(), std::move(cells));
}

TranspositionSymbol::TranspositionSymbol(const Address& a, const Address& b) : a_(a), b_(b) {
    if (!a.incomparable(b))
        throw NotIncomparable("transposition symbol needs incomparable addresses");
}

std::optional<Address> bullet_step(const Address& a, const TranspositionSymbol& s) {
    if (s.first().is_prefix_of(a))
        return s.second().concat(a.suffix_after(s.first()));
    if (s.second().is_prefix_of(a))
        return s.first().concat(a.suffix_after(s.second()));
    if (a.incomparable(s.first()) && a.incomparable(s.second()))
        return a;
    return std::nullopt;
}

std::optional<Address> bullet(const Address& a, std::span<const TranspositionSymbol> word) {
    Address cur = a;
    for (const TranspositionSymbol& s : word) {
        std::optional<Address> next = bullet_step(cur, s);
        if (!next)
            return std::nullopt;
        cur = *next;
    }
    return cur;
}

std::vector<Address> complement_cells(std::span<const Address> targets, int n) {
    Element::CellList cells;
    complement_walk(Address::root(n), targets, cells);
    std::vector<Address> out;
    out.reserve(cells.size());
    for (const Cell& c : cells)
        out.push_back(c.dom);
    return out;
}

} // namespace nv
