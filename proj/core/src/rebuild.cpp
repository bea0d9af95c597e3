#include "nv/rebuild.hpp"

#include <algorithm>

#include "nv/partition.hpp"

namespace nv {

namespace {

constexpr std::size_t kMemoCap = 200000;

bool in_grid(const Address& a) {
    for (int d = 1; d <= a.arity(); ++d)
        if (a.coord(d).size() != 2)
            return false;
    return true;
}

bool has_short_coordinate(const Address& a) {
    for (int d = 1; d <= a.arity(); ++d)
        if (a.coord(d).size() < 2)
            return true;
    return false;
}

} // namespace

RebuildContext::RebuildContext(int n) : n_(n), sp_(special_elements(n)) {
    c_powers_.push_back(Element::identity(n));
    for (int k = 1; k <= 2 * n + 1; ++k)
        c_powers_.push_back(compose(c_powers_.back(), sp_.c).reduced());
}

const Element& RebuildContext::c_power(int k) const {
    return c_powers_[static_cast<std::size_t>(k)];
}

const Element& RebuildContext::grid_swap(std::size_t i, std::size_t j) {
    auto key = std::minmax(i, j);
    auto it = swaps_.find(key);
    if (it == swaps_.end())
        it = swaps_.emplace(key, delta_swap_element(n_, key.first, key.second)).first;
    return it->second;
}

const Element* RebuildContext::lookup(const Address& a, const Address& b) const {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = memo_.find(key);
    return it == memo_.end() ? nullptr : &it->second;
}

void RebuildContext::store(const Address& a, const Address& b, const Element& e) {
    if (memo_.size() >= kMemoCap)
        return;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    memo_.emplace(std::move(key), e);
}

namespace {

/// First grid cell (in enumeration order) incomparable with every listed
/// address, skipping `skip` valid candidates.
Address pick_grid_helper(int n, std::span<const Address> avoid, int skip) {
    std::size_t count = delta_size(n);
    for (std::size_t i = 0; i < count; ++i) {
        Address cand = delta_at(n, i);
        bool ok = true;
        for (const Address& a : avoid)
            if (!cand.incomparable(a)) {
                ok = false;
                break;
            }
        if (ok) {
            if (skip == 0)
                return cand;
            --skip;
        }
    }
    throw Error("no grid cell clear of the given addresses");
}

Element rebuild_impl(const Address& a, const Address& b, RebuildContext& ctx,
                     const RebuildOptions& opts);

/// One entry is a grid cell (beta), the other is strictly deeper with all
/// coordinates of length >= 2.
Element rebuild_one_grid_entry(const Address& alpha, const Address& beta, RebuildContext& ctx,
                               const RebuildOptions& opts) {
    int n = ctx.arity();
    Weight w = alpha.weight();
    int d = 0;
    for (int i = 1; i <= n; ++i)
        if (static_cast<int>(alpha.coord(i).size()) == w.m) {
            d = i;
            break;
        }
    unsigned x = alpha.coord(d).last();
    Address hat = alpha.with_coord(d, alpha.coord(d).drop_last());

    if (w == Weight{3, 1}) {
        // Base rung: conjugate the seed grid swap by the matching power of
        // c, then move the pattern onto (hat, beta) by a grid permutation.
        std::size_t count = delta_size(n);
        Element base = conjugate(ctx.grid_swap(0, static_cast<std::size_t>(n) + 1),
                                 ctx.c_power(2 * d + static_cast<int>(x) - 1));
        std::vector<std::size_t> images(count, count); // unassigned marker
        std::vector<bool> used(count, false);
        std::size_t src1 = static_cast<std::size_t>(d), dst1 = delta_index(hat);
        std::size_t src2 = static_cast<std::size_t>(n) + 1, dst2 = delta_index(beta);
        images[src1] = dst1;
        used[dst1] = true;
        images[src2] = dst2;
        used[dst2] = true;
        std::size_t next = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (images[i] != count)
                continue;
            while (used[next])
                ++next;
            images[i] = next;
            used[next] = true;
        }
        return conjugate(base, perm_to_element(images, n));
    }

    const Address avoid[] = {hat, beta};
    Address helper = pick_grid_helper(n, avoid, opts.witness_skip);
    Element left = rebuild_impl(helper.append(d, x), beta, ctx, opts);
    Element by = rebuild_impl(helper, hat, ctx, opts);
    return conjugate(left, by);
}

Element rebuild_impl(const Address& a, const Address& b, RebuildContext& ctx,
                     const RebuildOptions& opts) {
    if (!a.incomparable(b))
        throw NotIncomparable("cannot rebuild a transposition of comparable addresses: " +
                              a.str() + " vs " + b.str());
    bool cacheable = opts.witness_skip == 0;
    if (cacheable)
        if (const Element* hit = ctx.lookup(a, b))
            return *hit;

    int n = ctx.arity();
    Element result = Element::identity(n);
    if (has_short_coordinate(a) || has_short_coordinate(b)) {
        int d = 0;
        for (int i = 1; i <= n && d == 0; ++i)
            if (a.coord(i).size() < 2 || b.coord(i).size() < 2)
                d = i;
        result = compose(rebuild_impl(a.append(d, 0), b.append(d, 0), ctx, opts),
                         rebuild_impl(a.append(d, 1), b.append(d, 1), ctx, opts));
    } else if (in_grid(a) && in_grid(b)) {
        result = ctx.grid_swap(delta_index(a), delta_index(b));
    } else if (in_grid(b)) {
        result = rebuild_one_grid_entry(a, b, ctx, opts);
    } else if (in_grid(a)) {
        result = rebuild_one_grid_entry(b, a, ctx, opts);
    } else {
        const Address avoid[] = {a, b};
        Address helper = pick_grid_helper(n, avoid, opts.witness_skip);
        result = conjugate(rebuild_impl(a, helper, ctx, opts),
                           rebuild_impl(b, helper, ctx, opts));
    }
    result = result.reduced();
    if (cacheable)
        ctx.store(a, b, result);
    return result;
}

} // namespace

Element rebuild_transposition(const Address& a, const Address& b, RebuildContext* ctx,
                              const RebuildOptions& opts) {
    if (a.arity() != b.arity())
        throw ArityMismatch("rebuild needs addresses of equal arity");
    if (ctx) {
        if (ctx->arity() != a.arity())
            throw ArityMismatch("rebuild context arity differs from address arity");
        return rebuild_impl(a, b, *ctx, opts);
    }
    RebuildContext local(a.arity());
    return rebuild_impl(a, b, local, opts);
}

} // namespace nv
