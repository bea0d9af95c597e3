#include "nv/special.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "nv/partition.hpp"

namespace nv {

Element perm_to_element(std::span<const std::size_t> images, int n) {
    std::size_t count = delta_size(n);
    if (images.size() != count)
        throw NotABijection("image array has size " + std::to_string(images.size()) +
                            ", expected " + std::to_string(count));
    std::vector<bool> seen(count, false);
    for (std::size_t v : images) {
        if (v >= count || seen[v])
            throw NotABijection("image array is not a bijection");
        seen[v] = true;
    }
    Element::CellList cells;
    cells.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        cells.push_back(Cell{delta_at(n, i), delta_at(n, images[i])});
    return detail::make_trusted_element(n, std::move(cells));
}

Element delta_swap_element(int n, std::size_t i, std::size_t j) {
    std::vector<std::size_t> images(delta_size(n));
    std::iota(images.begin(), images.end(), 0);
    std::swap(images[i], images[j]);
    return perm_to_element(images, n);
}

namespace {

Element cycle_element(int n, std::span<const std::size_t> cycle) {
    std::vector<std::size_t> images(delta_size(n));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        images[cycle[i]] = cycle[i + 1];
    if (!cycle.empty())
        images[cycle.back()] = cycle.front();
    return perm_to_element(images, n);
}

SpecialElements build_special(int n) {
    SpecialElements sp;
    sp.n = n;
    sp.delta = enumerate_delta(n);
    std::size_t count = sp.delta.size();

    std::vector<std::size_t> full(count);
    std::iota(full.begin(), full.end(), 0);
    sp.a = cycle_element(n, full);
    sp.b = delta_swap_element(n, 0, 1);

    // c: for each d, two transpositions tying the base cell to the two
    // halves of the d-th seed cell, split in coordinate d.
    Element c = Element::identity(n);
    std::vector<Address> c_addresses;
    c_addresses.push_back(sp.delta[0]);
    for (int d = 1; d <= n; ++d) {
        Address lo = sp.delta[static_cast<std::size_t>(d)].append(d, 0);
        Address hi = sp.delta[static_cast<std::size_t>(d)].append(d, 1);
        c = compose(compose(c, transposition(sp.delta[0], lo)),
                    transposition(sp.delta[0], hi));
        c_addresses.push_back(lo);
        c_addresses.push_back(hi);
    }
    sp.c = c.reduced();
    std::optional<int> ord = sp.c.order(10000);
    if (!ord)
        throw Error("order of c not found below cap");
    sp.c_order = *ord;

    std::vector<std::size_t> tail;
    for (std::size_t i = static_cast<std::size_t>(n) + 1; i < count; ++i)
        tail.push_back(i);
    sp.p = cycle_element(n, tail);

    sp.q.reserve(static_cast<std::size_t>(n));
    for (int d = 1; d <= n; ++d) {
        std::vector<std::size_t> cyc;
        for (std::size_t i = 0; i < count; ++i)
            if (i != static_cast<std::size_t>(d) && i != static_cast<std::size_t>(n) + 1)
                cyc.push_back(i);
        sp.q.push_back(cycle_element(n, cyc));
    }

    // t: first pair of grid cells incomparable with everything c touches.
    std::vector<std::size_t> free_cells;
    for (std::size_t i = 0; i < count && free_cells.size() < 2; ++i) {
        bool clear = true;
        for (const Address& used : c_addresses)
            if (!sp.delta[i].incomparable(used)) {
                clear = false;
                break;
            }
        if (clear)
            free_cells.push_back(i);
    }
    if (free_cells.size() < 2)
        throw Error("no grid transposition disjoint from c");
    sp.t = transposition(sp.delta[free_cells[0]], sp.delta[free_cells[1]]);

    sp.x = sp.a;
    return sp;
}

} // namespace

const SpecialElements& special_elements(int n) {
    static std::mutex mutex;
    static std::map<int, SpecialElements> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_special(n)).first;
    return it->second;
}

namespace {

struct XyCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }
};

int parse_int(XyCursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '-')
        ++cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == start || (cur.text[start] == '-' && cur.pos == start + 1))
        cur.fail("expected an integer");
    return std::stoi(std::string(cur.text.substr(start, cur.pos - start)));
}

Element parse_xy_expr(XyCursor& cur, const Element& x, const Element& y);

Element parse_xy_atom(XyCursor& cur, const Element& x, const Element& y) {
    cur.skip_ws();
    if (cur.eat('(')) {
        Element e = parse_xy_expr(cur, x, y);
        if (!cur.eat(')'))
            cur.fail("expected ')'");
        return e;
    }
    if (cur.eat('x'))
        return x;
    if (cur.eat('y'))
        return y;
    cur.fail("expected x, y or '('");
}

Element parse_xy_factor(XyCursor& cur, const Element& x, const Element& y) {
    Element base = parse_xy_atom(cur, x, y);
    cur.skip_ws();
    if (cur.eat('^')) {
        cur.skip_ws();
        if (cur.pos < cur.text.size() &&
            (cur.text[cur.pos] == '-' || std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))))
            return base.power(parse_int(cur));
        return conjugate(base, parse_xy_atom(cur, x, y));
    }
    return base;
}

Element parse_xy_expr(XyCursor& cur, const Element& x, const Element& y) {
    Element acc = parse_xy_factor(cur, x, y);
    while (true) {
        cur.skip_ws();
        if (!cur.eat('*'))
            return acc;
        acc = compose(acc, parse_xy_factor(cur, x, y)).reduced();
    }
}

} // namespace

Element eval_xy_word(std::string_view text, const Element& x, const Element& y) {
    XyCursor cur{text};
    Element e = parse_xy_expr(cur, x, y);
    cur.skip_ws();
    if (cur.pos != cur.text.size())
        cur.fail("trailing characters in two-generator word");
    return e;
}

TwoGeneratorScheme two_generator_scheme(int n) {
    const SpecialElements& sp = special_elements(n);
    TwoGeneratorScheme scheme;
    scheme.x = sp.x;
    scheme.y = compose(sp.c, sp.t).reduced();
    scheme.c_order = sp.c_order;

    // b is a conjugate of t by a power of x; find the shift by scanning.
    std::size_t count = delta_size(n);
    Element t_from_y = scheme.y.power(scheme.c_order);
    Element xpow = Element::identity(n);
    bool found = false;
    for (std::size_t k = 0; k < count; ++k) {
        if (conjugate(t_from_y, xpow) == sp.b) {
            scheme.b_shift = k;
            found = true;
            break;
        }
        xpow = compose(xpow, scheme.x).reduced();
    }
    if (!found)
        throw Error("no power of x conjugates t onto b");

    int o = scheme.c_order;
    scheme.witness_a = "x";
    scheme.witness_t = "y^" + std::to_string(o);
    scheme.witness_c = "y^" + std::to_string(o + 1);
    scheme.witness_b =
        "(y^" + std::to_string(o) + ")^(x^" + std::to_string(scheme.b_shift) + ")";
    return scheme;
}

} // namespace nv
