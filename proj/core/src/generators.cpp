#include "nv/generators.hpp"

namespace nv {

namespace {

void check_dim(int d, int n) {
    if (d < 2 || d > n)
        throw BadDimension("dimension index must satisfy 2 <= d <= n, got d=" +
                           std::to_string(d) + " with n=" + std::to_string(n));
}

Word repeated_zero(int m) {
    Word w;
    for (int i = 0; i < m; ++i)
        w = w.append(0);
    return w;
}

} // namespace

Element baker_direct(int d, const Address& support) {
    int n = support.arity();
    check_dim(d, n);
    Element::CellList cells;
    cells.push_back(Cell{support.append(1, 0), support.append(d, 0)});
    cells.push_back(Cell{support.append(1, 1), support.append(d, 1)});
    const Address targets[] = {support};
    for (const Address& c : complement_cells(targets, n))
        cells.push_back(Cell{c, c});
    return detail::make_trusted_element(n, std::move(cells));
}

Element gen_A(int d, const Address& a, const Address& b) {
    check_dim(d, a.arity());
    if (!a.incomparable(b))
        throw NotIncomparable("gen_A needs incomparable addresses: " + a.str() + " vs " +
                              b.str());
    Element first = transposition(a.append(1, 0), b.append(d, 0));
    Element second = transposition(a.append(1, 1), b.append(d, 1));
    return compose(compose(first, second), transposition(a, b));
}

namespace {

// Splits support as stem.y_d (stem keeps coordinate 1 intact) and checks
// the length preconditions of the transposition-word baker's maps.
struct BhatParts {
    Address stem; // support with the last coordinate-d bit removed
    unsigned x;   // last bit of coordinate 1
    unsigned y;   // last bit of coordinate d
};

BhatParts split_support(int d, const Address& support) {
    if (support.coord(1).empty() || support.coord(d).empty())
        throw BadSupportAddress("support needs non-empty coordinates 1 and " +
                                std::to_string(d) + ": " + support.str());
    BhatParts p;
    p.x = support.coord(1).last();
    p.y = support.coord(d).last();
    p.stem = support.with_coord(d, support.coord(d).drop_last());
    return p;
}

// Deterministic helper address for gen_Bhat: complement of the final
// coordinate-1 bit in coordinate 1 and the final coordinate-d bit in
// coordinate d; when that collides with the stem, coordinate 1 gains one
// disambiguating bit.
Address default_witness(int d, const BhatParts& p, int n) {
    Address witness = Address::root(n)
                          .with_coord(1, Word::single(complement_bit(p.x)))
                          .with_coord(d, Word::single(p.y));
    if (!witness.incomparable(p.stem)) {
        const Word& stem1 = p.stem.coord(1);
        unsigned second = stem1.size() >= 2 ? stem1.bit(1) : p.x;
        witness = witness.with_coord(
            1, Word::single(complement_bit(p.x)).append(complement_bit(second)));
    }
    return witness;
}

} // namespace

Element gen_Bhat_with_witness(int d, const Address& support, const Address& witness) {
    int n = support.arity();
    check_dim(d, n);
    BhatParts p = split_support(d, support);
    if (witness.coord(1).empty() || witness.coord(d).empty())
        throw BadSupportAddress("helper address needs non-empty coordinates 1 and " +
                                std::to_string(d) + ": " + witness.str());
    if (!witness.incomparable(p.stem))
        throw NotIncomparable("helper address must be incomparable with " + p.stem.str());
    Address middle_a = p.stem.append(d, 0).append(d, 1); // stem.01_d
    Address middle_b = p.stem.append(d, 1).append(d, 0); // stem.10_d
    Element left = gen_A(d, p.stem, witness);
    Element mid = transposition(middle_a, middle_b);
    Element right = gen_A(d, witness, p.stem.append(d, complement_bit(p.y)));
    return compose(compose(left, mid), right);
}

Element gen_Bhat(int d, const Address& support) {
    int n = support.arity();
    check_dim(d, n);
    BhatParts p = split_support(d, support);
    return gen_Bhat_with_witness(d, support, default_witness(d, p, n));
}

Element gen_B(int d, const Address& support) {
    int n = support.arity();
    check_dim(d, n);
    if (support.coord(1).empty())
        throw BadSupportAddress("support needs a non-empty coordinate 1: " + support.str());
    Element left = gen_Bhat(d, support.append(d, 0));
    Element mid = gen_Bhat(d, support.append(d, 1));
    Element right = transposition(support.append(d, 0).append(d, 1),
                                  support.append(d, 1).append(d, 0));
    return compose(compose(left, mid), right);
}

Element hm_generator(HmKind kind, int m, int d, int n) {
    if (m < 0)
        throw BadParameters("generator level m must be >= 0");
    auto zero_prefix = [&](int count) {
        return Address::unit(n, 1, repeated_zero(count));
    };
    const Address zero1 = Address::unit(n, 1, Word::single(0));
    const Address one1 = Address::unit(n, 1, Word::single(1));

    switch (kind) {
    case HmKind::X: {
        if (d < 1 || d > n)
            throw BadDimension("X generator needs 1 <= d <= n");
        Element x01 = compose(
            compose(transposition(zero1, one1),
                    transposition(zero1, Address::unit(n, 1, Word::from_string("10")))),
            transposition(Address::unit(n, 1, Word::from_string("10")),
                          Address::unit(n, 1, Word::from_string("11"))));
        Element base = d == 1 ? x01 : compose(x01, gen_B(d, one1));
        return m == 0 ? base : localize(zero_prefix(m), base);
    }
    case HmKind::Pi: {
        Element base = transposition(Address::unit(n, 1, Word::from_string("01")), one1);
        return m == 0 ? base : localize(zero_prefix(m), base);
    }
    case HmKind::PiBar: {
        Element base = transposition(zero1, one1);
        return m == 0 ? base : localize(zero_prefix(m), base);
    }
    case HmKind::C: {
        check_dim(d, n);
        if (m == 0) {
            return compose(
                compose(transposition(Address::unit(n, 1, Word::from_string("01")),
                                      Address::unit(n, 1, Word::from_string("10"))),
                        gen_B(d, zero1)),
                gen_B(d, one1));
        }
        Element level1 = gen_B(d, zero1);
        return m == 1 ? level1 : localize(zero_prefix(m - 1), level1);
    }
    }
    throw BadParameters("unknown generator kind");
}

} // namespace nv
