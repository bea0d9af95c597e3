#include <doctest.h>

#include "helpers.hpp"
#include "nv/generators.hpp"
#include "nv/partition.hpp"

using namespace nv;

TEST_SUITE_BEGIN("generators");

namespace {
Address addr(const char* s) { return Address::parse(s); }

std::vector<Address> valid_b_supports(int n, int L) {
    std::vector<Address> out;
    for (const Address& a : enumerate_addresses(n, L))
        if (!a.coord(1).empty())
            out.push_back(a);
    return out;
}

std::vector<Address> valid_bhat_supports(int n, int d, int L) {
    std::vector<Address> out;
    for (const Address& a : enumerate_addresses(n, L))
        if (!a.coord(1).empty() && !a.coord(d).empty())
            out.push_back(a);
    return out;
}
} // namespace

TEST_CASE("baker_direct cells") {
    Element b = baker_direct(2, Address::root(2));
    REQUIRE(b.cell_count() == 2);
    CHECK(b.apply(addr("(0,-)")) == addr("(-,0)"));
    CHECK(b.apply(addr("(1,-)")) == addr("(-,1)"));

    Element b2 = baker_direct(2, addr("(0,-)"));
    CHECK(b2.apply(addr("(00,-)")) == addr("(0,0)"));
    CHECK(b2.apply(addr("(01,-)")) == addr("(0,1)"));
    CHECK(b2.apply(addr("(1,-)")) == addr("(1,-)"));

    CHECK_THROWS_AS(baker_direct(1, Address::root(2)), BadDimension);
    CHECK_THROWS_AS(baker_direct(3, Address::root(2)), BadDimension);
}

TEST_CASE("baker_direct is measure-preserving cell-wise") {
    for (const Address& sup : enumerate_addresses(2, 3)) {
        Element b = baker_direct(2, sup);
        for (std::size_t i = 0; i < b.cell_count(); ++i)
            CHECK(measure(b.cell(i).dom) == measure(b.cell(i).cod));
    }
}

TEST_CASE("two-sided baker composite") {
    // equals the composite of a baker's map and an inverse baker's map
    for (int n = 2; n <= 3; ++n) {
        nvtest::Rng rng(301 + n);
        for (int i = 0; i < 40; ++i) {
            auto [a, b] = rng.incomparable_pair(n, 2);
            for (int d = 2; d <= n; ++d) {
                Element lhs = gen_A(d, a, b);
                Element rhs = compose(baker_direct(d, a), baker_direct(d, b).inverse());
                CHECK(lhs == rhs);
            }
        }
    }

    Element prod = compose(gen_A(2, addr("(0,-)"), addr("(1,-)")),
                           gen_A(2, addr("(1,-)"), addr("(0,-)")));
    CHECK(prod.is_identity());

    // the word spelled out: <(00,-)|(1,0)> <(01,-)|(1,1)> <(0,-)|(1,-)>
    Element word = compose(compose(transposition(addr("(00,-)"), addr("(1,0)")),
                                   transposition(addr("(01,-)"), addr("(1,1)"))),
                           transposition(addr("(0,-)"), addr("(1,-)")));
    CHECK(gen_A(2, addr("(0,-)"), addr("(1,-)")) == word);

    CHECK_THROWS_AS(gen_A(2, addr("(0,-)"), addr("(01,-)")), NotIncomparable);
    CHECK_THROWS_AS(gen_A(1, addr("(0,-)"), addr("(1,-)")), BadDimension);
}

TEST_CASE("hat baker form evaluates to the baker's map") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 2; d <= n; ++d)
            for (const Address& sup : valid_bhat_supports(n, d, 3))
                CHECK(gen_Bhat(d, sup) == baker_direct(d, sup));

    CHECK_THROWS_AS(gen_Bhat(2, addr("(-,0)")), BadSupportAddress);
    CHECK_THROWS_AS(gen_Bhat(2, addr("(0,-)")), BadSupportAddress);
}

TEST_CASE("hat baker form is independent of the helper address") {
    for (const Address& sup : valid_bhat_supports(2, 2, 2)) {
        Element canonical = gen_Bhat(2, sup);
        Address stem = sup.with_coord(2, sup.coord(2).drop_last());
        int tried = 0;
        for (const Address& w : enumerate_addresses(2, 3)) {
            if (w.coord(1).empty() || w.coord(2).empty() || !w.incomparable(stem))
                continue;
            CHECK(gen_Bhat_with_witness(2, sup, w) == canonical);
            ++tried;
        }
        CHECK(tried >= 2);
    }
    CHECK_THROWS_AS(gen_Bhat_with_witness(2, addr("(0,0)"), addr("(01,0)")), NotIncomparable);
}

TEST_CASE("full baker form evaluates to the baker's map") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 2; d <= n; ++d)
            for (const Address& sup : valid_b_supports(n, 3))
                CHECK(gen_B(d, sup) == baker_direct(d, sup));

    CHECK_THROWS_AS(gen_B(2, addr("(-,0)")), BadSupportAddress);
}

TEST_CASE("full baker form fixes everything off its support") {
    for (const Address& sup : valid_b_supports(2, 2)) {
        Element b = gen_B(2, sup);
        for (const Address& probe : enumerate_addresses(2, 4)) {
            if (!probe.incomparable(sup))
                continue;
            std::optional<Address> img = b.apply(probe);
            if (img)
                CHECK(*img == probe);
        }
    }
}

TEST_CASE("named generator family") {
    CHECK(hm_generator(HmKind::Pi, 0, 0, 2) == transposition(addr("(01,-)"), addr("(1,-)")));
    CHECK(hm_generator(HmKind::PiBar, 0, 0, 2) == transposition(addr("(0,-)"), addr("(1,-)")));
    CHECK(hm_generator(HmKind::PiBar, 2, 0, 2) ==
          transposition(addr("(000,-)"), addr("(001,-)")));

    for (int d = 2; d <= 2; ++d) {
        CHECK(hm_generator(HmKind::C, 1, d, 2) ==
              localize(addr("(0,-)"), hm_generator(HmKind::C, 0, d, 2)));
        CHECK(hm_generator(HmKind::C, 2, d, 2) ==
              localize(addr("(00,-)"), hm_generator(HmKind::C, 0, d, 2)));
    }

    // the level-0 full-support generator is the baker's map on the whole space
    CHECK(hm_generator(HmKind::C, 0, 2, 2) == baker_direct(2, Address::root(2)));
    CHECK(hm_generator(HmKind::C, 0, 2, 3) == baker_direct(2, Address::root(3)));
    CHECK(hm_generator(HmKind::C, 1, 2, 2) == baker_direct(2, addr("(0,-)")));

    // X at higher levels is the level-0 element pushed below 0^m
    for (int m = 1; m <= 2; ++m) {
        Word zeros;
        for (int i = 0; i < m; ++i)
            zeros = zeros.append(0);
        CHECK(hm_generator(HmKind::X, m, 1, 2) ==
              localize(Address::unit(2, 1, zeros), hm_generator(HmKind::X, 0, 1, 2)));
        CHECK(hm_generator(HmKind::X, m, 2, 2) ==
              localize(Address::unit(2, 1, zeros), hm_generator(HmKind::X, 0, 2, 2)));
    }

    CHECK_THROWS_AS(hm_generator(HmKind::X, -1, 1, 2), BadParameters);
    CHECK_THROWS_AS(hm_generator(HmKind::X, 0, 3, 2), BadDimension);
    CHECK_THROWS_AS(hm_generator(HmKind::C, 0, 1, 2), BadDimension);
}

TEST_SUITE_END();
