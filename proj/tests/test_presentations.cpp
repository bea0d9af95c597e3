#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "nv/partition.hpp"
#include "nv/rebuild.hpp"
#include "nv/relations.hpp"
#include "nv/special.hpp"

using namespace nv;

TEST_SUITE_BEGIN("presentations");

namespace {
Address addr(const char* s) { return Address::parse(s); }
} // namespace

TEST_CASE("perm_to_element basics") {
    std::vector<std::size_t> id(16);
    std::iota(id.begin(), id.end(), 0);
    CHECK(perm_to_element(id, 2).is_identity());
    CHECK(perm_to_element(id, 2).reduced().cell_count() == 1);

    std::vector<std::size_t> swap01 = id;
    std::swap(swap01[0], swap01[1]);
    CHECK(perm_to_element(swap01, 2) == transposition(addr("(00,00)"), addr("(00,01)")));

    std::vector<std::size_t> not_bijective(16, 0);
    CHECK_THROWS_AS(perm_to_element(not_bijective, 2), NotABijection);
    CHECK_THROWS_AS(perm_to_element(std::vector<std::size_t>{0, 1}, 2), NotABijection);
}

TEST_CASE("perm_to_element is a homomorphism (randomized)") {
    nvtest::Rng rng(501);
    std::vector<std::size_t> sigma(16), tau(16);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::iota(tau.begin(), tau.end(), 0);
    for (int trial = 0; trial < 30; ++trial) {
        for (int k = 15; k > 0; --k) {
            std::swap(sigma[k], sigma[rng.below(k + 1)]);
            std::swap(tau[k], tau[rng.below(k + 1)]);
        }
        std::vector<std::size_t> product(16);
        for (std::size_t i = 0; i < 16; ++i)
            product[i] = tau[sigma[i]];
        CHECK(perm_to_element(product, 2) ==
              compose(perm_to_element(sigma, 2), perm_to_element(tau, 2)));
    }
}

TEST_CASE("special elements") {
    const SpecialElements& sp = special_elements(2);
    CHECK(sp.delta.size() == 16);

    // a: full cycle in enumeration order
    for (std::size_t i = 0; i < 16; ++i)
        CHECK(sp.a.apply(sp.delta[i]) == sp.delta[(i + 1) % 16]);

    // b: swap of the first two cells
    CHECK(sp.b == transposition(sp.delta[0], sp.delta[1]));

    // c: product of 2n transpositions, first factor t[(00,00)|(000,01)]
    Element expect_c = Element::identity(2);
    expect_c = compose(expect_c, transposition(sp.delta[0], sp.delta[1].append(1, 0)));
    expect_c = compose(expect_c, transposition(sp.delta[0], sp.delta[1].append(1, 1)));
    expect_c = compose(expect_c, transposition(sp.delta[0], sp.delta[2].append(2, 0)));
    expect_c = compose(expect_c, transposition(sp.delta[0], sp.delta[2].append(2, 1)));
    CHECK(sp.c == expect_c);
    CHECK(sp.delta[1].append(1, 0) == addr("(000,01)"));

    // c has odd order
    CHECK(sp.c_order % 2 == 1);
    CHECK(sp.c.power(sp.c_order).is_identity());
    CHECK(special_elements(3).c_order % 2 == 1);

    // p moves exactly 4^n - n - 1 grid cells
    std::size_t moved = 0;
    for (const Address& cell : sp.delta)
        if (!(sp.p.apply(cell) == cell))
            ++moved;
    CHECK(moved == 13);

    // q_d fixes cells d and n+1
    for (int d = 1; d <= 2; ++d) {
        const Element& q = sp.q[static_cast<std::size_t>(d) - 1];
        CHECK(q.apply(sp.delta[static_cast<std::size_t>(d)]) ==
              sp.delta[static_cast<std::size_t>(d)]);
        CHECK(q.apply(sp.delta[3]) == sp.delta[3]);
    }

    // t is a grid transposition clear of everything c touches
    CHECK(sp.t == transposition(sp.delta[3], sp.delta[4]));
}

TEST_CASE("finite presentation relations hold (n=2)") {
    std::vector<VerificationReport> reports = sweep_finite(2);
    for (const VerificationReport& r : reports) {
        CAPTURE(r.family);
        CHECK(r.failed == 0);
    }
}

TEST_CASE("two-generator scheme") {
    for (int n = 2; n <= 3; ++n) {
        CAPTURE(n);
        const SpecialElements& sp = special_elements(n);
        TwoGeneratorScheme scheme = two_generator_scheme(n);
        int o = scheme.c_order;
        CHECK(o % 2 == 1);
        CHECK(scheme.y.power(o) == sp.t);
        CHECK(scheme.y.power(o + 1) == sp.c);
        CHECK(scheme.x == sp.a);

        // replay every witness word through the evaluator
        CHECK(eval_xy_word(scheme.witness_a, scheme.x, scheme.y) == sp.a);
        CHECK(eval_xy_word(scheme.witness_t, scheme.x, scheme.y) == sp.t);
        CHECK(eval_xy_word(scheme.witness_c, scheme.x, scheme.y) == sp.c);
        CHECK(eval_xy_word(scheme.witness_b, scheme.x, scheme.y) == sp.b);
    }
    // the shift moving t onto b is the cycle distance
    TwoGeneratorScheme scheme = two_generator_scheme(2);
    CHECK(scheme.b_shift == 13); // 4^2 - n - 1
}

TEST_CASE("xy-word evaluator") {
    const SpecialElements& sp = special_elements(2);
    TwoGeneratorScheme scheme = two_generator_scheme(2);
    CHECK(eval_xy_word("x * x^-1", scheme.x, scheme.y).is_identity());
    CHECK(eval_xy_word("(x * y)^-1", scheme.x, scheme.y) ==
          compose(scheme.x, scheme.y).inverse());
    CHECK(eval_xy_word("y^x", scheme.x, scheme.y) == conjugate(scheme.y, scheme.x));
    CHECK(eval_xy_word("x^16", scheme.x, scheme.y).is_identity());
    CHECK(sp.a == eval_xy_word("x", scheme.x, scheme.y));
    CHECK_THROWS_AS(eval_xy_word("z", scheme.x, scheme.y), ParseError);
}

TEST_CASE("rebuild: grid pairs are permutation swaps") {
    RebuildContext ctx(2);
    const SpecialElements& sp = special_elements(2);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            Element r = rebuild_transposition(sp.delta[i], sp.delta[j], &ctx);
            CHECK(r == transposition(sp.delta[i], sp.delta[j]));
        }
}

TEST_CASE("rebuild: single extended coordinate comes from a power of c") {
    RebuildContext ctx(2);
    const SpecialElements& sp = special_elements(2);
    // first coordinate of the second grid cell extended by 0, against the
    // seed cell n+1: the conjugating power is c^1
    Address alpha = sp.delta[1].append(1, 0);
    Address beta = sp.delta[3]; // index n+1 with n=2
    Element direct = conjugate(ctx.grid_swap(0, 3), ctx.c_power(1));
    Element rebuilt = rebuild_transposition(alpha, beta, &ctx);
    CHECK(rebuilt == direct);
    CHECK(rebuilt == transposition(alpha, beta));
}

TEST_CASE("rebuild: short coordinates descend through splits") {
    RebuildContext ctx(2);
    Element r = rebuild_transposition(addr("(0,-)"), addr("(1,-)"), &ctx);
    CHECK(r == transposition(addr("(0,-)"), addr("(1,-)")));
}

TEST_CASE("rebuild: assorted pairs (randomized)") {
    RebuildContext ctx(2);
    nvtest::Rng rng(502);
    for (int i = 0; i < 40; ++i) {
        auto [a, b] = rng.incomparable_pair(2, 4);
        CHECK(rebuild_transposition(a, b, &ctx) == transposition(a, b));
    }
}

TEST_CASE("rebuild: sample at arity 3") {
    RebuildContext ctx(3);
    nvtest::Rng rng(503);
    for (int i = 0; i < 10; ++i) {
        auto [a, b] = rng.incomparable_pair(3, 3);
        CHECK(rebuild_transposition(a, b, &ctx) == transposition(a, b));
    }
}

TEST_CASE("rebuild: independent of the helper-cell choice") {
    RebuildContext ctx(2);
    nvtest::Rng rng(504);
    for (int i = 0; i < 25; ++i) {
        auto [a, b] = rng.incomparable_pair(2, 3);
        Element first = rebuild_transposition(a, b, &ctx);
        for (int skip = 1; skip <= 2; ++skip) {
            RebuildOptions opts;
            opts.witness_skip = skip;
            CHECK(rebuild_transposition(a, b, &ctx, opts) == first);
        }
    }
}

TEST_CASE("rebuild rejects comparable addresses") {
    CHECK_THROWS_AS(rebuild_transposition(addr("(0,-)"), addr("(00,1)")), NotIncomparable);
}

TEST_SUITE_END();
