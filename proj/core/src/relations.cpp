#include "nv/relations.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nv/detail/parallel.hpp"
#include "nv/partition.hpp"
#include "nv/rebuild.hpp"
#include "nv/serialize.hpp"
#include "nv/special.hpp"

namespace nv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Accumulates one family's outcome; failure strings are built lazily so
/// the passing path stays cheap.
class ReportBuilder {
public:
    ReportBuilder(std::string family, int n, std::string bounds, std::size_t max_failures)
        : max_failures_(max_failures) {
        rep_.family = std::move(family);
        rep_.n = n;
        rep_.bounds = std::move(bounds);
        start_ = Clock::now();
    }

    template <typename ParamsFn, typename LhsFn, typename RhsFn>
    void record(std::uint64_t index, bool ok, ParamsFn&& params, LhsFn&& lhs, RhsFn&& rhs,
                const std::string& detail = {}) {
        ++rep_.checked;
        if (ok)
            return;
        ++rep_.failed;
        if (rep_.failures.size() < max_failures_)
            rep_.failures.push_back(VerificationFailure{index, params(), lhs(), rhs(), detail});
    }

    void skip() { ++rep_.skipped; }

    std::uint64_t failed() const { return rep_.failed; }
    bool flooded() const { return rep_.failed > max_failures_; }

    void merge_counts(const VerificationReport& other) {
        rep_.checked += other.checked;
        rep_.skipped += other.skipped;
        rep_.failed += other.failed;
        for (const VerificationFailure& f : other.failures)
            if (rep_.failures.size() < max_failures_)
                rep_.failures.push_back(f);
    }

    VerificationReport finish() {
        rep_.seconds = seconds_since(start_);
        return std::move(rep_);
    }

private:
    VerificationReport rep_;
    std::size_t max_failures_;
    Clock::time_point start_;
};

std::string element_failure_string(const Element& e) {
    return element_to_json(e);
}

/// Pool of addresses plus its unordered incomparable pairs, the shared
/// substrate of the relation sweeps.
struct PairPool {
    std::vector<Address> pool;
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // i < j, incomparable

    static PairPool build(int n, int L) {
        PairPool p;
        p.pool = enumerate_addresses(n, L);
        for (std::size_t i = 0; i < p.pool.size(); ++i)
            for (std::size_t j = i + 1; j < p.pool.size(); ++j)
                if (p.pool[i].incomparable(p.pool[j]))
                    p.pairs.emplace_back(i, j);
        return p;
    }
};

std::string pair_params(const Address& a, const Address& b) {
    return a.str() + "|" + b.str();
}

} // namespace

// ---------------------------------------------------------------------------
// Generic instance verification
// ---------------------------------------------------------------------------

std::vector<VerificationReport> verify(std::span<const RelationInstance> instances, int n,
                                       const VerifyOptions& options) {
    std::vector<std::string> family_order;
    std::vector<ReportBuilder> builders;
    auto builder_for = [&](const std::string& family) -> ReportBuilder& {
        for (std::size_t i = 0; i < family_order.size(); ++i)
            if (family_order[i] == family)
                return builders[i];
        family_order.push_back(family);
        builders.emplace_back(family, n, "", options.max_failures);
        return builders.back();
    };

    EvalContext ctx(n);
    std::vector<std::uint64_t> family_index(instances.size());
    for (const RelationInstance& inst : instances) {
        ReportBuilder& b = builder_for(inst.family);
        if (!inst.check) {
            b.skip();
            continue;
        }
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < family_order.size(); ++i)
            if (family_order[i] == inst.family)
                index = family_index[i]++;
        if (b.flooded()) {
            b.skip();
            continue;
        }
        bool ok = false;
        std::string detail;
        try {
            ok = evaluate(inst.lhs, n, &ctx) == evaluate(inst.rhs, n, &ctx);
        } catch (const Error& err) {
            ok = false;
            detail = err.what();
        }
        b.record(
            index, ok, [&] { return inst.params; }, [&] { return format_expr(inst.lhs); },
            [&] { return format_expr(inst.rhs); }, detail);
    }

    std::vector<VerificationReport> reports;
    reports.reserve(builders.size());
    for (ReportBuilder& b : builders)
        reports.push_back(b.finish());
    return reports;
}

// ---------------------------------------------------------------------------
// Infinite presentation: SYMM, ORDER, CONJ, SPLIT
// ---------------------------------------------------------------------------

std::vector<RelationInstance> enumerate_infinite_relations(int n, int L) {
    PairPool pp = PairPool::build(n, L);
    std::vector<RelationInstance> out;

    for (auto [i, j] : pp.pairs) {
        const Address& a = pp.pool[i];
        const Address& b = pp.pool[j];
        out.push_back(RelationInstance{"SYMM", pair_params(a, b),
                                       GenExpr::transposition(a, b),
                                       GenExpr::transposition(b, a)});
    }
    for (auto [i, j] : pp.pairs) {
        const Address& a = pp.pool[i];
        const Address& b = pp.pool[j];
        out.push_back(RelationInstance{"ORDER", pair_params(a, b),
                                       GenExpr::power(GenExpr::transposition(a, b), 2),
                                       GenExpr::id()});
    }
    for (auto [gi, gj] : pp.pairs) {
        const Address& g = pp.pool[gi];
        const Address& d = pp.pool[gj];
        TranspositionSymbol sym(g, d);
        for (auto [ai, aj] : pp.pairs) {
            const Address& a = pp.pool[ai];
            const Address& b = pp.pool[aj];
            std::optional<Address> ai_img = bullet_step(a, sym);
            std::optional<Address> bi_img = bullet_step(b, sym);
            if (!ai_img || !bi_img)
                continue;
            out.push_back(RelationInstance{
                "CONJ", pair_params(a, b) + " by " + pair_params(g, d),
                GenExpr::conjugate(GenExpr::transposition(a, b), GenExpr::transposition(g, d)),
                GenExpr::transposition(*ai_img, *bi_img)});
        }
    }
    for (auto [i, j] : pp.pairs) {
        const Address& a = pp.pool[i];
        const Address& b = pp.pool[j];
        for (int d = 1; d <= n; ++d) {
            std::vector<GenExpr> factors;
            factors.push_back(GenExpr::transposition(a.append(d, 0), b.append(d, 0)));
            factors.push_back(GenExpr::transposition(a.append(d, 1), b.append(d, 1)));
            out.push_back(RelationInstance{"SPLIT", pair_params(a, b) + " d=" + std::to_string(d),
                                           GenExpr::transposition(a, b),
                                           GenExpr::product(std::move(factors))});
        }
    }
    return out;
}

std::vector<VerificationReport> sweep_infinite(int n, int L, const VerifyOptions& options) {
    PairPool pp = PairPool::build(n, L);
    std::string bounds = "L=" + std::to_string(L) + " pool=" + std::to_string(pp.pool.size()) +
                         " pairs=" + std::to_string(pp.pairs.size());
    std::size_t P = pp.pairs.size();

    // Transposition elements are shared by every family below.
    std::vector<Element> tp;
    tp.reserve(P);
    for (auto [i, j] : pp.pairs)
        tp.push_back(transposition(pp.pool[i], pp.pool[j]));

    std::vector<VerificationReport> reports;

    {
        ReportBuilder b("SYMM", n, bounds, options.max_failures);
        for (std::size_t p = 0; p < P; ++p) {
            const Address& x = pp.pool[pp.pairs[p].first];
            const Address& y = pp.pool[pp.pairs[p].second];
            bool ok = tp[p] == transposition(y, x);
            b.record(
                p, ok, [&] { return pair_params(x, y); },
                [&] { return element_failure_string(tp[p]); },
                [&] { return element_failure_string(transposition(y, x)); });
        }
        reports.push_back(b.finish());
    }

    {
        ReportBuilder b("ORDER", n, bounds, options.max_failures);
        for (std::size_t p = 0; p < P; ++p) {
            bool ok = compose(tp[p], tp[p]).is_identity();
            b.record(
                p, ok,
                [&] {
                    return pair_params(pp.pool[pp.pairs[p].first], pp.pool[pp.pairs[p].second]);
                },
                [&] { return element_failure_string(compose(tp[p], tp[p])); },
                [&] { return element_failure_string(Element::identity(n)); });
        }
        reports.push_back(b.finish());
    }

    {
        // Conjugacy: the heavy family.  Grid-indexed (conjugator-major) so
        // failure indices are stable across thread counts.
        ReportBuilder total("CONJ", n, bounds + " (grid-indexed)", options.max_failures);
        int threads = detail::resolve_threads(options.threads);
        std::vector<VerificationReport> partial(
            static_cast<std::size_t>(threads) > P ? P : static_cast<std::size_t>(threads));
        detail::run_chunked(P, threads, [&](std::size_t chunk, std::size_t begin,
                                            std::size_t end) {
            ReportBuilder local("CONJ", n, "", options.max_failures);
            for (std::size_t q = begin; q < end && !local.flooded(); ++q) {
                const Address& g = pp.pool[pp.pairs[q].first];
                const Address& d = pp.pool[pp.pairs[q].second];
                TranspositionSymbol sym(g, d);
                const Element& T = tp[q];
                Element Tinv = T.inverse();
                for (std::size_t p = 0; p < P && !local.flooded(); ++p) {
                    const Address& a = pp.pool[pp.pairs[p].first];
                    const Address& b = pp.pool[pp.pairs[p].second];
                    std::optional<Address> a_img = bullet_step(a, sym);
                    if (!a_img)
                        continue;
                    std::optional<Address> b_img = bullet_step(b, sym);
                    if (!b_img)
                        continue;
                    Element lhs = compose(compose(Tinv, tp[p]), T);
                    Element rhs = transposition(*a_img, *b_img);
                    bool ok = lhs == rhs;
                    local.record(
                        static_cast<std::uint64_t>(q) * P + p, ok,
                        [&] { return pair_params(a, b) + " by " + pair_params(g, d); },
                        [&] { return element_failure_string(lhs); },
                        [&] { return element_failure_string(rhs); });
                }
            }
            partial[chunk] = local.finish();
        });
        for (const VerificationReport& r : partial)
            total.merge_counts(r);
        reports.push_back(total.finish());
    }

    {
        ReportBuilder b("SPLIT", n, bounds, options.max_failures);
        std::uint64_t index = 0;
        for (std::size_t p = 0; p < P; ++p) {
            const Address& a = pp.pool[pp.pairs[p].first];
            const Address& bb = pp.pool[pp.pairs[p].second];
            for (int d = 1; d <= n; ++d) {
                Element rhs = compose(transposition(a.append(d, 0), bb.append(d, 0)),
                                      transposition(a.append(d, 1), bb.append(d, 1)));
                bool ok = tp[p] == rhs;
                b.record(
                    index++, ok,
                    [&] { return pair_params(a, bb) + " d=" + std::to_string(d); },
                    [&] { return element_failure_string(tp[p]); },
                    [&] { return element_failure_string(rhs); });
            }
        }
        reports.push_back(b.finish());
    }

    return reports;
}

// ---------------------------------------------------------------------------
// Hennig-Matucci relation families
// ---------------------------------------------------------------------------

namespace {

GenExpr hm_X(int m, int d) { return GenExpr::named(GenName::X, m, d); }
GenExpr hm_pi(int m) { return GenExpr::named(GenName::Pi, m); }
GenExpr hm_pibar(int m) { return GenExpr::named(GenName::PiBar, m); }
GenExpr hm_C(int m, int d) { return GenExpr::named(GenName::C, m, d); }

GenExpr word(std::vector<GenExpr> factors) { return GenExpr::product(std::move(factors)); }

std::string hm_params(int m, int q, int d, int dp) {
    std::string s = "m=" + std::to_string(m);
    if (q >= 0)
        s += " q=" + std::to_string(q);
    if (d >= 0)
        s += " d=" + std::to_string(d);
    if (dp >= 0)
        s += " d'=" + std::to_string(dp);
    return s;
}

} // namespace

std::vector<RelationInstance> enumerate_hm_relations(int n, int m_max, int q_max) {
    if (m_max < 0 || q_max < 0)
        throw BadParameters("relation level bounds must be >= 0");
    std::vector<RelationInstance> out;
    auto add = [&](const char* family, std::string params, GenExpr lhs, GenExpr rhs) {
        out.push_back(RelationInstance{family, std::move(params), std::move(lhs), std::move(rhs)});
    };

    for (int m = 0; m <= m_max; ++m) {
        for (int q = m + 1; q <= q_max; ++q) {
            for (int d = 1; d <= n; ++d) {
                for (int dp = 1; dp <= n; ++dp)
                    add("HM1", hm_params(m, q, d, dp), word({hm_X(m, d), hm_X(q, dp)}),
                        word({hm_X(q + 1, dp), hm_X(m, d)}));
                add("HM2", hm_params(m, q, d, -1), word({hm_X(m, d), hm_pi(q)}),
                    word({hm_pi(q + 1), hm_X(m, d)}));
                add("HM5", hm_params(m, q, d, -1), word({hm_X(m, d), hm_pibar(q)}),
                    word({hm_pibar(q + 1), hm_X(m, d)}));
            }
        }
        for (int d = 1; d <= n; ++d)
            add("HM3", hm_params(m, -1, d, -1), word({hm_X(m, d), hm_pi(m)}),
                word({hm_pi(m + 1), hm_pi(m), hm_X(m + 1, d)}));
        for (int q = m + 2; q <= q_max; ++q)
            for (int d = 1; d <= n; ++d)
                add("HM4", hm_params(m, q, d, -1), word({hm_X(q, d), hm_pi(m)}),
                    word({hm_pi(m), hm_X(q, d)}));
        add("HM6", hm_params(m, -1, -1, -1), word({hm_X(m, 1), hm_pibar(m)}),
            word({hm_pibar(m + 1), hm_pi(m)}));
        for (int d = 1; d <= n; ++d)
            for (int dp = 1; dp <= n; ++dp)
                if (d != dp)
                    add("HM7", hm_params(m, -1, d, dp),
                        word({hm_X(m, dp), hm_X(m + 1, dp), hm_X(m, d)}),
                        word({hm_pi(m + 1), hm_X(m, d), hm_X(m + 1, d), hm_X(m, dp)}));
    }

    for (int m = 0; m <= m_max; ++m)
        for (int q = 0; q <= q_max; ++q)
            if (std::abs(m - q) >= 2)
                add("HM8", hm_params(m, q, -1, -1), word({hm_pi(m), hm_pi(q)}),
                    word({hm_pi(q), hm_pi(m)}));
    for (int m = 0; m <= m_max; ++m) {
        add("HM9", hm_params(m, -1, -1, -1), word({hm_pi(m), hm_pi(m + 1), hm_pi(m)}),
            word({hm_pi(m + 1), hm_pi(m), hm_pi(m + 1)}));
        for (int q = m + 2; q <= q_max; ++q)
            add("HM10", hm_params(m, q, -1, -1), word({hm_pi(m), hm_pibar(q)}),
                word({hm_pibar(q), hm_pi(m)}));
        add("HM11", hm_params(m, -1, -1, -1), word({hm_pi(m), hm_pibar(m + 1), hm_pi(m)}),
            word({hm_pibar(m + 1), hm_pi(m), hm_pibar(m + 1)}));
        add("HM12", hm_params(m, -1, -1, -1), GenExpr::power(hm_pi(m), 2), GenExpr::id());
        add("HM13", hm_params(m, -1, -1, -1), GenExpr::power(hm_pibar(m), 2), GenExpr::id());
    }

    for (int m = 0; m <= m_max; ++m) {
        for (int d = 2; d <= n; ++d) {
            add("HM14", hm_params(m, -1, d, -1), word({hm_X(m, d), hm_pibar(m)}),
                word({hm_pibar(m + 1), hm_pi(m), hm_C(m + 1, d)}));
            for (int q = m + 1; q <= q_max; ++q)
                for (int dp = 1; dp <= n; ++dp)
                    add("HM15", hm_params(m, q, d, dp), word({hm_X(m, dp), hm_C(q, d)}),
                        word({hm_C(q + 1, d), hm_X(m, dp)}));
            add("HM16", hm_params(m, -1, d, -1), word({hm_X(m, 1), hm_C(m, d)}),
                word({hm_pi(m + 1), hm_C(m + 2, d), hm_X(m, d)}));
            for (int q = m + 2; q <= q_max; ++q)
                add("HM17", hm_params(m, q, d, -1), word({hm_C(q, d), hm_pi(m)}),
                    word({hm_pi(m), hm_C(q, d)}));
            for (int dp = 2; dp < d; ++dp)
                add("HM18", hm_params(m, -1, d, dp),
                    word({hm_C(m + 2, dp), hm_X(m, dp), hm_C(m, d)}),
                    word({hm_pi(m + 1), hm_C(m + 2, d), hm_X(m, d), hm_C(m, dp)}));
        }
    }
    return out;
}

std::vector<VerificationReport> sweep_hm(int n, int m_max, int q_max,
                                         const VerifyOptions& options) {
    std::vector<RelationInstance> instances = enumerate_hm_relations(n, m_max, q_max);
    std::vector<VerificationReport> reports = verify(instances, n, options);
    std::string bounds = "m_max=" + std::to_string(m_max) + " q_max=" + std::to_string(q_max);
    for (VerificationReport& r : reports)
        r.bounds = bounds;
    return reports;
}

// ---------------------------------------------------------------------------
// Finite presentation R1..R7
// ---------------------------------------------------------------------------

std::vector<RelationInstance> enumerate_finite_relations(int n) {
    std::vector<Address> delta = enumerate_delta(n);
    std::vector<RelationInstance> out;
    auto tr = [](const Address& a, const Address& b) { return GenExpr::transposition(a, b); };
    auto cgen = [] { return GenExpr::named(GenName::FinC, 0); };

    for (int i = 0; i < 8; ++i)
        out.push_back(RelationInstance{"R1",
                                       "symmetric-group placeholder " + std::to_string(i + 1) +
                                           "/8",
                                       GenExpr::id(), GenExpr::id(), false});

    out.push_back(RelationInstance{"R2", "[c,p]=1",
                                   GenExpr::commutator(cgen(), GenExpr::named(GenName::FinP, 0)),
                                   GenExpr::id()});
    out.push_back(RelationInstance{
        "R2", "[c,t(d(n+2),d(n+3))]=1",
        GenExpr::commutator(cgen(), tr(delta[static_cast<std::size_t>(n) + 2],
                                       delta[static_cast<std::size_t>(n) + 3])),
        GenExpr::id()});

    for (int d = 1; d <= n; ++d)
        for (unsigned x = 0; x <= 1; ++x)
            out.push_back(RelationInstance{
                "R3", "d=" + std::to_string(d) + " x=" + std::to_string(x),
                GenExpr::commutator(GenExpr::named(GenName::FinQ, d),
                                    tr(delta[static_cast<std::size_t>(d)].append(d, x),
                                       delta[static_cast<std::size_t>(n) + 1])),
                GenExpr::id()});

    for (int d = 1; d <= n; ++d)
        for (unsigned x = 0; x <= 1; ++x)
            out.push_back(RelationInstance{
                "R4", "d=" + std::to_string(d) + " x=" + std::to_string(x),
                GenExpr::commutator(cgen(),
                                    tr(delta[static_cast<std::size_t>(n) + 2].append(d, x),
                                       delta[static_cast<std::size_t>(n) + 3])),
                GenExpr::id()});

    for (int d = 1; d <= n; ++d)
        for (int dp = d + 1; dp <= n; ++dp)
            for (unsigned x = 0; x <= 1; ++x)
                for (unsigned y = 0; y <= 1; ++y)
                    out.push_back(RelationInstance{
                        "R5",
                        "d=" + std::to_string(d) + " x=" + std::to_string(x) +
                            " d'=" + std::to_string(dp) + " y=" + std::to_string(y),
                        GenExpr::conjugate(tr(delta[0].append(d, x), delta[1]),
                                           tr(delta[0], delta[2].append(dp, y))),
                        GenExpr::conjugate(tr(delta[0].append(dp, y), delta[1]),
                                           tr(delta[0], delta[2].append(d, x)))});

    for (int d = 1; d <= n; ++d)
        out.push_back(RelationInstance{
            "R6", "d=" + std::to_string(d), tr(delta[0], delta[1]),
            GenExpr::product({tr(delta[0].append(d, 0), delta[1].append(d, 0)),
                              tr(delta[0].append(d, 1), delta[1].append(d, 1))})});

    {
        std::vector<GenExpr> factors;
        for (int d = 1; d <= n; ++d) {
            factors.push_back(tr(delta[0], delta[static_cast<std::size_t>(d)].append(d, 0)));
            factors.push_back(tr(delta[0], delta[static_cast<std::size_t>(d)].append(d, 1)));
        }
        out.push_back(RelationInstance{"R7", "definition of c", cgen(),
                                       GenExpr::product(std::move(factors))});
    }
    return out;
}

std::vector<VerificationReport> sweep_finite(int n, const VerifyOptions& options) {
    std::vector<RelationInstance> instances = enumerate_finite_relations(n);
    std::vector<VerificationReport> reports = verify(instances, n, options);
    for (VerificationReport& r : reports)
        r.bounds = "n=" + std::to_string(n);

    // Structural stand-in for the R1 placeholders: a is the full grid
    // cycle, b swaps two cells adjacent in that cycle, which generates the
    // whole symmetric group of the grid.
    ReportBuilder b("R1-semantic", n, "n=" + std::to_string(n), options.max_failures);
    const SpecialElements& sp = special_elements(n);
    std::size_t count = sp.delta.size();
    bool cycle_ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        std::optional<Address> img = sp.a.apply(sp.delta[i]);
        if (!img || !(*img == sp.delta[(i + 1) % count])) {
            cycle_ok = false;
            break;
        }
    }
    bool swap_ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        std::optional<Address> img = sp.b.apply(sp.delta[i]);
        std::size_t expect = i == 0 ? 1 : (i == 1 ? 0 : i);
        if (!img || !(*img == sp.delta[expect])) {
            swap_ok = false;
            break;
        }
    }
    // b's two points are consecutive in a's cycle, so <a, b> is the full
    // symmetric group on the 4^n grid cells.
    bool adjacent_ok = false;
    std::optional<Address> adj = sp.a.apply(sp.delta[0]);
    adjacent_ok = adj && *adj == sp.delta[1];
    b.record(
        0, cycle_ok && swap_ok && adjacent_ok,
        [&] { return std::string("a full-cycle, b adjacent transposition"); },
        [&] { return element_failure_string(sp.a); }, [&] { return element_failure_string(sp.b); });
    reports.push_back(b.finish());
    return reports;
}

// ---------------------------------------------------------------------------
// Lemma suites for the baker's-map machinery
// ---------------------------------------------------------------------------

namespace {

bool commute(const Element& g, const Element& h) {
    return compose(g, h) == compose(h, g);
}

} // namespace

std::vector<VerificationReport> sweep_lemmas(int n, int L, const VerifyOptions& options) {
    PairPool pp = PairPool::build(n, L);
    std::string bounds = "L=" + std::to_string(L);
    std::vector<VerificationReport> reports;
    std::size_t P = pp.pairs.size();

    // Ordered incomparable pairs and cached two-sided baker composites.
    std::vector<std::pair<std::size_t, std::size_t>> opairs;
    opairs.reserve(2 * P);
    for (auto [i, j] : pp.pairs) {
        opairs.emplace_back(i, j);
        opairs.emplace_back(j, i);
    }

    for (int d = 2; d <= n; ++d) {
        std::string db = bounds + " d=" + std::to_string(d);
        std::vector<Element> A;
        A.reserve(opairs.size());
        for (auto [i, j] : opairs)
            A.push_back(gen_A(d, pp.pool[i], pp.pool[j]));

        {
            ReportBuilder b("A-conj", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (std::size_t q = 0; q < P; ++q) {
                const Address& g = pp.pool[pp.pairs[q].first];
                const Address& dd = pp.pool[pp.pairs[q].second];
                TranspositionSymbol sym(g, dd);
                Element T = transposition(g, dd);
                Element Tinv = T.inverse();
                for (std::size_t p = 0; p < opairs.size(); ++p) {
                    const Address& a = pp.pool[opairs[p].first];
                    const Address& bb = pp.pool[opairs[p].second];
                    std::optional<Address> a_img = bullet_step(a, sym);
                    if (!a_img)
                        continue;
                    std::optional<Address> b_img = bullet_step(bb, sym);
                    if (!b_img)
                        continue;
                    Element lhs = compose(compose(Tinv, A[p]), T);
                    Element rhs = gen_A(d, *a_img, *b_img);
                    b.record(
                        index++, lhs == rhs,
                        [&] { return pair_params(a, bb) + " by " + pair_params(g, dd); },
                        [&] { return element_failure_string(lhs); },
                        [&] { return element_failure_string(rhs); });
                }
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("A-disjoint-commute", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (std::size_t p1 = 0; p1 < opairs.size(); ++p1) {
                const Address& a = pp.pool[opairs[p1].first];
                const Address& bb = pp.pool[opairs[p1].second];
                for (std::size_t p2 = p1 + 1; p2 < opairs.size(); ++p2) {
                    const Address& g = pp.pool[opairs[p2].first];
                    const Address& h = pp.pool[opairs[p2].second];
                    if (!a.incomparable(g) || !a.incomparable(h) || !bb.incomparable(g) ||
                        !bb.incomparable(h))
                        continue;
                    b.record(
                        index++, commute(A[p1], A[p2]),
                        [&] { return pair_params(a, bb) + " vs " + pair_params(g, h); },
                        [&] { return element_failure_string(compose(A[p1], A[p2])); },
                        [&] { return element_failure_string(compose(A[p2], A[p1])); });
                }
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("A-split-1", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (std::size_t p = 0; p < opairs.size(); ++p) {
                const Address& a = pp.pool[opairs[p].first];
                const Address& bb = pp.pool[opairs[p].second];
                Element rhs = compose(
                    compose(compose(transposition(a.append(1, 0).append(1, 1),
                                                  a.append(1, 1).append(1, 0)),
                                    gen_A(d, a.append(1, 0), bb.append(1, 0))),
                            gen_A(d, a.append(1, 1), bb.append(1, 1))),
                    transposition(bb.append(1, 0).append(1, 1), bb.append(1, 1).append(1, 0)));
                b.record(
                    index++, A[p] == rhs, [&] { return pair_params(a, bb); },
                    [&] { return element_failure_string(A[p]); },
                    [&] { return element_failure_string(rhs); });
            }
            reports.push_back(b.finish());
        }

        for (int dp = 2; dp <= n; ++dp) {
            if (dp == d)
                continue;
            ReportBuilder b("A-split-d", n, db + " d'=" + std::to_string(dp),
                            options.max_failures);
            std::uint64_t index = 0;
            for (std::size_t p = 0; p < opairs.size(); ++p) {
                const Address& a = pp.pool[opairs[p].first];
                const Address& bb = pp.pool[opairs[p].second];
                Element rhs = compose(gen_A(d, a.append(dp, 0), bb.append(dp, 0)),
                                      gen_A(d, a.append(dp, 1), bb.append(dp, 1)));
                b.record(
                    index++, A[p] == rhs, [&] { return pair_params(a, bb); },
                    [&] { return element_failure_string(A[p]); },
                    [&] { return element_failure_string(rhs); });
            }
            reports.push_back(b.finish());
        }

        // Valid supports for the hat form: coordinates 1 and d non-empty.
        std::vector<Address> hat_supports;
        for (const Address& a : pp.pool)
            if (!a.coord(1).empty() && !a.coord(d).empty())
                hat_supports.push_back(a);

        {
            ReportBuilder b("Bhat-disjoint-commute", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (const Address& sup : hat_supports) {
                Element bh = gen_Bhat(d, sup);
                for (auto [i, j] : pp.pairs) {
                    const Address& z = pp.pool[i];
                    const Address& e = pp.pool[j];
                    if (!z.incomparable(sup) || !e.incomparable(sup))
                        continue;
                    Element t = transposition(z, e);
                    b.record(
                        index++, commute(bh, t),
                        [&] { return sup.str() + " vs " + pair_params(z, e); },
                        [&] { return element_failure_string(compose(bh, t)); },
                        [&] { return element_failure_string(compose(t, bh)); });
                }
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("Bhat-witness-free", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (const Address& sup : hat_supports) {
                Element canonical = gen_Bhat(d, sup);
                Address stem = sup.with_coord(d, sup.coord(d).drop_last());
                for (const Address& w : pp.pool) {
                    if (w.coord(1).empty() || w.coord(d).empty() || !w.incomparable(stem))
                        continue;
                    Element other = gen_Bhat_with_witness(d, sup, w);
                    b.record(
                        index++, canonical == other,
                        [&] { return sup.str() + " witness " + w.str(); },
                        [&] { return element_failure_string(canonical); },
                        [&] { return element_failure_string(other); });
                }
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("Bhat-conj-sibling", n, db, options.max_failures);
            Element flip = transposition(Address::unit(n, 1, Word::single(0)),
                                         Address::unit(n, 1, Word::single(1)));
            std::uint64_t index = 0;
            for (unsigned y = 0; y <= 1; ++y) {
                Address zero_side = Address::unit(n, 1, Word::single(0)).append(d, y);
                Address one_side = Address::unit(n, 1, Word::single(1)).append(d, y);
                Element lhs = conjugate(gen_Bhat(d, zero_side), flip);
                Element rhs = gen_Bhat(d, one_side);
                b.record(
                    index++, lhs == rhs, [&] { return "y=" + std::to_string(y); },
                    [&] { return element_failure_string(lhs); },
                    [&] { return element_failure_string(rhs); });
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("Bhat-conj-deeper", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (unsigned y = 0; y <= 1; ++y) {
                for (unsigned tail = 0; tail <= 1; ++tail) {
                    Address from = Address::unit(n, 1, Word::single(0)).append(d, y);
                    Word deep = Word::single(1).append(tail);
                    Address to = Address::unit(n, 1, deep).append(d, y);
                    Element t = transposition(Address::unit(n, 1, Word::single(0)),
                                              Address::unit(n, 1, deep));
                    Element lhs = conjugate(gen_Bhat(d, from), t);
                    Element rhs = gen_Bhat(d, to);
                    b.record(
                        index++, lhs == rhs,
                        [&] {
                            return "y=" + std::to_string(y) + " target=1" + std::to_string(tail);
                        },
                        [&] { return element_failure_string(lhs); },
                        [&] { return element_failure_string(rhs); });
                }
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("Bhat-cross-commute", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (unsigned x = 0; x <= 1; ++x) {
                Address left = Address::unit(n, 1, Word::single(x).append(0)).append(d, 1);
                Address right = Address::unit(n, 1, Word::single(x).append(1)).append(d, 0);
                Element gl = gen_Bhat(d, left);
                Element gr = gen_Bhat(d, right);
                b.record(
                    index++, commute(gl, gr), [&] { return "x=" + std::to_string(x); },
                    [&] { return element_failure_string(compose(gl, gr)); },
                    [&] { return element_failure_string(compose(gr, gl)); });
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("Bhat-split-1", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (unsigned x = 0; x <= 1; ++x) {
                for (unsigned y = 0; y <= 1; ++y) {
                    Address whole = Address::unit(n, 1, Word::single(x)).append(d, y);
                    Word x0 = Word::single(x).append(0);
                    Word x1 = Word::single(x).append(1);
                    Element lhs = gen_Bhat(d, whole);
                    Element rhs = compose(
                        compose(transposition(Address::unit(n, 1, x0.append(1)).append(d, y),
                                              Address::unit(n, 1, x1.append(0)).append(d, y)),
                                gen_Bhat(d, Address::unit(n, 1, x0).append(d, y))),
                        gen_Bhat(d, Address::unit(n, 1, x1).append(d, y)));
                    b.record(
                        index++, lhs == rhs,
                        [&] { return "x=" + std::to_string(x) + " y=" + std::to_string(y); },
                        [&] { return element_failure_string(lhs); },
                        [&] { return element_failure_string(rhs); });
                }
            }
            reports.push_back(b.finish());
        }

        for (int dp = 2; dp <= n; ++dp) {
            if (dp == d)
                continue;
            ReportBuilder b("Bhat-split-d", n, db + " d'=" + std::to_string(dp),
                            options.max_failures);
            std::uint64_t index = 0;
            for (unsigned x = 0; x <= 1; ++x) {
                for (unsigned y = 0; y <= 1; ++y) {
                    Address whole = Address::unit(n, 1, Word::single(x)).append(d, y);
                    Element lhs = gen_Bhat(d, whole);
                    Element rhs = compose(gen_Bhat(d, whole.append(dp, 0)),
                                          gen_Bhat(d, whole.append(dp, 1)));
                    b.record(
                        index++, lhs == rhs,
                        [&] { return "x=" + std::to_string(x) + " y=" + std::to_string(y); },
                        [&] { return element_failure_string(lhs); },
                        [&] { return element_failure_string(rhs); });
                }
            }
            reports.push_back(b.finish());
        }

        // Supports for the full form: coordinate 1 non-empty.
        std::vector<Address> b_supports;
        for (const Address& a : pp.pool)
            if (!a.coord(1).empty())
                b_supports.push_back(a);

        {
            ReportBuilder b("B-disjoint-commute", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (const Address& sup : b_supports) {
                Element bk = gen_B(d, sup);
                for (auto [i, j] : pp.pairs) {
                    const Address& z = pp.pool[i];
                    const Address& e = pp.pool[j];
                    if (!z.incomparable(sup) || !e.incomparable(sup))
                        continue;
                    Element t = transposition(z, e);
                    b.record(
                        index++, commute(bk, t),
                        [&] { return sup.str() + " vs " + pair_params(z, e); },
                        [&] { return element_failure_string(compose(bk, t)); },
                        [&] { return element_failure_string(compose(t, bk)); });
                }
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("B-conj-sibling", n, db, options.max_failures);
            Address zero1 = Address::unit(n, 1, Word::single(0));
            Address one1 = Address::unit(n, 1, Word::single(1));
            Element lhs = conjugate(gen_B(d, zero1), transposition(zero1, one1));
            Element rhs = gen_B(d, one1);
            b.record(
                0, lhs == rhs, [&] { return std::string("0->1"); },
                [&] { return element_failure_string(lhs); },
                [&] { return element_failure_string(rhs); });
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("B-conj-deeper", n, db, options.max_failures);
            Address zero1 = Address::unit(n, 1, Word::single(0));
            std::uint64_t index = 0;
            for (unsigned tail = 0; tail <= 1; ++tail) {
                Word deep = Word::single(1).append(tail);
                Address target = Address::unit(n, 1, deep);
                Element lhs = conjugate(gen_B(d, zero1), transposition(zero1, target));
                Element rhs = gen_B(d, target);
                b.record(
                    index++, lhs == rhs, [&] { return "target=1" + std::to_string(tail); },
                    [&] { return element_failure_string(lhs); },
                    [&] { return element_failure_string(rhs); });
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("B-split-1", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (unsigned x = 0; x <= 1; ++x) {
                Word xw = Word::single(x);
                Element lhs = gen_B(d, Address::unit(n, 1, xw));
                Element rhs = compose(
                    compose(transposition(Address::unit(n, 1, xw.append(0).append(1)),
                                          Address::unit(n, 1, xw.append(1).append(0))),
                            gen_B(d, Address::unit(n, 1, xw.append(0)))),
                    gen_B(d, Address::unit(n, 1, xw.append(1))));
                b.record(
                    index++, lhs == rhs, [&] { return "x=" + std::to_string(x); },
                    [&] { return element_failure_string(lhs); },
                    [&] { return element_failure_string(rhs); });
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("B-left-right-commute", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (int dp = 2; dp <= n; ++dp) {
                Element left = gen_B(d, Address::unit(n, 1, Word::single(0)));
                Element right = gen_B(dp, Address::unit(n, 1, Word::single(1)));
                b.record(
                    index++, commute(left, right), [&] { return "d'=" + std::to_string(dp); },
                    [&] { return element_failure_string(compose(left, right)); },
                    [&] { return element_failure_string(compose(right, left)); });
            }
            reports.push_back(b.finish());
        }

        for (int dp = 2; dp <= n; ++dp) {
            if (dp == d)
                continue;
            ReportBuilder b("B-split-d", n, db + " d'=" + std::to_string(dp),
                            options.max_failures);
            std::uint64_t index = 0;
            for (unsigned x = 0; x <= 1; ++x) {
                Address base = Address::unit(n, 1, Word::single(x));
                Element lhs = gen_B(d, base);
                Element rhs =
                    compose(gen_B(d, base.append(dp, 0)), gen_B(d, base.append(dp, 1)));
                b.record(
                    index++, lhs == rhs, [&] { return "x=" + std::to_string(x); },
                    [&] { return element_failure_string(lhs); },
                    [&] { return element_failure_string(rhs); });
            }
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("C0-conj", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (int dp = 2; dp <= n; ++dp) {
                Element c0dp = hm_generator(HmKind::C, 0, dp, n);
                Element c0d = hm_generator(HmKind::C, 0, d, n);
                for (unsigned x = 0; x <= 1; ++x) {
                    Element lhs = conjugate(gen_B(d, Address::unit(n, 1, Word::single(x))), c0dp);
                    Element rhs = localize(Address::unit(n, dp, Word::single(x)), c0d);
                    b.record(
                        index++, lhs == rhs,
                        [&] { return "x=" + std::to_string(x) + " d'=" + std::to_string(dp); },
                        [&] { return element_failure_string(lhs); },
                        [&] { return element_failure_string(rhs); });
                }
            }
            reports.push_back(b.finish());
        }

        for (int dp = 2; dp <= n; ++dp) {
            if (dp == d)
                continue;
            ReportBuilder b("C0-split", n, db + " d'=" + std::to_string(dp),
                            options.max_failures);
            Element c0d = hm_generator(HmKind::C, 0, d, n);
            Element lhs = c0d;
            Element rhs = compose(localize(Address::unit(n, dp, Word::single(0)), c0d),
                                  localize(Address::unit(n, dp, Word::single(1)), c0d));
            b.record(
                0, lhs == rhs, [&] { return std::string(); },
                [&] { return element_failure_string(lhs); },
                [&] { return element_failure_string(rhs); });
            reports.push_back(b.finish());
        }

        {
            ReportBuilder b("B-baker-conj", n, db, options.max_failures);
            std::uint64_t index = 0;
            for (int dp = 2; dp <= n; ++dp) {
                Element by = gen_B(dp, Address::unit(n, 1, Word::single(1)));
                for (unsigned tail = 0; tail <= 1; ++tail) {
                    Address from = Address::unit(n, 1, Word::single(1).append(tail));
                    Address to = Address::unit(n, 1, Word::single(1)).append(dp, tail);
                    Element lhs = conjugate(gen_B(d, from), by);
                    Element rhs = gen_B(d, to);
                    b.record(
                        index++, lhs == rhs,
                        [&] {
                            return "d'=" + std::to_string(dp) + " branch=" + std::to_string(tail);
                        },
                        [&] { return element_failure_string(lhs); },
                        [&] { return element_failure_string(rhs); });
                }
            }
            reports.push_back(b.finish());
        }
    }
    for (VerificationReport& r : reports)
        if (r.bounds.empty())
            r.bounds = bounds;
    return reports;
}

// ---------------------------------------------------------------------------
// Transposition reconstruction sweep
// ---------------------------------------------------------------------------

std::vector<VerificationReport> sweep_rebuild(int n, Weight wmax, int samples,
                                              int random_coord_len, std::uint64_t seed,
                                              const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    RebuildContext ctx(n);

    {
        std::vector<Address> pool;
        for (const Address& a : enumerate_addresses(n, n * wmax.m))
            if (a.weight() <= wmax)
                pool.push_back(a);
        ReportBuilder b("REBUILD-sweep", n,
                        "wmax=(" + std::to_string(wmax.m) + "," + std::to_string(wmax.k) + ")",
                        options.max_failures);
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                if (!pool[i].incomparable(pool[j]))
                    continue;
                Element rebuilt = rebuild_transposition(pool[i], pool[j], &ctx);
                Element direct = transposition(pool[i], pool[j]);
                b.record(
                    index++, rebuilt == direct,
                    [&] { return pair_params(pool[i], pool[j]); },
                    [&] { return element_failure_string(rebuilt); },
                    [&] { return element_failure_string(direct); });
            }
        }
        reports.push_back(b.finish());
    }

    {
        ReportBuilder b("REBUILD-random", n,
                        "samples=" + std::to_string(samples) + " maxlen=" +
                            std::to_string(random_coord_len) + " seed=" + std::to_string(seed),
                        options.max_failures);
        std::mt19937_64 rng(seed);
        auto random_address = [&] {
            Address a = Address::root(n);
            for (int d = 1; d <= n; ++d) {
                std::uniform_int_distribution<int> len_dist(0, random_coord_len);
                int len = len_dist(rng);
                Word w;
                for (int i = 0; i < len; ++i)
                    w = w.append(static_cast<unsigned>(rng() & 1u));
                a = a.with_coord(d, w);
            }
            return a;
        };
        std::uint64_t index = 0;
        for (int s = 0; s < samples; ++s) {
            Address a = random_address();
            Address bb = random_address();
            int guard = 0;
            while (!a.incomparable(bb) && guard++ < 1000) {
                a = random_address();
                bb = random_address();
            }
            if (!a.incomparable(bb))
                continue;
            Element rebuilt = rebuild_transposition(a, bb, &ctx);
            Element direct = transposition(a, bb);
            b.record(
                index++, rebuilt == direct, [&] { return pair_params(a, bb); },
                [&] { return element_failure_string(rebuilt); },
                [&] { return element_failure_string(direct); });
        }
        reports.push_back(b.finish());
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Conjugacy-instance taxonomy
// ---------------------------------------------------------------------------

ConjCase classify_conj_case(const Address& a, const Address& b, const Address& g,
                            const Address& d) {
    if (!a.incomparable(b) || !g.incomparable(d))
        throw NotIncomparable("conjugacy instance needs two incomparable pairs");

    // Per entry of the conjugated pair: which conjugator entry reaches it.
    // Defined-ness of the bullet action means each entry is either below
    // g, below d, or clear of both.
    enum class Hit { G, D, Clear };
    auto hit = [&](const Address& x) {
        if (g.is_prefix_of(x))
            return Hit::G;
        if (d.is_prefix_of(x))
            return Hit::D;
        if (x.incomparable(g) && x.incomparable(d))
            return Hit::Clear;
        throw BadParameters("bullet action undefined for " + x.str() + " under " + g.str() +
                            "|" + d.str());
    };
    Hit ha = hit(a), hb = hit(b);

    if (ha == Hit::Clear && hb == Hit::Clear)
        return ConjCase::A;
    if (ha != Hit::Clear && hb != Hit::Clear) {
        if (ha == hb)
            return ConjCase::D;
        // Opposite entries reach the two sides; conjugating a
        // transposition by itself is its own (excluded) configuration.
        if ((a == g && b == d) || (a == d && b == g))
            return ConjCase::SelfConjugate;
        return ConjCase::C;
    }
    return ConjCase::B;
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

std::string reports_to_json(std::span<const VerificationReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::json failures = nlohmann::json::array();
        for (const VerificationFailure& f : r.failures) {
            failures.push_back({{"index", f.index},
                                {"params", f.params},
                                {"lhs", f.lhs},
                                {"rhs", f.rhs},
                                {"detail", f.detail}});
        }
        arr.push_back({{"family", r.family},
                       {"n", r.n},
                       {"bounds", r.bounds},
                       {"checked", r.checked},
                       {"skipped", r.skipped},
                       {"failed", r.failed},
                       {"pass", r.pass()},
                       {"failures", failures}});
    }
    return arr.dump(2);
}

std::string reports_to_table(std::span<const VerificationReport> reports) {
    std::ostringstream out;
    out << "family                    checked   skipped    failed  result\n";
    std::uint64_t checked = 0, skipped = 0, failed = 0;
    for (const VerificationReport& r : reports) {
        checked += r.checked;
        skipped += r.skipped;
        failed += r.failed;
        out << r.family;
        for (std::size_t i = r.family.size(); i < 23; ++i)
            out << ' ';
        std::string c = std::to_string(r.checked), s = std::to_string(r.skipped),
                    f = std::to_string(r.failed);
        for (std::size_t i = c.size(); i < 10; ++i)
            out << ' ';
        out << c;
        for (std::size_t i = s.size(); i < 10; ++i)
            out << ' ';
        out << s;
        for (std::size_t i = f.size(); i < 10; ++i)
            out << ' ';
        out << f << "  " << (r.pass() ? "pass" : "FAIL") << "\n";
    }
    out << "TOTAL";
    for (std::size_t i = 5; i < 23; ++i)
        out << ' ';
    std::string c = std::to_string(checked), s = std::to_string(skipped),
                f = std::to_string(failed);
    for (std::size_t i = c.size(); i < 10; ++i)
        out << ' ';
    out << c;
    for (std::size_t i = s.size(); i < 10; ++i)
        out << ' ';
    out << s;
    for (std::size_t i = f.size(); i < 10; ++i)
        out << ' ';
    out << f << "  " << (failed == 0 ? "pass" : "FAIL") << "\n";
    return out.str();
}

} // namespace nv
