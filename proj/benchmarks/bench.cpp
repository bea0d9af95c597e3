#include <benchmark/benchmark.h>

#include "nv/expr.hpp"
#include "nv/generators.hpp"
#include "nv/rebuild.hpp"
#include "nv/relations.hpp"
#include "nv/special.hpp"

using namespace nv;

namespace {

Address addr(const char* s) { return Address::parse(s); }

void BM_TranspositionBuild(benchmark::State& state) {
    Address a = addr("(010,1)"), b = addr("(1,010)");
    for (auto _ : state) {
        Element t = transposition(a, b);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TranspositionBuild);

void BM_Compose(benchmark::State& state) {
    Element g = transposition(addr("(010,1)"), addr("(1,010)"));
    Element h = transposition(addr("(00,-)"), addr("(01,11)"));
    for (auto _ : state) {
        Element p = compose(g, h);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_Compose);

void BM_Equals(benchmark::State& state) {
    Element g = compose(transposition(addr("(010,1)"), addr("(1,010)")),
                        transposition(addr("(00,-)"), addr("(01,11)")));
    Element h = g.reduced();
    for (auto _ : state) {
        bool eq = g == h;
        benchmark::DoNotOptimize(eq);
    }
}
BENCHMARK(BM_Equals);

void BM_ConjInstance(benchmark::State& state) {
    // one conjugacy-relation check, the unit of the big sweep
    Element t1 = transposition(addr("(010,1)"), addr("(1,010)"));
    Element t2 = transposition(addr("(00,-)"), addr("(11,-)"));
    Element t2inv = t2.inverse();
    TranspositionSymbol sym(addr("(00,-)"), addr("(11,-)"));
    Address a = addr("(010,1)"), b = addr("(1,010)");
    for (auto _ : state) {
        Address ai = *bullet_step(a, sym);
        Address bi = *bullet_step(b, sym);
        Element lhs = compose(compose(t2inv, t1), t2);
        bool ok = lhs == transposition(ai, bi);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_ConjInstance);

void BM_BakerWord(benchmark::State& state) {
    Address sup = addr("(01,1)");
    for (auto _ : state) {
        Element b = gen_B(2, sup);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BakerWord);

void BM_HmGenerator(benchmark::State& state) {
    for (auto _ : state) {
        Element x = hm_generator(HmKind::X, 1, 2, 2);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_HmGenerator);

void BM_Rebuild(benchmark::State& state) {
    Address a = addr("(010,001)"), b = addr("(100,111)");
    RebuildContext ctx(2);
    for (auto _ : state) {
        // bypass the memo so the full recursion is measured
        RebuildOptions opts;
        opts.witness_skip = 1;
        Element r = rebuild_transposition(a, b, &ctx, opts);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Rebuild);

void BM_InfiniteSweepL2(benchmark::State& state) {
    for (auto _ : state) {
        auto reports = sweep_infinite(2, 2);
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(BM_InfiniteSweepL2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
