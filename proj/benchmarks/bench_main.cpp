#include <benchmark/benchmark.h>

#include "hpgforge/isogeny.hpp"
#include "hpgforge/numeric.hpp"
#include "hpgforge/ramification.hpp"

using namespace hpgforge;

static void BM_GenerateE1(benchmark::State& state) {
    const RingElement u(Ring::Gauss, 5, 4);  // norm 41
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate(Family::E1, u));
    }
}
BENCHMARK(BM_GenerateE1);

static void BM_GenerateE3(benchmark::State& state) {
    const RingElement u(Ring::Eisenstein, 5, 2);  // norm 19
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate(Family::E3, u));
    }
}
BENCHMARK(BM_GenerateE3);

static void BM_VerifyTriple(benchmark::State& state) {
    const Triple t = generate(Family::E2, RingElement(Ring::Eisenstein, 5, 1));  // norm 21
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_triple(t));
    }
}
BENCHMARK(BM_VerifyTriple);

static void BM_OraclePullback(benchmark::State& state) {
    const RingElement u(Ring::Gauss, 3, 2);  // norm 13
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_pullback(CurveId::E1, u));
    }
}
BENCHMARK(BM_OraclePullback);

static void BM_Hpg2f1Prec30(benchmark::State& state) {
    const HpgParams p = side_params(FuncSide::F126);
    const mpfr_prec_t bits = digits_to_bits(45);
    HpComplex z(bits);
    mpfr_set_d(z.re.raw(), 0.4, MPFR_RNDN);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpg2f1(p, z, 30));
    }
}
BENCHMARK(BM_Hpg2f1Prec30);

static void BM_Quadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(elliptic_quadrature(Family::E3, make_rat(1, 2), 20));
    }
}
BENCHMARK(BM_Quadrature);

static void BM_Ramify(benchmark::State& state) {
    const RationalMap phi =
        to_transformation(generate(Family::E1, RingElement(Ring::Gauss, 4, 1))).phi;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ramify(phi));
    }
}
BENCHMARK(BM_Ramify);

BENCHMARK_MAIN();
