#include "hitchin/companion.hpp"
#include "hitchin/hitchin.hpp"
#include "hitchin/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hitchin;

namespace {

std::shared_ptr<const LieRealization> algebra(LieType t, int rank) {
    return std::make_shared<const LieRealization>(build_algebra(t, rank));
}

Series random_series(std::mt19937_64& rng, int low, int prec) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Rational> c;
    for (int e = low; e < prec; ++e) {
        c.emplace_back(d(rng));
    }
    return Series::from_coefficients(low, c, prec);
}

void BM_SeriesProduct(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int prec = static_cast<int>(state.range(0));
    const Series a = random_series(rng, -1, prec);
    const Series b = random_series(rng, -1, prec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesProduct)->Arg(8)->Arg(16)->Arg(32);

void BM_CharPolySeries(benchmark::State& state) {
    const auto P = parabolic_from_blocks(algebra(LieType::A, static_cast<int>(state.range(0)) - 1),
                                         BlockData{{static_cast<int>(state.range(0)) - 1, 1}, 0});
    const SeriesMatrix x = sample_pperp(P, 12, 3, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_poly_coeffs(x));
    }
}
BENCHMARK(BM_CharPolySeries)->Arg(4)->Arg(6)->Arg(8);

void BM_PfaffianRational(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> d(-9, 9);
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = Rational(d(rng));
            a(j, i) = -a(i, j);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfaffian(a));
    }
}
BENCHMARK(BM_PfaffianRational)->Arg(6)->Arg(10)->Arg(14);

void BM_CompanionIdentity(benchmark::State& state) {
    const auto plan = build_plan({2, 1, 4});
    std::vector<Series> f(plan.size(), Series::parse("1 + 2*t - t^2"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_poly_coeffs(shifted(companion_matrix(plan, f), 1)));
    }
}
BENCHMARK(BM_CompanionIdentity);

void BM_VerifyTrial(benchmark::State& state, LieType t, int rank, std::vector<int> marked) {
    const auto P = parabolic_from_marked_roots(algebra(t, rank), std::move(marked));
    CampaignConfig cfg;
    cfg.trials = 1;
    cfg.threads = 1;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = ++seed;
        benchmark::DoNotOptimize(verify_inclusion(P, cfg));
    }
}
BENCHMARK_CAPTURE(BM_VerifyTrial, sl4_31, LieType::A, 3, std::vector<int>{3});
BENCHMARK_CAPTURE(BM_VerifyTrial, g2_borel, LieType::G2, 2, std::vector<int>{1, 2});
BENCHMARK_CAPTURE(BM_VerifyTrial, d5_bad, LieType::D, 5, std::vector<int>{4, 5});

}  // namespace

BENCHMARK_MAIN();
