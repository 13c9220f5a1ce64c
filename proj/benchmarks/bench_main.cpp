#include <benchmark/benchmark.h>

#include "apolar/antipolar.hpp"
#include "apolar/catalecticant.hpp"
#include "apolar/realcert.hpp"
#include "apolar/signature.hpp"
#include "apolar/unipoly.hpp"

namespace {

using namespace apolar;

Matrix<Rational> seeded_matrix(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(static_cast<long long>(rng.next() % 19) - 9);
    return m;
}

void BM_det_exact(benchmark::State& state) {
    auto m = seeded_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(det_exact(m));
}
BENCHMARK(BM_det_exact)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_catalecticant_2_2d(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    GradedForm f = sample_form(d, 42, 1);
    Multidegree B{1, d};
    for (auto _ : state) benchmark::DoNotOptimize(catalecticant(f, B));
}
BENCHMARK(BM_catalecticant_2_2d)->Arg(1)->Arg(2)->Arg(3);

void BM_antipolar_2_2d(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    GradedForm f;
    std::int64_t i = 0;
    for (;; ++i) {
        f = sample_form(d, 42, i);
        try {
            antipolar(f, Multidegree{1, d});
            break;
        } catch (const error&) {
        }
    }
    Multidegree B{1, d};
    for (auto _ : state) benchmark::DoNotOptimize(antipolar(f, B));
}
BENCHMARK(BM_antipolar_2_2d)->Arg(1)->Arg(2);

void BM_signature(benchmark::State& state) {
    auto m = seeded_matrix(static_cast<std::size_t>(state.range(0)), 11);
    auto s = m + m.transpose();
    for (auto _ : state) benchmark::DoNotOptimize(signature(s));
}
BENCHMARK(BM_signature)->Arg(4)->Arg(6)->Arg(8);

void BM_sturm_roots(benchmark::State& state) {
    // A degree-12 polynomial with several real roots.
    UniPoly p = UniPoly::from_desc({1, 0, -22, 0, 165, 0, -528, 0, 720, 0,
                                    -320, 0, 7});
    for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_sturm_roots);

void BM_rank_certify(benchmark::State& state) {
    GradedForm f = sample_form(1, 42, 0);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(rank_certify(f));
        } catch (const error&) {
        }
    }
}
BENCHMARK(BM_rank_certify);

}  // namespace

BENCHMARK_MAIN();
