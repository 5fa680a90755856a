#include <benchmark/benchmark.h>

#include "triplekit/fixtures.hpp"
#include "triplekit/liebuild.hpp"
#include "triplekit/linsolve.hpp"

using namespace triplekit;

namespace {

// Dense full-rank matrix with growing numerators/denominators; entry sizes
// are what drive fraction-free elimination cost.
Matrix<Rational> dense_rational(std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(static_cast<long>(i * j + i + 1),
                                  static_cast<long>(i + 2 * j + 1));
    return m;
}

void bm_rational_rank(benchmark::State& state) {
    Matrix<Rational> m = dense_rational(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rational_rank)->Arg(8)->Arg(16)->Arg(24);

void bm_rational_kernel(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix<Rational> m = dense_rational(n);
    // wipe two rows so the kernel is nontrivial
    for (std::size_t j = 0; j < n; ++j) m.at(0, j) = m.at(1, j) = Rational(0);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(bm_rational_kernel)->Arg(8)->Arg(16);

void bm_cyc_multiply(benchmark::State& state) {
    Cyc a(Rational(3, 7), Rational(-2, 5));
    Cyc b(Rational(-11, 3), Rational(8, 9));
    for (auto _ : state) {
        Cyc c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_cyc_multiply);

void bm_jacobi_sweep_dim10(benchmark::State& state) {
    GjtBuild<Rational> b = build_g_jt(fixtures::sp2(), false);
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_defect(b.g.bracket, false));
}
BENCHMARK(bm_jacobi_sweep_dim10);

void bm_build_five_grading(benchmark::State& state) {
    Fkts<Rational> u = fixtures::fkts_b();
    for (auto _ : state) {
        GuBuild<Rational> b = build_g_u(u);
        benchmark::DoNotOptimize(b.g.dim());
    }
}
BENCHMARK(bm_build_five_grading);

void bm_verify_fkts_dim2(benchmark::State& state) {
    Fkts<Rational> u = fixtures::fkts_b();
    for (auto _ : state) {
        Report r = verify_fkts(u);
        benchmark::DoNotOptimize(r.ok());
    }
}
BENCHMARK(bm_verify_fkts_dim2);

} // namespace

BENCHMARK_MAIN();
