// Serial vs OpenMP kernels: the quadrature double sum and batch evaluation.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "gchp/constructors.hpp"
#include "gchp/kernels.hpp"

using namespace gchp;

namespace {

const Params params = Params::floating(0.5, {1.0, -1.0});

void quad_args(benchmark::internal::Benchmark* b) {
  for (int m : {4, 8, 16}) b->Arg(m);
}

template <auto Kernel>
void BM_quad(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const DenseGrid f = dense_grid(gchp::gchp(m, m, params));
  const auto rule = kernels::gauss_hermite(2 * m + 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(f, f, rule, {-0.5, -0.5}, 1.0 / std::sqrt(0.5)));
  state.SetItemsProcessed(state.iterations() * rule.nodes.size() * rule.nodes.size());
}

template <auto Kernel>
void BM_eval_batch(benchmark::State& state) {
  const DenseGrid p = dense_grid(gchp::gchp(8, 8, params));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<std::complex<double>> zs(static_cast<std::size_t>(state.range(0)));
  for (auto& z : zs) z = {coord(rng), coord(rng)};
  std::vector<std::complex<double>> out(zs.size());
  for (auto _ : state) {
    Kernel(p, zs, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_quad<kernels::quad_sum_serial>)->Name("quad_sum/serial")->Apply(quad_args);
BENCHMARK(BM_quad<kernels::quad_sum_omp>)->Name("quad_sum/omp")->Apply(quad_args);
BENCHMARK(BM_eval_batch<kernels::eval_batch_serial>)->Name("eval_batch/serial")->Arg(1 << 10)->Arg(1 << 16);
BENCHMARK(BM_eval_batch<kernels::eval_batch_omp>)->Name("eval_batch/omp")->Arg(1 << 10)->Arg(1 << 16);

BENCHMARK_MAIN();
