#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "deletia/qsim/cmatrix.hpp"
#include "deletia/qsim/density.hpp"
#include "deletia/qsim/state.hpp"
#include "deletia/rng.hpp"

using namespace deletia;
using namespace deletia::qsim;

namespace {

std::vector<Amplitude> random_amplitudes(std::uint64_t dim, Rng& rng) {
  std::vector<Amplitude> v(dim);
  for (auto& a : v) a = {rng.uniform_real() - 0.5, rng.uniform_real() - 0.5};
  return v;
}

// Segment "X" of `slots` qudits of dimension q.
void BM_Qft(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  const auto slots = static_cast<std::size_t>(state.range(1));
  Rng rng(1);
  const RegisterLayout layout{qudits("X", slots, q)};
  const QState psi(layout, random_amplitudes(layout.dimension(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(qft(psi, "X"));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout.dimension()));
}
BENCHMARK(BM_Qft)->Args({13, 3})->Args({31, 3})->Args({5, 8})->Unit(benchmark::kMillisecond);

void BM_ApplyClassical(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const RegisterLayout layout{qudits("X", 3, q), qudits("Y", 1, q)};
  const QState psi(layout, random_amplitudes(layout.dimension(), rng));
  const auto f = [q](std::uint64_t x) { return (x * 7 + 3) % q; };
  for (auto _ : state) benchmark::DoNotOptimize(apply_classical(psi, "X", "Y", f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout.dimension()));
}
BENCHMARK(BM_ApplyClassical)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  CMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const Amplitude z{rng.uniform_real() - 0.5, r == c ? 0.0 : rng.uniform_real() - 0.5};
      a(r, c) = z;
      a(c, r) = std::conj(z);
    }
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(a));
}
BENCHMARK(BM_HermitianEigenvalues)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);

void BM_TraceDistance(benchmark::State& state) {
  Rng rng(4);
  const RegisterLayout layout{qudits("X", 2, 5), qudits("Z", 1, 2)};
  const auto a = DensityOp::from_pure(QState(layout, random_amplitudes(layout.dimension(), rng)));
  const auto b = DensityOp::from_pure(QState(layout, random_amplitudes(layout.dimension(), rng)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_distance(a, b));
}
BENCHMARK(BM_TraceDistance)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
