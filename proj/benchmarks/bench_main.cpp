#include <benchmark/benchmark.h>

#include "skyline/correspondences.hpp"
#include "skyline/crystal.hpp"
#include "skyline/demazure.hpp"
#include "skyline/kernel.hpp"
#include "skyline/skyline.hpp"

namespace skyline {
namespace {

void BM_PsiRoundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Tableau> all = enumerate_ssyt(Partition({3, 2, 1}).padded(n), n);
  for (auto _ : state) {
    for (const auto& t : all) benchmark::DoNotOptimize(psi_inverse(psi(t)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(all.size()));
}
BENCHMARK(BM_PsiRoundtrip)->Arg(3)->Arg(4)->Arg(5);

void BM_Phi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Biword> all = enumerate_biwords(n, 3);
  for (auto _ : state) {
    for (const auto& w : all) benchmark::DoNotOptimize(phi(w, n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(all.size()));
}
BENCHMARK(BM_Phi)->Arg(3)->Arg(4);

void BM_KeyPolynomial(benchmark::State& state) {
  const WeakComposition alpha({0, 1, 3, 0, 2, 2});
  for (auto _ : state) {
    clear_demazure_cache();
    benchmark::DoNotOptimize(key_polynomial(alpha));
  }
}
BENCHMARK(BM_KeyPolynomial);

void BM_VerifyExpansion(benchmark::State& state) {
  const KernelInstance inst = make_kernel_instance(5, 4, 3);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_demazure_cache();
    benchmark::DoNotOptimize(verify_expansion(inst, d, 1));
  }
}
BENCHMARK(BM_VerifyExpansion)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CrystalGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crystal_graph(Partition({3, 2, 1}).padded(n), n));
}
BENCHMARK(BM_CrystalGraph)->Arg(3)->Arg(4)->Arg(5);

}  // namespace
}  // namespace skyline

BENCHMARK_MAIN();
