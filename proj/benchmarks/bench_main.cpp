#include <benchmark/benchmark.h>

#include "semiflat/catalog.hpp"
#include "semiflat/congruence.hpp"
#include "semiflat/flatness.hpp"
#include "semiflat/hom.hpp"
#include "semiflat/search.hpp"
#include "semiflat/tensor.hpp"

using namespace semiflat;

namespace {

const ModulePtr& mod(const std::string& name) { return *default_catalog().find_module(name); }

void BM_Tensor(benchmark::State& state, const char* m, const char* n, bool dense) {
  TensorOptions opt;
  opt.dense = dense;
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product(mod(m), mod(n), opt).module->size());
}
BENCHMARK_CAPTURE(BM_Tensor, sat3_sat3, "SAT3", "SAT3", false);
BENCHMARK_CAPTURE(BM_Tensor, sat3_sat3_dense, "SAT3", "SAT3", true);
BENCHMARK_CAPTURE(BM_Tensor, zmod4sq_zmod4, "ZMOD4^2", "ZMOD4", false);
BENCHMARK_CAPTURE(BM_Tensor, bool2_bool2, "BOOL^2", "BOOL^2", false);

void BM_Congruence(benchmark::State& state) {
  const ModulePtr& m = mod("SAT3^2");
  for (auto _ : state) benchmark::DoNotOptimize(congruence_closure(*m, {{1, 2}}, true).class_count);
}
BENCHMARK(BM_Congruence);

void BM_Homs(benchmark::State& state) {
  const ModulePtr& m = mod("ZMOD4^2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(*m, *m).size());
}
BENCHMARK(BM_Homs);

void BM_FlatnessVerdict(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(flatness_verdict(mod("SAT3{0,2,3}"), mod("SAT3^2")).uniformly_m_flat);
}
BENCHMARK(BM_FlatnessVerdict);

void BM_EnumerateSemimodules(benchmark::State& state) {
  const SemiringPtr& s = *default_catalog().find_semiring("BOOL");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_semimodules(s, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateSemimodules)->Arg(3)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
