#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>

#include "plectic/config.hpp"
#include "plectic/verify.hpp"

namespace {

const plectic::Model& model(const std::string& id) {
  static std::map<std::string, plectic::Model> cache;
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, plectic::load_model(std::string(PLECTIC_BENCH_MODEL_DIR) + "/" + id + ".toml")).first;
  return it->second;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  plectic::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<plectic::Int>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(plectic::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_UnitsAbelianization(benchmark::State& state) {
  const auto g = std::make_shared<const plectic::FiniteGroup>(plectic::FiniteGroup::units_mod(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plectic::abelianization(plectic::Subgroup::whole(g)));
}
BENCHMARK(BM_UnitsAbelianization)->Arg(15)->Arg(105)->Arg(1155);

void BM_EnumeratePlectic(benchmark::State& state) {
  const auto& m = model("sextic");
  for (auto _ : state) benchmark::DoNotOptimize(plectic::enumerate_plectic(m.base));
}
BENCHMARK(BM_EnumeratePlectic);

void BM_HalfTransfer(benchmark::State& state) {
  const auto& m = model("sextic");
  const auto all = plectic::enumerate_plectic(m.base);
  const auto types = plectic::enumerate_cm_types(m.cm);
  for (auto _ : state)
    for (const auto& a : all)
      for (const auto& phi : types) benchmark::DoNotOptimize(plectic::half_transfer(a, phi));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * all.size() * types.size()));
}
BENCHMARK(BM_HalfTransfer);

void BM_Taniyama(benchmark::State& state) {
  const auto& m = model("zeta24-synthetic");
  const auto split = plectic::make_splitting(m.recip);
  const auto all = plectic::enumerate_plectic(m.base);
  const auto types = plectic::enumerate_cm_types(m.cm);
  for (auto _ : state)
    for (const auto& a : all)
      for (const auto& phi : types) benchmark::DoNotOptimize(plectic::taniyama(split, a, phi));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * all.size() * types.size()));
}
BENCHMARK(BM_Taniyama);

void BM_VerifySuite(benchmark::State& state, const char* id, const char* suite) {
  const auto& m = model(id);
  for (auto _ : state) benchmark::DoNotOptimize(plectic::run_suite(m, suite));
}
BENCHMARK_CAPTURE(BM_VerifySuite, sextic_halftransfer, "sextic", "halftransfer")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifySuite, zeta24_pi0, "zeta24-synthetic", "pi0")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
