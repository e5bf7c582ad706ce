#include <benchmark/benchmark.h>

#include "faceq/actions.hpp"
#include "faceq/gallery.hpp"
#include "faceq/manifold.hpp"
#include "faceq/quotient.hpp"
#include "faceq/report.hpp"
#include "faceq/snf.hpp"

namespace {

const faceq::FacePairingScheme& poincare_scheme() {
  static const faceq::FacePairingScheme s =
      faceq::gen_platonic_space(faceq::PlatonicKind::poincare);
  return s;
}

void BM_Validate(benchmark::State& state) {
  const auto& s = poincare_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(faceq::validate(s));
}
BENCHMARK(BM_Validate);

void BM_EdgeClasses(benchmark::State& state) {
  const auto& s = poincare_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(faceq::edge_classes(s));
}
BENCHMARK(BM_EdgeClasses);

void BM_ActionOrders(benchmark::State& state) {
  const auto& s = poincare_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(faceq::analyze_actions(s));
}
BENCHMARK(BM_ActionOrders);

void BM_BuildQuotient(benchmark::State& state) {
  const auto& s = poincare_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(faceq::build_quotient(s));
}
BENCHMARK(BM_BuildQuotient);

void BM_VerifyManifold(benchmark::State& state) {
  const auto& s = poincare_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(faceq::verify_manifold(s));
}
BENCHMARK(BM_VerifyManifold);

void BM_FullAnalysis(benchmark::State& state) {
  const auto& s = poincare_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(faceq::analyze(s));
}
BENCHMARK(BM_FullAnalysis);

void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  faceq::IntegerMatrix m(n, n);
  faceq::SplitMix64 rng(12345);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.at(r, c) = static_cast<long long>(rng.below(19)) - 9;
  for (auto _ : state)
    benchmark::DoNotOptimize(faceq::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_RandomSchemeAnalysis(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    faceq::FacePairingScheme s =
        faceq::gen_random(faceq::BaseSolid::octahedron, seed++);
    try {
      benchmark::DoNotOptimize(faceq::analyze(s));
    } catch (const faceq::Error&) {
      // some random schemes fail validation; generation cost still counts
    }
  }
}
BENCHMARK(BM_RandomSchemeAnalysis);

}  // namespace

BENCHMARK_MAIN();
