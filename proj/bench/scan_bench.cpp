// Serial reference against the OpenMP scans on the same inputs.

#include <benchmark/benchmark.h>

#include "skewpbw/nilarmendariz.hpp"
#include "skewpbw/presets.hpp"

using namespace skewpbw;

namespace {

Extension::Ptr constant_over(const RingDescriptor& d, std::size_t n) {
  return Extension::create(presets::constant(FiniteRing::build(d), n));
}

void BM_RingClassSemicommutative(benchmark::State& state) {
  const auto R = FiniteRing::build(RingDescriptor::matrix(2, 3));
  ScanOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) {
    const auto v = check_ring_class(*R, RingClass::semicommutative, opts);
    benchmark::DoNotOptimize(v.work_count);
  }
}
BENCHMARK(BM_RingClassSemicommutative)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_ArmendarizZ4(benchmark::State& state) {
  const auto an = Analysis::run(constant_over(RingDescriptor::modular(4), 2));
  const auto bound = degree_bound(*an.ext, 1);
  ArmendarizOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) {
    const auto r = check_armendariz(an, ArmendarizVariant::skew_pi, bound, opts);
    benchmark::DoNotOptimize(r.work_count);
  }
}
BENCHMARK(BM_ArmendarizZ4)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_ArmendarizF2xF2(benchmark::State& state) {
  const auto an = Analysis::run(
      constant_over(RingDescriptor::product({RingDescriptor::modular(2), RingDescriptor::modular(2)}), 3));
  const auto bound = degree_bound(*an.ext, 1);
  ArmendarizOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) {
    const auto r = check_armendariz(an, ArmendarizVariant::sigma_delta_skew, bound, opts);
    benchmark::DoNotOptimize(r.work_count);
  }
}
BENCHMARK(BM_ArmendarizF2xF2)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_Compatibility(benchmark::State& state) {
  const auto R = FiniteRing::build(RingDescriptor::modular(243));
  const auto fam = MapFamily::trivial(R, 2);
  ScanOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) {
    const auto r = check_compatibility(fam, opts);
    benchmark::DoNotOptimize(r.sigma.work_count);
  }
}
BENCHMARK(BM_Compatibility)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
