#include <benchmark/benchmark.h>

#include "hfcone/cfk.hpp"
#include "hfcone/cone.hpp"
#include "hfcone/exactla.hpp"
#include "hfcone/obstruct.hpp"
#include "hfcone/profiles.hpp"

namespace {

void BM_SpincGroupLspace(benchmark::State& state) {
  const hfcone::SurgeryProfile p = hfcone::lspace_knot(state.range(0));
  const hfcone::Framing f(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hfcone::spinc_group(p, f, 0));
}
BENCHMARK(BM_SpincGroupLspace)->Arg(1)->Arg(5)->Arg(20)->Arg(80);

void BM_SurgeryReportFig8(benchmark::State& state) {
  const hfcone::SurgeryProfile p = hfcone::figure_eight();
  const std::int64_t n = state.range(0);
  const hfcone::Framing f(-(4 * n + 1), n);
  for (auto _ : state) benchmark::DoNotOptimize(hfcone::surgery_report(p, f));
  state.SetItemsProcessed(state.iterations() * f.order());
}
BENCHMARK(BM_SurgeryReportFig8)->Arg(1)->Arg(10)->Arg(25);

void BM_SurgeryReportKFamilyLargeQ(benchmark::State& state) {
  const hfcone::SurgeryProfile p = hfcone::k_family(3, 2);
  const hfcone::Framing f(-(5 * state.range(0) + 1), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hfcone::surgery_report(p, f));
}
BENCHMARK(BM_SurgeryReportKFamilyLargeQ)->Arg(4)->Arg(16)->Arg(64);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  hfcone::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<std::int64_t>((r * 7 + c * 3) % 5) - 2;
  for (auto _ : state) benchmark::DoNotOptimize(hfcone::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(32)->Arg(64);

void BM_StaircaseToProfile(benchmark::State& state) {
  const auto c = hfcone::staircase_from_alexander(hfcone::parse_alexander("1,-1,0,0,1,0,-1,0,1,0,0,-1,1:6"));
  for (auto _ : state) benchmark::DoNotOptimize(hfcone::to_profile(c));
}
BENCHMARK(BM_StaircaseToProfile);

void BM_ClassifySpinc(benchmark::State& state) {
  const hfcone::Framing f(199, 20);
  for (auto _ : state) benchmark::DoNotOptimize(hfcone::classify_spinc(5, f));
}
BENCHMARK(BM_ClassifySpinc);

}  // namespace

BENCHMARK_MAIN();
