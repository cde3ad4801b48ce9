// Serial vs OpenMP versions of the two hot kernels: point counting over
// F_{p^3} and multimodular Hecke characteristic polynomials.

#include "qcert/curve.hpp"
#include "qcert/modsym.hpp"

#include <benchmark/benchmark.h>

using namespace qcert;

namespace {

const TernaryQuarticForm& curve() {
  static const TernaryQuarticForm f = load_curve(QCERT_DATA_DIR "/quartic_6391.json");
  return f;
}

void BM_CountPoints(benchmark::State& st) {
  const auto p = static_cast<std::uint64_t>(st.range(0));
  CountOptions o;
  o.parallel = st.range(1) != 0;
  o.check_smooth = false;
  for (auto _ : st) benchmark::DoNotOptimize(count_points(curve(), p, 3, o));
}
BENCHMARK(BM_CountPoints)->ArgsProduct({{43, 73}, {0, 1}})->ArgNames({"p", "parallel"})->Unit(benchmark::kMillisecond);

void BM_HeckeCharpoly(benchmark::State& st) {
  const auto N = static_cast<std::uint64_t>(st.range(0));
  const ManinPresentation pres(N);
  HeckeOptions o;
  o.parallel = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(hecke_charpoly(pres, 3, o));
}
BENCHMARK(BM_HeckeCharpoly)->ArgsProduct({{389, 1001}, {0, 1}})->ArgNames({"N", "parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
