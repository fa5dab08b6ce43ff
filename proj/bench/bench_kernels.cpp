// Serial references against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "crg/groups/group_template.hpp"
#include "crg/hypersurface/hypersurface.hpp"
#include "crg/matrix/ring_matrix.hpp"

namespace {

using namespace crg;

const GroupTemplate& heaviest() { return group_template(GroupId::III2); }

RingMatrix generic(const std::string& suffix) { return embed(heaviest(), generic_params(heaviest(), suffix)); }

std::vector<Binding> bindings(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(1, 9);
  std::vector<Binding> out(n);
  for (auto& b : out)
    for (const auto& p : heaviest().params) b.set(heaviest().symbol(p.name), GaussRat(Rational(d(rng), d(rng))));
  return out;
}

std::vector<Point> points(const GraphedHypersurface& m, std::size_t n) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Point> out(n);
  for (auto& q : out)
    for (std::size_t k = 0; k < real_coordinates(m.ambient).size(); ++k) q.push_back(Rational(d(rng), 7));
  return out;
}

void BM_MatMulSerial(benchmark::State& s) {
  const RingMatrix a = generic("_1"), b = generic("_2");
  for (auto _ : s) benchmark::DoNotOptimize(kernels::mat_mul_serial(a, b));
}
void BM_MatMulParallel(benchmark::State& s) {
  const RingMatrix a = generic("_1"), b = generic("_2");
  for (auto _ : s) benchmark::DoNotOptimize(kernels::mat_mul_parallel(a, b));
}

void BM_AdjugateSerial(benchmark::State& s) {
  const RingMatrix a = generic("");
  for (auto _ : s) benchmark::DoNotOptimize(kernels::adjugate_serial(a));
}
void BM_AdjugateParallel(benchmark::State& s) {
  const RingMatrix a = generic("");
  for (auto _ : s) benchmark::DoNotOptimize(kernels::adjugate_parallel(a));
}

void BM_SubstituteBatchSerial(benchmark::State& s) {
  const RingMatrix a = generic("");
  const auto bs = bindings(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::substitute_batch_serial(a, bs));
}
void BM_SubstituteBatchParallel(benchmark::State& s) {
  const RingMatrix a = generic("");
  const auto bs = bindings(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::substitute_batch_parallel(a, bs));
}

const GraphedHypersurface& c3() {
  static const GraphedHypersurface m = make_hypersurface(Ambient::C3, "x1^2 + y1^2 + x2^2*u + x1*y2^2");
  return m;
}
void BM_ClassifyBatchSerial(benchmark::State& s) {
  const auto qs = points(c3(), static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(classify_batch_serial(c3(), qs));
}
void BM_ClassifyBatchParallel(benchmark::State& s) {
  const auto qs = points(c3(), static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(classify_batch(c3(), qs));
}

BENCHMARK(BM_MatMulSerial);
BENCHMARK(BM_MatMulParallel);
BENCHMARK(BM_AdjugateSerial);
BENCHMARK(BM_AdjugateParallel);
BENCHMARK(BM_SubstituteBatchSerial)->Arg(64)->Arg(512);
BENCHMARK(BM_SubstituteBatchParallel)->Arg(64)->Arg(512);
BENCHMARK(BM_ClassifyBatchSerial)->Arg(16);
BENCHMARK(BM_ClassifyBatchParallel)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
