#include <random>

#include <benchmark/benchmark.h>

#include "vbraid/cluster.hpp"
#include "vbraid/polynomial.hpp"
#include "vbraid/rational_function.hpp"
#include "vbraid/relations.hpp"
#include "vbraid/representation.hpp"

namespace {

using namespace vbraid;

void BM_InvariantVB3(benchmark::State& state) {
  const auto word = parse_word("s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1", 3, GroupKind::VB);
  for (auto _ : state) benchmark::DoNotOptimize(invariant(word));
}
BENCHMARK(BM_InvariantVB3)->Unit(benchmark::kMicrosecond);

// Numeric invariant of random VB_4 words of the given length.
void BM_InvariantLength(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto word = random_word(GroupKind::VB, 4, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(invariant(word));
}
BENCHMARK(BM_InvariantLength)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_PresentationVB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_presentation(GroupKind::VB, n));
}
BENCHMARK(BM_PresentationVB)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ForbiddenCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_forbidden(3, 1, ForbiddenVariant::a));
}
BENCHMARK(BM_ForbiddenCheck)->Unit(benchmark::kMillisecond);

// Symbolic image of s1^k in B_2; cost grows fast without gcd cancellation.
void BM_SymbolicPower(benchmark::State& state) {
  const auto word = parse_word("s1", 2, GroupKind::B).pow(static_cast<int>(state.range(0)));
  const auto z = symbolic_point(GroupKind::B, 2);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(word, z));
}
BENCHMARK(BM_SymbolicPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PolynomialMultiply(benchmark::State& state) {
  // (1 + z1 + ... + zk)^2 times itself
  Polynomial p(Rational(1));
  for (Var v = 1; v <= static_cast<Var>(state.range(0)); ++v) p = p + Polynomial::variable(v);
  const Polynomial sq = p * p;
  for (auto _ : state) benchmark::DoNotOptimize(sq * sq);
  state.counters["terms"] = static_cast<double>((sq * sq).size());
}
BENCHMARK(BM_PolynomialMultiply)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_MutateSymbolic(benchmark::State& state) {
  const ExchangeMatrix B = build_quiver(3);
  std::vector<FieldValue> x;
  for (Var v = 1; v <= 10; ++v) x.emplace_back(RationalFunction::variable(v));
  const Seed seed{x, B};
  for (auto _ : state) {
    Seed s = seed;
    for (std::size_t k : {4, 7, 1, 10}) s = mutate_x(s, k);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_MutateSymbolic)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
