#include <random>

#include <benchmark/benchmark.h>

#include "hyperzeta/hsums.hpp"
#include "hyperzeta/zeta.hpp"

using namespace hyperzeta;

static void BM_PhiTwoVariables(benchmark::State& state) {
  auto f = make_field(static_cast<std::uint32_t>(state.range(0)), 1);
  const LaurentPoly P(f, 2, {{{1, 0}, f->one()}, {{0, 1}, f->one()}, {{-1, -1}, f->generator()}});
  const std::vector<Character> pis{Character::multiplicative(f, 1), Character::trivial(f)};
  SumOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(phi(Character::additive(f), P, pis, opts));
  state.SetItemsProcessed(state.iterations() * (state.range(0) - 1) * (state.range(0) - 1));
}
BENCHMARK(BM_PhiTwoVariables)->Arg(31)->Arg(127)->Arg(509);

static void BM_CycloMultiply(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Rational> a(euler_phi(m)), b(euler_phi(m));
  for (auto& x : a) x = c(rng);
  for (auto& x : b) x = c(rng);
  const auto x = CycloNumber::from_power_basis(m, a), y = CycloNumber::from_power_basis(m, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycloMultiply)->Arg(12)->Arg(60)->Arg(210);

static void BM_TorusClosedPoints(benchmark::State& state) {
  auto f = make_field(3, 1);
  SumOptions opts;
  for (auto _ : state)
    benchmark::DoNotOptimize(torus_closed_points(f, 2, static_cast<unsigned>(state.range(0)), opts));
}
BENCHMARK(BM_TorusClosedPoints)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_MAIN();
