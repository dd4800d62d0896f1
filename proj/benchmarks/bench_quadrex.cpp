#include <benchmark/benchmark.h>

#include "quadrex/analytic.hpp"
#include "quadrex/density.hpp"
#include "quadrex/forms.hpp"
#include "quadrex/randomness.hpp"
#include "quadrex/roots.hpp"
#include "quadrex/symbols.hpp"
#include "quadrex/weil.hpp"

using namespace quadrex;

namespace {

constexpr i64 kPrime = 1000003;

void BM_LegendreFast(benchmark::State& state) {
  i64 a = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(legendre_fast(a, kPrime));
    a = a % (kPrime - 1) + 1;
  }
}
BENCHMARK(BM_LegendreFast);

void BM_LegendreEuler(benchmark::State& state) {
  i64 a = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(legendre_euler(a, kPrime));
    a = a % (kPrime - 1) + 1;
  }
}
BENCHMARK(BM_LegendreEuler);

void BM_LegendreFastBig(benchmark::State& state) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(state.range(0)));
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  mpz_class a = p / 3 + 1;
  for (auto _ : state) benchmark::DoNotOptimize(legendre_fast(a, p));
}
BENCHMARK(BM_LegendreFastBig)->Arg(64)->Arg(512)->Arg(2048);

void BM_SqrtModP(benchmark::State& state) {
  // 1 mod 8 forces the general path; 3 mod 4 takes the single exponentiation
  const i64 p = state.range(0);
  i64 z = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqrt_mod_p(z, p));
    z = z % (p - 1) + 1;
  }
}
BENCHMARK(BM_SqrtModP)->Arg(998244353)->Arg(1000003);

void BM_SqrtModComposite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_mod_composite(1, 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19));
}
BENCHMARK(BM_SqrtModComposite);

void BM_ReducedForms(benchmark::State& state) {
  const i64 d = -state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_forms(d));
}
BENCHMARK(BM_ReducedForms)->Arg(4 * 10007)->Arg(4 * 1000003);

void BM_PellMin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pell_min(state.range(0)));
}
BENCHMARK(BM_PellMin)->Arg(4 * 661)->Arg(1000003);

void BM_L1Truncated(benchmark::State& state) {
  auto chi = real_character(-199);
  for (auto _ : state) benchmark::DoNotOptimize(L1_truncated(chi, static_cast<u64>(state.range(0))));
}
BENCHMARK(BM_L1Truncated)->Arg(100000)->Arg(1000000);

void BM_ExcessEnsemble(benchmark::State& state) {
  const i64 p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(excess_ensemble(p, default_window(p)));
}
BENCHMARK(BM_ExcessEnsemble)->Arg(10007)->Arg(1000003);

void BM_CompleteWeilSum(benchmark::State& state) {
  auto f = weil_poly(10007, {0, 1, 5, 17});
  for (auto _ : state) benchmark::DoNotOptimize(complete_weil_sum(f));
}
BENCHMARK(BM_CompleteWeilSum);

void BM_DensityRank(benchmark::State& state) {
  std::vector<i64> S;
  for (i64 k = 0; k < state.range(0); ++k) S.push_back(6 * k + 5);
  for (auto _ : state) benchmark::DoNotOptimize(density_nonresidue_set(S));
}
BENCHMARK(BM_DensityRank)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
