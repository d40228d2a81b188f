// Microbenchmarks for the hot paths: axiom validation, presentation
// emission, Groebner completion, and the coideal / antipode reductions.

#include <benchmark/benchmark.h>

#include "lycoact/hopf.hpp"
#include "lycoact/lya.hpp"
#include "lycoact/symmetry.hpp"
#include "lycoact/universal.hpp"

namespace {

using namespace lyc;

SparseTau sl2_bracket() {
  SparseTau t;
  t[{0, 1, 1}] = Rational(2);
  t[{1, 0, 1}] = Rational(-2);
  t[{0, 2, 2}] = Rational(-2);
  t[{2, 0, 2}] = Rational(2);
  t[{1, 2, 0}] = Rational(1);
  t[{2, 1, 0}] = Rational(-1);
  return t;
}

void BM_ValidateHeisenberg3(benchmark::State& state) {
  LYAlgebra h = heisenberg(3);
  for (auto _ : state) benchmark::DoNotOptimize(validate_lya(h).all_passed());
}
BENCHMARK(BM_ValidateHeisenberg3);

void BM_ValidateSl2(benchmark::State& state) {
  LYAlgebra s = from_lie(sl2_bracket(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(validate_lya(s).all_passed());
}
BENCHMARK(BM_ValidateSl2);

void BM_UniversalPresentationHeis1(benchmark::State& state) {
  LYAlgebra h = heisenberg(1);
  for (auto _ : state) benchmark::DoNotOptimize(Presentation::square(h).generator_list().size());
}
BENCHMARK(BM_UniversalPresentationHeis1);

void BM_BuchbergerTextbook(benchmark::State& state) {
  auto vs = VarSet::plain(2);
  Polynomial x = Polynomial::variable(vs, 0), y = Polynomial::variable(vs, 1);
  std::vector<Polynomial> gens{x * x + y * y, x * y};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::DegRevLex, 10).basis.size());
}
BENCHMARK(BM_BuchbergerTextbook);

void BM_BuchbergerLinearIdealSl2(benchmark::State& state) {
  // the A(K, sl2) linear ideal completed to a full basis
  LYAlgebra s = from_lie(sl2_bracket(), 3);
  Presentation pres = Presentation::build(abelian_lya(1), s);
  std::vector<Polynomial> gens = pres.generator_list();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::DegRevLex, 8).complete);
}
BENCHMARK(BM_BuchbergerLinearIdealSl2);

void BM_CoidealHeis1(benchmark::State& state) {
  LYAlgebra h = heisenberg(1);
  for (auto _ : state) {
    BialgebraPresentation b = BialgebraPresentation::build(h);
    benchmark::DoNotOptimize(verify_coideal(b).all_certified());
  }
}
BENCHMARK(BM_CoidealHeis1);

void BM_CoidealSl2(benchmark::State& state) {
  LYAlgebra s = from_lie(sl2_bracket(), 3);
  for (auto _ : state) {
    BialgebraPresentation b = BialgebraPresentation::build(s);
    benchmark::DoNotOptimize(verify_coideal(b).all_certified());
  }
}
BENCHMARK(BM_CoidealSl2);

void BM_DeltaImageReduction(benchmark::State& state) {
  // reduce one Delta(Q) image against the doubled generator list
  LYAlgebra h = heisenberg(1);
  BialgebraPresentation b = BialgebraPresentation::build(h);
  std::vector<Polynomial> doubled;
  for (const auto& g : b.presentation().generator_list()) doubled.push_back(b.lift_left(g));
  for (const auto& g : b.presentation().generator_list()) doubled.push_back(b.lift_right(g));
  Polynomial target = b.delta_image(b.presentation().generator_list().back());
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(target, doubled).is_zero());
}
BENCHMARK(BM_DeltaImageReduction);

void BM_AutomorphismDualPath(benchmark::State& state) {
  LYAlgebra h = heisenberg(1);
  Presentation pres = Presentation::square(h);
  QMatrix m(3, 3);
  long code = 0;
  for (auto _ : state) {
    long c = code++ % 19683;
    for (int e = 0; e < 9; ++e) {
      m.at(e / 3, e % 3) = Rational(c % 3 - 1);
      c /= 3;
    }
    benchmark::DoNotOptimize(automorphism_equivalence_check(pres, m).agree());
  }
}
BENCHMARK(BM_AutomorphismDualPath);

void BM_HopfAntipodeHeis1(benchmark::State& state) {
  LYAlgebra h = heisenberg(1);
  BialgebraPresentation b = BialgebraPresentation::build(h);
  for (auto _ : state) {
    HopfPresentation hp = hopf_envelope(b, 1);
    benchmark::DoNotOptimize(antipode_check(hp).all_certified());
  }
}
BENCHMARK(BM_HopfAntipodeHeis1);

}  // namespace

BENCHMARK_MAIN();
