#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common/test_util.hpp"
#include "lycoact/lya.hpp"

using namespace lyc;
using lyct::r;
using lyct::Rng;

namespace {

const AxiomCheck* find_check(const AxiomReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.axiom == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("heisenberg(1) structure constants") {
  LYAlgebra h = heisenberg(1);
  CHECK(h.dim() == 3);
  CHECK(h.labels() == std::vector<std::string>{"e0", "e1", "e2"});
  // tau: [e1, e2] = e0 = -[e2, e1]
  SparseTau tau_expect{{{1, 2, 0}, r(1)}, {{2, 1, 0}, r(-1)}};
  CHECK(h.tau() == tau_expect);
  // omega: {e1,e2,e1} = e0 and {e2,e1,e2} = -e0, completed antisymmetrically
  SparseOmega omega_expect{{{1, 2, 1, 0}, r(1)},
                           {{2, 1, 1, 0}, r(-1)},
                           {{2, 1, 2, 0}, r(-1)},
                           {{1, 2, 2, 0}, r(1)}};
  CHECK(h.omega() == omega_expect);
}

TEST_CASE("heisenberg(2) entry counts") {
  LYAlgebra h = heisenberg(2);
  CHECK(h.dim() == 5);
  CHECK(h.tau().size() == 4);
  CHECK(h.omega().size() == 8);
}

TEST_CASE("heisenberg validates for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    AxiomReport rep = validate_lya(heisenberg(n));
    CHECK(rep.all_passed());
    CHECK(rep.checks.size() == 6);
  }
  CHECK_THROWS_AS(heisenberg(0), InvalidAlgebra);
}

TEST_CASE("abelian algebras validate") {
  for (int n = 1; n <= 4; ++n) CHECK(validate_lya(abelian_lya(n)).all_passed());
}

TEST_CASE("LY2 mutation has the right witness") {
  // heisenberg(1) with omega_{211} zeroed while omega_{121} stays 1
  LYAlgebra h = heisenberg(1);
  SparseOmega omega = h.omega();
  omega.erase({2, 1, 1, 0});
  LYAlgebra broken(3, h.tau(), omega, {});
  AxiomReport rep = validate_lya(broken);
  CHECK_FALSE(rep.all_passed());
  const AxiomCheck* ly2 = find_check(rep, "LY2");
  REQUIRE(ly2 != nullptr);
  CHECK_FALSE(ly2->passed);
  CHECK(ly2->witness == std::vector<int>{1, 2, 1});
}

TEST_CASE("index range errors") {
  CHECK_THROWS_AS(LYAlgebra(2, {{{0, 2, 0}, r(1)}}, {}), IndexOutOfRange);
  CHECK_THROWS_AS(LYAlgebra(2, {}, {{{0, 0, 0, 5}, r(1)}}), IndexOutOfRange);
}

TEST_CASE("from_lie on sl2") {
  LYAlgebra s = lyct::sl2_lya();
  CHECK(s.dim() == 3);
  CHECK(validate_lya(s).all_passed());
  // {h,e,f} = [[h,e],f] = 2[e,f] = 2h
  CHECK(s.omega_at(0, 1, 2, 0) == r(2));
}

TEST_CASE("from_lie rejects non-Jacobi brackets") {
  // [e1,e2]=e1, [e1,e3]=e3, [e2,e3]=e2 violates Jacobi
  SparseTau t;
  t[{0, 1, 0}] = r(1);
  t[{1, 0, 0}] = r(-1);
  t[{0, 2, 2}] = r(1);
  t[{2, 0, 2}] = r(-1);
  t[{1, 2, 1}] = r(1);
  t[{2, 1, 1}] = r(-1);
  CHECK_THROWS_AS(from_lie(t, 3), NotALieAlgebra);
}

TEST_CASE("from_lie rejects non-antisymmetric input") {
  SparseTau t;
  t[{0, 1, 0}] = r(1);
  CHECK_THROWS_AS(from_lie(t, 2), NotALieAlgebra);
}

TEST_CASE("from_lie abelian") {
  LYAlgebra a = from_lie({}, 3);
  CHECK(a.is_abelian());
}

TEST_CASE("from_leibniz") {
  // a Lie bracket as Leibniz product: the antisymmetrization doubles tau and
  // omega matches from_lie up to sign
  LYAlgebra lie = lyct::sl2_lya();
  LYAlgebra leib = from_leibniz(lyct::sl2_bracket(), 3);
  CHECK(validate_lya(leib).all_passed());
  SparseTau doubled_tau;
  for (const auto& [k, c] : lie.tau()) doubled_tau[k] = c * r(2);
  CHECK(leib.tau() == doubled_tau);
  SparseOmega negated;
  for (const auto& [k, c] : lie.omega()) negated[k] = -c;
  CHECK(leib.omega() == negated);

  // zero product -> abelian
  CHECK(from_leibniz({}, 2).is_abelian());

  // the 2-dim left Leibniz algebra e1*e1 = e2
  SparseTau prod{{{0, 0, 1}, r(1)}};
  LYAlgebra two = from_leibniz(prod, 2);
  CHECK(validate_lya(two).all_passed());
  CHECK(two.is_abelian());  // everything cancels for this algebra

  // non-Leibniz input rejected: e1*e1 = e1 fails x(yz) = (xy)z + y(xz)
  SparseTau bad{{{0, 0, 0}, r(1)}};
  CHECK_THROWS_AS(from_leibniz(bad, 1), NotALeibnizAlgebra);
}

TEST_CASE("from_malcev") {
  // Lie bracket: the Malcev ternary formula collapses to 2[[x,y],z]
  LYAlgebra lie = lyct::sl2_lya();
  LYAlgebra mal = from_malcev(lyct::sl2_bracket(), 3);
  CHECK(validate_lya(mal).all_passed());
  CHECK(mal.tau() == lie.tau());
  SparseOmega doubled;
  for (const auto& [k, c] : lie.omega()) doubled[k] = c * r(2);
  CHECK(mal.omega() == doubled);

  CHECK(from_malcev({}, 2).is_abelian());

  // the standard 4-dim non-Lie Malcev algebra
  LYAlgebra m4 = from_malcev(lyct::malcev4_product(), 4);
  CHECK(validate_lya(m4).all_passed());
  // its product genuinely fails Jacobi
  CHECK_THROWS_AS(from_lie(lyct::malcev4_product(), 4), NotALieAlgebra);

  SparseTau notanti{{{0, 1, 0}, r(1)}};
  CHECK_THROWS_AS(from_malcev(notanti, 2), NotAMalcevAlgebra);
}

TEST_CASE("comm algebra validation") {
  CommAlgebra k = CommAlgebra::field();
  k.validate();
  CHECK(k.dim() == 1);
  CommAlgebra d = lyct::dual_numbers();
  d.validate();
  CHECK(d.multiply({r(0), r(1)}, {r(0), r(1)}) == QVector{r(0), r(0)});  // t^2 = 0

  // non-commutative multiplication rejected
  CommAlgebra bad(2, {{{0, 0, 0}, r(1)}, {{0, 1, 1}, r(1)}}, {r(1), r(0)});
  CHECK_THROWS_AS(bad.validate(), InvalidAlgebra);
}

TEST_CASE("current algebra") {
  LYAlgebra h = heisenberg(1);

  // L (x) K equals L constant-by-constant
  LYAlgebra trivial = current_algebra(h, CommAlgebra::field());
  CHECK(trivial.dim() == 3);
  CHECK(trivial.tau() == h.tau());
  CHECK(trivial.omega() == h.omega());

  // heisenberg(1) (x) K[t]/(t^2) has dimension 6 and passes all axioms
  LYAlgebra cur = current_algebra(h, lyct::dual_numbers());
  CHECK(cur.dim() == 6);
  CHECK(validate_lya(cur).all_passed());

  // abelian stays abelian
  CHECK(current_algebra(abelian_lya(2), lyct::dual_numbers()).is_abelian());
}

TEST_CASE("derived subalgebra ranks") {
  CHECK(derived_subalgebra(abelian_lya(3)).rows() == 0);
  QMatrix dh = derived_subalgebra(heisenberg(1));
  REQUIRE(dh.rows() == 1);
  CHECK(dh.row(0) == QVector{r(1), r(0), r(0)});  // spanned by e_0
  CHECK(derived_subalgebra(heisenberg(2)).rows() == 1);
  CHECK(derived_subalgebra(lyct::sl2_lya()).rows() == 3);
}

TEST_CASE("derived rank grows under unital current extension") {
  std::vector<LYAlgebra> algebras{abelian_lya(2), heisenberg(1), lyct::sl2_lya()};
  for (const auto& L : algebras) {
    int base = derived_subalgebra(L).rows();
    LYAlgebra cur = current_algebra(L, lyct::dual_numbers());
    CHECK(derived_subalgebra(cur).rows() >= base);
  }
}

TEST_CASE("linear map morphism defects") {
  LYAlgebra h = heisenberg(1);
  LYLinearMap id(3, 3, QMatrix::identity(3));
  CHECK_FALSE(id.morphism_defect(h, h).has_value());

  // the swap e1 <-> e2, e0 -> -e0 is a morphism
  QMatrix swap(3, 3);
  swap.at(0, 0) = r(-1);
  swap.at(2, 1) = r(1);
  swap.at(1, 2) = r(1);
  CHECK_FALSE(LYLinearMap(3, 3, swap).morphism_defect(h, h).has_value());

  // the scaling e1 -> 2e1, e2 -> e2/2, e0 -> e0 breaks the ternary bracket
  QMatrix scale(3, 3);
  scale.at(0, 0) = r(1);
  scale.at(1, 1) = r(2);
  scale.at(2, 2) = r(1, 2);
  auto defect = LYLinearMap(3, 3, scale).morphism_defect(h, h);
  REQUIRE(defect.has_value());
  CHECK(defect->size() == 3);  // a ternary witness
}

TEST_CASE("constructors always produce valid algebras (random conjugates)") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    QMatrix m = rng.invertible_matrix(3);
    auto inv = *m.inverse();
    // conjugated sl2 bracket: [x,y]' = m^-1 [m x, m y]
    SparseTau t;
    LYAlgebra s = lyct::sl2_lya();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        QVector v = inv.apply(s.bracket(m.col(i), m.col(j)));
        for (int k = 0; k < 3; ++k)
          if (!v[k].is_zero()) t[{i, j, k}] = v[k];
      }
    LYAlgebra conj = from_lie(t, 3);
    CHECK(validate_lya(conj).all_passed());
  }
}
