#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "common/test_util.hpp"
#include "lycoact/symmetry.hpp"

using namespace lyc;
using lyct::r;
using lyct::Rng;

namespace {

QMatrix swap_matrix() {
  QMatrix m(3, 3);
  m.at(0, 0) = r(-1);
  m.at(2, 1) = r(1);
  m.at(1, 2) = r(1);
  return m;
}

QMatrix scaling_matrix() {
  QMatrix m(3, 3);
  m.at(0, 0) = r(1);
  m.at(1, 1) = r(2);
  m.at(2, 2) = r(1, 2);
  return m;
}

// brute-force diagonal grading oracle: every assignment, direct closure check
std::set<std::vector<int>> brute_force_gradings(const LYAlgebra& L,
                                                const std::shared_ptr<const FiniteAbelianGroup>& G) {
  const int n = L.dim();
  std::set<std::vector<int>> valid;
  std::vector<int> assign(n, 0);
  for (;;) {
    bool ok = true;
    for (const auto& [key, c] : L.tau()) {
      (void)c;
      if (G->add(assign[key[0]], assign[key[1]]) != assign[key[2]]) ok = false;
    }
    for (const auto& [key, c] : L.omega()) {
      (void)c;
      if (G->add(G->add(assign[key[0]], assign[key[1]]), assign[key[2]]) != assign[key[3]]) ok = false;
    }
    if (ok) valid.insert(assign);
    int pos = n - 1;
    while (pos >= 0 && assign[pos] == G->size() - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  return valid;
}

}  // namespace

TEST_CASE("direct automorphism checks") {
  LYAlgebra h = heisenberg(1);
  CHECK(is_automorphism_direct(h, QMatrix::identity(3)).is_automorphism);
  CHECK(is_automorphism_direct(h, swap_matrix()).is_automorphism);

  DirectAutoResult scale = is_automorphism_direct(h, scaling_matrix());
  CHECK_FALSE(scale.is_automorphism);
  CHECK(scale.reason == "ternary bracket");
  CHECK(scale.witness == std::vector<int>{1, 2, 1});

  DirectAutoResult zero = is_automorphism_direct(h, QMatrix(3, 3));
  CHECK_FALSE(zero.is_automorphism);
  CHECK(zero.reason == "not invertible");
}

TEST_CASE("points from matrices") {
  Presentation pres = Presentation::square(heisenberg(1));

  ScalarPoint counit = point_from_matrix(pres, QMatrix::identity(3));
  CHECK(counit.matrix() == QMatrix::identity(3));

  ScalarPoint swap = point_from_matrix(pres, swap_matrix());
  CHECK(swap.matrix() == swap_matrix());

  CHECK_FALSE(point_violation(pres, swap_matrix()).has_value());
  auto bad = point_violation(pres, scaling_matrix());
  REQUIRE(bad.has_value());
  CHECK(bad->substr(0, 1) == "Q");  // the scaling satisfies P but violates a Q
  CHECK_THROWS_AS(point_from_matrix(pres, scaling_matrix()), RelationViolated);
}

TEST_CASE("convolution is the matrix product") {
  Presentation pres = Presentation::square(heisenberg(1));
  ScalarPoint counit = point_from_matrix(pres, QMatrix::identity(3));
  ScalarPoint swap = point_from_matrix(pres, swap_matrix());

  CHECK(convolution(pres, swap, counit).matrix() == swap.matrix());
  CHECK(convolution(pres, counit, swap).matrix() == swap.matrix());
  CHECK(convolution(pres, swap, swap).matrix() == QMatrix::identity(3));
}

TEST_CASE("zeta is a monoid homomorphism on abelian points") {
  Presentation pres = Presentation::square(abelian_lya(3));
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ScalarPoint p1 = point_from_matrix(pres, rng.invertible_matrix(3));
    ScalarPoint p2 = point_from_matrix(pres, rng.invertible_matrix(3));
    ScalarPoint conv = convolution(pres, p1, p2);
    CHECK(zeta(pres, conv).matrix() == zeta(pres, p1).matrix() * zeta(pres, p2).matrix());
  }
}

TEST_CASE("dual-path automorphism agreement") {
  LYAlgebra h = heisenberg(1);
  Presentation pres = Presentation::square(h);

  AutoEquivalenceReport id_rep = automorphism_equivalence_check(pres, QMatrix::identity(3));
  CHECK(id_rep.direct);
  CHECK(id_rep.point_path());
  CHECK(id_rep.agree());

  AutoEquivalenceReport zero_rep = automorphism_equivalence_check(pres, QMatrix(3, 3));
  CHECK_FALSE(zero_rep.direct);
  CHECK(zero_rep.is_point);  // the zero endomorphism is a point
  CHECK_FALSE(zero_rep.invertible);
  CHECK(zero_rep.agree());

  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    QMatrix m = rng.matrix(3, 3, -2, 2);
    CHECK(automorphism_equivalence_check(pres, m).agree());
  }
}

TEST_CASE("finite abelian groups") {
  auto g = FiniteAbelianGroup::parse("2x3");
  CHECK(g->size() == 6);
  CHECK(g->orders() == std::vector<int>{2, 3});
  int a = g->from_exponents({1, 2});
  CHECK(g->exponents(a) == std::vector<int>{1, 2});
  CHECK(g->add(a, a) == g->from_exponents({0, 1}));
  CHECK(g->negate(a) == g->from_exponents({1, 1}));
  CHECK(g->add(a, g->negate(a)) == g->identity());
  CHECK(g->element_name(a) == "(1,2)");
  CHECK(FiniteAbelianGroup::parse("4")->element_name(3) == "3");
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("2xx"), InputError);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse(""), InputError);
}

TEST_CASE("group algebra arithmetic") {
  auto g = FiniteAbelianGroup::parse("3");
  auto u = [&](int e) { return GroupAlgebraElement::unit(g, e); };
  CHECK(u(1) * u(2) == u(0));  // t * t^2 = 1
  CHECK((u(1) + u(2)) * u(1) == u(2) + u(0));
  CHECK((u(0) * r(2)).coeff(0) == r(2));
  CHECK((u(1) - u(1)).is_zero());
  CHECK(u(1).to_string() == "1*[1]");
}

TEST_CASE("grading validation: diagonal witnesses") {
  LYAlgebra h = heisenberg(1);
  auto z2 = FiniteAbelianGroup::parse("2");

  // trivial grading: everything in the identity component
  CHECK(validate_grading(h, Grading::diagonal(z2, {0, 0, 0})).valid);

  // e1, e2 -> 1, e0 -> 0: binary closes but the ternary bracket escapes
  GradingCheckResult res = validate_grading(h, Grading::diagonal(z2, {0, 1, 1}));
  CHECK_FALSE(res.valid);
  CHECK(res.reason == "ternary closure fails");
  CHECK(res.witness == std::vector<int>{1, 2, 1});
}

TEST_CASE("grading validation: general components") {
  LYAlgebra a2 = abelian_lya(2);
  auto z2 = FiniteAbelianGroup::parse("2");
  // components spanned by e1+e2 and e1-e2: a valid non-coordinate grading
  QMatrix plus(1, 2), minus(1, 2);
  plus.at(0, 0) = r(1);
  plus.at(0, 1) = r(1);
  minus.at(0, 0) = r(1);
  minus.at(0, 1) = r(-1);
  Grading g = Grading::general(z2, {{0, plus}, {1, minus}});
  CHECK_FALSE(g.is_diagonal());
  CHECK(validate_grading(a2, g).valid);

  // overlapping components are not a decomposition
  Grading bad = Grading::general(z2, {{0, plus}, {1, plus}});
  CHECK_FALSE(validate_grading(a2, bad).valid);
}

TEST_CASE("enumerate diagonal gradings matches brute force") {
  struct Case {
    LYAlgebra L;
    std::string group;
  };
  std::vector<Case> cases;
  cases.push_back({heisenberg(1), "2"});
  cases.push_back({heisenberg(1), "3"});
  cases.push_back({abelian_lya(2), "2x2"});
  cases.push_back({lyct::sl2_lya(), "2"});
  for (const auto& c : cases) {
    auto G = FiniteAbelianGroup::parse(c.group);
    std::vector<Grading> got = enumerate_diagonal_gradings(c.L, G);
    std::set<std::vector<int>> got_set;
    for (const auto& g : got) got_set.insert(g.assignment());
    CHECK(got_set.size() == got.size());  // no duplicates
    CHECK(got_set == brute_force_gradings(c.L, G));
  }

  // abelian: every assignment is a grading
  auto z2 = FiniteAbelianGroup::parse("2");
  CHECK(enumerate_diagonal_gradings(abelian_lya(3), z2).size() == 8);

  // heisenberg(1): only the all-identity assignment survives
  CHECK(enumerate_diagonal_gradings(heisenberg(1), z2).size() == 1);
  CHECK(enumerate_diagonal_gradings(heisenberg(1), FiniteAbelianGroup::parse("3")).size() == 1);
}

TEST_CASE("enumeration order is lexicographic") {
  auto z2 = FiniteAbelianGroup::parse("2");
  std::vector<Grading> gs = enumerate_diagonal_gradings(abelian_lya(2), z2);
  REQUIRE(gs.size() == 4);
  CHECK(gs[0].assignment() == std::vector<int>{0, 0});
  CHECK(gs[1].assignment() == std::vector<int>{0, 1});
  CHECK(gs[2].assignment() == std::vector<int>{1, 0});
  CHECK(gs[3].assignment() == std::vector<int>{1, 1});
}

TEST_CASE("grading to point and back") {
  auto z2 = FiniteAbelianGroup::parse("2");

  // trivial grading gives the unit-component point
  LYAlgebra h = heisenberg(1);
  Presentation hp = Presentation::square(h);
  GroupAlgebraPoint unit_pt = grading_to_point(hp, Grading::diagonal(z2, {0, 0, 0}));
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < 3; ++i) {
      if (s == i) CHECK(unit_pt.image(s, i) == GroupAlgebraElement::unit(z2, 0));
      else CHECK(unit_pt.image(s, i).is_zero());
    }
  Grading back = point_to_grading(h, unit_pt);
  CHECK(back.is_diagonal());
  CHECK(back.assignment() == std::vector<int>{0, 0, 0});

  // abelian dim 2 with distinct components
  LYAlgebra a2 = abelian_lya(2);
  Presentation ap = Presentation::square(a2);
  Grading g = Grading::diagonal(z2, {0, 1});
  GroupAlgebraPoint pt = grading_to_point(ap, g);
  CHECK(pt.component_matrix(0).at(0, 0) == r(1));
  CHECK(pt.component_matrix(1).at(1, 1) == r(1));
  CHECK(point_to_grading(a2, pt) == g);
}

TEST_CASE("roundtrip over every enumerated grading") {
  auto z3 = FiniteAbelianGroup::parse("3");
  LYAlgebra a2 = abelian_lya(2);
  Presentation ap = Presentation::square(a2);
  for (const Grading& g : enumerate_diagonal_gradings(a2, z3)) {
    GroupAlgebraPoint pt = grading_to_point(ap, g);
    CHECK(point_to_grading(a2, pt) == g);
  }
}

TEST_CASE("conjugation of points") {
  auto z2 = FiniteAbelianGroup::parse("2");
  LYAlgebra a2 = abelian_lya(2);
  Presentation ap = Presentation::square(a2);
  Grading g = Grading::diagonal(z2, {0, 1});
  GroupAlgebraPoint pt = grading_to_point(ap, g);

  ScalarPoint counit = point_from_matrix(ap, QMatrix::identity(2));
  GroupAlgebraPoint same = conjugate_point(ap, pt, counit);
  CHECK(same.images() == pt.images());

  // a rotation-like invertible point produces a non-diagonal grading
  QMatrix u(2, 2);
  u.at(0, 0) = r(1);
  u.at(0, 1) = r(-1);
  u.at(1, 0) = r(1);
  u.at(1, 1) = r(1);
  ScalarPoint up = point_from_matrix(ap, u);
  GroupAlgebraPoint conj = conjugate_point(ap, pt, up);
  Grading cg = point_to_grading(a2, conj);
  CHECK_FALSE(cg.is_diagonal());
  CHECK(validate_grading(a2, cg).valid);

  // conjugating back restores the original point
  ScalarPoint uinv = point_from_matrix(ap, *u.inverse());
  GroupAlgebraPoint round = conjugate_point(ap, conj, uinv);
  CHECK(round.images() == pt.images());

  // zeta(u) maps each component of the original grading onto the conjugate's
  for (int e = 0; e < z2->size(); ++e) {
    QMatrix c0 = pt.component_matrix(e), c1 = conj.component_matrix(e);
    for (int col = 0; col < 2; ++col) {
      QVector moved = u.apply(c0.col(col));
      CHECK(c1.apply(moved) == moved);  // lands in the conjugate component
    }
  }

  // non-invertible conjugators are rejected
  CHECK_THROWS_AS(conjugate_point(ap, pt, point_from_matrix(ap, QMatrix(2, 2))), NonInvertiblePoint);
}

TEST_CASE("group point verification rejects bad images") {
  auto z2 = FiniteAbelianGroup::parse("2");
  LYAlgebra h = heisenberg(1);
  Presentation hp = Presentation::square(h);
  // assigning e1 -> 1, e2 -> 1, e0 -> 0 fails the ideal in K[G]
  std::vector<GroupAlgebraElement> images(9, GroupAlgebraElement(z2));
  images[0 * 3 + 0] = GroupAlgebraElement::unit(z2, 0);
  images[1 * 3 + 1] = GroupAlgebraElement::unit(z2, 1);
  images[2 * 3 + 2] = GroupAlgebraElement::unit(z2, 1);
  CHECK_THROWS_AS(verify_group_point(hp, z2, images), RelationViolated);
}
