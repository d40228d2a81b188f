#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common/test_util.hpp"
#include "lycoact/groebner.hpp"
#include "lycoact/polynomial.hpp"

using namespace lyc;
using lyct::r;
using lyct::Rng;

namespace {

// plain variable set {x, y, z, w}; x is the largest variable
std::shared_ptr<const VarSet> vars4() { return VarSet::plain(4); }

Polynomial v(const std::shared_ptr<const VarSet>& vs, int i, MonomialOrder o = MonomialOrder::DegRevLex) {
  return Polynomial::variable(vs, i, o);
}

// dense reference comparison for monomial orders
int ref_compare(const Monomial& a, const Monomial& b, MonomialOrder order, int nv) {
  std::vector<int> ea(nv, 0), eb(nv, 0);
  for (auto [var, e] : a.entries()) ea[var] = e;
  for (auto [var, e] : b.entries()) eb[var] = e;
  int da = 0, db = 0;
  for (int i = 0; i < nv; ++i) da += ea[i], db += eb[i];
  if (order == MonomialOrder::DegRevLex) {
    if (da != db) return da < db ? -1 : 1;
    for (int i = nv - 1; i >= 0; --i)
      if (ea[i] != eb[i]) return ea[i] > eb[i] ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < nv; ++i)
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
  return 0;
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial x = Monomial::variable(0), y = Monomial::variable(1);
  Monomial x2y = x * x * y;
  CHECK(x2y.degree() == 3);
  CHECK(x2y.exponent(0) == 2);
  CHECK(x2y.exponent(1) == 1);
  CHECK(x2y.exponent(2) == 0);
  CHECK(x.divides(x2y));
  CHECK_FALSE(x2y.divides(x));
  CHECK(*x2y.divide(x * y) == x);
  CHECK_FALSE(x2y.divide(Monomial::variable(2)).has_value());
  CHECK(Monomial::lcm(x * x, x * y) == x * x * y);
  CHECK(x.coprime(y));
  CHECK_FALSE(x.coprime(x2y));
}

TEST_CASE("monomial order against dense reference") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial a, b;
    for (int k = 0, n = rng.uniform(0, 4); k < n; ++k) a = a * Monomial::variable(rng.uniform(0, 3));
    for (int k = 0, n = rng.uniform(0, 4); k < n; ++k) b = b * Monomial::variable(rng.uniform(0, 3));
    for (auto order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
      int got = Monomial::compare(a, b, order);
      int want = ref_compare(a, b, order, 4);
      CHECK((got < 0) == (want < 0));
      CHECK((got == 0) == (want == 0));
    }
  }
}

TEST_CASE("degrevlex textbook comparisons") {
  // x > y > z; x^2 > xy > y^2 > xz > yz > z^2
  auto vs = VarSet::plain(3);
  Monomial x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  std::vector<Monomial> expect = {x * x, x * y, y * y, x * z, y * z, z * z};
  for (size_t i = 0; i + 1 < expect.size(); ++i)
    CHECK(Monomial::compare(expect[i], expect[i + 1], MonomialOrder::DegRevLex) > 0);
  // lex: x^2 > xy > xz > x > y^2 ...
  CHECK(Monomial::compare(x * z, y * y, MonomialOrder::Lex) > 0);
  CHECK(Monomial::compare(x, y * y, MonomialOrder::Lex) > 0);
}

TEST_CASE("polynomial arithmetic and text") {
  auto vs = vars4();
  Polynomial x = v(vs, 0), y = v(vs, 1);
  Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.to_text() == "x[1,1]^2 - x[1,2]^2");
  Polynomial q = (x + y) * (x + y);
  CHECK(q.to_text() == "x[1,1]^2 + 2*x[1,1]*x[1,2] + x[1,2]^2");
  CHECK((q - q).is_zero());
  CHECK((q - q).to_text() == "0");
  CHECK(Polynomial::constant(vs, r(-1, 2)).to_text() == "-1/2");
  CHECK((x * r(0)).is_zero());
  CHECK(q.degree() == 2);
  CHECK(q.term_count() == 3);
}

TEST_CASE("mixed varsets rejected") {
  auto a = VarSet::plain(2), b = VarSet::plain(3);
  CHECK_THROWS_AS(v(a, 0) + v(b, 0), MixedVarSets);
}

TEST_CASE("with_order resorts") {
  auto vs = VarSet::plain(2);
  Polynomial x = v(vs, 0), y = v(vs, 1);
  Polynomial p = x + y * y;  // degrevlex: y^2 first
  CHECK(p.leading_monomial() == Monomial::variable(1, 2));
  Polynomial pl = p.with_order(MonomialOrder::Lex);
  CHECK(pl.leading_monomial() == Monomial::variable(0));  // lex: x first
  CHECK(p == pl.with_order(MonomialOrder::DegRevLex));
}

TEST_CASE("evaluate over rationals") {
  auto vs = vars4();
  Polynomial p = v(vs, 0) * v(vs, 1) + Polynomial::constant(vs, r(1, 2));
  RationalRing ring;
  CHECK(p.evaluate(ring, {r(2), r(3), r(0), r(0)}) == r(13, 2));
}

TEST_CASE("monic and sign normalization") {
  auto vs = vars4();
  Polynomial x = v(vs, 0), y = v(vs, 1);
  Polynomial p = (x * r(-2)) + y;
  CHECK(p.monic().leading_coefficient() == r(1));
  CHECK(p.normalized_sign().leading_coefficient() == r(2));
  CHECK(p.normalized_sign() == -p);
}

TEST_CASE("division examples") {
  auto vs = vars4();
  MonomialOrder o = MonomialOrder::DegRevLex;
  Polynomial x = v(vs, 0), y = v(vs, 1);

  // p in G -> 0
  Polynomial g = x * x - y;
  CHECK(normal_form(g, {g}).is_zero());
  // x^2*y by {x^2 - y} -> y^2
  CHECK(normal_form(x * x * y, {g}) == y * y);
  // remainder has no term divisible by any leading term
  DivisionResult dv = divide(x * x * y + x, {g});
  CHECK(dv.remainder == y * y + x);
  CHECK(dv.quotients[0] * g + dv.remainder == x * x * y + x);
  (void)o;
}

TEST_CASE("normal form additivity modulo re-reduction") {
  auto vs = vars4();
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialOrder o = trial % 2 ? MonomialOrder::Lex : MonomialOrder::DegRevLex;
    std::vector<Polynomial> G;
    for (int k = 0, n = rng.uniform(1, 3); k < n; ++k) {
      Polynomial g = rng.polynomial(vs, o, 3, 2);
      if (!g.is_zero()) G.push_back(g);
    }
    if (G.empty()) continue;
    Polynomial p = rng.polynomial(vs, o, 4, 3);
    Polynomial q = rng.polynomial(vs, o, 4, 3);
    Polynomial lhs = normal_form(normal_form(p, G) + normal_form(q, G), G);
    Polynomial rhs = normal_form(p + q, G);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("division determinism") {
  auto vs = vars4();
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial p = rng.polynomial(vs, MonomialOrder::DegRevLex, 5, 3);
    std::vector<Polynomial> G{rng.polynomial(vs, MonomialOrder::DegRevLex, 3, 2),
                              rng.polynomial(vs, MonomialOrder::DegRevLex, 3, 2)};
    std::erase_if(G, [](const Polynomial& g) { return g.is_zero(); });
    if (G.empty()) continue;
    CHECK(normal_form(p, G).to_text() == normal_form(p, G).to_text());
  }
}

TEST_CASE("varset names and lookup") {
  auto vs = VarSet::rectangular(2, 3);
  CHECK(vs->size() == 6);
  CHECK(vs->name(0) == "x[1,1]");
  CHECK(vs->name(5) == "x[2,3]");
  CHECK(vs->find(1, 2) == 5);
  auto dv = VarSet::doubled(*vs);
  CHECK(dv->size() == 12);
  CHECK(dv->name(0) == "xL[1,1]");
  CHECK(dv->name(6) == "xR[1,1]");
  auto lv = VarSet::leveled(2, 2, 1);
  CHECK(lv->size() == 8);
  CHECK(lv->name(0) == "x{0}[1,1]");
  CHECK(lv->name(4) == "x{1}[1,1]");
  CHECK(lv->cas_name(4) == "x1_1_1");
}
