#include "lycoact/groebner.hpp"

#include <algorithm>
#include <set>

namespace lyc {

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& G) {
  DivisionResult res;
  res.quotients.assign(G.size(), Polynomial(p.varset(), p.order()));
  Polynomial h = p;
  std::vector<Polynomial::Term> remainder_terms;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    const Rational& lc = h.leading_coefficient();
    // among all applicable divisors take the one with the largest leading
    // monomial (ties to the first): a generator always reduces by itself
    int best = -1;
    for (size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero() || !G[i].leading_monomial().divides(lm)) continue;
      if (best < 0 || Monomial::compare(G[i].leading_monomial(), G[best].leading_monomial(), p.order()) > 0)
        best = static_cast<int>(i);
    }
    if (best >= 0) {
      Rational factor = lc / G[best].leading_coefficient();
      Polynomial t =
          Polynomial::from_terms(p.varset(), {{*lm.divide(G[best].leading_monomial()), factor}}, p.order());
      h = h - t * G[best];
      res.quotients[best] += t;
    } else {
      remainder_terms.push_back({lm, lc});
      Polynomial t = Polynomial::from_terms(p.varset(), {{lm, lc}}, p.order());
      h = h - t;
    }
  }
  res.remainder = Polynomial::from_terms(p.varset(), std::move(remainder_terms), p.order());
  return res;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G) {
  return divide(p, G).remainder;
}

std::string to_string(Containment c) {
  switch (c) {
    case Containment::Yes: return "yes";
    case Containment::No: return "no";
    default: return "unknown";
  }
}

namespace {

struct Pair {
  int deg;
  Monomial lcm;
  int i, j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = Monomial::compare(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerResult buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, int degree_cap,
                          bool track_representations) {
  GroebnerResult out;
  if (gens.empty()) {
    out.complete = true;
    return out;
  }
  auto vars = gens.front().varset();
  auto zero = [&] { return Polynomial(vars, order); };
  auto unit_rep = [&](size_t i, const Rational& c) {
    std::vector<Polynomial> rep(gens.size(), zero());
    rep[i] = Polynomial::constant(vars, c, order);
    return rep;
  };

  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> reps;
  for (size_t i = 0; i < gens.size(); ++i) {
    Polynomial g = gens[i].with_order(order);
    if (g.is_zero()) continue;
    Rational lc = g.leading_coefficient();
    basis.push_back(g.monic());
    if (track_representations) reps.push_back(unit_rep(i, lc.inverse()));
  }

  std::set<Pair, PairLess> pending(PairLess{order});
  std::set<std::pair<int, int>> pending_keys;
  bool dropped = false;
  auto push_pair = [&](int i, int j) {
    const Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    int d = l.degree();
    if (degree_cap >= 0 && d > degree_cap) {
      dropped = true;
      return;
    }
    pending.insert(Pair{d, l, i, j});
    pending_keys.insert({i, j});
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(static_cast<int>(i), static_cast<int>(j));

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    pending_keys.erase({pr.i, pr.j});

    const Monomial& lmi = basis[pr.i].leading_monomial();
    const Monomial& lmj = basis[pr.j].leading_monomial();
    if (lmi.coprime(lmj)) continue;  // first criterion
    bool chain = false;               // second criterion
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending_keys.count(key(pr.i, k)) && !pending_keys.count(key(pr.j, k))) {
        chain = true;
        break;
      }
    }
    if (chain) continue;

    Polynomial mi = Polynomial::from_terms(vars, {{*pr.lcm.divide(lmi), Rational(1)}}, order);
    Polynomial mj = Polynomial::from_terms(vars, {{*pr.lcm.divide(lmj), Rational(1)}}, order);
    Polynomial s = mi * basis[pr.i] - mj * basis[pr.j];
    DivisionResult dv = divide(s, basis);
    if (dv.remainder.is_zero()) continue;

    Rational lc = dv.remainder.leading_coefficient();
    Polynomial next = dv.remainder.monic();
    if (track_representations) {
      std::vector<Polynomial> rep(gens.size(), zero());
      for (size_t g = 0; g < gens.size(); ++g) {
        rep[g] = mi * reps[pr.i][g] - mj * reps[pr.j][g];
        for (size_t k = 0; k < basis.size(); ++k) rep[g] -= dv.quotients[k] * reps[k][g];
        rep[g] = rep[g] * lc.inverse();
      }
      reps.push_back(std::move(rep));
    }
    basis.push_back(std::move(next));
    for (size_t k = 0; k + 1 < basis.size(); ++k) push_pair(static_cast<int>(k), static_cast<int>(basis.size()) - 1);
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<int> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = Monomial::compare(basis[a].leading_monomial(), basis[b].leading_monomial(), order);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<int> kept;
  for (int a : idx) {
    bool redundant = false;
    for (int b : kept)
      if (basis[b].leading_monomial().divides(basis[a].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(a);
  }

  // tail-reduce in ascending leading-monomial order
  std::vector<Polynomial> reduced;
  std::vector<std::vector<Polynomial>> reduced_reps;
  for (size_t pos = 0; pos < kept.size(); ++pos) {
    Polynomial f = basis[kept[pos]];
    DivisionResult dv = divide(f, reduced);
    Polynomial r = dv.remainder;  // leading term survives: no smaller LM divides it
    if (track_representations) {
      std::vector<Polynomial> rep = reps[kept[pos]];
      for (size_t k = 0; k < reduced.size(); ++k)
        for (size_t g = 0; g < gens.size(); ++g) rep[g] -= dv.quotients[k] * reduced_reps[k][g];
      Rational lc = r.leading_coefficient();
      for (auto& rg : rep) rg = rg * lc.inverse();
      reduced_reps.push_back(std::move(rep));
    }
    reduced.push_back(r.monic());
  }

  out.basis = std::move(reduced);
  out.representations = std::move(reduced_reps);
  out.complete = !dropped;
  return out;
}

Ideal::Ideal(std::shared_ptr<const VarSet> vars, std::vector<Polynomial> gens, MonomialOrder order)
    : vars_(std::move(vars)), gens_(std::move(gens)), order_(order) {
  for (auto& g : gens_) {
    if (g.varset() != vars_ && !(*g.varset() == *vars_)) throw MixedVarSets("Ideal: generator over a different variable set");
    g = g.with_order(order_);
  }
}

int Ideal::default_degree_cap() const {
  int maxdeg = 0;
  for (const auto& g : gens_) maxdeg = std::max(maxdeg, g.degree());
  return std::max(2, 2 * maxdeg + 2);
}

std::shared_ptr<Ideal::Cache> Ideal::basis_for(int cap, bool tracked) const {
  if (cap < 0) cap = default_degree_cap();
  std::lock_guard<std::mutex> lk(box_->mu);
  if (box_->cache && box_->cache->cap == cap && (box_->cache->tracked || !tracked)) return box_->cache;
  auto c = std::make_shared<Cache>();
  c->cap = cap;
  c->tracked = tracked;
  c->result = buchberger(gens_, order_, cap, tracked);
  box_->cache = c;
  return c;
}

GroebnerResult Ideal::groebner(int degree_cap) const { return basis_for(degree_cap, false)->result; }

Containment Ideal::contains(const Polynomial& p, int degree_cap) const {
  if (p.varset() != vars_ && !(*p.varset() == *vars_)) throw MixedVarSets("Ideal::contains: wrong variable set");
  if (p.is_zero()) return Containment::Yes;
  // cheap path: reduce by the raw generators before completing a basis
  if (normal_form(p.with_order(order_), gens_).is_zero()) return Containment::Yes;
  auto c = basis_for(degree_cap, false);
  Polynomial r = normal_form(p.with_order(order_), c->result.basis);
  if (r.is_zero()) return Containment::Yes;
  return c->result.complete ? Containment::No : Containment::Unknown;
}

std::optional<std::vector<Polynomial>> Ideal::contains_certificate(const Polynomial& p, int degree_cap) const {
  auto c = basis_for(degree_cap, true);
  DivisionResult dv = divide(p.with_order(order_), c->result.basis);
  if (!dv.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial> cof(gens_.size(), Polynomial(vars_, order_));
  for (size_t k = 0; k < c->result.basis.size(); ++k)
    for (size_t g = 0; g < gens_.size(); ++g) cof[g] += dv.quotients[k] * c->result.representations[k][g];
  return cof;
}

}  // namespace lyc
