#include "lycoact/hopf.hpp"

#include <sstream>

namespace lyc {

std::string HopfGenerator::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::P:
      os << "P{" << level << "}[" << idx[0] + 1 << "," << idx[1] + 1 << "," << idx[2] + 1 << "]";
      break;
    case Kind::Q:
      os << "Q{" << level << "}[" << idx[0] + 1 << "," << idx[1] + 1 << "," << idx[2] + 1 << "," << idx[3] + 1 << "]";
      break;
    case Kind::ConvLR:
      os << "conv{" << level << "," << level + 1 << "}[" << idx[0] + 1 << "," << idx[1] + 1 << "]";
      break;
    case Kind::ConvRL:
      os << "conv{" << level + 1 << "," << level << "}[" << idx[0] + 1 << "," << idx[1] + 1 << "]";
      break;
  }
  return os.str();
}

HopfPresentation HopfPresentation::build(const BialgebraPresentation& B, int depth) {
  if (depth < 1) throw InputError("hopf_envelope: depth must be >= 1");
  const Presentation& pres = B.presentation();
  HopfPresentation H;
  H.depth_ = depth;
  H.n_ = pres.dim_l();
  H.order_ = pres.order();
  H.vars_ = VarSet::leveled(H.n_, H.n_, depth);
  H.doubled_ = VarSet::doubled(*H.vars_);
  H.base_vars_ = pres.varset();
  const int n = H.n_;

  // P/Q lifted to every level: the antipode of a commutative Hopf algebra is
  // an algebra endomorphism, so each level satisfies the same ideal.
  for (int level = 0; level <= depth; ++level) {
    std::vector<int> var_map(pres.varset()->size());
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < n; ++i) var_map[pres.var(s, i)] = H.vars_->find(s, i, VarSide::None, level);
    for (const auto& [key, p] : pres.pq().P) {
      HopfGenerator g;
      g.kind = HopfGenerator::Kind::P;
      g.level = level;
      g.idx = {key[0], key[1], key[2], -1};
      g.poly = p.map_variables(H.vars_, var_map);
      H.gens_.push_back(std::move(g));
    }
    for (const auto& [key, q] : pres.pq().Q) {
      HopfGenerator g;
      g.kind = HopfGenerator::Kind::Q;
      g.level = level;
      g.idx = key;
      g.poly = q.map_variables(H.vars_, var_map);
      H.gens_.push_back(std::move(g));
    }
  }

  // convolution relations between adjacent levels
  for (int level = 0; level < depth; ++level)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Polynomial::Term> lr, rl;
        for (int s = 0; s < n; ++s) {
          lr.push_back({Monomial::variable(H.vars_->find(i, s, VarSide::None, level)) *
                            Monomial::variable(H.vars_->find(s, j, VarSide::None, level + 1)),
                        Rational(1)});
          rl.push_back({Monomial::variable(H.vars_->find(i, s, VarSide::None, level + 1)) *
                            Monomial::variable(H.vars_->find(s, j, VarSide::None, level)),
                        Rational(1)});
        }
        if (i == j) {
          lr.push_back({Monomial(), Rational(-1)});
          rl.push_back({Monomial(), Rational(-1)});
        }
        HopfGenerator glr;
        glr.kind = HopfGenerator::Kind::ConvLR;
        glr.level = level;
        glr.idx = {i, j, -1, -1};
        glr.poly = Polynomial::from_terms(H.vars_, std::move(lr), H.order_);
        H.gens_.push_back(std::move(glr));
        HopfGenerator grl;
        grl.kind = HopfGenerator::Kind::ConvRL;
        grl.level = level;
        grl.idx = {i, j, -1, -1};
        grl.poly = Polynomial::from_terms(H.vars_, std::move(rl), H.order_);
        H.gens_.push_back(std::move(grl));
      }

  std::vector<Polynomial> polys;
  polys.reserve(H.gens_.size());
  for (const auto& g : H.gens_) polys.push_back(g.poly);
  H.ideal_ = Ideal(H.vars_, std::move(polys), H.order_);
  return H;
}

HopfPresentation hopf_envelope(const BialgebraPresentation& B, int depth) {
  return HopfPresentation::build(B, depth);
}

int HopfPresentation::var(int level, int s, int i) const {
  int v = vars_->find(s, i, VarSide::None, level);
  if (v < 0) throw IndexOutOfRange("HopfPresentation::var: no such variable");
  return v;
}

Polynomial HopfPresentation::delta_of_var(int v) const {
  const VarDescriptor d = vars_->desc(v);
  std::vector<Polynomial::Term> terms;
  for (int s = 0; s < n_; ++s) {
    VarDescriptor l{VarSide::Left, d.level, d.row, s};
    VarDescriptor r{VarSide::Right, d.level, s, d.col};
    if (d.level % 2 == 1) {
      // co-opposite coalgebra on odd levels
      l = VarDescriptor{VarSide::Left, d.level, s, d.col};
      r = VarDescriptor{VarSide::Right, d.level, d.row, s};
    }
    terms.push_back({Monomial::variable(doubled_->find(l)) * Monomial::variable(doubled_->find(r)), Rational(1)});
  }
  return Polynomial::from_terms(doubled_, std::move(terms), order_);
}

Rational HopfPresentation::epsilon_of_var(int v) const {
  const VarDescriptor d = vars_->desc(v);
  return d.row == d.col ? Rational(1) : Rational(0);
}

std::optional<Polynomial> HopfPresentation::antipode_image(const Polynomial& p) const {
  std::vector<int> var_map(vars_->size(), -1);
  for (int v = 0; v < vars_->size(); ++v) {
    VarDescriptor d = vars_->desc(v);
    if (d.level + 1 > depth_) continue;  // partial at the top level
    d.level += 1;
    var_map[v] = vars_->find(d);
  }
  for (const auto& [m, c] : p.terms()) {
    (void)c;
    for (const auto& [v, e] : m.entries()) {
      (void)e;
      if (var_map[v] < 0) return std::nullopt;
    }
  }
  return p.map_variables(vars_, var_map);
}

Polynomial HopfPresentation::square_antipode_image(const Polynomial& p) const {
  std::vector<int> var_map(vars_->size());
  for (int v = 0; v < vars_->size(); ++v) {
    VarDescriptor d = vars_->desc(v);
    if (d.level >= 2) d.level -= 2;
    var_map[v] = vars_->find(d);
  }
  return p.map_variables(vars_, var_map);
}

std::vector<Polynomial> HopfPresentation::level0_slice() const {
  std::vector<int> var_map(vars_->size(), -1);
  for (int v = 0; v < vars_->size(); ++v) {
    VarDescriptor d = vars_->desc(v);
    if (d.level != 0) continue;
    var_map[v] = base_vars_->find(d.row, d.col);
  }
  std::vector<Polynomial> out;
  for (const auto& g : gens_) {
    if (g.level != 0 || (g.kind != HopfGenerator::Kind::P && g.kind != HopfGenerator::Kind::Q)) continue;
    out.push_back(g.poly.map_variables(base_vars_, var_map));
  }
  return out;
}

bool CoactionReport::all_certified() const {
  if (!defects_match_level0) return false;
  for (auto c : memberships)
    if (c != Containment::Yes) return false;
  return true;
}

CoactionReport universal_coaction(const LYAlgebra& L, const HopfPresentation& H, int degree_cap) {
  const int n = L.dim();
  if (n != H.dim()) throw InputError("universal_coaction: dimension mismatch");
  auto vars = H.varset();
  auto order = H.order();
  auto xp = [&](int s, int i) { return Polynomial::variable(vars, H.var(0, s, i), order); };

  CoactionReport rep;
  rep.defects_match_level0 = true;

  // binary/ternary morphism defects of e_i |-> sum_s e_s (x) x{0}[s,i]
  auto binary_defect = [&](int a, int i, int j) {
    Polynomial d(vars, order);
    for (const auto& [key, c] : L.tau()) {
      if (key[2] != a) continue;
      d += xp(key[0], i) * xp(key[1], j) * c;
    }
    for (int u = 0; u < n; ++u) {
      Rational alpha = L.tau_at(i, j, u);
      if (!alpha.is_zero()) d -= xp(a, u) * alpha;
    }
    return d;
  };
  auto ternary_defect = [&](int a, int i, int j, int k) {
    Polynomial d(vars, order);
    for (const auto& [key, c] : L.omega()) {
      if (key[3] != a) continue;
      d += xp(key[0], i) * xp(key[1], j) * xp(key[2], k) * c;
    }
    for (int u = 0; u < n; ++u) {
      Rational beta = L.omega_at(i, j, k, u);
      if (!beta.is_zero()) d -= xp(a, u) * beta;
    }
    return d;
  };

  for (const auto& g : H.generators()) {
    if (g.level != 0) continue;
    if (g.kind == HopfGenerator::Kind::P) {
      if (!(binary_defect(g.idx[0], g.idx[1], g.idx[2]) == -g.poly)) rep.defects_match_level0 = false;
      rep.memberships.push_back(H.ideal().contains(binary_defect(g.idx[0], g.idx[1], g.idx[2]), degree_cap));
    } else if (g.kind == HopfGenerator::Kind::Q) {
      if (!(ternary_defect(g.idx[0], g.idx[1], g.idx[2], g.idx[3]) == -g.poly)) rep.defects_match_level0 = false;
      rep.memberships.push_back(H.ideal().contains(ternary_defect(g.idx[0], g.idx[1], g.idx[2], g.idx[3]), degree_cap));
    }
  }
  return rep;
}

bool AntipodeReport::all_certified() const {
  bool any = false;
  for (const auto& e : entries) {
    if (!e.checkable) continue;
    any = true;
    if (e.membership != Containment::Yes) return false;
  }
  return any;
}

int AntipodeReport::unknown_count() const {
  int c = 0;
  for (const auto& e : entries)
    if (e.checkable && e.membership == Containment::Unknown) ++c;
  return c;
}

AntipodeReport antipode_check(const HopfPresentation& H, int degree_cap) {
  AntipodeReport rep;
  for (const auto& g : H.generators()) {
    AntipodeEntry e;
    e.generator = g.name();
    auto image = H.antipode_image(g.poly);
    e.checkable = image.has_value();
    if (image) e.membership = H.ideal().contains(*image, degree_cap);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

AntipodeReport square_antipode_check(const HopfPresentation& H, int degree_cap) {
  AntipodeReport rep;
  for (const auto& g : H.generators()) {
    AntipodeEntry e;
    e.generator = g.name();
    e.checkable = true;
    e.membership = H.ideal().contains(H.square_antipode_image(g.poly), degree_cap);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace lyc
