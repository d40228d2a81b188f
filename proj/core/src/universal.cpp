#include "lycoact/universal.hpp"

#include <sstream>

namespace lyc {

UniversalPolynomials universal_polynomials(const LYAlgebra& L, const LYAlgebra& K,
                                           std::shared_ptr<const VarSet> vars, MonomialOrder order) {
  const int n = L.dim(), nk = K.dim();
  if (!vars) vars = VarSet::rectangular(n, nk);
  auto xvar = [&](int s, int i) { return vars->find(s, i); };

  UniversalPolynomials out;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j) {
        std::vector<Polynomial::Term> terms;
        for (int u = 0; u < nk; ++u) {
          Rational alpha = K.tau_at(i, j, u);
          if (!alpha.is_zero()) terms.push_back({Monomial::variable(xvar(a, u)), alpha});
        }
        for (const auto& [key, c] : L.tau()) {
          if (key[2] != a) continue;
          terms.push_back({Monomial::variable(xvar(key[0], i)) * Monomial::variable(xvar(key[1], j)), -c});
        }
        Polynomial p = Polynomial::from_terms(vars, std::move(terms), order);
        if (!p.is_zero()) out.P.push_back({{a, i, j}, std::move(p)});
      }
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j)
        for (int k = 0; k < nk; ++k) {
          std::vector<Polynomial::Term> terms;
          for (int u = 0; u < nk; ++u) {
            Rational beta = K.omega_at(i, j, k, u);
            if (!beta.is_zero()) terms.push_back({Monomial::variable(xvar(a, u)), beta});
          }
          for (const auto& [key, c] : L.omega()) {
            if (key[3] != a) continue;
            Monomial m = Monomial::variable(xvar(key[0], i)) * Monomial::variable(xvar(key[1], j)) *
                         Monomial::variable(xvar(key[2], k));
            terms.push_back({std::move(m), -c});
          }
          Polynomial q = Polynomial::from_terms(vars, std::move(terms), order);
          if (!q.is_zero()) out.Q.push_back({{a, i, j, k}, std::move(q)});
        }
  return out;
}

Presentation::Presentation(LYAlgebra L, LYAlgebra K, MonomialOrder order)
    : L_(std::move(L)), K_(std::move(K)), order_(order), vars_(VarSet::rectangular(L_.dim(), K_.dim())) {
  pq_ = universal_polynomials(L_, K_, vars_, order_);
  ideal_ = Ideal(vars_, generator_list(), order_);
}

Presentation Presentation::build(LYAlgebra L, LYAlgebra K, MonomialOrder order) {
  return Presentation(std::move(L), std::move(K), order);
}

Presentation Presentation::square(const LYAlgebra& L, MonomialOrder order) {
  return Presentation(L, L, order);
}

bool Presentation::is_square() const {
  return L_.dim() == K_.dim() && L_.tau() == K_.tau() && L_.omega() == K_.omega();
}

int Presentation::var(int s, int i) const {
  int v = vars_->find(s, i);
  if (v < 0) throw IndexOutOfRange("Presentation::var: no such variable");
  return v;
}

std::vector<Polynomial> Presentation::generator_list() const {
  std::vector<Polynomial> gens;
  gens.reserve(pq_.P.size() + pq_.Q.size());
  for (const auto& [k, p] : pq_.P) gens.push_back(p);
  for (const auto& [k, q] : pq_.Q) gens.push_back(q);
  return gens;
}

std::vector<std::string> Presentation::generator_names() const {
  std::vector<std::string> names;
  names.reserve(pq_.P.size() + pq_.Q.size());
  for (const auto& [k, p] : pq_.P) {
    (void)p;
    std::ostringstream os;
    os << "P[" << k[0] + 1 << "," << k[1] + 1 << "," << k[2] + 1 << "]";
    names.push_back(os.str());
  }
  for (const auto& [k, q] : pq_.Q) {
    (void)q;
    std::ostringstream os;
    os << "Q[" << k[0] + 1 << "," << k[1] + 1 << "," << k[2] + 1 << "," << k[3] + 1 << "]";
    names.push_back(os.str());
  }
  return names;
}

PhiMap phi_map(const Presentation& pres) {
  PhiMap phi;
  const int n = pres.dim_l(), nk = pres.dim_k();
  phi.table.assign(nk, {});
  for (int i = 0; i < nk; ++i) {
    phi.table[i].reserve(n);
    for (int s = 0; s < n; ++s) phi.table[i].push_back(Polynomial::variable(pres.varset(), pres.var(s, i), pres.order()));
  }
  return phi;
}

bool PhiReport::all_certified() const {
  if (!binary_defects_are_minus_p || !ternary_defects_are_minus_q) return false;
  for (auto c : memberships)
    if (c != Containment::Yes) return false;
  return true;
}

PhiReport verify_phi(const Presentation& pres, int degree_cap) {
  const LYAlgebra& L = pres.L();
  const LYAlgebra& K = pres.K();
  const int n = L.dim(), nk = K.dim();
  auto vars = pres.varset();
  auto order = pres.order();
  auto xp = [&](int s, int i) { return Polynomial::variable(vars, pres.var(s, i), order); };

  PhiReport rep;
  rep.binary_defects_are_minus_p = true;
  rep.ternary_defects_are_minus_q = true;

  // coefficient of e_a in [Phi f_i, Phi f_j] - Phi[f_i, f_j]
  auto binary_defect = [&](int a, int i, int j) {
    Polynomial d(vars, order);
    for (const auto& [key, c] : L.tau()) {
      if (key[2] != a) continue;
      d += xp(key[0], i) * xp(key[1], j) * c;
    }
    for (int u = 0; u < nk; ++u) {
      Rational alpha = K.tau_at(i, j, u);
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
    for (int u = 0; u < nk; ++u) {
      Rational beta = K.omega_at(i, j, k, u);
      if (!beta.is_zero()) d -= xp(a, u) * beta;
    }
    return d;
  };

  for (const auto& [key, p] : pres.pq().P)
    if (!(binary_defect(key[0], key[1], key[2]) == -p)) rep.binary_defects_are_minus_p = false;
  for (const auto& [key, q] : pres.pq().Q)
    if (!(ternary_defect(key[0], key[1], key[2], key[3]) == -q)) rep.ternary_defects_are_minus_q = false;
  // defects at indices whose P/Q were dropped must be identically zero
  for (int a = 0; a < n && rep.binary_defects_are_minus_p; ++a)
    for (int i = 0; i < nk && rep.binary_defects_are_minus_p; ++i)
      for (int j = 0; j < nk; ++j) {
        bool listed = false;
        for (const auto& [key, p] : pres.pq().P)
          if (key == Idx3{a, i, j}) { listed = true; break; }
        if (!listed && !binary_defect(a, i, j).is_zero()) {
          rep.binary_defects_are_minus_p = false;
          break;
        }
      }
  for (int a = 0; a < n && rep.ternary_defects_are_minus_q; ++a)
    for (int i = 0; i < nk && rep.ternary_defects_are_minus_q; ++i)
      for (int j = 0; j < nk && rep.ternary_defects_are_minus_q; ++j)
        for (int k = 0; k < nk; ++k) {
          bool listed = false;
          for (const auto& [key, q] : pres.pq().Q)
            if (key == Idx4{a, i, j, k}) { listed = true; break; }
          if (!listed && !ternary_defect(a, i, j, k).is_zero()) {
            rep.ternary_defects_are_minus_q = false;
            break;
          }
        }

  for (const auto& p : pres.generator_list()) rep.memberships.push_back(pres.ideal().contains(p, degree_cap));
  return rep;
}

BialgebraPresentation::BialgebraPresentation(Presentation pres)
    : pres_(std::move(pres)), doubled_(VarSet::doubled(*pres_.varset())) {
  const int n = pres_.dim_l();
  const int nv = pres_.varset()->size();
  left_map_.resize(nv);
  right_map_.resize(nv);
  for (int v = 0; v < nv; ++v) {
    VarDescriptor d = pres_.varset()->desc(v);
    VarDescriptor dl = d, dr = d;
    dl.side = VarSide::Left;
    dr.side = VarSide::Right;
    left_map_[v] = doubled_->find(dl);
    right_map_[v] = doubled_->find(dr);
  }
  delta_.reserve(nv);
  epsilon_.reserve(nv);
  for (int v = 0; v < nv; ++v) {
    VarDescriptor d = pres_.varset()->desc(v);
    std::vector<Polynomial::Term> terms;
    for (int s = 0; s < n; ++s) {
      int lv = doubled_->find(d.row, s, VarSide::Left);
      int rv = doubled_->find(s, d.col, VarSide::Right);
      terms.push_back({Monomial::variable(lv) * Monomial::variable(rv), Rational(1)});
    }
    delta_.push_back(Polynomial::from_terms(doubled_, std::move(terms), pres_.order()));
    epsilon_.push_back(d.row == d.col ? Rational(1) : Rational(0));
  }
}

BialgebraPresentation BialgebraPresentation::build(const LYAlgebra& L, MonomialOrder order) {
  return BialgebraPresentation(Presentation::square(L, order));
}

Polynomial BialgebraPresentation::delta_image(const Polynomial& p) const {
  PolynomialRing ring{doubled_, pres_.order()};
  return p.evaluate(ring, delta_);
}

Rational BialgebraPresentation::epsilon_image(const Polynomial& p) const {
  RationalRing ring;
  return p.evaluate(ring, epsilon_);
}

Polynomial BialgebraPresentation::lift_left(const Polynomial& p) const {
  return p.map_variables(doubled_, left_map_);
}

Polynomial BialgebraPresentation::lift_right(const Polynomial& p) const {
  return p.map_variables(doubled_, right_map_);
}

bool CoidealReport::all_certified() const {
  for (const auto& e : entries)
    if (!e.epsilon_zero || e.delta_membership != Containment::Yes) return false;
  return true;
}

int CoidealReport::unknown_count() const {
  int c = 0;
  for (const auto& e : entries)
    if (e.delta_membership == Containment::Unknown) ++c;
  return c;
}

CoidealReport verify_coideal(BialgebraPresentation& B, int degree_cap) {
  const Presentation& pres = B.presentation();
  std::vector<Polynomial> doubled_gens;
  for (const auto& g : pres.generator_list()) {
    doubled_gens.push_back(B.lift_left(g));
  }
  for (const auto& g : pres.generator_list()) {
    doubled_gens.push_back(B.lift_right(g));
  }
  Ideal doubled_ideal(B.doubled_varset(), doubled_gens, pres.order());

  CoidealReport rep;
  auto gens = pres.generator_list();
  auto names = pres.generator_names();
  for (size_t k = 0; k < gens.size(); ++k) {
    CoidealEntry e;
    e.generator = names[k];
    e.epsilon_zero = B.epsilon_image(gens[k]).is_zero();
    e.delta_membership = doubled_ideal.contains(B.delta_image(gens[k]), degree_cap);
    rep.entries.push_back(std::move(e));
  }
  if (rep.all_certified()) B.mark_coideal_verified();
  return rep;
}

ComoduleReport verify_comodule(const BialgebraPresentation& B) {
  const Presentation& pres = B.presentation();
  const int n = pres.dim_l();
  auto doubled = B.doubled_varset();
  ComoduleReport rep;
  rep.coassociativity = true;
  rep.counit = true;

  for (int i = 0; i < n && rep.coassociativity; ++i)
    for (int t = 0; t < n; ++t) {
      // (id (x) Delta) Phi at e_i, coefficient of e_t
      Polynomial side1 = B.delta_of_var(pres.var(t, i));
      // (Phi (x) id) Phi at e_i, coefficient of e_t: sum_s xL[t,s] xR[s,i]
      std::vector<Polynomial::Term> terms;
      for (int s = 0; s < n; ++s) {
        int lv = doubled->find(t, s, VarSide::Left);
        int rv = doubled->find(s, i, VarSide::Right);
        terms.push_back({Monomial::variable(lv) * Monomial::variable(rv), Rational(1)});
      }
      Polynomial side2 = Polynomial::from_terms(doubled, std::move(terms), pres.order());
      if (!(side1 == side2)) {
        rep.coassociativity = false;
        break;
      }
    }

  for (int i = 0; i < n && rep.counit; ++i)
    for (int s = 0; s < n; ++s) {
      Rational expect = (s == i) ? Rational(1) : Rational(0);
      if (B.epsilon_of_var(pres.var(s, i)) != expect) {
        rep.counit = false;
        break;
      }
    }
  return rep;
}

SymmetricQuotientReport check_symmetric_quotient(const LYAlgebra& L) {
  const int n = L.dim();
  // Linear generators of A(K, L): sum_u tau_ij^u X_u and sum_u omega_ijk^u X_u.
  std::vector<QVector> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVector v(n);
      bool nz = false;
      for (int u = 0; u < n; ++u) {
        v[u] = L.tau_at(i, j, u);
        nz = nz || !v[u].is_zero();
      }
      if (nz) rows.push_back(std::move(v));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector v(n);
        bool nz = false;
        for (int u = 0; u < n; ++u) {
          v[u] = L.omega_at(i, j, k, u);
          nz = nz || !v[u].is_zero();
        }
        if (nz) rows.push_back(std::move(v));
      }

  SymmetricQuotientReport rep;
  QMatrix span = rows.empty() ? QMatrix(0, n) : QMatrix::from_rows(rows).row_space_basis();
  rep.rank = span.rows();
  rep.free_rank = n - rep.rank;
  rep.relation_basis = span;

  // complete the relation rows to a basis of K^n with standard vectors
  std::vector<QVector> cob;
  for (int r = 0; r < span.rows(); ++r) cob.push_back(span.row(r));
  for (int c = 0; c < n && static_cast<int>(cob.size()) < n; ++c) {
    QVector e(n);
    e[c] = 1;
    std::vector<QVector> probe = cob;
    probe.push_back(e);
    if (QMatrix::from_rows(probe).rank() == static_cast<int>(probe.size())) cob.push_back(e);
  }
  rep.change_of_basis = QMatrix::from_rows(cob);
  return rep;
}

AlgebraPointInA verify_algebra_point(const Presentation& pres, CommAlgebra A, std::vector<QVector> images) {
  const int n = pres.dim_l(), nk = pres.dim_k();
  if (images.size() != static_cast<size_t>(n) * nk)
    throw InputError("verify_algebra_point: expected " + std::to_string(n * nk) + " images");
  for (const auto& im : images)
    if (im.size() != static_cast<size_t>(A.dim())) throw InputError("verify_algebra_point: image has wrong dimension");

  CommAlgebraRing ring{&A};
  auto gens = pres.generator_list();
  auto names = pres.generator_names();
  for (size_t k = 0; k < gens.size(); ++k) {
    QVector value = gens[k].evaluate(ring, images);
    if (!vector_is_zero(value)) throw RelationViolated("point does not satisfy the ideal", names[k]);
  }
  return AlgebraPointInA(std::move(A), std::move(images), n, nk);
}

LYLinearMap psi_forward(const Presentation& pres, const AlgebraPointInA& point) {
  const int n = pres.dim_l(), nk = pres.dim_k(), m = point.target().dim();
  QMatrix g(n * m, nk);
  for (int i = 0; i < nk; ++i)
    for (int s = 0; s < n; ++s) {
      const QVector& a = point.image(s, i);
      for (int p = 0; p < m; ++p) g.at(s * m + p, i) = a[p];
    }
  LYLinearMap gamma(nk, n * m, std::move(g));
  LYAlgebra target = current_algebra(pres.L(), point.target());
  if (auto w = gamma.morphism_defect(pres.K(), target))
    throw NotAMorphism("psi_forward: image map is not a Lie-Yamaguti morphism", *w);
  return gamma;
}

AlgebraPointInA psi_inverse(const Presentation& pres, const std::optional<CommAlgebra>& A, const LYLinearMap& gamma) {
  if (!A) throw FiniteTargetRequired("psi_inverse requires a finite-dimensional target algebra");
  const int n = pres.dim_l(), nk = pres.dim_k(), m = A->dim();
  if (gamma.source_dim() != nk || gamma.target_dim() != n * m)
    throw InputError("psi_inverse: gamma has wrong shape for L (x) A");
  LYAlgebra target = current_algebra(pres.L(), *A);
  if (auto w = gamma.morphism_defect(pres.K(), target))
    throw NotAMorphism("psi_inverse: gamma is not a Lie-Yamaguti morphism", *w);
  std::vector<QVector> images(static_cast<size_t>(n) * nk);
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < nk; ++i) {
      QVector a(m);
      for (int p = 0; p < m; ++p) a[p] = gamma.matrix().at(s * m + p, i);
      images[s * nk + i] = std::move(a);
    }
  return verify_algebra_point(pres, *A, std::move(images));
}

}  // namespace lyc
