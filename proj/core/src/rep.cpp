#include "lycoact/rep.hpp"

namespace lyc {

LYModule::LYModule(LYAlgebra over, int mdim, std::vector<QMatrix> rho, std::vector<QMatrix> D,
                   std::vector<QMatrix> theta)
    : over_(std::move(over)), mdim_(mdim), rho_(std::move(rho)), d_(std::move(D)), theta_(std::move(theta)) {
  const size_t n = static_cast<size_t>(over_.dim());
  if (mdim_ <= 0) throw InvalidAlgebra("LYModule: dimension must be positive");
  if (rho_.size() != n || d_.size() != n * n || theta_.size() != n * n)
    throw InvalidAlgebra("LYModule: map table sizes do not match dim(L)");
  for (const auto& m : rho_)
    if (m.rows() != mdim_ || m.cols() != mdim_) throw InvalidAlgebra("LYModule: rho shape mismatch");
  for (const auto& m : d_)
    if (m.rows() != mdim_ || m.cols() != mdim_) throw InvalidAlgebra("LYModule: D shape mismatch");
  for (const auto& m : theta_)
    if (m.rows() != mdim_ || m.cols() != mdim_) throw InvalidAlgebra("LYModule: theta shape mismatch");
}

QMatrix LYModule::rho_of(const QVector& c) const {
  QMatrix r(mdim_, mdim_);
  for (int i = 0; i < over_.dim(); ++i)
    if (!c[i].is_zero()) r = r + rho_[i] * c[i];
  return r;
}

AxiomReport validate_module(const LYModule& M) {
  const LYAlgebra& L = M.over();
  const int n = L.dim();
  AxiomReport rep;

  auto rho_bracket = [&](int a, int b) {  // rho([e_a, e_b])
    QMatrix r(M.mdim(), M.mdim());
    for (int s = 0; s < n; ++s) {
      Rational c = L.tau_at(a, b, s);
      if (!c.is_zero()) r = r + M.rho(s) * c;
    }
    return r;
  };
  auto theta_left_bracket = [&](int a, int b, int c) {  // theta([e_a,e_b], e_c)
    QMatrix r(M.mdim(), M.mdim());
    for (int s = 0; s < n; ++s) {
      Rational k = L.tau_at(a, b, s);
      if (!k.is_zero()) r = r + M.theta(s, c) * k;
    }
    return r;
  };
  auto theta_right_bracket = [&](int a, int b, int c) {  // theta(e_a, [e_b,e_c])
    QMatrix r(M.mdim(), M.mdim());
    for (int s = 0; s < n; ++s) {
      Rational k = L.tau_at(b, c, s);
      if (!k.is_zero()) r = r + M.theta(a, s) * k;
    }
    return r;
  };
  auto rho_tri = [&](int a, int b, int c) {  // rho({e_a,e_b,e_c})
    QMatrix r(M.mdim(), M.mdim());
    for (int s = 0; s < n; ++s) {
      Rational k = L.omega_at(a, b, c, s);
      if (!k.is_zero()) r = r + M.rho(s) * k;
    }
    return r;
  };
  auto theta_tri_first = [&](int a, int b, int c, int d) {  // theta({e_a,e_b,e_c}, e_d)
    QMatrix r(M.mdim(), M.mdim());
    for (int s = 0; s < n; ++s) {
      Rational k = L.omega_at(a, b, c, s);
      if (!k.is_zero()) r = r + M.theta(s, d) * k;
    }
    return r;
  };
  auto theta_tri_second = [&](int c, int a, int b, int d) {  // theta(e_c, {e_a,e_b,e_d})
    QMatrix r(M.mdim(), M.mdim());
    for (int s = 0; s < n; ++s) {
      Rational k = L.omega_at(a, b, d, s);
      if (!k.is_zero()) r = r + M.theta(c, s) * k;
    }
    return r;
  };
  auto d_bracket = [&](int a, int b, int c) {  // D([e_a,e_b], e_c)
    QMatrix r(M.mdim(), M.mdim());
    for (int s = 0; s < n; ++s) {
      Rational k = L.tau_at(a, b, s);
      if (!k.is_zero()) r = r + M.D(s, c) * k;
    }
    return r;
  };

  {
    AxiomCheck c{"R1", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n; ++b) {
        QMatrix lhs = M.D(a, b) + M.theta(a, b) - M.theta(b, a);
        QMatrix rhs = M.rho(a) * M.rho(b) - M.rho(b) * M.rho(a) - rho_bracket(a, b);
        if (!(lhs - rhs).is_zero()) {
          c = {"R1", false, {a, b}};
          break;
        }
      }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"R2", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n; ++d) {
          QMatrix v = theta_right_bracket(a, b, d) - M.rho(b) * M.theta(a, d) + M.rho(d) * M.theta(a, b);
          if (!v.is_zero()) {
            c = {"R2", false, {a, b, d}};
            break;
          }
        }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"R3", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n; ++d) {
          QMatrix v = theta_left_bracket(a, b, d) - M.theta(a, d) * M.rho(b) + M.theta(b, d) * M.rho(a);
          if (!v.is_zero()) {
            c = {"R3", false, {a, b, d}};
            break;
          }
        }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"R4", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n && c.passed; ++d)
          for (int f = 0; f < n; ++f) {
            QMatrix v = M.theta(d, f) * M.theta(a, b) - M.theta(b, f) * M.theta(a, d) -
                        theta_tri_second(a, b, d, f) + M.D(b, d) * M.theta(a, f);
            if (!v.is_zero()) {
              c = {"R4", false, {a, b, d, f}};
              break;
            }
          }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"R5", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n; ++d) {
          QMatrix v = M.D(a, b) * M.rho(d) - M.rho(d) * M.D(a, b) - rho_tri(a, b, d);
          if (!v.is_zero()) {
            c = {"R5", false, {a, b, d}};
            break;
          }
        }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"R6", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n && c.passed; ++d)
          for (int f = 0; f < n; ++f) {
            QMatrix lhs = M.D(a, b) * M.theta(d, f) - M.theta(d, f) * M.D(a, b);
            QMatrix rhs = theta_tri_first(a, b, d, f) + theta_tri_second(d, a, b, f);
            if (!(lhs - rhs).is_zero()) {
              c = {"R6", false, {a, b, d, f}};
              break;
            }
          }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"R7", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n; ++d) {
          QMatrix v = d_bracket(a, b, d) + d_bracket(b, d, a) + d_bracket(d, a, b);
          if (!v.is_zero()) {
            c = {"R7", false, {a, b, d}};
            break;
          }
        }
    rep.checks.push_back(c);
  }
  return rep;
}

// R4 note: theta(a,{b,c,d}) uses the tuple (b,c,d) on the second slot.
// theta_tri_second(a, b, c, d) computes theta(e_a, {e_b, e_c, e_d}).

LYModule self_module(const LYAlgebra& L) {
  const int n = L.dim();
  std::vector<QMatrix> rho(n, QMatrix(n, n)), d(static_cast<size_t>(n) * n, QMatrix(n, n)),
      theta(static_cast<size_t>(n) * n, QMatrix(n, n));
  for (const auto& [key, c] : L.tau()) rho[key[0]].at(key[2], key[1]) = c;
  for (const auto& [key, c] : L.omega()) {
    d[key[0] * n + key[1]].at(key[3], key[2]) = c;      // D(e_i,e_j) e_k = {e_i,e_j,e_k}
    theta[key[1] * n + key[2]].at(key[3], key[0]) = c;  // theta(e_j,e_k) e_i = {e_i,e_j,e_k}
  }
  return LYModule(L, n, std::move(rho), std::move(d), std::move(theta));
}

LYModule zero_module(const LYAlgebra& L, int mdim) {
  const size_t n = static_cast<size_t>(L.dim());
  return LYModule(L, mdim, std::vector<QMatrix>(n, QMatrix(mdim, mdim)),
                  std::vector<QMatrix>(n * n, QMatrix(mdim, mdim)),
                  std::vector<QMatrix>(n * n, QMatrix(mdim, mdim)));
}

MatrixPoint verify_matrix_point(const Presentation& pres, int wdim, std::vector<QMatrix> images) {
  const int n = pres.dim_l(), nk = pres.dim_k();
  if (wdim <= 0) throw InputError("verify_matrix_point: wdim must be positive");
  if (images.size() != static_cast<size_t>(n) * nk) throw InputError("verify_matrix_point: wrong image count");
  for (const auto& m : images)
    if (m.rows() != wdim || m.cols() != wdim) throw InputError("verify_matrix_point: image shape mismatch");

  for (size_t a = 0; a < images.size(); ++a)
    for (size_t b = a + 1; b < images.size(); ++b)
      if (!(images[a] * images[b] - images[b] * images[a]).is_zero()) {
        int s1 = static_cast<int>(a) / nk, i1 = static_cast<int>(a) % nk;
        int s2 = static_cast<int>(b) / nk, i2 = static_cast<int>(b) % nk;
        throw NonCommutingImages("matrix images do not commute", {s1, i1, s2, i2});
      }

  MatrixRing ring{wdim};
  auto gens = pres.generator_list();
  auto names = pres.generator_names();
  for (size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].evaluate(ring, images).is_zero())
      throw RelationViolated("matrix point does not satisfy the ideal", names[k]);
  return MatrixPoint(wdim, n, nk, std::move(images));
}

MatrixPoint counit_point(const Presentation& pres, int wdim) {
  if (!pres.is_square()) throw InputError("counit_point: presentation is not square");
  const int n = pres.dim_l();
  std::vector<QMatrix> images(static_cast<size_t>(n) * n, QMatrix(wdim, wdim));
  for (int s = 0; s < n; ++s) images[s * n + s] = QMatrix::identity(wdim);
  return verify_matrix_point(pres, wdim, std::move(images));
}

LYModule induced_module(const LYModule& U, const Presentation& pres, const MatrixPoint& W) {
  if (U.over().dim() != pres.dim_l()) throw UnverifiedMatrixPoint("induced_module: U is not an L-module for this presentation");
  if (W.dim_l() != pres.dim_l() || W.dim_k() != pres.dim_k())
    throw UnverifiedMatrixPoint("induced_module: point shape does not match the presentation");
  const int n = pres.dim_l(), nk = pres.dim_k(), m = U.mdim(), w = W.wdim();
  const int dim = m * w;
  std::vector<QMatrix> rho(nk, QMatrix(dim, dim));
  std::vector<QMatrix> d(static_cast<size_t>(nk) * nk, QMatrix(dim, dim));
  std::vector<QMatrix> theta(static_cast<size_t>(nk) * nk, QMatrix(dim, dim));
  for (int p = 0; p < nk; ++p) {
    for (int i = 0; i < n; ++i) {
      if (U.rho(i).is_zero() || W.image(i, p).is_zero()) continue;
      rho[p] = rho[p] + U.rho(i).kronecker(W.image(i, p));
    }
  }
  for (int p = 0; p < nk; ++p)
    for (int q = 0; q < nk; ++q)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          QMatrix prod = W.image(i, p) * W.image(j, q);
          if (prod.is_zero()) continue;
          if (!U.D(i, j).is_zero()) d[p * nk + q] = d[p * nk + q] + U.D(i, j).kronecker(prod);
          if (!U.theta(i, j).is_zero()) theta[p * nk + q] = theta[p * nk + q] + U.theta(i, j).kronecker(prod);
        }
  return LYModule(pres.K(), dim, std::move(rho), std::move(d), std::move(theta));
}

std::pair<ModulePresentation, GammaMap> universal_module_presentation(const LYModule& U, const LYModule& V,
                                                                      const Presentation& pres) {
  if (U.over().dim() != pres.dim_l()) throw InvalidAlgebra("universal_module_presentation: U must be an L-module");
  if (V.over().dim() != pres.dim_k()) throw InvalidAlgebra("universal_module_presentation: V must be a K-module");
  const int n = pres.dim_l(), nk = pres.dim_k(), m = U.mdim(), vdim = V.mdim();
  auto vars = pres.varset();
  auto order = pres.order();
  auto xp = [&](int s, int i) { return Polynomial::variable(vars, pres.var(s, i), order); };

  std::vector<ModuleRelation> rels;
  auto emit = [&](int family, Idx4 key, std::map<std::pair<int, int>, Polynomial>& coeff) {
    ModuleRelation rel;
    rel.family = family;
    rel.key = key;
    for (auto& [tr, poly] : coeff)
      if (!poly.is_zero()) rel.terms.push_back({tr, std::move(poly)});
    if (!rel.is_zero()) rels.push_back(std::move(rel));
  };

  // family 1: sum_s mu_ir^s Y_ps - sum_{t,k} gamma_kt^p x_ki Y_tr
  for (int p = 0; p < m; ++p)
    for (int i = 0; i < nk; ++i)
      for (int r = 0; r < vdim; ++r) {
        std::map<std::pair<int, int>, Polynomial> coeff;
        auto add = [&](int t, int rr, const Polynomial& c) {
          auto key = std::make_pair(t, rr);
          auto it = coeff.find(key);
          if (it == coeff.end())
            coeff.emplace(key, c);
          else
            it->second += c;
        };
        for (int s = 0; s < vdim; ++s) {
          Rational mu = V.rho(i).at(s, r);
          if (!mu.is_zero()) add(p, s, Polynomial::constant(vars, mu, order));
        }
        for (int t = 0; t < m; ++t)
          for (int k = 0; k < n; ++k) {
            Rational gamma = U.rho(k).at(p, t);
            if (!gamma.is_zero()) add(t, r, xp(k, i) * -gamma);
          }
        emit(1, {p, i, -1, r}, coeff);
      }

  // families 2 and 3: sum_s eta_ijr^s Y_ps - sum_{t,k,l} delta_lkt^p (x_li x_kj) Y_tr
  for (int family = 2; family <= 3; ++family)
    for (int p = 0; p < m; ++p)
      for (int i = 0; i < nk; ++i)
        for (int j = 0; j < nk; ++j)
          for (int r = 0; r < vdim; ++r) {
            std::map<std::pair<int, int>, Polynomial> coeff;
            auto add = [&](int t, int rr, const Polynomial& c) {
              auto key = std::make_pair(t, rr);
              auto it = coeff.find(key);
              if (it == coeff.end())
                coeff.emplace(key, c);
              else
                it->second += c;
            };
            for (int s = 0; s < vdim; ++s) {
              Rational eta = family == 2 ? V.D(i, j).at(s, r) : V.theta(i, j).at(s, r);
              if (!eta.is_zero()) add(p, s, Polynomial::constant(vars, eta, order));
            }
            for (int t = 0; t < m; ++t)
              for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                  Rational delta = family == 2 ? U.D(l, k).at(p, t) : U.theta(l, k).at(p, t);
                  if (!delta.is_zero()) add(t, r, xp(l, i) * xp(k, j) * -delta);
                }
            emit(family, {p, i, j, r}, coeff);
          }

  return {ModulePresentation(m, vdim, vars, std::move(rels)), GammaMap{m, vdim}};
}

FactorThroughResult factor_through(const ModulePresentation& presn, const LYModule& U, const LYModule& V,
                                   const Presentation& pres, const MatrixPoint& W,
                                   const std::vector<std::vector<QVector>>& w) {
  const int m = U.mdim(), vdim = V.mdim(), wd = W.wdim();
  if (presn.generator_rows() != m || presn.generator_cols() != vdim)
    throw InputError("factor_through: presentation and module dimensions disagree");
  if (w.size() != static_cast<size_t>(m)) throw InputError("factor_through: w family must have one row per u_s");
  for (const auto& row : w) {
    if (row.size() != static_cast<size_t>(vdim)) throw InputError("factor_through: w row size mismatch");
    for (const auto& vec : row)
      if (vec.size() != static_cast<size_t>(wd)) throw InputError("factor_through: w vector dimension mismatch");
  }

  // f: V -> U (x) W with f(v_r) = sum_s u_s (x) w_sr
  QMatrix f(m * wd, vdim);
  for (int s = 0; s < m; ++s)
    for (int r = 0; r < vdim; ++r)
      for (int q = 0; q < wd; ++q) f.at(s * wd + q, r) = w[s][r][q];

  LYModule induced = induced_module(U, pres, W);
  const int nk = pres.dim_k();
  for (int i = 0; i < nk; ++i)
    if (!(f * V.rho(i) - induced.rho(i) * f).is_zero())
      throw NotAModuleMorphism("f does not intertwine rho", {i});
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) {
      if (!(f * V.D(i, j) - induced.D(i, j) * f).is_zero())
        throw NotAModuleMorphism("f does not intertwine D", {i, j});
      if (!(f * V.theta(i, j) - induced.theta(i, j) * f).is_zero())
        throw NotAModuleMorphism("f does not intertwine theta", {i, j});
    }

  FactorThroughResult res;
  res.g = w;
  res.relations_vanish = true;
  MatrixRing ring{wd};
  for (const auto& rel : presn.relations()) {
    QVector acc(wd);
    for (const auto& [tr, poly] : rel.terms) {
      QMatrix c = poly.evaluate(ring, W.images());
      acc = vector_add(acc, c.apply(w[tr.first][tr.second]));
    }
    if (!vector_is_zero(acc)) {
      res.relations_vanish = false;
      break;
    }
  }

  // (id (x) g) o Gamma = f: Gamma(v_r) = sum_p u_p (x) y_pr and g(y_pr) = w_pr
  res.roundtrip_ok = true;
  for (int r = 0; r < vdim && res.roundtrip_ok; ++r)
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < wd; ++q)
        if (f.at(p * wd + q, r) != w[p][r][q]) {
          res.roundtrip_ok = false;
          break;
        }
  return res;
}

}  // namespace lyc
