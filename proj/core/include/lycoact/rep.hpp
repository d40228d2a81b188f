#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lycoact/lya.hpp"
#include "lycoact/universal.hpp"

namespace lyc {

/// A finite-dimensional Lie-Yamaguti module (V, rho, D, theta) over L,
/// stored as matrices acting on coordinates: rho(e_i), D(e_i,e_j),
/// theta(e_i,e_j) are mdim x mdim.
class LYModule {
 public:
  LYModule(LYAlgebra over, int mdim, std::vector<QMatrix> rho, std::vector<QMatrix> D, std::vector<QMatrix> theta);

  const LYAlgebra& over() const { return over_; }
  int mdim() const { return mdim_; }
  const QMatrix& rho(int i) const { return rho_[i]; }
  const QMatrix& D(int i, int j) const { return d_[i * over_.dim() + j]; }
  const QMatrix& theta(int i, int j) const { return theta_[i * over_.dim() + j]; }

  /// rho applied to a linear combination sum c_i e_i.
  QMatrix rho_of(const QVector& c) const;

 private:
  LYAlgebra over_;
  int mdim_;
  std::vector<QMatrix> rho_;    // indexed by i
  std::vector<QMatrix> d_;      // indexed by i*n + j
  std::vector<QMatrix> theta_;  // indexed by i*n + j
};

/// Checks the module axioms R1-R6 on all index tuples plus the derived
/// identity R7 (a consistency assertion: it follows from R1-R3 and R5).
AxiomReport validate_module(const LYModule& M);

/// The natural module of L on itself: rho(a)b = [a,b], D(a,b)c = {a,b,c},
/// theta(a,b)c = {c,a,b}.
LYModule self_module(const LYAlgebra& L);

/// All maps zero; valid over any algebra.
LYModule zero_module(const LYAlgebra& L, int mdim);

/// Ring adapter: wdim x wdim rational matrices.
struct MatrixRing {
  int n;
  using Elem = QMatrix;
  Elem zero() const { return QMatrix(n, n); }
  Elem one() const { return QMatrix::identity(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem scale(const Rational& c, const Elem& a) const { return a * c; }
};

/// A finite-dimensional A(L,K)-module: commuting matrices x_si -> images
/// satisfying every P/Q relation. Only constructible via verify_matrix_point.
class MatrixPoint {
 public:
  int wdim() const { return wdim_; }
  int dim_l() const { return dim_l_; }
  int dim_k() const { return dim_k_; }
  const QMatrix& image(int s, int i) const { return images_[s * dim_k_ + i]; }
  const std::vector<QMatrix>& images() const { return images_; }

  friend MatrixPoint verify_matrix_point(const Presentation&, int, std::vector<QMatrix>);

 private:
  MatrixPoint(int wdim, int dim_l, int dim_k, std::vector<QMatrix> images)
      : wdim_(wdim), dim_l_(dim_l), dim_k_(dim_k), images_(std::move(images)) {}
  int wdim_, dim_l_, dim_k_;
  std::vector<QMatrix> images_;
};

/// Substitutes the images into every generator (must give zero matrices) and
/// checks pairwise commutativity. Throws RelationViolated / NonCommutingImages.
MatrixPoint verify_matrix_point(const Presentation& pres, int wdim, std::vector<QMatrix> images);

/// The counit point theta(x_si) = delta_si * I_wdim (square presentations).
MatrixPoint counit_point(const Presentation& pres, int wdim = 1);

/// The K-module on U (x) W: rho(f_p) = sum_i rho_U(e_i) (x) x_ip . (-),
/// D(f_p,f_q) = sum_{i,j} D_U(e_i,e_j) (x) (x_ip x_jq) . (-), theta likewise.
/// Basis u_s (x) w_r ordered lexicographically by (s, r).
LYModule induced_module(const LYModule& U, const Presentation& pres, const MatrixPoint& W);

/// One relation element of the universal module presentation: a formal sum
/// sum coeff(t,r) * Y[t,r] with polynomial coefficients in the x variables.
struct ModuleRelation {
  int family;  // 1: rho family, 2: D family, 3: theta family
  Idx4 key;    // (p, i, j, r); j = -1 in family 1
  std::vector<std::pair<std::pair<int, int>, Polynomial>> terms;  // ((t,r), coeff), sorted by (t,r)

  bool is_zero() const { return terms.empty(); }
};

/// Presentation of the universal A-module U(U,V) on generators Y[s,r],
/// s over a basis of U, r over a basis of V.
class ModulePresentation {
 public:
  ModulePresentation(int m, int vdim, std::shared_ptr<const VarSet> vars, std::vector<ModuleRelation> relations)
      : m_(m), vdim_(vdim), vars_(std::move(vars)), relations_(std::move(relations)) {}

  int generator_rows() const { return m_; }
  int generator_cols() const { return vdim_; }
  int generator_count() const { return m_ * vdim_; }
  const std::shared_ptr<const VarSet>& varset() const { return vars_; }
  const std::vector<ModuleRelation>& relations() const { return relations_; }
  /// Free of the predicted rank when no relation survives.
  bool is_free() const { return relations_.empty(); }

 private:
  int m_, vdim_;
  std::shared_ptr<const VarSet> vars_;
  std::vector<ModuleRelation> relations_;
};

/// Gamma: V -> U (x) U(U,V), v_r |-> sum_p u_p (x) y_pr.
struct GammaMap {
  int m = 0;
  int vdim = 0;
};

std::pair<ModulePresentation, GammaMap> universal_module_presentation(const LYModule& U, const LYModule& V,
                                                                      const Presentation& pres);

/// Factorization through the universal module: given f(v_r) = sum_s u_s (x) w_sr
/// with f a K-module morphism V -> U (x) W (checked), returns the assignment
/// g(y_sr) = w_sr after verifying that every relation vanishes on the w's and
/// that (id (x) g) o Gamma = f.
struct FactorThroughResult {
  std::vector<std::vector<QVector>> g;  // g[s][r] = w_sr in W coordinates
  bool relations_vanish = false;
  bool roundtrip_ok = false;
};

FactorThroughResult factor_through(const ModulePresentation& presn, const LYModule& U, const LYModule& V,
                                   const Presentation& pres, const MatrixPoint& W,
                                   const std::vector<std::vector<QVector>>& w);

}  // namespace lyc
