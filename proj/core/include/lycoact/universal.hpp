#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lycoact/groebner.hpp"
#include "lycoact/lya.hpp"
#include "lycoact/polynomial.hpp"

namespace lyc {

/// The universal polynomials of a pair (L, K):
///   P_(a,i,j)   = sum_u alpha_ij^u X_au - sum_{s,t} tau_st^a X_si X_tj
///   Q_(a,i,j,k) = sum_u beta_ijk^u X_au - sum_{r,s,t} omega_rst^a X_ri X_sj X_tk
/// where tau/omega are L's constants and alpha/beta are K's. Identically zero
/// polynomials are dropped; entries are sorted by index tuple.
struct UniversalPolynomials {
  std::vector<std::pair<Idx3, Polynomial>> P;  // keyed (a,i,j), 0-based
  std::vector<std::pair<Idx4, Polynomial>> Q;  // keyed (a,i,j,k)
};

UniversalPolynomials universal_polynomials(const LYAlgebra& L, const LYAlgebra& K,
                                           std::shared_ptr<const VarSet> vars = nullptr,
                                           MonomialOrder order = MonomialOrder::DegRevLex);

/// Finitely presented universal algebra A(L,K) = K[x_si]/J.
/// Variables x[s,i]: s runs over a basis of L (rows), i over a basis of K.
class Presentation {
 public:
  static Presentation build(LYAlgebra L, LYAlgebra K, MonomialOrder order = MonomialOrder::DegRevLex);
  /// Square case A(L) = A(L,L).
  static Presentation square(const LYAlgebra& L, MonomialOrder order = MonomialOrder::DegRevLex);

  const LYAlgebra& L() const { return L_; }
  const LYAlgebra& K() const { return K_; }
  int dim_l() const { return L_.dim(); }
  int dim_k() const { return K_.dim(); }
  bool is_square() const;
  MonomialOrder order() const { return order_; }

  const std::shared_ptr<const VarSet>& varset() const { return vars_; }
  int var(int s, int i) const;  // index of x_{si}

  const UniversalPolynomials& pq() const { return pq_; }
  const Ideal& ideal() const { return ideal_; }

  /// All generators, P block then Q block, canonical index order.
  std::vector<Polynomial> generator_list() const;
  /// "P[a,i,j]" / "Q[a,i,j,k]" with 1-based indices, aligned with generator_list().
  std::vector<std::string> generator_names() const;

 private:
  Presentation(LYAlgebra L, LYAlgebra K, MonomialOrder order);
  LYAlgebra L_, K_;
  MonomialOrder order_;
  std::shared_ptr<const VarSet> vars_;
  UniversalPolynomials pq_;
  Ideal ideal_;
};

/// The canonical morphism Phi: K -> L (x) A(L,K), f_i |-> sum_s e_s (x) x_si,
/// stored as the table table[i][s] = x_si.
struct PhiMap {
  std::vector<std::vector<Polynomial>> table;
};

PhiMap phi_map(const Presentation& pres);

/// Checks that Phi is a Lie-Yamaguti morphism modulo the ideal: the binary
/// defect coefficients are literally -P and the ternary ones -Q (symbolic),
/// and each reduces to zero in the ideal.
struct PhiReport {
  bool binary_defects_are_minus_p = false;
  bool ternary_defects_are_minus_q = false;
  std::vector<Containment> memberships;  // one entry per generator
  bool all_certified() const;
};

PhiReport verify_phi(const Presentation& pres, int degree_cap = -1);

/// A(L) with its bialgebra structure: Delta(x_ij) = sum_s x_is (x) x_sj and
/// eps(x_ij) = delta_ij, stored symbolically over the doubled variable set
/// (left copies then right copies).
class BialgebraPresentation {
 public:
  static BialgebraPresentation build(const LYAlgebra& L, MonomialOrder order = MonomialOrder::DegRevLex);

  const Presentation& presentation() const { return pres_; }
  const std::shared_ptr<const VarSet>& doubled_varset() const { return doubled_; }

  /// Delta on a generator variable, as stored.
  const Polynomial& delta_of_var(int v) const { return delta_[v]; }
  Rational epsilon_of_var(int v) const { return epsilon_[v]; }

  /// Multiplicative extension of Delta to any polynomial of the presentation.
  Polynomial delta_image(const Polynomial& p) const;
  /// Algebra-map extension of eps.
  Rational epsilon_image(const Polynomial& p) const;

  /// Left/right lifts K[x] -> K[xL, xR].
  Polynomial lift_left(const Polynomial& p) const;
  Polynomial lift_right(const Polynomial& p) const;

  bool coideal_verified() const { return coideal_verified_; }
  void mark_coideal_verified() { coideal_verified_ = true; }

 private:
  BialgebraPresentation(Presentation pres);
  Presentation pres_;
  std::shared_ptr<const VarSet> doubled_;
  std::vector<Polynomial> delta_;
  std::vector<Rational> epsilon_;
  std::vector<int> left_map_, right_map_;
  bool coideal_verified_ = false;
};

struct CoidealEntry {
  std::string generator;
  bool epsilon_zero = false;
  Containment delta_membership = Containment::Unknown;
};

struct CoidealReport {
  std::vector<CoidealEntry> entries;
  bool all_certified() const;
  int unknown_count() const;
};

/// Certifies that Delta and eps descend to the quotient: eps(g) = 0 exactly
/// and Delta(g) in <J (x) 1, 1 (x) J> by reduction to zero (raw generator
/// reductions first, bounded Buchberger escalation on demand).
CoidealReport verify_coideal(BialgebraPresentation& B, int degree_cap = -1);

struct ComoduleReport {
  bool coassociativity = false;
  bool counit = false;
  bool passed() const { return coassociativity && counit; }
};

/// The two comodule identities for Phi, checked as syntactic identities.
ComoduleReport verify_comodule(const BialgebraPresentation& B);

/// A(K, L) is S(L/L'): the span of the linear generators has rank dim L',
/// and a linear change of coordinates exhibits the quotient as a polynomial
/// ring on n - dim L' variables.
struct SymmetricQuotientReport {
  int rank = 0;                  // = dim L'
  int free_rank = 0;             // n - rank
  QMatrix relation_basis;        // rank x n, row-reduced span of linear generators
  QMatrix change_of_basis;       // invertible n x n; first `rank` rows span L'
};

SymmetricQuotientReport check_symmetric_quotient(const LYAlgebra& L);

/// Ring adapter: elements of a finite-dimensional commutative algebra.
struct CommAlgebraRing {
  const CommAlgebra* A;
  using Elem = QVector;
  Elem zero() const { return QVector(A->dim()); }
  Elem one() const { return A->unit(); }
  Elem add(const Elem& a, const Elem& b) const { return vector_add(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return A->multiply(a, b); }
  Elem scale(const Rational& c, const Elem& a) const { return vector_scale(c, a); }
};

/// A verified algebra morphism A(L,K) -> A, given by the images of the x_si
/// in a finite-dimensional commutative algebra A. Only constructible through
/// verify_algebra_point, so every instance satisfies all P/Q relations.
class AlgebraPointInA {
 public:
  const CommAlgebra& target() const { return target_; }
  /// images()[s * dim_k + i] is theta(x_si) as a coordinate vector in A.
  const std::vector<QVector>& images() const { return images_; }
  const QVector& image(int s, int i) const { return images_[s * dim_k_ + i]; }
  int dim_l() const { return dim_l_; }
  int dim_k() const { return dim_k_; }

  friend AlgebraPointInA verify_algebra_point(const Presentation&, CommAlgebra, std::vector<QVector>);

 private:
  AlgebraPointInA(CommAlgebra target, std::vector<QVector> images, int dim_l, int dim_k)
      : target_(std::move(target)), images_(std::move(images)), dim_l_(dim_l), dim_k_(dim_k) {}
  CommAlgebra target_;
  std::vector<QVector> images_;
  int dim_l_, dim_k_;
};

/// Substitutes the images into every P and Q generator and checks exact
/// vanishing in A; throws RelationViolated naming the generator otherwise.
AlgebraPointInA verify_algebra_point(const Presentation& pres, CommAlgebra A, std::vector<QVector> images);

/// Psi(theta) = (id (x) theta) o Phi: the Lie-Yamaguti morphism
/// K -> L (x) A determined by a point; verified exactly against
/// current_algebra(L, A).
LYLinearMap psi_forward(const Presentation& pres, const AlgebraPointInA& point);

/// Inverse direction: reads the images g_si off a morphism
/// gamma: K -> L (x) A and verifies them as a point. The target must be a
/// finite-dimensional CommAlgebra (nullopt throws FiniteTargetRequired).
AlgebraPointInA psi_inverse(const Presentation& pres, const std::optional<CommAlgebra>& A, const LYLinearMap& gamma);

}  // namespace lyc
