#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lycoact/error.hpp"
#include "lycoact/matrix.hpp"
#include "lycoact/rational.hpp"

namespace lyc {

using Idx3 = std::array<int, 3>;  // (i, j, s), 0-based
using Idx4 = std::array<int, 4>;  // (i, j, k, s), 0-based

using SparseTau = std::map<Idx3, Rational>;
using SparseOmega = std::map<Idx4, Rational>;

/// A finite-dimensional Lie-Yamaguti algebra given by sparse structure
/// constants: [e_i, e_j] = sum_s tau(i,j,s) e_s and
/// {e_i, e_j, e_k} = sum_s omega(i,j,k,s) e_s.
///
/// Construction only checks index ranges; the axioms LY1-LY6 are checked by
/// validate_lya so that deliberately broken algebras can be built for tests.
/// Antisymmetric entries are stored redundantly (both (i,j) and (j,i)).
class LYAlgebra {
 public:
  LYAlgebra(int dim, SparseTau tau, SparseOmega omega, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const SparseTau& tau() const { return tau_; }
  const SparseOmega& omega() const { return omega_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;

  Rational tau_at(int i, int j, int s) const;
  Rational omega_at(int i, int j, int k, int s) const;

  QVector bracket(const QVector& x, const QVector& y) const;
  QVector tribracket(const QVector& x, const QVector& y, const QVector& z) const;

  bool is_abelian() const { return tau_.empty() && omega_.empty(); }
  QVector basis_vector(int i) const;

 private:
  int dim_;
  SparseTau tau_;
  SparseOmega omega_;
  std::vector<std::string> labels_;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::vector<int> witness;  // first failing index tuple, 0-based; empty if passed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
};

/// Checks LY1-LY6 on all basis tuples and reports per-axiom results with a
/// witness tuple on failure.
AxiomReport validate_lya(const LYAlgebra& L);

/// Lie algebra to Lie-Yamaguti: {a,b,c} = [[a,b],c].
/// The bracket must be antisymmetric and satisfy Jacobi (checked).
LYAlgebra from_lie(const SparseTau& bracket, int n);

/// Left Leibniz algebra to Lie-Yamaguti:
/// [x,y] = x*y - y*x, {x,y,z} = -(x*y)*z.
/// The left Leibniz identity x*(y*z) = (x*y)*z + y*(x*z) is checked.
LYAlgebra from_leibniz(const SparseTau& prod, int n);

/// Malcev algebra to Lie-Yamaguti: [x,y] = <x,y> and
/// {x,y,z} = <x,<y,z>> - <y,<x,z>> + <<x,y>,z>.
/// The product must be antisymmetric and Malcev (checked).
LYAlgebra from_malcev(const SparseTau& prod, int n);

/// Heisenberg Lie-Yamaguti algebra of dimension 2n+1, basis e_0..e_{2n}
/// (e_0 is storage index 0 here): [e_i, e_{n+i}] = e_0 and
/// {e_i, e_{n+i}, e_i} = e_0, {e_{n+i}, e_i, e_{n+i}} = -e_0 for 1 <= i <= n,
/// completed antisymmetrically.
LYAlgebra heisenberg(int n);

/// Abelian Lie-Yamaguti algebra of dimension n (all brackets zero).
LYAlgebra abelian_lya(int n);

/// A finite-dimensional commutative associative unital algebra by structure
/// constants: a_p * a_q = sum_r mult(p,q,r) a_r.
class CommAlgebra {
 public:
  CommAlgebra(int dim, SparseTau mult, QVector unit);

  static CommAlgebra field();  // K itself, dim 1

  int dim() const { return dim_; }
  const SparseTau& mult() const { return mult_; }
  const QVector& unit() const { return unit_; }

  QVector multiply(const QVector& a, const QVector& b) const;

  /// Commutativity, associativity and the unit law on all basis tuples;
  /// throws InvalidAlgebra with a witness on failure.
  void validate() const;

 private:
  int dim_;
  SparseTau mult_;
  QVector unit_;
};

/// Current Lie-Yamaguti algebra L (x) A on basis e_i (x) a_p ordered
/// lexicographically by (i, p).
LYAlgebra current_algebra(const LYAlgebra& L, const CommAlgebra& A);

/// Row-reduced basis of L' = [L,L] + {L,L,L}; rows are coordinate vectors.
QMatrix derived_subalgebra(const LYAlgebra& L);

/// A linear map between Lie-Yamaguti algebras, as a target_dim x source_dim
/// matrix acting on coordinates.
class LYLinearMap {
 public:
  LYLinearMap(int source_dim, int target_dim, QMatrix m);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return target_dim_; }
  const QMatrix& matrix() const { return m_; }
  QVector apply(const QVector& v) const { return m_.apply(v); }

  /// First witness tuple where the morphism property fails, if any.
  /// Binary witnesses are (i,j), ternary (i,j,k).
  std::optional<std::vector<int>> morphism_defect(const LYAlgebra& source, const LYAlgebra& target) const;

 private:
  int source_dim_, target_dim_;
  QMatrix m_;
};

}  // namespace lyc
