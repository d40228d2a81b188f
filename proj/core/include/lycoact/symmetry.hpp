#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lycoact/lya.hpp"
#include "lycoact/universal.hpp"

namespace lyc {

struct DirectAutoResult {
  bool is_automorphism = false;
  std::string reason;        // "not invertible", "binary bracket", "ternary bracket"
  std::vector<int> witness;  // failing basis tuple when a bracket fails
};

/// Invertibility plus bracket preservation on all basis pairs and triples.
DirectAutoResult is_automorphism_direct(const LYAlgebra& L, const QMatrix& M);

/// A scalar point of A(L): a matrix T with T[s][i] = theta(x_si) such that
/// every P/Q generator vanishes under substitution. Constructed only through
/// point_from_matrix.
class ScalarPoint {
 public:
  const QMatrix& matrix() const { return t_; }
  friend ScalarPoint point_from_matrix(const Presentation&, const QMatrix&);

 private:
  explicit ScalarPoint(QMatrix t) : t_(std::move(t)) {}
  QMatrix t_;
};

/// Name of the first violated generator, or nullopt when M is a point.
std::optional<std::string> point_violation(const Presentation& pres, const QMatrix& M);

ScalarPoint point_from_matrix(const Presentation& pres, const QMatrix& M);  // throws RelationViolated

/// zeta(theta): e_i |-> sum_s theta(x_si) e_s; as a matrix this is T itself.
LYLinearMap zeta(const Presentation& pres, const ScalarPoint& p);

/// Convolution of points: (p1 * p2)(x_sj) = sum_t p1(x_st) p2(x_tj), i.e. the
/// matrix product; the result is re-verified as a point.
ScalarPoint convolution(const Presentation& pres, const ScalarPoint& p1, const ScalarPoint& p2);

/// Dual-path agreement report for one matrix: the direct bracket check
/// against (point && invertible && inverse-is-point).
struct AutoEquivalenceReport {
  bool direct = false;
  bool is_point = false;
  bool invertible = false;
  bool inverse_is_point = false;
  bool point_path() const { return is_point && invertible && inverse_is_point; }
  bool agree() const { return direct == point_path(); }
};

AutoEquivalenceReport automorphism_equivalence_check(const LYAlgebra& L, const QMatrix& M);
AutoEquivalenceReport automorphism_equivalence_check(const Presentation& square_pres, const QMatrix& M);

/// Z/d1 x ... x Z/dk; elements are indices into the mixed-radix enumeration
/// of exponent tuples, identity is 0.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> orders);
  static std::shared_ptr<const FiniteAbelianGroup> make(std::vector<int> orders);
  /// "2x2", "4", "2x3x5".
  static std::shared_ptr<const FiniteAbelianGroup> parse(const std::string& spec);

  const std::vector<int>& orders() const { return orders_; }
  int size() const { return size_; }
  int identity() const { return 0; }
  int add(int a, int b) const;
  int negate(int a) const;
  std::vector<int> exponents(int g) const;
  int from_exponents(const std::vector<int>& e) const;
  std::string element_name(int g) const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

 private:
  std::vector<int> orders_;
  int size_;
};

/// An element of the group algebra K[G], dense over the group elements.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(std::shared_ptr<const FiniteAbelianGroup> G)
      : g_(std::move(G)), coeff_(g_->size()) {}
  static GroupAlgebraElement unit(std::shared_ptr<const FiniteAbelianGroup> G, int element, Rational c = 1);

  const std::shared_ptr<const FiniteAbelianGroup>& group() const { return g_; }
  const Rational& coeff(int g) const { return coeff_[g]; }
  Rational& coeff(int g) { return coeff_[g]; }
  bool is_zero() const { return vector_is_zero(coeff_); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
  GroupAlgebraElement operator*(const Rational& c) const;
  bool operator==(const GroupAlgebraElement& o) const { return coeff_ == o.coeff_; }

  std::string to_string() const;

 private:
  std::shared_ptr<const FiniteAbelianGroup> g_;
  QVector coeff_;
};

struct GroupAlgebraRing {
  std::shared_ptr<const FiniteAbelianGroup> G;
  using Elem = GroupAlgebraElement;
  Elem zero() const { return GroupAlgebraElement(G); }
  Elem one() const { return GroupAlgebraElement::unit(G, G->identity()); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem scale(const Rational& c, const Elem& a) const { return a * c; }
};

/// A verified bialgebra morphism A(L) -> K[G]: P/Q vanish in K[G] and the
/// component matrices C_g (coefficient of g in theta(x_ij)) form a complete
/// system of orthogonal idempotents. Constructed via verify_group_point.
class GroupAlgebraPoint {
 public:
  const std::shared_ptr<const FiniteAbelianGroup>& group() const { return g_; }
  int dim() const { return n_; }
  const GroupAlgebraElement& image(int s, int i) const { return images_[s * n_ + i]; }
  const std::vector<GroupAlgebraElement>& images() const { return images_; }
  /// C_g with C_g[s][i] = coefficient of g in theta(x_si).
  QMatrix component_matrix(int g) const;

  friend GroupAlgebraPoint verify_group_point(const Presentation&, std::shared_ptr<const FiniteAbelianGroup>,
                                              std::vector<GroupAlgebraElement>);

 private:
  GroupAlgebraPoint(std::shared_ptr<const FiniteAbelianGroup> G, int n, std::vector<GroupAlgebraElement> images)
      : g_(std::move(G)), n_(n), images_(std::move(images)) {}
  std::shared_ptr<const FiniteAbelianGroup> g_;
  int n_;
  std::vector<GroupAlgebraElement> images_;
};

GroupAlgebraPoint verify_group_point(const Presentation& pres, std::shared_ptr<const FiniteAbelianGroup> G,
                                     std::vector<GroupAlgebraElement> images);

/// A G-grading of L: either diagonal (a group element per basis vector) or
/// general (a subspace per group element, rows spanning the component).
class Grading {
 public:
  static Grading diagonal(std::shared_ptr<const FiniteAbelianGroup> G, std::vector<int> assignment);
  static Grading general(std::shared_ptr<const FiniteAbelianGroup> G,
                         std::vector<std::pair<int, QMatrix>> components);

  const std::shared_ptr<const FiniteAbelianGroup>& group() const { return g_; }
  bool is_diagonal() const { return diagonal_.has_value(); }
  const std::vector<int>& assignment() const;
  const std::vector<std::pair<int, QMatrix>>& components() const { return components_; }

  bool operator==(const Grading& o) const;

 private:
  Grading() = default;
  std::shared_ptr<const FiniteAbelianGroup> g_;
  std::optional<std::vector<int>> diagonal_;
  std::vector<std::pair<int, QMatrix>> components_;  // sorted by element, nonzero components only
};

struct GradingCheckResult {
  bool valid = false;
  std::string reason;
  std::vector<int> witness;
};

/// Direct-sum and closure checks: [L_a, L_b] in L_{ab} and
/// {L_a, L_b, L_c} in L_{abc}, by linear membership solves.
GradingCheckResult validate_grading(const LYAlgebra& L, const Grading& g);

/// All diagonal gradings (assignments basis index -> G) that validate,
/// in lexicographic assignment order; the |G|^n search is pruned by
/// incremental closure checks.
std::vector<Grading> enumerate_diagonal_gradings(const LYAlgebra& L, std::shared_ptr<const FiniteAbelianGroup> G);

/// theta(x_si) = delta_si * g(i), verified as a bialgebra point.
GroupAlgebraPoint grading_to_point(const Presentation& pres, const Grading& diagonal_grading);

/// L_g = { x : (id (x) theta) Phi(x) = x (x) g }, recovered by linear solves;
/// returns the diagonal form whenever every component is spanned by basis
/// vectors. Throws ComponentsDoNotSum if the components fail to decompose L.
Grading point_to_grading(const LYAlgebra& L, const GroupAlgebraPoint& theta);

/// theta |-> u * theta * u^{-1} computed entrywise in K[G] as the matrix
/// sandwich U [theta] U^{-1}; requires u invertible with point inverse.
GroupAlgebraPoint conjugate_point(const Presentation& pres, const GroupAlgebraPoint& theta, const ScalarPoint& u);

}  // namespace lyc
