#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lycoact/error.hpp"
#include "lycoact/rational.hpp"
#include "lycoact/varset.hpp"

namespace lyc {

enum class MonomialOrder : uint8_t { DegRevLex, Lex };

std::string to_string(MonomialOrder o);
std::optional<MonomialOrder> parse_order(const std::string& s);

/// Sparse monomial: (variable, exponent) pairs sorted by variable index,
/// exponents strictly positive. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int v, int exp = 1);

  bool is_one() const { return e_.empty(); }
  int degree() const;
  int exponent(int v) const;
  const std::vector<std::pair<int, int>>& entries() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  std::optional<Monomial> divide(const Monomial& o) const;  // this / o
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  /// Total-order comparison: negative if a < b, 0 if equal, positive if a > b.
  /// Variable 0 is the largest variable.
  static int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

 private:
  std::vector<std::pair<int, int>> e_;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// strictly decreasing under the polynomial's monomial order, with no zero
/// coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::shared_ptr<const VarSet> vars, MonomialOrder order = MonomialOrder::DegRevLex)
      : vars_(std::move(vars)), order_(order) {}

  static Polynomial constant(std::shared_ptr<const VarSet> vars, const Rational& c,
                             MonomialOrder order = MonomialOrder::DegRevLex);
  static Polynomial variable(std::shared_ptr<const VarSet> vars, int v,
                             MonomialOrder order = MonomialOrder::DegRevLex);
  static Polynomial from_terms(std::shared_ptr<const VarSet> vars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::DegRevLex);

  const std::shared_ptr<const VarSet>& varset() const { return vars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  /// Same terms re-sorted under a different order.
  Polynomial with_order(MonomialOrder order) const;
  /// Same terms over another varset via a variable index map.
  Polynomial map_variables(std::shared_ptr<const VarSet> target, const std::vector<int>& var_map) const;

  /// Leading coefficient scaled to 1 (zero polynomial unchanged).
  Polynomial monic() const;
  /// Sign flipped if the leading coefficient is negative.
  Polynomial normalized_sign() const;

  Rational coefficient(const Monomial& m) const;

  /// "x[1,1] - 2*x[1,2]^2*x[2,1] + 1/2"; "0" for zero.
  std::string to_text() const;

  /// Substitutes images[v] for variable v; Ring needs mul/add semantics.
  /// Used with rings of rationals, algebra elements, matrices, polynomials.
  template <class Ring>
  typename Ring::Elem evaluate(const Ring& ring, const std::vector<typename Ring::Elem>& images) const {
    typename Ring::Elem acc = ring.zero();
    for (const auto& [m, c] : terms_) {
      typename Ring::Elem t = ring.one();
      for (const auto& [v, e] : m.entries())
        for (int k = 0; k < e; ++k) t = ring.mul(t, images[v]);
      acc = ring.add(acc, ring.scale(c, t));
    }
    return acc;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  std::shared_ptr<const VarSet> vars_;
  MonomialOrder order_ = MonomialOrder::DegRevLex;
  std::vector<Term> terms_;
};

/// Ring adapters for Polynomial::evaluate.
struct RationalRing {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem scale(const Rational& c, const Elem& a) const { return c * a; }
};

struct PolynomialRing {
  std::shared_ptr<const VarSet> vars;
  MonomialOrder order = MonomialOrder::DegRevLex;
  using Elem = Polynomial;
  Elem zero() const { return Polynomial(vars, order); }
  Elem one() const { return Polynomial::constant(vars, 1, order); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem scale(const Rational& c, const Elem& a) const { return a * c; }
};

}  // namespace lyc
