#include "lycoact/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace lyc {

std::string to_string(MonomialOrder o) {
  return o == MonomialOrder::DegRevLex ? "degrevlex" : "lex";
}

std::optional<MonomialOrder> parse_order(const std::string& s) {
  if (s == "degrevlex") return MonomialOrder::DegRevLex;
  if (s == "lex") return MonomialOrder::Lex;
  return std::nullopt;
}

Monomial Monomial::variable(int v, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  if (exp > 0) m.e_.push_back({v, exp});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : e_) {
    (void)v;
    d += e;
  }
  return d;
}

int Monomial::exponent(int v) const {
  for (const auto& [w, e] : e_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.e_.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j >= o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      m.e_.push_back(e_[i++]);
    } else if (i >= e_.size() || o.e_[j].first < e_[i].first) {
      m.e_.push_back(o.e_[j++]);
    } else {
      m.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
      ++i;
      ++j;
    }
  }
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  size_t j = 0;
  for (const auto& [v, e] : e_) {
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j >= o.e_.size() || o.e_[j].first != v || o.e_[j].second < e) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial m;
  size_t j = 0;
  for (const auto& [v, e] : e_) {
    if (j < o.e_.size() && o.e_[j].first < v) return std::nullopt;  // o has a variable we lack
    if (j < o.e_.size() && o.e_[j].first == v) {
      if (o.e_[j].second > e) return std::nullopt;
      if (e - o.e_[j].second > 0) m.e_.push_back({v, e - o.e_[j].second});
      ++j;
    } else {
      m.e_.push_back({v, e});
    }
  }
  if (j < o.e_.size()) return std::nullopt;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  size_t i = 0, j = 0;
  while (i < a.e_.size() || j < b.e_.size()) {
    if (j >= b.e_.size() || (i < a.e_.size() && a.e_[i].first < b.e_[j].first)) {
      m.e_.push_back(a.e_[i++]);
    } else if (i >= a.e_.size() || b.e_[j].first < a.e_[i].first) {
      m.e_.push_back(b.e_[j++]);
    } else {
      m.e_.push_back({a.e_[i].first, std::max(a.e_[i].second, b.e_[j].second)});
      ++i;
      ++j;
    }
  }
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    if (e_[i].first == o.e_[j].first) return false;
    if (e_[i].first < o.e_[j].first)
      ++i;
    else
      ++j;
  }
  return true;
}

int Monomial::compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::DegRevLex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // last (highest-index) variable with differing exponent: smaller exponent wins
    auto ia = a.e_.rbegin();
    auto ib = b.e_.rbegin();
    while (ia != a.e_.rend() || ib != b.e_.rend()) {
      if (ib == b.e_.rend()) return -1;  // a has extra high-index var: a - b > 0 there, a smaller
      if (ia == a.e_.rend()) return 1;
      if (ia->first > ib->first) return -1;
      if (ia->first < ib->first) return 1;
      if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
      ++ia;
      ++ib;
    }
    return 0;
  }
  // lex, variable 0 largest: first (lowest-index) differing exponent, larger wins
  auto ia = a.e_.begin();
  auto ib = b.e_.begin();
  while (ia != a.e_.end() || ib != b.e_.end()) {
    if (ib == b.e_.end()) return 1;
    if (ia == a.e_.end()) return -1;
    if (ia->first < ib->first) return 1;
    if (ia->first > ib->first) return -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  return 0;
}

Polynomial Polynomial::constant(std::shared_ptr<const VarSet> vars, const Rational& c, MonomialOrder order) {
  Polynomial p(std::move(vars), order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(std::shared_ptr<const VarSet> vars, int v, MonomialOrder order) {
  if (v < 0 || v >= vars->size()) throw IndexOutOfRange("Polynomial::variable: index out of range");
  Polynomial p(std::move(vars), order);
  p.terms_.push_back({Monomial::variable(v), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::shared_ptr<const VarSet> vars, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(std::move(vars), order);
  std::stable_sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return Monomial::compare(a.first, b.first, order) > 0;
  });
  for (auto& t : terms) {
    if (t.second.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  if (order_ == MonomialOrder::DegRevLex) return terms_.front().first.degree();
  int d = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    d = std::max(d, m.degree());
  }
  return d;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
  return terms_.front().first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
  return terms_.front().second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!vars_ || !o.vars_) throw MixedVarSets("polynomial without a variable set");
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw MixedVarSets("operands over different variable sets");
  if (order_ != o.order_) throw MixedVarSets("operands under different monomial orders");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(vars_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.push_back({m, -c});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial p(vars_, order_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i >= terms_.size())
      cmp = -1;
    else if (j >= o.terms_.size())
      cmp = 1;
    else
      cmp = Monomial::compare(terms_[i].first, o.terms_[j].first, order_);
    if (cmp > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) p.terms_.push_back({terms_[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) prod.push_back({ma * mb, ca * cb});
  return from_terms(vars_, std::move(prod), order_);
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c.is_zero()) return Polynomial(vars_, order_);
  Polynomial p(vars_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& [m, k] : terms_) p.terms_.push_back({m, k * c});
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (order_ == o.order_) return terms_ == o.terms_;
  return terms_ == o.with_order(order_).terms_;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(vars_, terms_, order);
}

Polynomial Polynomial::map_variables(std::shared_ptr<const VarSet> target, const std::vector<int>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (const auto& [v, e] : m.entries()) {
      if (v >= static_cast<int>(var_map.size()) || var_map[v] < 0 || var_map[v] >= target->size())
        throw MixedVarSets("map_variables: incomplete variable map");
      nm = nm * Monomial::variable(var_map[v], e);
    }
    out.push_back({std::move(nm), c});
  }
  return from_terms(std::move(target), std::move(out), order_);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

Polynomial Polynomial::normalized_sign() const {
  if (terms_.empty() || leading_coefficient().sign() > 0) return *this;
  return -*this;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return Rational(0);
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (m.is_one()) {
      os << a.to_string();
      continue;
    }
    bool printed = false;
    if (!a.is_one()) {
      os << a.to_string();
      printed = true;
    }
    for (const auto& [v, e] : m.entries()) {
      if (printed) os << "*";
      os << vars_->name(v);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace lyc
