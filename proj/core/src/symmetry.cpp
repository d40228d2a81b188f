#include "lycoact/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace lyc {

DirectAutoResult is_automorphism_direct(const LYAlgebra& L, const QMatrix& M) {
  const int n = L.dim();
  if (M.rows() != n || M.cols() != n) throw InputError("is_automorphism_direct: matrix shape mismatch");
  DirectAutoResult res;
  if (M.det().is_zero()) {
    res.reason = "not invertible";
    return res;
  }
  std::vector<QVector> im(n);
  for (int i = 0; i < n; ++i) im[i] = M.apply(L.basis_vector(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVector lhs = L.bracket(im[i], im[j]);
      QVector rhs = M.apply(L.bracket(L.basis_vector(i), L.basis_vector(j)));
      if (!vector_is_zero(vector_sub(lhs, rhs))) {
        res.reason = "binary bracket";
        res.witness = {i, j};
        return res;
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector lhs = L.tribracket(im[i], im[j], im[k]);
        QVector rhs = M.apply(L.tribracket(L.basis_vector(i), L.basis_vector(j), L.basis_vector(k)));
        if (!vector_is_zero(vector_sub(lhs, rhs))) {
          res.reason = "ternary bracket";
          res.witness = {i, j, k};
          return res;
        }
      }
  res.is_automorphism = true;
  return res;
}

std::optional<std::string> point_violation(const Presentation& pres, const QMatrix& M) {
  const int n = pres.dim_l(), nk = pres.dim_k();
  if (M.rows() != n || M.cols() != nk) throw InputError("point_violation: matrix shape mismatch");
  std::vector<Rational> images(static_cast<size_t>(n) * nk);
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < nk; ++i) images[pres.var(s, i)] = M.at(s, i);
  RationalRing ring;
  const auto names = pres.generator_names();
  size_t k = 0;
  for (const auto& [key, p] : pres.pq().P) {
    (void)key;
    if (!p.evaluate(ring, images).is_zero()) return names[k];
    ++k;
  }
  for (const auto& [key, q] : pres.pq().Q) {
    (void)key;
    if (!q.evaluate(ring, images).is_zero()) return names[k];
    ++k;
  }
  return std::nullopt;
}

ScalarPoint point_from_matrix(const Presentation& pres, const QMatrix& M) {
  if (auto bad = point_violation(pres, M)) throw RelationViolated("matrix is not a point", *bad);
  return ScalarPoint(M);
}

LYLinearMap zeta(const Presentation& pres, const ScalarPoint& p) {
  return LYLinearMap(pres.dim_k(), pres.dim_l(), p.matrix());
}

ScalarPoint convolution(const Presentation& pres, const ScalarPoint& p1, const ScalarPoint& p2) {
  return point_from_matrix(pres, p1.matrix() * p2.matrix());
}

AutoEquivalenceReport automorphism_equivalence_check(const Presentation& square_pres, const QMatrix& M) {
  AutoEquivalenceReport rep;
  rep.direct = is_automorphism_direct(square_pres.L(), M).is_automorphism;
  rep.is_point = !point_violation(square_pres, M).has_value();
  auto inv = M.inverse();
  rep.invertible = inv.has_value();
  rep.inverse_is_point = inv && !point_violation(square_pres, *inv).has_value();
  return rep;
}

AutoEquivalenceReport automorphism_equivalence_check(const LYAlgebra& L, const QMatrix& M) {
  return automorphism_equivalence_check(Presentation::square(L), M);
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InputError("FiniteAbelianGroup: empty order list");
  size_ = 1;
  for (int d : orders_) {
    if (d < 1) throw InputError("FiniteAbelianGroup: orders must be >= 1");
    size_ *= d;
  }
}

std::shared_ptr<const FiniteAbelianGroup> FiniteAbelianGroup::make(std::vector<int> orders) {
  return std::make_shared<const FiniteAbelianGroup>(std::move(orders));
}

std::shared_ptr<const FiniteAbelianGroup> FiniteAbelianGroup::parse(const std::string& spec) {
  std::vector<int> orders;
  std::string cur;
  for (char c : spec + "x") {
    if (c == 'x' || c == 'X') {
      if (cur.empty()) throw InputError("FiniteAbelianGroup::parse: bad spec '" + spec + "'");
      orders.push_back(std::stoi(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      cur.push_back(c);
    } else {
      throw InputError("FiniteAbelianGroup::parse: bad character in '" + spec + "'");
    }
  }
  return make(std::move(orders));
}

int FiniteAbelianGroup::add(int a, int b) const {
  std::vector<int> ea = exponents(a), eb = exponents(b);
  for (size_t i = 0; i < orders_.size(); ++i) ea[i] = (ea[i] + eb[i]) % orders_[i];
  return from_exponents(ea);
}

int FiniteAbelianGroup::negate(int a) const {
  std::vector<int> e = exponents(a);
  for (size_t i = 0; i < orders_.size(); ++i) e[i] = (orders_[i] - e[i]) % orders_[i];
  return from_exponents(e);
}

std::vector<int> FiniteAbelianGroup::exponents(int g) const {
  std::vector<int> e(orders_.size());
  for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
    e[i] = g % orders_[i];
    g /= orders_[i];
  }
  return e;
}

int FiniteAbelianGroup::from_exponents(const std::vector<int>& e) const {
  if (e.size() != orders_.size()) throw InputError("FiniteAbelianGroup: exponent tuple size mismatch");
  int g = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    int x = e[i] % orders_[i];
    if (x < 0) x += orders_[i];
    g = g * orders_[i] + x;
  }
  return g;
}

std::string FiniteAbelianGroup::element_name(int g) const {
  std::vector<int> e = exponents(g);
  if (e.size() == 1) return std::to_string(e[0]);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

GroupAlgebraElement GroupAlgebraElement::unit(std::shared_ptr<const FiniteAbelianGroup> G, int element, Rational c) {
  GroupAlgebraElement e(std::move(G));
  e.coeff_[element] = std::move(c);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(g_);
  r.coeff_ = vector_add(coeff_, o.coeff_);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(g_);
  r.coeff_ = vector_sub(coeff_, o.coeff_);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(g_);
  for (int a = 0; a < g_->size(); ++a) {
    if (coeff_[a].is_zero()) continue;
    for (int b = 0; b < g_->size(); ++b) {
      if (o.coeff_[b].is_zero()) continue;
      r.coeff_[g_->add(a, b)] += coeff_[a] * o.coeff_[b];
    }
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& c) const {
  GroupAlgebraElement r(g_);
  r.coeff_ = vector_scale(c, coeff_);
  return r;
}

std::string GroupAlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < g_->size(); ++g) {
    if (coeff_[g].is_zero()) continue;
    if (!first) os << " + ";
    os << coeff_[g].to_string() << "*[" << g_->element_name(g) << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

QMatrix GroupAlgebraPoint::component_matrix(int g) const {
  QMatrix c(n_, n_);
  for (int s = 0; s < n_; ++s)
    for (int i = 0; i < n_; ++i) c.at(s, i) = image(s, i).coeff(g);
  return c;
}

GroupAlgebraPoint verify_group_point(const Presentation& pres, std::shared_ptr<const FiniteAbelianGroup> G,
                                     std::vector<GroupAlgebraElement> images) {
  if (!pres.is_square()) throw InputError("verify_group_point: presentation must be square");
  const int n = pres.dim_l();
  if (images.size() != static_cast<size_t>(n) * n) throw InputError("verify_group_point: wrong image count");

  GroupAlgebraRing ring{G};
  std::vector<GroupAlgebraElement> by_var(images.size(), GroupAlgebraElement(G));
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n; ++i) by_var[pres.var(s, i)] = images[s * n + i];

  auto gens = pres.generator_list();
  auto names = pres.generator_names();
  for (size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].evaluate(ring, by_var).is_zero())
      throw RelationViolated("group-algebra point does not satisfy the ideal", names[k]);

  // Delta/epsilon compatibility: the component matrices form a complete
  // system of orthogonal idempotents.
  std::vector<QMatrix> comp;
  comp.reserve(G->size());
  {
    QMatrix sum(n, n);
    for (int g = 0; g < G->size(); ++g) {
      QMatrix c(n, n);
      for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i) c.at(s, i) = images[s * n + i].coeff(g);
      sum = sum + c;
      comp.push_back(std::move(c));
    }
    if (!(sum - QMatrix::identity(n)).is_zero())
      throw RelationViolated("epsilon compatibility fails", "eps");
  }
  for (int g = 0; g < G->size(); ++g)
    for (int h = 0; h < G->size(); ++h) {
      QMatrix prod = comp[g] * comp[h];
      QMatrix expect = (g == h) ? comp[g] : QMatrix(n, n);
      if (!(prod - expect).is_zero())
        throw RelationViolated("Delta compatibility fails", "Delta[" + G->element_name(g) + "," + G->element_name(h) + "]");
    }

  return GroupAlgebraPoint(std::move(G), n, std::move(images));
}

Grading Grading::diagonal(std::shared_ptr<const FiniteAbelianGroup> G, std::vector<int> assignment) {
  Grading g;
  g.g_ = std::move(G);
  for (int e : assignment)
    if (e < 0 || e >= g.g_->size()) throw InputError("Grading::diagonal: element out of range");
  // components derived from the assignment, sorted by element
  std::map<int, std::vector<QVector>> comp;
  for (size_t i = 0; i < assignment.size(); ++i) {
    QVector v(assignment.size());
    v[i] = 1;
    comp[assignment[i]].push_back(std::move(v));
  }
  for (auto& [elem, rows] : comp) g.components_.push_back({elem, QMatrix::from_rows(rows)});
  g.diagonal_ = std::move(assignment);
  return g;
}

Grading Grading::general(std::shared_ptr<const FiniteAbelianGroup> G, std::vector<std::pair<int, QMatrix>> components) {
  Grading g;
  g.g_ = std::move(G);
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [elem, m] : components) {
    if (elem < 0 || elem >= g.g_->size()) throw InputError("Grading::general: element out of range");
    if (m.rows() > 0) g.components_.push_back({elem, m});
  }
  g.components_.shrink_to_fit();
  // recognise diagonal form: every component row-reduces to basis vectors
  const int n = g.components_.empty() ? 0 : g.components_[0].second.cols();
  std::vector<int> assignment(n, -1);
  bool diag = n > 0;
  int covered = 0;
  for (auto& [elem, m] : g.components_) {
    QMatrix r = m.row_space_basis();
    for (int row = 0; row < r.rows() && diag; ++row) {
      int hot = -1;
      for (int c = 0; c < r.cols(); ++c) {
        if (r.at(row, c).is_zero()) continue;
        if (hot >= 0 || !r.at(row, c).is_one()) {
          hot = -2;
          break;
        }
        hot = c;
      }
      if (hot < 0 || assignment[hot] != -1) {
        diag = false;
      } else {
        assignment[hot] = elem;
        ++covered;
      }
    }
  }
  if (diag && covered == n) g.diagonal_ = std::move(assignment);
  return g;
}

const std::vector<int>& Grading::assignment() const {
  if (!diagonal_) throw InputError("Grading::assignment: not a diagonal grading");
  return *diagonal_;
}

bool Grading::operator==(const Grading& o) const {
  if (!(*g_ == *o.g_)) return false;
  if (diagonal_.has_value() && o.diagonal_.has_value()) return *diagonal_ == *o.diagonal_;
  if (components_.size() != o.components_.size()) return false;
  for (size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].first != o.components_[k].first) return false;
    if (!(components_[k].second.row_space_basis() == o.components_[k].second.row_space_basis())) return false;
  }
  return true;
}

GradingCheckResult validate_grading(const LYAlgebra& L, const Grading& g) {
  const int n = L.dim();
  GradingCheckResult res;
  const auto& G = *g.group();

  if (g.is_diagonal()) {
    // basis-homogeneous case: closure reads off the structure constants,
    // witnesses are basis index tuples
    const auto& assign = g.assignment();
    if (static_cast<int>(assign.size()) != n) {
      res.reason = "assignment length mismatch";
      return res;
    }
    for (const auto& [key, c] : L.tau()) {
      (void)c;
      if (G.add(assign[key[0]], assign[key[1]]) != assign[key[2]]) {
        res.reason = "binary closure fails";
        res.witness = {key[0], key[1]};
        return res;
      }
    }
    for (const auto& [key, c] : L.omega()) {
      (void)c;
      if (G.add(G.add(assign[key[0]], assign[key[1]]), assign[key[2]]) != assign[key[3]]) {
        res.reason = "ternary closure fails";
        res.witness = {key[0], key[1], key[2]};
        return res;
      }
    }
    res.valid = true;
    return res;
  }

  // direct sum
  int total = 0;
  std::vector<QVector> all_rows;
  for (const auto& [elem, m] : g.components()) {
    (void)elem;
    if (m.cols() != n) {
      res.reason = "component has wrong ambient dimension";
      return res;
    }
    if (m.rank() != m.rows()) {
      res.reason = "component basis not full rank";
      return res;
    }
    total += m.rows();
    for (int r = 0; r < m.rows(); ++r) all_rows.push_back(m.row(r));
  }
  if (total != n || QMatrix::from_rows(all_rows).rank() != n) {
    res.reason = "components do not decompose L";
    return res;
  }

  auto member = [&](const QVector& v, int elem) {
    if (vector_is_zero(v)) return true;
    for (const auto& [e2, m] : g.components())
      if (e2 == elem) return m.row_space_contains(v);
    return false;
  };

  for (const auto& [ea, ma] : g.components())
    for (const auto& [eb, mb] : g.components())
      for (int ra = 0; ra < ma.rows(); ++ra)
        for (int rb = 0; rb < mb.rows(); ++rb) {
          QVector v = L.bracket(ma.row(ra), mb.row(rb));
          if (!member(v, G.add(ea, eb))) {
            res.reason = "binary closure fails";
            res.witness = {ea, eb};
            return res;
          }
        }
  for (const auto& [ea, ma] : g.components())
    for (const auto& [eb, mb] : g.components())
      for (const auto& [ec, mc] : g.components())
        for (int ra = 0; ra < ma.rows(); ++ra)
          for (int rb = 0; rb < mb.rows(); ++rb)
            for (int rc = 0; rc < mc.rows(); ++rc) {
              QVector v = L.tribracket(ma.row(ra), mb.row(rb), mc.row(rc));
              if (!member(v, G.add(G.add(ea, eb), ec))) {
                res.reason = "ternary closure fails";
                res.witness = {ea, eb, ec};
                return res;
              }
            }
  res.valid = true;
  return res;
}

namespace {

// closure constraints whose indices are all < k, for pruning the search
bool prefix_consistent(const LYAlgebra& L, const FiniteAbelianGroup& G, const std::vector<int>& assign, int k) {
  for (const auto& [key, c] : L.tau()) {
    (void)c;
    if (key[0] < k && key[1] < k && key[2] < k)
      if (G.add(assign[key[0]], assign[key[1]]) != assign[key[2]]) return false;
  }
  for (const auto& [key, c] : L.omega()) {
    (void)c;
    if (key[0] < k && key[1] < k && key[2] < k && key[3] < k)
      if (G.add(G.add(assign[key[0]], assign[key[1]]), assign[key[2]]) != assign[key[3]]) return false;
  }
  return true;
}

}  // namespace

std::vector<Grading> enumerate_diagonal_gradings(const LYAlgebra& L, std::shared_ptr<const FiniteAbelianGroup> G) {
  const int n = L.dim();
  std::vector<Grading> out;
  std::vector<int> assign(n, 0);
  // depth-first in lexicographic assignment order
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      Grading g = Grading::diagonal(G, assign);
      if (validate_grading(L, g).valid) out.push_back(std::move(g));
      return;
    }
    for (int e = 0; e < G->size(); ++e) {
      assign[k] = e;
      if (prefix_consistent(L, *G, assign, k + 1)) rec(k + 1);
    }
    assign[k] = 0;
  };
  rec(0);
  return out;
}

GroupAlgebraPoint grading_to_point(const Presentation& pres, const Grading& grading) {
  if (!grading.is_diagonal()) throw InputError("grading_to_point: diagonal grading required");
  const int n = pres.dim_l();
  const auto& assign = grading.assignment();
  if (static_cast<int>(assign.size()) != n) throw InputError("grading_to_point: dimension mismatch");
  auto G = grading.group();
  std::vector<GroupAlgebraElement> images;
  images.reserve(static_cast<size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n; ++i)
      images.push_back(s == i ? GroupAlgebraElement::unit(G, assign[i]) : GroupAlgebraElement(G));
  return verify_group_point(pres, G, std::move(images));
}

Grading point_to_grading(const LYAlgebra& L, const GroupAlgebraPoint& theta) {
  const int n = L.dim();
  auto G = theta.group();
  std::vector<std::pair<int, QMatrix>> comps;
  int total = 0;
  std::vector<QVector> all_rows;
  for (int g = 0; g < G->size(); ++g) {
    // L_g = { v : C_g v = v }
    QMatrix cg = theta.component_matrix(g) - QMatrix::identity(n);
    QMatrix ker = cg.kernel();  // columns
    if (ker.cols() == 0) continue;
    QMatrix rows = ker.transpose().row_space_basis();
    total += rows.rows();
    for (int r = 0; r < rows.rows(); ++r) all_rows.push_back(rows.row(r));
    comps.push_back({g, std::move(rows)});
  }
  if (total != n || QMatrix::from_rows(all_rows).rank() != n)
    throw ComponentsDoNotSum("grading components do not decompose L");
  return Grading::general(std::move(G), std::move(comps));
}

GroupAlgebraPoint conjugate_point(const Presentation& pres, const GroupAlgebraPoint& theta, const ScalarPoint& u) {
  const int n = pres.dim_l();
  auto inv = u.matrix().inverse();
  if (!inv) throw NonInvertiblePoint("conjugate_point: u is not invertible");
  if (point_violation(pres, *inv)) throw NonInvertiblePoint("conjugate_point: inverse of u is not a point");
  auto G = theta.group();
  std::vector<GroupAlgebraElement> images(static_cast<size_t>(n) * n, GroupAlgebraElement(G));
  for (int g = 0; g < G->size(); ++g) {
    QMatrix cg = u.matrix() * theta.component_matrix(g) * *inv;
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < n; ++i)
        if (!cg.at(s, i).is_zero())
          images[s * n + i] = images[s * n + i] + GroupAlgebraElement::unit(G, g, cg.at(s, i));
  }
  return verify_group_point(pres, std::move(G), std::move(images));
}

}  // namespace lyc
