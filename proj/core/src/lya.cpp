#include "lycoact/lya.hpp"

#include <sstream>

namespace lyc {

namespace {

void check_range(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    std::ostringstream os;
    os << what << " index " << v + 1 << " out of range [1.." << n << "]";
    throw IndexOutOfRange(os.str(), {v + 1});
  }
}

}  // namespace

LYAlgebra::LYAlgebra(int dim, SparseTau tau, SparseOmega omega, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (dim <= 0) throw InvalidAlgebra("dimension must be positive");
  if (!labels_.empty() && labels_.size() != static_cast<size_t>(dim)) throw InvalidAlgebra("label count mismatch");
  for (auto& [k, c] : tau) {
    check_range(k[0], dim, "tau i");
    check_range(k[1], dim, "tau j");
    check_range(k[2], dim, "tau s");
    if (!c.is_zero()) tau_.emplace(k, c);
  }
  for (auto& [k, c] : omega) {
    check_range(k[0], dim, "omega i");
    check_range(k[1], dim, "omega j");
    check_range(k[2], dim, "omega k");
    check_range(k[3], dim, "omega s");
    if (!c.is_zero()) omega_.emplace(k, c);
  }
}

std::string LYAlgebra::label(int i) const {
  if (!labels_.empty()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

Rational LYAlgebra::tau_at(int i, int j, int s) const {
  auto it = tau_.find({i, j, s});
  return it == tau_.end() ? Rational(0) : it->second;
}

Rational LYAlgebra::omega_at(int i, int j, int k, int s) const {
  auto it = omega_.find({i, j, k, s});
  return it == omega_.end() ? Rational(0) : it->second;
}

QVector LYAlgebra::bracket(const QVector& x, const QVector& y) const {
  QVector r(dim_);
  for (const auto& [k, c] : tau_) {
    if (x[k[0]].is_zero() || y[k[1]].is_zero()) continue;
    r[k[2]] += c * x[k[0]] * y[k[1]];
  }
  return r;
}

QVector LYAlgebra::tribracket(const QVector& x, const QVector& y, const QVector& z) const {
  QVector r(dim_);
  for (const auto& [k, c] : omega_) {
    if (x[k[0]].is_zero() || y[k[1]].is_zero() || z[k[2]].is_zero()) continue;
    r[k[3]] += c * x[k[0]] * y[k[1]] * z[k[2]];
  }
  return r;
}

QVector LYAlgebra::basis_vector(int i) const {
  QVector v(dim_);
  v[i] = 1;
  return v;
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

AxiomReport validate_lya(const LYAlgebra& L) {
  const int n = L.dim();
  AxiomReport rep;
  auto e = [&](int i) { return L.basis_vector(i); };

  {
    AxiomCheck c{"LY1", true, {}};
    for (int i = 0; i < n && c.passed; ++i)
      for (int j = 0; j < n && c.passed; ++j)
        for (int s = 0; s < n; ++s)
          if (L.tau_at(i, j, s) + L.tau_at(j, i, s) != Rational(0)) {
            c = {"LY1", false, {i, j}};
            break;
          }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"LY2", true, {}};
    for (int i = 0; i < n && c.passed; ++i)
      for (int j = 0; j < n && c.passed; ++j)
        for (int k = 0; k < n && c.passed; ++k)
          for (int s = 0; s < n; ++s)
            if (L.omega_at(i, j, k, s) + L.omega_at(j, i, k, s) != Rational(0)) {
              c = {"LY2", false, {i, j, k}};
              break;
            }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"LY3", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n; ++d) {
          QVector s(n);
          const int cyc[3][3] = {{a, b, d}, {b, d, a}, {d, a, b}};
          for (const auto& t : cyc) {
            s = vector_add(s, L.bracket(L.bracket(e(t[0]), e(t[1])), e(t[2])));
            s = vector_add(s, L.tribracket(e(t[0]), e(t[1]), e(t[2])));
          }
          if (!vector_is_zero(s)) {
            c = {"LY3", false, {a, b, d}};
            break;
          }
        }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"LY4", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n && c.passed; ++d)
          for (int f = 0; f < n; ++f) {
            QVector s(n);
            const int cyc[3][3] = {{a, b, d}, {b, d, a}, {d, a, b}};
            for (const auto& t : cyc) s = vector_add(s, L.tribracket(L.bracket(e(t[0]), e(t[1])), e(t[2]), e(f)));
            if (!vector_is_zero(s)) {
              c = {"LY4", false, {a, b, d, f}};
              break;
            }
          }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"LY5", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n && c.passed; ++d)
          for (int f = 0; f < n; ++f) {
            QVector lhs = L.tribracket(e(a), e(b), L.bracket(e(d), e(f)));
            QVector rhs = vector_add(L.bracket(L.tribracket(e(a), e(b), e(d)), e(f)),
                                     L.bracket(e(d), L.tribracket(e(a), e(b), e(f))));
            if (!vector_is_zero(vector_sub(lhs, rhs))) {
              c = {"LY5", false, {a, b, d, f}};
              break;
            }
          }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"LY6", true, {}};
    for (int a = 0; a < n && c.passed; ++a)
      for (int b = 0; b < n && c.passed; ++b)
        for (int d = 0; d < n && c.passed; ++d)
          for (int f = 0; f < n && c.passed; ++f)
            for (int g = 0; g < n; ++g) {
              QVector lhs = L.tribracket(e(a), e(b), L.tribracket(e(d), e(f), e(g)));
              QVector rhs = L.tribracket(L.tribracket(e(a), e(b), e(d)), e(f), e(g));
              rhs = vector_add(rhs, L.tribracket(e(d), L.tribracket(e(a), e(b), e(f)), e(g)));
              rhs = vector_add(rhs, L.tribracket(e(d), e(f), L.tribracket(e(a), e(b), e(g))));
              if (!vector_is_zero(vector_sub(lhs, rhs))) {
                c = {"LY6", false, {a, b, d, f, g}};
                break;
              }
            }
    rep.checks.push_back(c);
  }
  return rep;
}

namespace {

// x*y for a sparse bilinear product given by constants.
QVector apply_prod(const SparseTau& prod, int n, const QVector& x, const QVector& y) {
  QVector r(n);
  for (const auto& [k, c] : prod) {
    if (x[k[0]].is_zero() || y[k[1]].is_zero()) continue;
    r[k[2]] += c * x[k[0]] * y[k[1]];
  }
  return r;
}

QVector unit_vec(int n, int i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

void insert_nonzero3(SparseTau& m, Idx3 k, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = m[k];
  slot += c;
  if (slot.is_zero()) m.erase(k);
}

}  // namespace

LYAlgebra from_lie(const SparseTau& bracket, int n) {
  for (const auto& [k, c] : bracket) {
    (void)c;
    check_range(k[0], n, "bracket i");
    check_range(k[1], n, "bracket j");
    check_range(k[2], n, "bracket s");
  }
  auto b = [&](const QVector& x, const QVector& y) { return apply_prod(bracket, n, x, y); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!vector_is_zero(vector_add(b(unit_vec(n, i), unit_vec(n, j)), b(unit_vec(n, j), unit_vec(n, i)))))
        throw NotALieAlgebra("bracket not antisymmetric", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector s = b(b(unit_vec(n, i), unit_vec(n, j)), unit_vec(n, k));
        s = vector_add(s, b(b(unit_vec(n, j), unit_vec(n, k)), unit_vec(n, i)));
        s = vector_add(s, b(b(unit_vec(n, k), unit_vec(n, i)), unit_vec(n, j)));
        if (!vector_is_zero(s)) throw NotALieAlgebra("Jacobi identity fails", {i, j, k});
      }

  SparseTau tau;
  for (const auto& [k, c] : bracket)
    if (!c.is_zero()) tau[k] = c;
  SparseOmega omega;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector v = b(b(unit_vec(n, i), unit_vec(n, j)), unit_vec(n, k));
        for (int s = 0; s < n; ++s)
          if (!v[s].is_zero()) omega[{i, j, k, s}] = v[s];
      }
  return LYAlgebra(n, std::move(tau), std::move(omega));
}

LYAlgebra from_leibniz(const SparseTau& prod, int n) {
  for (const auto& [k, c] : prod) {
    (void)c;
    check_range(k[0], n, "prod i");
    check_range(k[1], n, "prod j");
    check_range(k[2], n, "prod s");
  }
  auto p = [&](const QVector& x, const QVector& y) { return apply_prod(prod, n, x, y); };
  // left Leibniz identity x(yz) = (xy)z + y(xz)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector lhs = p(unit_vec(n, i), p(unit_vec(n, j), unit_vec(n, k)));
        QVector rhs = vector_add(p(p(unit_vec(n, i), unit_vec(n, j)), unit_vec(n, k)),
                                 p(unit_vec(n, j), p(unit_vec(n, i), unit_vec(n, k))));
        if (!vector_is_zero(vector_sub(lhs, rhs))) throw NotALeibnizAlgebra("left Leibniz identity fails", {i, j, k});
      }

  SparseTau tau;
  for (const auto& [k, c] : prod) {
    insert_nonzero3(tau, {k[0], k[1], k[2]}, c);
    insert_nonzero3(tau, {k[1], k[0], k[2]}, -c);
  }
  SparseOmega omega;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector v = p(p(unit_vec(n, i), unit_vec(n, j)), unit_vec(n, k));
        for (int s = 0; s < n; ++s)
          if (!v[s].is_zero()) omega[{i, j, k, s}] = -v[s];
      }
  return LYAlgebra(n, std::move(tau), std::move(omega));
}

LYAlgebra from_malcev(const SparseTau& prod, int n) {
  for (const auto& [k, c] : prod) {
    (void)c;
    check_range(k[0], n, "prod i");
    check_range(k[1], n, "prod j");
    check_range(k[2], n, "prod s");
  }
  auto p = [&](const QVector& x, const QVector& y) { return apply_prod(prod, n, x, y); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!vector_is_zero(vector_add(p(unit_vec(n, i), unit_vec(n, j)), p(unit_vec(n, j), unit_vec(n, i)))))
        throw NotAMalcevAlgebra("product not antisymmetric", {i, j});
  // [[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        QVector lhs = p(p(x, y), p(x, z));
        QVector rhs = p(p(p(x, y), z), x);
        rhs = vector_add(rhs, p(p(p(y, z), x), x));
        rhs = vector_add(rhs, p(p(p(z, x), x), y));
        if (!vector_is_zero(vector_sub(lhs, rhs))) throw NotAMalcevAlgebra("Malcev identity fails", {i, j, k});
      }

  SparseTau tau;
  for (const auto& [k, c] : prod)
    if (!c.is_zero()) tau[k] = c;
  SparseOmega omega;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        QVector v = p(x, p(y, z));
        v = vector_sub(v, p(y, p(x, z)));
        v = vector_add(v, p(p(x, y), z));
        for (int s = 0; s < n; ++s)
          if (!v[s].is_zero()) omega[{i, j, k, s}] = v[s];
      }
  return LYAlgebra(n, std::move(tau), std::move(omega));
}

LYAlgebra heisenberg(int n) {
  if (n < 1) throw InvalidAlgebra("heisenberg: n must be >= 1");
  const int dim = 2 * n + 1;
  SparseTau tau;
  SparseOmega omega;
  // storage index 0 holds e_0; e_i sits at storage index i
  for (int i = 1; i <= n; ++i) {
    tau[{i, n + i, 0}] = 1;
    tau[{n + i, i, 0}] = -1;
    omega[{i, n + i, i, 0}] = 1;
    omega[{n + i, i, i, 0}] = -1;
    omega[{n + i, i, n + i, 0}] = -1;
    omega[{i, n + i, n + i, 0}] = 1;
  }
  std::vector<std::string> labels;
  for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  return LYAlgebra(dim, std::move(tau), std::move(omega), std::move(labels));
}

LYAlgebra abelian_lya(int n) { return LYAlgebra(n, {}, {}); }

CommAlgebra::CommAlgebra(int dim, SparseTau mult, QVector unit) : dim_(dim), unit_(std::move(unit)) {
  if (dim <= 0) throw InvalidAlgebra("CommAlgebra: dimension must be positive");
  if (unit_.size() != static_cast<size_t>(dim)) throw InvalidAlgebra("CommAlgebra: unit vector size mismatch");
  for (auto& [k, c] : mult) {
    check_range(k[0], dim, "mult a");
    check_range(k[1], dim, "mult b");
    check_range(k[2], dim, "mult c");
    if (!c.is_zero()) mult_.emplace(k, c);
  }
}

CommAlgebra CommAlgebra::field() { return CommAlgebra(1, {{{0, 0, 0}, Rational(1)}}, {Rational(1)}); }

QVector CommAlgebra::multiply(const QVector& a, const QVector& b) const {
  return apply_prod(mult_, dim_, a, b);
}

void CommAlgebra::validate() const {
  auto mult_at = [this](int a, int b, int c) {
    auto it = mult_.find({a, b, c});
    return it == mult_.end() ? Rational(0) : it->second;
  };
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        if (mult_at(a, b, c) != mult_at(b, a, c)) throw InvalidAlgebra("CommAlgebra: not commutative", {a, b});
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c) {
        QVector lhs = multiply(multiply(unit_vec(dim_, a), unit_vec(dim_, b)), unit_vec(dim_, c));
        QVector rhs = multiply(unit_vec(dim_, a), multiply(unit_vec(dim_, b), unit_vec(dim_, c)));
        if (!vector_is_zero(vector_sub(lhs, rhs))) throw InvalidAlgebra("CommAlgebra: not associative", {a, b, c});
      }
  for (int a = 0; a < dim_; ++a) {
    QVector ea = unit_vec(dim_, a);
    if (multiply(unit_, ea) != ea || multiply(ea, unit_) != ea)
      throw InvalidAlgebra("CommAlgebra: unit law fails", {a});
  }
}

LYAlgebra current_algebra(const LYAlgebra& L, const CommAlgebra& A) {
  A.validate();
  const int n = L.dim(), m = A.dim();
  auto idx = [m](int i, int p) { return i * m + p; };
  SparseTau tau;
  for (const auto& [lt, lc] : L.tau())
    for (const auto& [at, ac] : A.mult()) {
      Idx3 k{idx(lt[0], at[0]), idx(lt[1], at[1]), idx(lt[2], at[2])};
      tau[k] += lc * ac;
      if (tau[k].is_zero()) tau.erase(k);
    }
  SparseOmega omega;
  // a_p a_q a_r expanded once into coordinates of the triple product
  std::map<Idx3, QVector> triple;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        triple[{p, q, r}] = A.multiply(A.multiply(unit_vec(m, p), unit_vec(m, q)), unit_vec(m, r));
  for (const auto& [lt, lc] : L.omega())
    for (const auto& [akey, av] : triple)
      for (int c = 0; c < m; ++c) {
        if (av[c].is_zero()) continue;
        Idx4 k{idx(lt[0], akey[0]), idx(lt[1], akey[1]), idx(lt[2], akey[2]), idx(lt[3], c)};
        omega[k] += lc * av[c];
        if (omega[k].is_zero()) omega.erase(k);
      }
  return LYAlgebra(n * m, std::move(tau), std::move(omega));
}

QMatrix derived_subalgebra(const LYAlgebra& L) {
  const int n = L.dim();
  std::vector<QVector> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVector v = L.bracket(L.basis_vector(i), L.basis_vector(j));
      if (!vector_is_zero(v)) rows.push_back(v);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector v = L.tribracket(L.basis_vector(i), L.basis_vector(j), L.basis_vector(k));
        if (!vector_is_zero(v)) rows.push_back(v);
      }
  if (rows.empty()) return QMatrix(0, n);
  return QMatrix::from_rows(rows).row_space_basis();
}

LYLinearMap::LYLinearMap(int source_dim, int target_dim, QMatrix m)
    : source_dim_(source_dim), target_dim_(target_dim), m_(std::move(m)) {
  if (m_.rows() != target_dim_ || m_.cols() != source_dim_) throw InvalidAlgebra("LYLinearMap: shape mismatch");
}

std::optional<std::vector<int>> LYLinearMap::morphism_defect(const LYAlgebra& source, const LYAlgebra& target) const {
  const int n = source.dim();
  std::vector<QVector> im(n);
  for (int i = 0; i < n; ++i) im[i] = m_.apply(source.basis_vector(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVector lhs = target.bracket(im[i], im[j]);
      QVector rhs = m_.apply(source.bracket(source.basis_vector(i), source.basis_vector(j)));
      if (!vector_is_zero(vector_sub(lhs, rhs))) return std::vector<int>{i, j};
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector lhs = target.tribracket(im[i], im[j], im[k]);
        QVector rhs = m_.apply(source.tribracket(source.basis_vector(i), source.basis_vector(j), source.basis_vector(k)));
        if (!vector_is_zero(vector_sub(lhs, rhs))) return std::vector<int>{i, j, k};
      }
  return std::nullopt;
}

}  // namespace lyc
