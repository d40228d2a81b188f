#include "lycoact/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace lyc {

QMatrix::QMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols) throw std::invalid_argument("QMatrix: entry count mismatch");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (rows[r].size() != static_cast<size_t>(m.cols_)) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in +");
  QMatrix m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in -");
  QMatrix m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in *");
  QMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
  return m;
}

QMatrix QMatrix::operator-() const { return *this * Rational(-1); }

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != static_cast<size_t>(cols_)) throw std::invalid_argument("QMatrix::apply: size mismatch");
  QVector r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMatrix QMatrix::kronecker(const QMatrix& o) const {
  QMatrix m(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q)
          m.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
    }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

QVector QMatrix::row(int r) const {
  QVector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

QVector QMatrix::col(int c) const {
  QVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Echelon QMatrix::rref() const {
  Echelon e{*this, {}, 0};
  QMatrix& m = e.reduced;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    Rational inv = m.at(lead, c).inverse();
    for (int j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c);
      for (int j = 0; j < cols_; ++j) m.at(r, j) -= f * m.at(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.rank = static_cast<int>(e.pivots.size());
  return e;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix::det: not square");
  QMatrix m = *this;
  Rational d = 1;
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = m.at(c, c).inverse();
    for (int r = c + 1; r < rows_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

int QMatrix::rank() const { return rref().rank; }

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  QMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  Echelon e = aug.rref();
  if (e.rank != rows_) return std::nullopt;
  for (int k = 0; k < e.rank; ++k)
    if (e.pivots[k] != k) return std::nullopt;
  QMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = e.reduced.at(i, cols_ + j);
  return inv;
}

QMatrix QMatrix::kernel() const {
  Echelon e = rref();
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < cols_; ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  QMatrix k(cols_, static_cast<int>(free_cols.size()));
  for (size_t fc = 0; fc < free_cols.size(); ++fc) {
    int c = free_cols[fc];
    k.at(c, static_cast<int>(fc)) = 1;
    for (size_t pi = 0; pi < e.pivots.size(); ++pi) k.at(e.pivots[pi], static_cast<int>(fc)) = -e.reduced.at(static_cast<int>(pi), c);
  }
  return k;
}

std::optional<QVector> QMatrix::solve(const QVector& b) const {
  if (b.size() != static_cast<size_t>(rows_)) throw std::invalid_argument("QMatrix::solve: size mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  Echelon e = aug.rref();
  for (int pc : e.pivots)
    if (pc == cols_) return std::nullopt;  // inconsistent
  QVector x(cols_);
  for (size_t pi = 0; pi < e.pivots.size(); ++pi) x[e.pivots[pi]] = e.reduced.at(static_cast<int>(pi), cols_);
  return x;
}

QMatrix QMatrix::row_space_basis() const {
  Echelon e = rref();
  QMatrix b(e.rank, cols_);
  for (int r = 0; r < e.rank; ++r)
    for (int c = 0; c < cols_; ++c) b.at(r, c) = e.reduced.at(r, c);
  return b;
}

bool QMatrix::row_space_contains(const QVector& v) const {
  if (v.size() != static_cast<size_t>(cols_)) throw std::invalid_argument("row_space_contains: size mismatch");
  return transpose().solve(v).has_value();
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

QVector vector_add(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector vector_sub(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector vector_scale(const Rational& c, const QVector& a) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vector_is_zero(const QVector& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace lyc
