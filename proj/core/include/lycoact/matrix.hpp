#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lycoact/rational.hpp"

namespace lyc {

using QVector = std::vector<Rational>;

class QMatrix;

/// Reduced row echelon form; pivots are the pivot column indices.
struct Echelon;

/// Dense matrix over the rationals with exact Gaussian elimination.
/// Dimensions here are tiny; all reductions are deterministic.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  QMatrix(int rows, int cols, std::vector<Rational> entries);

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& s) const;
  QMatrix operator-() const;
  bool operator==(const QMatrix& o) const = default;

  QVector apply(const QVector& v) const;
  QMatrix transpose() const;
  QMatrix kronecker(const QMatrix& o) const;
  bool is_zero() const;

  QVector row(int r) const;
  QVector col(int c) const;

  Rational det() const;
  int rank() const;
  std::optional<QMatrix> inverse() const;

  Echelon rref() const;

  /// Columns form a basis of the right kernel (empty matrix if trivial).
  QMatrix kernel() const;

  /// A solution x of this*x = b, if one exists.
  std::optional<QVector> solve(const QVector& b) const;

  /// Nonzero rows of the rref: a canonical basis of the row space.
  QMatrix row_space_basis() const;
  /// Whether v lies in the span of the rows.
  bool row_space_contains(const QVector& v) const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct Echelon {
  QMatrix reduced;
  std::vector<int> pivots;
  int rank = 0;
};

QVector vector_add(const QVector& a, const QVector& b);
QVector vector_sub(const QVector& a, const QVector& b);
QVector vector_scale(const Rational& c, const QVector& a);
bool vector_is_zero(const QVector& a);

}  // namespace lyc
