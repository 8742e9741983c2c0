#pragma once

#include <optional>
#include <vector>

#include "extdim/scalar.hpp"

namespace extdim {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& s, const Vec& x);  // y += s*x

/// Dense row-major matrix over exact scalars.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}
  static Mat identity(int n);
  static Mat from_cols(const std::vector<Vec>& cols, int rows);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);
  Mat transpose() const;
  bool is_zero() const;
  Mat block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Mat& m);
  Mat cols_subset(const std::vector<int>& idx) const;
  /// Maps every entry into the field (no-op over Q).
  Mat in_field(const FieldSpec& f) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat diag(const Mat& a, const Mat& b);

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat& operator+=(const Mat& o);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> d_;
};

struct Rref {
  Mat m;
  std::vector<int> pivots;  // pivot column of row k
};

Rref rref(Mat m);
int rank(const Mat& m);

/// Kernel basis as columns. free[k] is the free column owning basis vector k:
/// basis(free[j], k) = [j == k], so coordinates of any kernel vector are read
/// off at the free positions.
struct Nullspace {
  Mat basis;
  std::vector<int> free;
};
Nullspace nullspace(const Mat& m);

std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);

/// Indices of a maximal independent subset of columns (greedy, left to right).
std::vector<int> independent_columns(const Mat& m);
/// Column basis of the column space.
Mat column_space(const Mat& m);
/// Columns extending the column space of `sub` (in k^n) to all of k^n,
/// chosen among standard basis vectors.
Mat complement(const Mat& sub, int n);
/// Basis of the intersection of two column spaces in k^n.
Mat intersect(const Mat& a, const Mat& b);

/// Incremental row-echelon basis used for span membership and coordinates.
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}
  /// Adds v if independent; returns true when added.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  int size() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  Vec reduce(Vec v) const;
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
};

}  // namespace extdim
