#include "extdim/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace extdim {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  if (s.is_zero()) return r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = s * v[i];
  return r;
}

void axpy(Vec& y, const Scalar& s, const Vec& x) {
  if (s.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, int rows) {
  Mat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.c_; ++j) m.set_col(j, cols[j]);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.r_; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vec Mat::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(int i) const {
  return Vec(d_.begin() + static_cast<long>(i) * c_, d_.begin() + static_cast<long>(i + 1) * c_);
}

void Mat::set_col(int j, const Vec& v) {
  assert(static_cast<int>(v.size()) == r_);
  for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : d_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  Mat b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(int r0, int c0, const Mat& m) {
  for (int i = 0; i < m.r_; ++i)
    for (int j = 0; j < m.c_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
  Mat m(r_, static_cast<int>(idx.size()));
  for (int j = 0; j < m.c_; ++j)
    for (int i = 0; i < r_; ++i) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Mat Mat::in_field(const FieldSpec& f) const {
  if (f.is_rational()) return *this;
  Mat m(*this);
  for (auto& x : m.d_) x = x.in_field(f);
  return m;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.c_ == 0) return b;
  if (b.c_ == 0) return a;
  if (a.r_ != b.r_) throw std::invalid_argument("hstack: row mismatch");
  Mat m(a.r_, a.c_ + b.c_);
  m.set_block(0, 0, a);
  m.set_block(0, a.c_, b);
  return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.r_ == 0 && a.c_ == 0) return b;
  if (b.r_ == 0 && b.c_ == 0) return a;
  if (a.c_ != b.c_) throw std::invalid_argument("vstack: column mismatch");
  Mat m(a.r_ + b.r_, a.c_);
  m.set_block(0, 0, a);
  m.set_block(a.r_, 0, b);
  return m;
}

Mat Mat::diag(const Mat& a, const Mat& b) {
  Mat m(a.r_ + b.r_, a.c_ + b.c_);
  m.set_block(0, 0, a);
  m.set_block(a.r_, a.c_, b);
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
  Mat m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Vec operator*(const Mat& a, const Vec& v) {
  Vec r(a.r_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat m(a);
  m += b;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (size_t i = 0; i < d_.size(); ++i)
    if (!o.d_[i].is_zero()) d_[i] += o.d_[i];
  return *this;
}

Mat operator-(const Mat& a, const Mat& b) { return a + Scalar(-1) * b; }

Mat operator*(const Scalar& s, const Mat& a) {
  Mat m(a.r_, a.c_);
  if (s.is_zero()) return m;
  for (size_t i = 0; i < a.d_.size(); ++i)
    if (!a.d_[i].is_zero()) m.d_[i] = s * a.d_[i];
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t i = 0; i < a.d_.size(); ++i)
    if (a.d_[i] != b.d_[i]) return false;
  return true;
}

Rref rref(Mat m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Nullspace nullspace(const Mat& m) {
  Rref r = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : r.pivots) is_piv[c] = true;
  Nullspace ns;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) ns.free.push_back(c);
  ns.basis = Mat(m.cols(), static_cast<int>(ns.free.size()));
  for (size_t k = 0; k < ns.free.size(); ++k) {
    int f = ns.free[k];
    ns.basis(f, static_cast<int>(k)) = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i)
      if (!r.m(static_cast<int>(i), f).is_zero()) ns.basis(r.pivots[i], static_cast<int>(k)) = -r.m(static_cast<int>(i), f);
  }
  return ns;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  Mat aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  Rref r = rref(std::move(aug));
  Mat x(a.cols(), b.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    if (r.pivots[i] >= a.cols()) return std::nullopt;
  for (size_t i = 0; i < r.pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.m(static_cast<int>(i), a.cols() + j);
  return x;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat bm(static_cast<int>(b.size()), 1);
  bm.set_col(0, b);
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Mat::identity(a.rows()));
}

std::vector<int> independent_columns(const Mat& m) { return rref(m).pivots; }

Mat column_space(const Mat& m) { return m.cols_subset(independent_columns(m)); }

Mat complement(const Mat& sub, int n) {
  Mat all = Mat::hstack(column_space(sub), Mat::identity(n));
  int k = rank(sub);
  std::vector<int> piv = independent_columns(all);
  std::vector<int> extra;
  for (int c : piv)
    if (c >= k) extra.push_back(c);
  return all.cols_subset(extra);
}

Mat intersect(const Mat& a, const Mat& b) {
  if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0);
  Mat ab = Mat::hstack(a, Scalar(-1) * b);
  Nullspace ns = nullspace(ab);
  Mat top = ns.basis.block(0, 0, a.cols(), ns.basis.cols());
  return column_space(a * top);
}

Vec SpanBuilder::reduce(Vec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[piv_[k]];
    if (!c.is_zero()) axpy(v, -c, rows_[k]);
  }
  return v;
}

bool SpanBuilder::add(const Vec& v) {
  Vec r = reduce(v);
  int p = -1;
  for (int i = 0; i < dim_; ++i)
    if (!r[i].is_zero()) {
      p = i;
      break;
    }
  if (p < 0) return false;
  Scalar inv = r[p].inverse();
  r = scale(inv, r);
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (!c.is_zero()) axpy(row, -c, r);
  }
  rows_.push_back(std::move(r));
  piv_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const Vec& v) const { return is_zero(reduce(v)); }

}  // namespace extdim
