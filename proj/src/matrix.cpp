#include "k3lat/matrix.hpp"

#include <algorithm>
#include <utility>

namespace k3lat {

Mat::Mat(std::initializer_list<std::initializer_list<Int>> init) {
  rows_ = int(init.size());
  cols_ = rows_ ? int(init.begin()->size()) : 0;
  data_.reserve(size_t(rows_) * cols_);
  for (const auto& row : init) {
    if (int(row.size()) != cols_) throw ContractViolation("ragged matrix initializer");
    for (const auto& x : row) data_.push_back(x);
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw ContractViolation("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

std::vector<Int> Mat::operator*(const std::vector<Int>& v) const {
  if (int(v.size()) != cols_) throw ContractViolation("matrix-vector shape mismatch");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix difference shape mismatch");
  Mat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Int Mat::det() const {
  if (rows_ != cols_) throw ContractViolation("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  Mat a = *this;
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / denom;
    denom = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

// Row/column operations tracking the transforms U (rows) and V (columns).
struct SnfWork {
  Mat s, u, v;

  void swap_rows(int i, int j) {
    for (int c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int c = 0; c < s.cols(); ++c) s.at(dst, c) += f * s.at(src, c);
    for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& f) {
    for (int r = 0; r < s.rows(); ++r) s.at(r, dst) += f * s.at(r, src);
    for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < s.cols(); ++c) s.at(i, c) = -s.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const Mat& a) {
  int m = a.rows(), n = a.cols();
  SnfWork w{a, Mat::identity(m), Mat::identity(n)};
  int t = 0;
  int lim = std::min(m, n);
  while (t < lim) {
    // locate a nonzero pivot with minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& x = w.s.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
      }
    if (pi < 0) break;  // trailing block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (w.s.at(i, t) == 0) continue;
        Int q = floor_div(w.s.at(i, t), w.s.at(t, t));
        w.add_row(i, t, -q);
        if (w.s.at(i, t) != 0) { w.swap_rows(t, i); dirty = true; }
      }
      for (int j = t + 1; j < n; ++j) {
        if (w.s.at(t, j) == 0) continue;
        Int q = floor_div(w.s.at(t, j), w.s.at(t, t));
        w.add_col(j, t, -q);
        if (w.s.at(t, j) != 0) { w.swap_cols(t, j); dirty = true; }
      }
    }
    if (w.s.at(t, t) < 0) w.negate_row(t);
    ++t;
  }
  // enforce the divisibility chain d_k | d_{k+1}
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k + 1 < t; ++k) {
      Int &dk = w.s.at(k, k), &dn = w.s.at(k + 1, k + 1);
      if (dn % dk == 0) continue;
      changed = true;
      // fold the pair (dk, dn) into (gcd, lcm)
      w.add_col(k, k + 1, 1);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        if (w.s.at(k + 1, k) != 0) {
          Int q = floor_div(w.s.at(k + 1, k), w.s.at(k, k));
          w.add_row(k + 1, k, -q);
          if (w.s.at(k + 1, k) != 0) { w.swap_rows(k, k + 1); dirty = true; }
        }
        if (w.s.at(k, k + 1) != 0) {
          Int q = floor_div(w.s.at(k, k + 1), w.s.at(k, k));
          w.add_col(k + 1, k, -q);
          if (w.s.at(k, k + 1) != 0) { w.swap_cols(k, k + 1); dirty = true; }
        }
      }
      if (w.s.at(k, k) < 0) w.negate_row(k);
      if (w.s.at(k + 1, k + 1) < 0) w.negate_row(k + 1);
    }
  }
  return SmithResult{std::move(w.s), std::move(w.u), std::move(w.v)};
}

std::vector<std::vector<Int>> integer_kernel(const Mat& a) {
  SmithResult snf = smith_normal_form(a);
  std::vector<std::vector<Int>> basis;
  int n = a.cols();
  int lim = std::min(a.rows(), n);
  for (int j = 0; j < n; ++j) {
    bool zero_col = (j >= lim) || snf.s.at(j, j) == 0;
    if (!zero_col) continue;
    std::vector<Int> col(n);
    for (int i = 0; i < n; ++i) col[i] = snf.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace k3lat
