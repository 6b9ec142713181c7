#pragma once

#include <initializer_list>
#include <vector>

#include "k3lat/int_types.hpp"

namespace k3lat {

// Dense matrix over arbitrary-precision integers. Row-major storage.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  Mat(std::initializer_list<std::initializer_list<Int>> init);

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const = default;

  Mat transposed() const;
  Mat operator*(const Mat& o) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  Mat operator-(const Mat& o) const;

  bool is_symmetric() const;

  // Exact determinant (fraction-free Bareiss elimination).
  Int det() const;

 private:
  int rows_, cols_;
  std::vector<Int> data_;
};

struct SmithResult {
  Mat s;  // diagonal, s = u * a * v, diagonal entries d1 | d2 | ... >= 0
  Mat u;  // unimodular
  Mat v;  // unimodular
};

// Smith normal form of an arbitrary integer matrix.
SmithResult smith_normal_form(const Mat& a);

// Basis of the integer kernel {x : a*x = 0}, as columns. The kernel of an
// integer matrix is automatically saturated.
std::vector<std::vector<Int>> integer_kernel(const Mat& a);

}  // namespace k3lat
