#pragma once

#include <initializer_list>

#include "eqalg/ints.hpp"

namespace eqalg {

// Dense integer matrix, row-major.  Columns of relation matrices are relators;
// a homomorphism between presented groups acts on generator coordinate columns.
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Int(0)) {}
  Mat(int rows, int cols, std::initializer_list<long> vals) : Mat(rows, cols) {
    if ((int)vals.size() != rows * cols) throw std::invalid_argument("Mat init size");
    size_t i = 0;
    for (long v : vals) a_[i++] = v;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_cols(const std::vector<Vec>& cols, int rows) {
    Mat m(rows, (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j) {
      if ((int)cols[j].size() != rows) throw std::invalid_argument("from_cols: bad column length");
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Int& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Vec col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec row(int i) const {
    Vec v(c_);
    for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const Vec& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat transpose() const;

  // [this | o] side by side
  Mat hstack(const Mat& o) const;
  // [this; o] stacked
  Mat vstack(const Mat& o) const;
  Mat submatrix(int i0, int j0, int rows, int cols) const;

  std::string str() const;

 private:
  int r_, c_;
  std::vector<Int> a_;
};

// Block-diagonal assembly of matrices.
Mat block_diag(const std::vector<Mat>& blocks);

}  // namespace eqalg
