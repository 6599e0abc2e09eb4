#include "eqalg/matrix.hpp"

namespace eqalg {

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("Mat mul: dimension mismatch");
  Mat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
    }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (c_ != (int)v.size()) throw std::invalid_argument("Mat*Vec: dimension mismatch");
  Vec out(r_, Int(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat add: dimension mismatch");
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat sub: dimension mismatch");
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Mat Mat::operator-() const {
  Mat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

Mat Mat::transpose() const {
  Mat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Mat Mat::hstack(const Mat& o) const {
  if (r_ != o.r_) throw std::invalid_argument("hstack: row mismatch");
  Mat out(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) out(i, j) = (*this)(i, j);
    for (int j = 0; j < o.c_; ++j) out(i, c_ + j) = o(i, j);
  }
  return out;
}

Mat Mat::vstack(const Mat& o) const {
  if (c_ != o.c_) throw std::invalid_argument("vstack: col mismatch");
  Mat out(r_ + o.r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(i, j) = (*this)(i, j);
  for (int i = 0; i < o.r_; ++i)
    for (int j = 0; j < c_; ++j) out(r_ + i, j) = o(i, j);
  return out;
}

Mat Mat::submatrix(int i0, int j0, int rows, int cols) const {
  if (i0 < 0 || j0 < 0 || i0 + rows > r_ || j0 + cols > c_)
    throw std::invalid_argument("submatrix: out of range");
  Mat out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
  return out;
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < r_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < c_; ++j) {
      if (j) s += " ";
      s += (*this)(i, j).str();
    }
  }
  return s + "]";
}

Mat block_diag(const std::vector<Mat>& blocks) {
  int r = 0, c = 0;
  for (auto& b : blocks) r += b.rows(), c += b.cols();
  Mat out(r, c);
  int i0 = 0, j0 = 0;
  for (auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out(i0 + i, j0 + j) = b(i, j);
    i0 += b.rows();
    j0 += b.cols();
  }
  return out;
}

}  // namespace eqalg
