#ifndef KGD_MATRIX_HPP
#define KGD_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "kgd/errors.hpp"
#include "kgd/exact_scalar.hpp"

namespace kgd {

/// Dense row-major matrix, sized for correlation-polytope work
/// (a few hundred rows/columns at most).
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, T fill = T())
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw domain_error("Mat: negative shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool same_shape(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.check(b);
    Mat r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.check(b);
    Mat r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }
  Mat operator*(const T& scale) const {
    Mat r = *this;
    for (auto& v : r.data_) v *= scale;
    return r;
  }

  Mat transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  void check(const Mat& o) const {
    if (!same_shape(o)) throw domain_error("Mat: shape mismatch");
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using RealMat = Mat<double>;
using ExactMat = Mat<ExactScalar>;

/// Frobenius inner product <A, B> = sum_ij A_ij B_ij.
inline double frob_dot(const RealMat& a, const RealMat& b) {
  a.check(b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

inline ExactScalar frob_dot(const ExactMat& a, const ExactMat& b) {
  a.check(b);
  ExactScalar s;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    s += a.data()[i] * b.data()[i];
  return s;
}

inline double frob_norm2(const RealMat& a) { return frob_dot(a, a); }

inline RealMat to_real(const ExactMat& a) {
  RealMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i)
    r.data()[i] = a.data()[i].to_double();
  return r;
}

/// P - lambda * I for square P; throws on non-square input.
inline ExactMat diagonal_modification(const ExactMat& p,
                                      const ExactScalar& lambda) {
  if (p.rows() != p.cols())
    throw domain_error("diagonal_modification: matrix must be square");
  ExactMat r = p;
  for (int i = 0; i < p.rows(); ++i) r(i, i) -= lambda;
  return r;
}

}  // namespace kgd

#endif  // KGD_MATRIX_HPP
