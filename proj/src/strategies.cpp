#include "kgd/strategies.hpp"

namespace kgd {

RealMat SignStrategy::outer() const {
  RealMat m(static_cast<int>(a.size()), static_cast<int>(b.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

RealMat UnitStrategy::correlation() const {
  RealMat m(a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.rows(); ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a(i, k) * b(j, k);
      m(i, j) = s;
    }
  }
  return m;
}

double vertex_value(const RealMat& m, const SignStrategy& s) {
  if (m.rows() != static_cast<int>(s.a.size()) ||
      m.cols() != static_cast<int>(s.b.size()))
    throw domain_error("vertex_value: shape mismatch");
  double total = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols(); ++j) row += m(i, j) * s.b[j];
    total += row * s.a[i];
  }
  return total;
}

ExactScalar vertex_value(const ExactMat& m, const SignStrategy& s) {
  if (m.rows() != static_cast<int>(s.a.size()) ||
      m.cols() != static_cast<int>(s.b.size()))
    throw domain_error("vertex_value: shape mismatch");
  ExactScalar total;
  for (int i = 0; i < m.rows(); ++i) {
    ExactScalar row;
    for (int j = 0; j < m.cols(); ++j) {
      if (s.b[j] > 0)
        row += m(i, j);
      else
        row -= m(i, j);
    }
    if (s.a[i] > 0)
      total += row;
    else
      total -= row;
  }
  return total;
}

double strategy_value(const RealMat& m, const UnitStrategy& s) {
  if (m.rows() != s.a.rows() || m.cols() != s.b.rows())
    throw domain_error("strategy_value: shape mismatch");
  double total = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      double dot = 0.0;
      for (int k = 0; k < s.n; ++k) dot += s.a(i, k) * s.b(j, k);
      total += m(i, j) * dot;
    }
  }
  return total;
}

}  // namespace kgd
