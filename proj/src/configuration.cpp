#include "kgd/configuration.hpp"

#include <cmath>

#include "kgd/errors.hpp"

namespace kgd {

RealMat Configuration::unit_rows() const {
  RealMat out(m(), ambient());
  for (int i = 0; i < m(); ++i) {
    double inv = 1.0 / std::sqrt(norm2[i].to_double());
    for (int j = 0; j < ambient(); ++j)
      out(i, j) = vectors(i, j).to_double() * inv;
  }
  return out;
}

namespace {

ExactScalar raw_dot(const ExactMat& u, int x, const ExactMat& v, int y) {
  ExactScalar s;
  for (int j = 0; j < u.cols(); ++j) s += u(x, j) * v(y, j);
  return s;
}

ExactScalar normalized_dot(const ExactMat& ua, int x,
                           const ExactScalar& na, const ExactMat& ub, int y,
                           const ExactScalar& nb) {
  ExactScalar dot = raw_dot(ua, x, ub, y);
  if (dot.is_zero()) return dot;
  if (na == nb) return dot / na;
  ExactScalar prod = na * nb;
  auto root = prod.exact_sqrt();
  if (!root)
    throw domain_error(
        "gram: norm product has no exact square root; "
        "incompatible normalization classes");
  return dot / *root;
}

}  // namespace

ExactScalar Configuration::line_dot(int x, int y) const {
  return normalized_dot(vectors, x, norm2[x], vectors, y, norm2[y]);
}

ExactScalar Configuration::line_dot(int x, const Configuration& other,
                                    int y) const {
  return normalized_dot(vectors, x, norm2[x], other.vectors, y,
                        other.norm2[y]);
}

void Configuration::validate() const {
  for (int i = 0; i < m(); ++i) {
    ExactScalar n = raw_dot(vectors, i, vectors, i);
    if (float_backed) {
      if (std::fabs(n.to_double() - norm2[i].to_double()) > 1e-9)
        throw domain_error(name + ": stored norm mismatch on row " +
                           std::to_string(i));
    } else if (n != norm2[i]) {
      throw domain_error(name + ": stored norm mismatch on row " +
                         std::to_string(i));
    }
  }
  // Lines must be pairwise distinct (no duplicates or antipodes).  The raw
  // representatives may differ in scale, so compare by proportionality.
  for (int i = 0; i < m(); ++i) {
    for (int j = i + 1; j < m(); ++j) {
      ExactScalar dot = raw_dot(vectors, i, vectors, j);
      if (dot.is_zero()) continue;
      // |<u,v>|^2 == |u|^2 |v|^2 iff u, v parallel.
      if (dot * dot == norm2[i] * norm2[j])
        throw domain_error(name + ": rows " + std::to_string(i) + " and " +
                           std::to_string(j) + " span the same line");
    }
  }
}

CorrelationPoint gram(const Configuration& a, const Configuration& b) {
  if (a.dim != b.dim)
    throw domain_error("gram: dimension mismatch (" + std::to_string(a.dim) +
                       " vs " + std::to_string(b.dim) + ")");
  if (a.ambient() != b.ambient())
    throw domain_error("gram: ambient presentation mismatch");
  CorrelationPoint p;
  p.entries = ExactMat(a.m(), b.m());
  for (int x = 0; x < a.m(); ++x)
    for (int y = 0; y < b.m(); ++y)
      p.entries(x, y) = a.line_dot(x, b, y);
  p.witness_a = a;
  p.witness_b = b;
  return p;
}

}  // namespace kgd
