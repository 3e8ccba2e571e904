#include "kgd/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <set>

#include "kgd/errors.hpp"

namespace kgd {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i + 1;
  return p;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm r;
  r.img.resize(b.img.size());
  for (int i = 0; i < b.size(); ++i) {
    int j = b.target(i);
    r.img[i] = a.img[j] * b.sgn(i);
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i + 1) return false;
  return true;
}

void SignedPerm::validate() const {
  std::vector<char> hit(img.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (img[i] == 0 || std::abs(img[i]) > size())
      throw domain_error("SignedPerm: image out of range");
    if (hit[target(i)]) throw domain_error("SignedPerm: not a permutation");
    hit[target(i)] = 1;
  }
}

std::vector<GroupElement> SignedPermutationGroup::closure(
    std::size_t cap) const {
  GroupElement id{SignedPerm::identity(m1), SignedPerm::identity(m2)};
  std::set<GroupElement> seen{id};
  std::deque<GroupElement> queue{id};
  while (!queue.empty()) {
    GroupElement cur = queue.front();
    queue.pop_front();
    for (const GroupElement& g : generators) {
      GroupElement next = g * cur;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw resource_error("group closure exceeds cap of " +
                               std::to_string(cap) + " elements");
        queue.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

InvariantBasis::InvariantBasis(const SignedPermutationGroup& g)
    : m1_(g.m1), m2_(g.m2) {
  const std::size_t cells = static_cast<std::size_t>(m1_) * m2_;
  orbit_.assign(cells, -1);
  sign_.assign(cells, 0);
  for (std::size_t start = 0; start < cells; ++start) {
    if (orbit_[start] >= 0) continue;
    int oid = orbit_count_++;
    bool zero = false;
    int size = 0;
    orbit_[start] = oid;
    sign_[start] = 1;
    rep_.push_back(start);
    std::deque<std::size_t> queue{start};
    ++size;
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      int x = static_cast<int>(c) / m2_;
      int y = static_cast<int>(c) % m2_;
      for (const GroupElement& gen : g.generators) {
        int nx = gen.row.target(x);
        int ny = gen.col.target(y);
        int ns = sign_[c] * gen.row.sgn(x) * gen.col.sgn(y);
        std::size_t nc = cell(nx, ny);
        if (orbit_[nc] < 0) {
          orbit_[nc] = oid;
          sign_[nc] = ns;
          queue.push_back(nc);
          ++size;
        } else if (sign_[nc] != ns) {
          zero = true;  // cell reachable with both signs
        }
      }
    }
    forced_zero_.push_back(zero ? 1 : 0);
    orbit_size_.push_back(size);
  }
  free_index_.assign(orbit_count_, -1);
  for (int o = 0; o < orbit_count_; ++o) {
    if (!forced_zero_[o]) {
      free_index_[o] = free_dim_++;
      free_orbits_.push_back(o);
    }
  }
}

RealMat InvariantBasis::project(const RealMat& m) const {
  if (m.rows() != m1_ || m.cols() != m2_)
    throw domain_error("InvariantBasis::project: shape mismatch");
  std::vector<double> acc(orbit_count_, 0.0);
  for (int x = 0; x < m1_; ++x)
    for (int y = 0; y < m2_; ++y) {
      std::size_t c = cell(x, y);
      acc[orbit_[c]] += sign_[c] * m(x, y);
    }
  RealMat out(m1_, m2_);
  for (int x = 0; x < m1_; ++x)
    for (int y = 0; y < m2_; ++y) {
      std::size_t c = cell(x, y);
      int o = orbit_[c];
      out(x, y) =
          forced_zero_[o] ? 0.0 : sign_[c] * acc[o] / orbit_size_[o];
    }
  return out;
}

ExactMat InvariantBasis::project(const ExactMat& m) const {
  if (m.rows() != m1_ || m.cols() != m2_)
    throw domain_error("InvariantBasis::project: shape mismatch");
  std::vector<ExactScalar> acc(orbit_count_);
  for (int x = 0; x < m1_; ++x)
    for (int y = 0; y < m2_; ++y) {
      std::size_t c = cell(x, y);
      if (sign_[c] > 0)
        acc[orbit_[c]] += m(x, y);
      else
        acc[orbit_[c]] -= m(x, y);
    }
  ExactMat out(m1_, m2_);
  for (int x = 0; x < m1_; ++x)
    for (int y = 0; y < m2_; ++y) {
      std::size_t c = cell(x, y);
      int o = orbit_[c];
      if (forced_zero_[o]) continue;
      ExactScalar v = acc[o] / ExactScalar(orbit_size_[o]);
      out(x, y) = sign_[c] > 0 ? v : -v;
    }
  return out;
}

std::vector<double> InvariantBasis::coords(const RealMat& m) const {
  std::vector<double> out(free_dim_, 0.0);
  for (int k = 0; k < free_dim_; ++k) {
    std::size_t r = rep_[free_orbits_[k]];
    out[k] = m.data()[r];
  }
  return out;
}

RealMat InvariantBasis::expand(const std::vector<double>& coords) const {
  if (static_cast<int>(coords.size()) != free_dim_)
    throw domain_error("InvariantBasis::expand: coordinate count mismatch");
  RealMat out(m1_, m2_);
  for (int x = 0; x < m1_; ++x)
    for (int y = 0; y < m2_; ++y) {
      std::size_t c = cell(x, y);
      int o = orbit_[c];
      int f = free_index_[o];
      out(x, y) = f < 0 ? 0.0 : sign_[c] * coords[f];
    }
  return out;
}

std::vector<double> InvariantBasis::coord_weights() const {
  std::vector<double> w(free_dim_, 0.0);
  for (int k = 0; k < free_dim_; ++k)
    w[k] = static_cast<double>(orbit_size_[free_orbits_[k]]);
  return w;
}

RealMat apply_element(const GroupElement& g, const RealMat& m) {
  RealMat out(m.rows(), m.cols());
  for (int x = 0; x < m.rows(); ++x) {
    int nx = g.row.target(x);
    int sx = g.row.sgn(x);
    for (int y = 0; y < m.cols(); ++y)
      out(nx, g.col.target(y)) = sx * g.col.sgn(y) * m(x, y);
  }
  return out;
}

ExactMat apply_element(const GroupElement& g, const ExactMat& m) {
  ExactMat out(m.rows(), m.cols());
  for (int x = 0; x < m.rows(); ++x) {
    int nx = g.row.target(x);
    int sx = g.row.sgn(x);
    for (int y = 0; y < m.cols(); ++y) {
      const ExactScalar& v = m(x, y);
      out(nx, g.col.target(y)) = sx * g.col.sgn(y) > 0 ? v : -v;
    }
  }
  return out;
}

SignStrategy apply_element(const GroupElement& g, const SignStrategy& s) {
  SignStrategy out;
  out.a.resize(s.a.size());
  out.b.resize(s.b.size());
  for (std::size_t x = 0; x < s.a.size(); ++x)
    out.a[g.row.target(static_cast<int>(x))] =
        static_cast<std::int8_t>(g.row.sgn(static_cast<int>(x)) * s.a[x]);
  for (std::size_t y = 0; y < s.b.size(); ++y)
    out.b[g.col.target(static_cast<int>(y))] =
        static_cast<std::int8_t>(g.col.sgn(static_cast<int>(y)) * s.b[y]);
  return out;
}

RealMat symmetrize(const RealMat& m,
                   const std::vector<GroupElement>& elements) {
  if (elements.empty()) return m;
  RealMat acc(m.rows(), m.cols());
  for (const GroupElement& g : elements) acc = acc + apply_element(g, m);
  return acc * (1.0 / static_cast<double>(elements.size()));
}

ExactMat symmetrize(const ExactMat& m,
                    const std::vector<GroupElement>& elements) {
  if (elements.empty()) return m;
  ExactMat acc(m.rows(), m.cols());
  for (const GroupElement& g : elements) acc = acc + apply_element(g, m);
  ExactScalar inv = ExactScalar(1) / ExactScalar(static_cast<std::int64_t>(
                                         elements.size()));
  return acc * inv;
}

SignedPerm induced_line_perm(const Configuration& conf, const ExactMat& iso) {
  if (iso.rows() != conf.ambient() || iso.cols() != conf.ambient())
    throw domain_error("induced_line_perm: isometry shape mismatch");
  SignedPerm p;
  p.img.assign(conf.m(), 0);
  std::vector<char> taken(conf.m(), 0);
  for (int k = 0; k < conf.m(); ++k) {
    // w = iso * row_k
    std::vector<ExactScalar> w(conf.ambient());
    for (int i = 0; i < conf.ambient(); ++i) {
      ExactScalar s;
      for (int j = 0; j < conf.ambient(); ++j)
        s += iso(i, j) * conf.vectors(k, j);
      w[i] = s;
    }
    int found = 0;
    for (int j = 0; j < conf.m() && found == 0; ++j) {
      if (taken[j]) continue;
      if (!(conf.norm2[j] == conf.norm2[k])) continue;
      bool plus = true, minus = true;
      for (int i = 0; i < conf.ambient() && (plus || minus); ++i) {
        const ExactScalar& u = conf.vectors(j, i);
        if (!(w[i] == u)) plus = false;
        if (!(w[i] == -u)) minus = false;
      }
      if (plus)
        found = j + 1;
      else if (minus)
        found = -(j + 1);
    }
    if (found == 0)
      throw domain_error(
          "induced_line_perm: isometry does not preserve the line set of " +
          conf.name);
    p.img[k] = found;
    taken[std::abs(found) - 1] = 1;
  }
  return p;
}

SignedPerm induced_line_perm_float(const Configuration& conf,
                                   const ExactMat& iso, double tol) {
  if (iso.rows() != conf.ambient() || iso.cols() != conf.ambient())
    throw domain_error("induced_line_perm_float: isometry shape mismatch");
  RealMat unit = conf.unit_rows();
  RealMat m(conf.ambient(), conf.ambient());
  for (int i = 0; i < conf.ambient(); ++i)
    for (int j = 0; j < conf.ambient(); ++j) m(i, j) = iso(i, j).to_double();
  SignedPerm p;
  p.img.assign(conf.m(), 0);
  std::vector<char> taken(conf.m(), 0);
  for (int k = 0; k < conf.m(); ++k) {
    std::vector<double> w(conf.ambient(), 0.0);
    for (int i = 0; i < conf.ambient(); ++i)
      for (int j = 0; j < conf.ambient(); ++j) w[i] += m(i, j) * unit(k, j);
    int found = 0;
    for (int j = 0; j < conf.m() && found == 0; ++j) {
      if (taken[j]) continue;
      double dplus = 0.0, dminus = 0.0;
      for (int i = 0; i < conf.ambient(); ++i) {
        dplus = std::max(dplus, std::fabs(w[i] - unit(j, i)));
        dminus = std::max(dminus, std::fabs(w[i] + unit(j, i)));
      }
      if (dplus < tol)
        found = j + 1;
      else if (dminus < tol)
        found = -(j + 1);
    }
    if (found == 0)
      throw domain_error(
          "induced_line_perm_float: isometry does not preserve the line set "
          "of " +
          conf.name);
    p.img[k] = found;
    taken[std::abs(found) - 1] = 1;
  }
  return p;
}

namespace {

SignedPerm induced_perm_any(const Configuration& conf, const ExactMat& iso) {
  return conf.float_backed ? induced_line_perm_float(conf, iso)
                           : induced_line_perm(conf, iso);
}

}  // namespace

SignedPermutationGroup derive_group(const CorrelationPoint& p) {
  SignedPermutationGroup g;
  g.m1 = p.m1();
  g.m2 = p.m2();
  const auto& isos = p.witness_a.isometries;
  if (isos.empty()) return g;
  // Both witnesses must respect the same ambient isometries.
  for (const ExactMat& iso : isos) {
    try {
      SignedPerm row = induced_perm_any(p.witness_a, iso);
      SignedPerm col = p.symmetric_witness()
                           ? row
                           : induced_perm_any(p.witness_b, iso);
      g.generators.push_back({row, col});
    } catch (const domain_error&) {
      // Isometry does not act on one side; skip it.
    }
  }
  return g;
}

bool is_invariant(const ExactMat& m, const SignedPermutationGroup& g) {
  for (const GroupElement& gen : g.generators) {
    if (!(apply_element(gen, m) == m)) return false;
  }
  return true;
}

}  // namespace kgd
