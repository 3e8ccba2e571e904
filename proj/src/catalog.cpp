#include "kgd/catalog.hpp"

#include <algorithm>
#include <map>

#include "kgd/errors.hpp"

namespace kgd {

namespace {

ExactScalar half() { return ExactScalar(Rational(1, 2)); }
ExactScalar phi() {
  // golden ratio (1 + sqrt(5)) / 2
  return ExactScalar(Rational(1, 2)) + ExactScalar::sqrt_term(5, Rational(1, 2));
}
ExactScalar phi_inv() {
  // 1/phi = phi - 1
  return phi() - ExactScalar(1);
}
ExactScalar sqrt5() { return ExactScalar::sqrt_term(5); }

ExactMat identity(int n) {
  ExactMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
  return m;
}

// Permutation matrix sending basis vector i to basis vector perm[i].
ExactMat perm_matrix(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  ExactMat m(n, n);
  for (int i = 0; i < n; ++i) m(perm[i], i) = ExactScalar(1);
  return m;
}

ExactMat diag_signs(const std::vector<int>& signs) {
  int n = static_cast<int>(signs.size());
  ExactMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = ExactScalar(signs[i]);
  return m;
}

// Reflection in the vector h (|h|^2 = 2): x -> x - <x,h> h.
ExactMat root_reflection(const std::vector<ExactScalar>& h) {
  int n = static_cast<int>(h.size());
  ExactMat m = identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= h[i] * h[j];
  return m;
}

std::vector<int> cycle_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

std::vector<int> swap01(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::swap(p[0], p[1]);
  return p;
}

void set_row(ExactMat& m, int row, const std::vector<ExactScalar>& v) {
  for (int j = 0; j < m.cols(); ++j) m(row, j) = v[j];
}

Configuration make_config(const std::string& name, int dim,
                          const std::vector<std::vector<ExactScalar>>& rows) {
  Configuration c;
  c.name = name;
  c.dim = dim;
  int ambient = static_cast<int>(rows.at(0).size());
  c.vectors = ExactMat(static_cast<int>(rows.size()), ambient);
  for (std::size_t i = 0; i < rows.size(); ++i)
    set_row(c.vectors, static_cast<int>(i), rows[i]);
  c.norm2.clear();
  for (int i = 0; i < c.m(); ++i) {
    ExactScalar n2;
    for (int j = 0; j < ambient; ++j) n2 += c.vectors(i, j) * c.vectors(i, j);
    c.norm2.push_back(n2);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Individual generators
// ---------------------------------------------------------------------------

Configuration make_hexagon() {
  ExactScalar s3h = ExactScalar::sqrt_term(3, Rational(1, 2));
  std::vector<std::vector<ExactScalar>> rows = {
      {ExactScalar(1), ExactScalar(0)},
      {half(), s3h},
      {-half(), s3h},
  };
  Configuration c = make_config("hexagon", 2, rows);
  c.tags = {"kissing", "platonic"};
  // 60-degree rotation and the x-axis reflection.
  ExactMat rot(2, 2);
  rot(0, 0) = half();
  rot(0, 1) = -s3h;
  rot(1, 0) = s3h;
  rot(1, 1) = half();
  c.isometries = {rot, diag_signs({1, -1})};
  return c;
}

std::vector<std::vector<ExactScalar>> d_family_rows(int d) {
  std::vector<std::vector<ExactScalar>> rows;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int s : {+1, -1}) {
        std::vector<ExactScalar> v(d);
        v[i] = ExactScalar(1);
        v[j] = ExactScalar(s);
        rows.push_back(v);
      }
    }
  }
  return rows;
}

Configuration make_d_family(int d, const std::string& name) {
  Configuration c = make_config(name, d, d_family_rows(d));
  if (d == 3 || d == 4 || d == 5) c.tags.insert("kissing");
  c.tags.insert("platonic");
  c.isometries = {perm_matrix(cycle_perm(d)), perm_matrix(swap01(d))};
  std::vector<int> flip(d, 1);
  flip[0] = -1;
  c.isometries.push_back(diag_signs(flip));
  if (d == 4) {
    // Triality rotation of the 24-cell: the symmetric Hadamard matrix / 2.
    ExactMat h(4, 4);
    int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1},
                      {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        h(i, j) = ExactScalar(Rational(sign[i][j], 2));
    c.isometries.push_back(h);
  }
  return c;
}

ExactMat icosahedral_rotation() {
  // Order-5 rotation about the icosahedron axis (0, 1, phi):
  // (1/2) [[phi-1, -phi, 1], [phi, 1, phi-1], [-1, phi-1, phi]].
  ExactScalar p = phi();
  ExactMat r(3, 3);
  r(0, 0) = (p - ExactScalar(1)) * half();
  r(0, 1) = -p * half();
  r(0, 2) = half();
  r(1, 0) = p * half();
  r(1, 1) = half();
  r(1, 2) = (p - ExactScalar(1)) * half();
  r(2, 0) = -half();
  r(2, 1) = (p - ExactScalar(1)) * half();
  r(2, 2) = p * half();
  return r;
}

Configuration make_icosahedron() {
  ExactScalar p = phi(), one(1), zero(0);
  std::vector<std::vector<ExactScalar>> rows = {
      {zero, one, p},  {zero, one, -p}, {one, p, zero},
      {one, -p, zero}, {p, zero, one},  {-p, zero, one}};
  Configuration c = make_config("icosahedron", 3, rows);
  c.tags = {"kissing", "etf", "platonic"};
  c.isometries = {perm_matrix(cycle_perm(3)), icosahedral_rotation()};
  return c;
}

Configuration make_dodecahedron() {
  ExactScalar p = phi(), q = phi_inv(), one(1), zero(0);
  std::vector<std::vector<ExactScalar>> rows = {
      {one, one, one},   {one, one, -one}, {one, -one, one},
      {one, -one, -one}, {zero, q, p},     {zero, q, -p},
      {q, p, zero},      {q, -p, zero},    {p, zero, q},
      {-p, zero, q}};
  Configuration c = make_config("dodecahedron", 3, rows);
  c.tags = {"platonic"};
  c.isometries = {perm_matrix(cycle_perm(3)), icosahedral_rotation()};
  return c;
}

Configuration make_icosidodecahedron() {
  ExactScalar p = phi(), p2 = phi() * phi(), zero(0), one(1);
  std::vector<std::vector<ExactScalar>> rows;
  ExactScalar twop = ExactScalar(2) * p;
  rows.push_back({twop, zero, zero});
  rows.push_back({zero, twop, zero});
  rows.push_back({zero, zero, twop});
  // Cyclic shifts of (1, +-phi^2, +-phi), first coordinate positive; this
  // chirality matches the edge midpoints of the catalog icosahedron.
  for (int shift = 0; shift < 3; ++shift) {
    for (int s2 : {+1, -1}) {
      for (int s3 : {+1, -1}) {
        std::vector<ExactScalar> base = {one, p2 * ExactScalar(s2),
                                         p * ExactScalar(s3)};
        std::vector<ExactScalar> v(3);
        for (int k = 0; k < 3; ++k) v[(k + shift) % 3] = base[k];
        rows.push_back(v);
      }
    }
  }
  Configuration c = make_config("icosidodecahedron", 3, rows);
  c.tags = {"platonic"};
  c.isometries = {perm_matrix(cycle_perm(3)), icosahedral_rotation()};
  return c;
}

// Left multiplication by the unit quaternion q = (a, b, c, d).
ExactMat quat_left(const std::vector<ExactScalar>& q) {
  const ExactScalar &a = q[0], &b = q[1], &c = q[2], &d = q[3];
  ExactMat m(4, 4);
  std::vector<std::vector<ExactScalar>> rows = {{a, -b, -c, -d},
                                                {b, a, -d, c},
                                                {c, d, a, -b},
                                                {d, -c, b, a}};
  for (int i = 0; i < 4; ++i) set_row(m, i, rows[i]);
  return m;
}

// Right multiplication by q: x -> x * q.
ExactMat quat_right(const std::vector<ExactScalar>& q) {
  const ExactScalar &a = q[0], &b = q[1], &c = q[2], &d = q[3];
  ExactMat m(4, 4);
  std::vector<std::vector<ExactScalar>> rows = {{a, -b, -c, -d},
                                                {b, a, d, -c},
                                                {c, -d, a, b},
                                                {d, c, -b, a}};
  for (int i = 0; i < 4; ++i) set_row(m, i, rows[i]);
  return m;
}

std::vector<ExactMat> h4_isometries() {
  ExactScalar p = phi(), q = phi_inv();
  std::vector<ExactScalar> q1 = {half(), half(), half(), half()};
  std::vector<ExactScalar> q2 = {ExactScalar(0), half(), p * half(),
                                 q * half()};
  return {quat_left(q1), quat_left(q2), quat_right(q1), quat_right(q2),
          diag_signs({1, -1, -1, -1})};
}

// Canonical line representative: flip so the first nonzero coordinate is
// positive.  Returns false for the zero vector.
bool canonicalize_line(std::vector<ExactScalar>& v) {
  for (auto& x : v) {
    int s = x.sign();
    if (s > 0) return true;
    if (s < 0) {
      for (auto& y : v) y = -y;
      return true;
    }
  }
  return false;
}

struct LineKey {
  std::string repr;
  bool operator<(const LineKey& o) const { return repr < o.repr; }
};

LineKey key_of(const std::vector<ExactScalar>& v) {
  std::string s;
  for (const auto& x : v) s += x.to_string() + ";";
  return {s};
}

// Generate lines from a seed set of vectors closed under sign patterns and
// permutations, deduplicating antipodes.
std::vector<std::vector<ExactScalar>> dedup_lines(
    std::vector<std::vector<ExactScalar>> vecs) {
  std::map<LineKey, bool> seen;
  std::vector<std::vector<ExactScalar>> out;
  for (auto& v : vecs) {
    if (!canonicalize_line(v)) continue;
    LineKey k = key_of(v);
    if (seen.count(k)) continue;
    seen[k] = true;
    out.push_back(v);
  }
  return out;
}

bool perm_is_even(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

Configuration make_600cell() {
  ExactScalar p = phi(), q = phi_inv(), zero(0), one(1), two(2);
  std::vector<std::vector<ExactScalar>> vecs;
  for (int i = 0; i < 4; ++i) {
    std::vector<ExactScalar> v(4, zero);
    v[i] = two;
    vecs.push_back(v);
  }
  for (int s1 : {+1, -1})
    for (int s2 : {+1, -1})
      for (int s3 : {+1, -1})
        vecs.push_back({one, ExactScalar(s1), ExactScalar(s2),
                        ExactScalar(s3)});
  std::vector<ExactScalar> base = {zero, one, p, q};
  std::vector<int> idx = {0, 1, 2, 3};
  do {
    if (!perm_is_even(idx)) continue;
    for (int s1 : {+1, -1})
      for (int s2 : {+1, -1})
        for (int s3 : {+1, -1}) {
          std::vector<ExactScalar> scaled = {zero, one * ExactScalar(s1),
                                             p * ExactScalar(s2),
                                             q * ExactScalar(s3)};
          std::vector<ExactScalar> v(4);
          for (int k = 0; k < 4; ++k) v[idx[k]] = scaled[k];
          vecs.push_back(v);
        }
  } while (std::next_permutation(idx.begin(), idx.end()));
  Configuration c = make_config("600cell", 4, dedup_lines(std::move(vecs)));
  c.tags = {"platonic"};
  c.isometries = h4_isometries();
  return c;
}

Configuration make_120cell() {
  ExactScalar p = phi(), pi2 = phi_inv() * phi_inv(), p2 = phi() * phi();
  ExactScalar q = phi_inv(), r5 = sqrt5(), zero(0), one(1), two(2);
  std::vector<std::vector<ExactScalar>> vecs;
  auto all_perms = [&](const std::vector<ExactScalar>& base, bool even_only) {
    std::vector<int> idx = {0, 1, 2, 3};
    do {
      if (even_only && !perm_is_even(idx)) continue;
      std::vector<ExactScalar> v(4);
      for (int k = 0; k < 4; ++k) v[idx[k]] = base[k];
      vecs.push_back(v);
    } while (std::next_permutation(idx.begin(), idx.end()));
  };
  auto sign_patterns = [&](const std::vector<ExactScalar>& base, bool even_only) {
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<ExactScalar> v = base;
      bool zero_signed = false;
      for (int k = 0; k < 4; ++k) {
        if (mask & (1 << k)) {
          if (v[k].is_zero()) zero_signed = true;
          v[k] = -v[k];
        }
      }
      if (zero_signed) continue;  // avoid duplicate sign patterns on zeros
      all_perms(v, even_only);
    }
  };
  sign_patterns({zero, zero, two, two}, false);
  sign_patterns({one, one, one, r5}, false);
  sign_patterns({pi2, p, p, p}, false);
  sign_patterns({q, q, q, p2}, false);
  sign_patterns({zero, pi2, one, p2}, true);
  sign_patterns({zero, q, p, r5}, true);
  sign_patterns({q, one, p, two}, true);
  Configuration c = make_config("120cell", 4, dedup_lines(std::move(vecs)));
  c.tags = {"platonic"};
  c.isometries = h4_isometries();
  return c;
}

Configuration make_compound_600_120() {
  Configuration a = make_600cell();
  Configuration b = make_120cell();
  std::vector<std::vector<ExactScalar>> rows;
  auto push_all = [&](const Configuration& c) {
    for (int i = 0; i < c.m(); ++i) {
      std::vector<ExactScalar> v(c.ambient());
      for (int j = 0; j < c.ambient(); ++j) v[j] = c.vectors(i, j);
      rows.push_back(v);
    }
  };
  push_all(a);
  push_all(b);
  Configuration c = make_config("600cell+120cell", 4, rows);
  c.tags = {"platonic"};
  c.isometries = h4_isometries();
  return c;
}

Configuration make_e6() {
  std::vector<std::vector<ExactScalar>> rows;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      for (int s : {+1, -1}) {
        std::vector<ExactScalar> v(8);
        v[i] = ExactScalar(1);
        v[j] = ExactScalar(s);
        rows.push_back(v);
      }
    }
  }
  // (1/2)(sum eps_i e_i - e_6 - e_7 + e_8), eps with an even number of -1.
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<ExactScalar> v(8);
    for (int i = 0; i < 5; ++i)
      v[i] = ExactScalar(Rational((mask & (1 << i)) ? -1 : 1, 2));
    v[5] = ExactScalar(Rational(-1, 2));
    v[6] = ExactScalar(Rational(-1, 2));
    v[7] = ExactScalar(Rational(1, 2));
    rows.push_back(v);
  }
  Configuration c = make_config("E6", 6, rows);
  c.tags = {"kissing"};
  std::vector<int> cyc = {1, 2, 3, 4, 0, 5, 6, 7};
  std::vector<int> swp = {1, 0, 2, 3, 4, 5, 6, 7};
  std::vector<ExactScalar> h(8, ExactScalar(Rational(1, 2)));
  h[5] = ExactScalar(Rational(-1, 2));
  h[6] = ExactScalar(Rational(-1, 2));
  c.isometries = {perm_matrix(cyc), perm_matrix(swp),
                  diag_signs({-1, -1, 1, 1, 1, 1, 1, 1}),
                  root_reflection(h)};
  return c;
}

Configuration make_e7() {
  std::vector<std::vector<ExactScalar>> rows;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      std::vector<ExactScalar> v(8);
      v[i] = ExactScalar(1);
      v[j] = ExactScalar(-1);
      rows.push_back(v);
    }
  }
  // Half vectors with four +1/2 and four -1/2, first coordinate +1/2.
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    if (mask & 1) continue;  // -1/2 in the first slot: antipodal duplicate
    std::vector<ExactScalar> v(8);
    for (int i = 0; i < 8; ++i)
      v[i] = ExactScalar(Rational((mask & (1 << i)) ? -1 : 1, 2));
    rows.push_back(v);
  }
  Configuration c = make_config("E7", 7, rows);
  c.tags = {"kissing"};
  std::vector<ExactScalar> h(8);
  for (int i = 0; i < 8; ++i) h[i] = ExactScalar(Rational(i < 4 ? 1 : -1, 2));
  c.isometries = {perm_matrix(cycle_perm(8)), perm_matrix(swap01(8)),
                  root_reflection(h)};
  return c;
}

Configuration make_e8() {
  std::vector<std::vector<ExactScalar>> rows;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int s : {+1, -1}) {
        std::vector<ExactScalar> v(8);
        v[i] = ExactScalar(1);
        v[j] = ExactScalar(s);
        rows.push_back(v);
      }
    }
  }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    if (mask & 1) continue;  // first coordinate fixed to +1/2
    std::vector<ExactScalar> v(8);
    for (int i = 0; i < 8; ++i)
      v[i] = ExactScalar(Rational((mask & (1 << i)) ? -1 : 1, 2));
    rows.push_back(v);
  }
  Configuration c = make_config("E8", 8, rows);
  c.tags = {"kissing"};
  std::vector<ExactScalar> h(8, ExactScalar(Rational(1, 2)));
  c.isometries = {perm_matrix(cycle_perm(8)), perm_matrix(swap01(8)),
                  diag_signs({-1, -1, 1, 1, 1, 1, 1, 1}),
                  root_reflection(h)};
  return c;
}

Configuration make_etf28() {
  // u_ij = e_i + e_j - (1/4) * ones, in the hyperplane sum(x) = 0.
  std::vector<std::vector<ExactScalar>> rows;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      std::vector<ExactScalar> v(8, ExactScalar(Rational(-1, 4)));
      v[i] += ExactScalar(1);
      v[j] += ExactScalar(1);
      rows.push_back(v);
    }
  }
  Configuration c = make_config("ETF28", 7, rows);
  c.tags = {"etf"};
  c.isometries = {perm_matrix(cycle_perm(8)), perm_matrix(swap01(8))};
  return c;
}

Configuration make_e7_etf() {
  Configuration a = make_e7();
  Configuration b = make_etf28();
  std::vector<std::vector<ExactScalar>> rows;
  for (const Configuration* c : {&a, &b}) {
    for (int i = 0; i < c->m(); ++i) {
      std::vector<ExactScalar> v(8);
      for (int j = 0; j < 8; ++j) v[j] = c->vectors(i, j);
      rows.push_back(v);
    }
  }
  Configuration c = make_config("E7+ETF", 7, rows);
  std::vector<ExactScalar> h(8);
  for (int i = 0; i < 8; ++i) h[i] = ExactScalar(Rational(i < 4 ? 1 : -1, 2));
  c.isometries = {perm_matrix(cycle_perm(8)), perm_matrix(swap01(8)),
                  root_reflection(h)};
  return c;
}

const std::map<std::string, std::string>& alias_map() {
  static const std::map<std::string, std::string> aliases = {
      {"hexagon", "hexagon"},
      {"A2", "hexagon"},
      {"cuboctahedron", "cuboctahedron"},
      {"A3", "cuboctahedron"},
      {"A3-cuboctahedron", "cuboctahedron"},
      {"D3", "cuboctahedron"},
      {"icosahedron", "icosahedron"},
      {"dodecahedron", "dodecahedron"},
      {"icosidodecahedron", "icosidodecahedron"},
      {"24cell", "24cell"},
      {"24cell/D4", "24cell"},
      {"D4", "24cell"},
      {"600cell", "600cell"},
      {"120cell", "120cell"},
      {"600cell+120cell", "600cell+120cell"},
      {"D5", "D5"},
      {"D6", "D6"},
      {"D7", "D7"},
      {"D8", "D8"},
      {"E6", "E6"},
      {"E7", "E7"},
      {"E8", "E8"},
      {"ETF28", "ETF28"},
      {"ETF-28-d7", "ETF28"},
      {"E7+ETF", "E7+ETF"},
      {"E7+ETF-91", "E7+ETF"},
  };
  return aliases;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"hexagon", 2, 3, "A2", true, "hexagon"},
      {"icosahedron", 3, 6, "H3", true, "icosahedron (ETF)"},
      {"cuboctahedron", 3, 6, "A3", true, "cuboctahedron"},
      {"dodecahedron", 3, 10, "H3", false, "dodecahedron"},
      {"icosidodecahedron", 3, 15, "H3", false, "icosidodecahedron"},
      {"24cell", 4, 12, "D4", true, "24-cell"},
      {"600cell", 4, 60, "H4", false, "600-cell"},
      {"120cell", 4, 300, "H4", false, "120-cell"},
      {"D5", 5, 20, "D5", true, ""},
      {"D6", 6, 30, "D6", false, ""},
      {"E6", 6, 36, "E6", true, ""},
      {"ETF28", 7, 28, "", false, "equiangular tight frame"},
      {"D7", 7, 42, "D7", false, ""},
      {"E7", 7, 63, "E7", true, ""},
      {"E7+ETF", 7, 91, "", false, "E7 + ETF compound"},
      {"D8", 8, 56, "D8", false, ""},
      {"E8", 8, 120, "E8", true, ""},
  };
  return entries;
}

bool catalog_has(const std::string& name) {
  return alias_map().count(name) > 0;
}

Configuration generate(const std::string& name) {
  auto it = alias_map().find(name);
  if (it == alias_map().end())
    throw catalog_error("unknown catalog configuration '" + name + "'");
  const std::string& canon = it->second;
  if (canon == "hexagon") return make_hexagon();
  if (canon == "cuboctahedron") return make_d_family(3, "cuboctahedron");
  if (canon == "icosahedron") return make_icosahedron();
  if (canon == "dodecahedron") return make_dodecahedron();
  if (canon == "icosidodecahedron") return make_icosidodecahedron();
  if (canon == "24cell") return make_d_family(4, "24cell");
  if (canon == "600cell") return make_600cell();
  if (canon == "120cell") return make_120cell();
  if (canon == "600cell+120cell") return make_compound_600_120();
  if (canon == "D5") return make_d_family(5, "D5");
  if (canon == "D6") return make_d_family(6, "D6");
  if (canon == "D7") return make_d_family(7, "D7");
  if (canon == "D8") return make_d_family(8, "D8");
  if (canon == "E6") return make_e6();
  if (canon == "E7") return make_e7();
  if (canon == "E8") return make_e8();
  if (canon == "ETF28") return make_etf28();
  if (canon == "E7+ETF") return make_e7_etf();
  throw catalog_error("unhandled catalog configuration '" + name + "'");
}

}  // namespace kgd
