#include "kgd/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kgd/errors.hpp"

namespace kgd {

json to_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  throw domain_error("bigint_from_json: expected integer or string");
}

json to_json(const Rational& q) {
  return json::array({to_json(q.num()), to_json(q.den())});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw domain_error("rational_from_json: expected [num, den]");
  return Rational(bigint_from_json(j[0]), bigint_from_json(j[1]));
}

json to_json(const ExactScalar& x) {
  json rad = json::array(), co = json::array();
  for (const auto& [s, q] : x.terms()) {
    rad.push_back(s);
    co.push_back(to_json(q));
  }
  return json{{"radicands", rad}, {"coeffs", co}};
}

ExactScalar exact_scalar_from_json(const json& j) {
  const json& rad = j.at("radicands");
  const json& co = j.at("coeffs");
  if (rad.size() != co.size())
    throw domain_error("exact_scalar_from_json: length mismatch");
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (std::size_t i = 0; i < rad.size(); ++i)
    terms.push_back({rad[i].get<std::int64_t>(), rational_from_json(co[i])});
  return ExactScalar::canonicalize(terms);
}

namespace {

std::vector<std::int64_t> collect_radicands(const ExactMat& m) {
  std::vector<std::int64_t> basis;
  for (const auto& e : m.data())
    for (const auto& [s, q] : e.terms())
      if (std::find(basis.begin(), basis.end(), s) == basis.end())
        basis.push_back(s);
  std::sort(basis.begin(), basis.end());
  if (basis.empty()) basis.push_back(1);
  return basis;
}

json entries_over_basis(const ExactMat& m,
                        const std::vector<std::int64_t>& basis) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      json cell = json::array();
      for (std::int64_t s : basis) cell.push_back(to_json(m(i, j).coefficient(s)));
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return rows;
}

ExactMat entries_from_basis(const json& rows,
                            const std::vector<std::int64_t>& basis, int m1,
                            int m2) {
  ExactMat m(m1, m2);
  for (int i = 0; i < m1; ++i) {
    for (int j = 0; j < m2; ++j) {
      const json& cell = rows.at(i).at(j);
      std::vector<std::pair<std::int64_t, Rational>> terms;
      for (std::size_t k = 0; k < basis.size(); ++k)
        terms.push_back({basis[k], rational_from_json(cell.at(k))});
      m(i, j) = ExactScalar::canonicalize(terms);
    }
  }
  return m;
}

}  // namespace

json to_json(const ExactMat& m) {
  auto basis = collect_radicands(m);
  return json{{"m1", m.rows()},
              {"m2", m.cols()},
              {"radicands", basis},
              {"entries", entries_over_basis(m, basis)}};
}

ExactMat exact_mat_from_json(const json& j) {
  std::vector<std::int64_t> basis;
  for (const auto& r : j.at("radicands")) basis.push_back(r.get<std::int64_t>());
  return entries_from_basis(j.at("entries"), basis, j.at("m1").get<int>(),
                            j.at("m2").get<int>());
}

json to_json(const SignStrategy& s) {
  json a = json::array(), b = json::array();
  for (auto v : s.a) a.push_back(static_cast<int>(v));
  for (auto v : s.b) b.push_back(static_cast<int>(v));
  return json{{"a", a}, {"b", b}};
}

SignStrategy sign_strategy_from_json(const json& j) {
  SignStrategy s;
  for (const auto& v : j.at("a"))
    s.a.push_back(static_cast<std::int8_t>(v.get<int>() >= 0 ? 1 : -1));
  for (const auto& v : j.at("b"))
    s.b.push_back(static_cast<std::int8_t>(v.get<int>() >= 0 ? 1 : -1));
  return s;
}

json to_json(const Configuration& c) {
  auto basis = collect_radicands(c.vectors);
  json norms = json::array();
  for (const auto& n : c.norm2) norms.push_back(to_json(n));
  json tags = json::array();
  for (const auto& t : c.tags) tags.push_back(t);
  return json{{"name", c.name},
              {"d", c.dim},
              {"m", c.m()},
              {"ambient", c.ambient()},
              {"radicands", basis},
              {"rows", entries_over_basis(c.vectors, basis)},
              {"norms2", norms},
              {"float_backed", c.float_backed},
              {"tags", tags}};
}

Configuration configuration_from_json(const json& j) {
  Configuration c;
  c.name = j.at("name").get<std::string>();
  c.dim = j.at("d").get<int>();
  int m = j.at("m").get<int>();
  int ambient = j.value("ambient", c.dim);
  std::vector<std::int64_t> basis;
  for (const auto& r : j.at("radicands")) basis.push_back(r.get<std::int64_t>());
  c.vectors = entries_from_basis(j.at("rows"), basis, m, ambient);
  c.float_backed = j.value("float_backed", false);
  if (j.contains("norms2")) {
    for (const auto& n : j.at("norms2"))
      c.norm2.push_back(exact_scalar_from_json(n));
  } else {
    for (int i = 0; i < m; ++i) {
      ExactScalar n2;
      for (int k = 0; k < ambient; ++k) n2 += c.vectors(i, k) * c.vectors(i, k);
      c.norm2.push_back(n2);
    }
  }
  if (j.contains("tags"))
    for (const auto& t : j.at("tags")) c.tags.insert(t.get<std::string>());
  return c;
}

json to_json(const SignedPermutationGroup& g) {
  json gens = json::array();
  for (const auto& e : g.generators) {
    json rows = json::array(), cols = json::array();
    for (auto v : e.row.img) rows.push_back(v);
    for (auto v : e.col.img) cols.push_back(v);
    gens.push_back(json{{"rows", rows}, {"cols", cols}});
  }
  return json{{"m1", g.m1}, {"m2", g.m2}, {"generators", gens}};
}

SignedPermutationGroup group_from_json(const json& j) {
  SignedPermutationGroup g;
  g.m1 = j.at("m1").get<int>();
  g.m2 = j.at("m2").get<int>();
  for (const auto& e : j.at("generators")) {
    GroupElement el;
    for (const auto& v : e.at("rows"))
      el.row.img.push_back(v.get<std::int32_t>());
    for (const auto& v : e.at("cols"))
      el.col.img.push_back(v.get<std::int32_t>());
    el.row.validate();
    el.col.validate();
    g.generators.push_back(el);
  }
  return g;
}

ExactMat read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open instance file: " + path);
  // Peek: JSON object or plain text?
  char c = 0;
  in >> c;
  in.putback(c);
  if (c == '{') {
    json j;
    in >> j;
    return exact_mat_from_json(j);
  }
  long m1 = 0, m2 = 0;
  if (!(in >> m1 >> m2) || m1 < 1 || m2 < 1)
    throw parse_error("instance file: expected 'm1 m2' header", 1, 0);
  ExactMat m(static_cast<int>(m1), static_cast<int>(m2));
  for (long i = 0; i < m1 * m2; ++i) {
    std::string tok;
    if (!(in >> tok))
      throw parse_error("instance file: expected " + std::to_string(m1 * m2) +
                            " numbers",
                        1 + i, 0);
    // Integers are kept exact; decimals go through best rational recovery.
    try {
      if (tok.find_first_of(".eE") == std::string::npos) {
        m.data()[static_cast<std::size_t>(i)] =
            ExactScalar(Rational(BigInt::from_string(tok), BigInt(1)));
      } else {
        double v = std::stod(tok);
        m.data()[static_cast<std::size_t>(i)] =
            ExactScalar(rationalize(v, 1000000000000ll));
      }
    } catch (const domain_error&) {
      throw parse_error("instance file: bad token '" + tok + "'", 1 + i, 0);
    } catch (const std::exception&) {
      throw parse_error("instance file: bad token '" + tok + "'", 1 + i, 0);
    }
  }
  return m;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write file: " + path);
  out << j.dump(1) << "\n";
}

}  // namespace kgd
