#include "omegalie/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "omegalie/catalog.hpp"

namespace omegalie {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::size_t index_in(const std::vector<std::string>& basis, const std::string& name) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == name) return i;
  throw ParseError("unknown basis element '" + name + "'");
}

// Collects entries for unordered pairs so reversed duplicates can be
// checked against each other.
template <class T>
void record(std::map<std::pair<std::size_t, std::size_t>, T>& seen, std::size_t i, std::size_t j, const T& value,
            const std::string& what) {
  auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  T oriented = value;
  if (i > j) oriented = -value;
  auto [it, inserted] = seen.emplace(key, oriented);
  if (!inserted && !(it->second == oriented)) throw ValidationError("inconsistent " + what + " entries");
}

}  // namespace

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a literal string or an integer, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  return to_string(s);
}

OmegaAlgebra algebra_from_json(const json& j) {
  try {
    const json& basis_j = field(j, "basis");
    if (!basis_j.is_array()) throw ParseError("'basis' must be an array");
    std::vector<std::string> basis;
    for (const auto& b : basis_j) {
      if (!b.is_string()) throw ParseError("basis names must be strings");
      basis.push_back(b.get<std::string>());
    }
    const json& dim_j = field(j, "dim");
    if (!dim_j.is_number_unsigned()) throw ParseError("'dim' must be a nonnegative integer");
    if (dim_j.get<std::size_t>() != basis.size()) throw ValidationError("'dim' does not match the basis length");
    const std::size_t n = basis.size();

    std::map<std::pair<std::size_t, std::size_t>, Vector> brackets;
    if (j.contains("brackets")) {
      for (const auto& e : j.at("brackets")) {
        const std::size_t a = index_in(basis, string_field(e, "lhs"));
        const std::size_t b = index_in(basis, string_field(e, "rhs"));
        if (a == b) throw ValidationError("bracket of an element with itself must be zero");
        const json& v = field(e, "value");
        if (!v.is_object()) throw ParseError("bracket value must be an object of coefficients");
        Vector coeffs(n);
        for (auto it = v.begin(); it != v.end(); ++it) coeffs[index_in(basis, it.key())] += scalar_from_json(it.value());
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        Vector oriented = coeffs;
        if (a > b)
          for (auto& s : oriented) s = -s;
        auto [pos, inserted] = brackets.emplace(key, oriented);
        if (!inserted && !(pos->second == oriented)) throw ValidationError("inconsistent bracket entries");
      }
    }
    std::map<std::pair<std::size_t, std::size_t>, Scalar> omegas;
    if (j.contains("omega")) {
      for (const auto& e : j.at("omega")) {
        const std::size_t a = index_in(basis, string_field(e, "lhs"));
        const std::size_t b = index_in(basis, string_field(e, "rhs"));
        if (a == b) throw ValidationError("omega of an element with itself must be zero");
        record(omegas, a, b, scalar_from_json(field(e, "value")), "omega");
      }
    }

    std::vector<Scalar> c(n * n * n);
    for (const auto& [key, v] : brackets) {
      for (std::size_t k = 0; k < n; ++k) {
        c[(key.first * n + key.second) * n + k] = v[k];
        c[(key.second * n + key.first) * n + k] = -v[k];
      }
    }
    Matrix omega(n, n);
    for (const auto& [key, v] : omegas) {
      omega(key.first, key.second) = v;
      omega(key.second, key.first) = -v;
    }
    return {std::move(basis), std::move(c), std::move(omega)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
}

json algebra_to_json(const OmegaAlgebra& g) {
  json out;
  out["dim"] = g.dim();
  out["basis"] = g.basis();
  json brackets = json::array();
  json omega = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      json value = json::object();
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!g.c(i, j, k).is_zero()) value[g.name(k)] = scalar_to_json(g.c(i, j, k));
      if (!value.empty()) brackets.push_back({{"lhs", g.name(i)}, {"rhs", g.name(j)}, {"value", value}});
      if (!g.omega()(i, j).is_zero()) {
        omega.push_back({{"lhs", g.name(i)}, {"rhs", g.name(j)}, {"value", scalar_to_json(g.omega()(i, j))}});
      }
    }
  }
  out["brackets"] = brackets;
  out["omega"] = omega;
  return out;
}

Matrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? field(j, "matrix") : j;
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t r = rows.size();
  std::size_t c = 0;
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array()) throw ParseError("matrix rows must be arrays");
    if (i == 0) c = rows[i].size();
    if (rows[i].size() != c) throw ParseError("matrix rows have different lengths");
    for (const auto& x : rows[i]) entries.push_back(scalar_from_json(x));
  }
  return {r, c, std::move(entries)};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

ModuleFile module_from_json(const json& j, const OmegaAlgebra& g) {
  try {
    ModuleFile f;
    if (j.contains("algebra")) {
      const json& a = j.at("algebra");
      f.algebra = a.is_string() ? a.get<std::string>() : a.dump();
    }
    const json& dim_j = field(j, "dim");
    if (!dim_j.is_number_unsigned()) throw ParseError("'dim' must be a nonnegative integer");
    const std::size_t m = dim_j.get<std::size_t>();
    f.action.dim = m;
    f.action.actions.assign(g.dim(), Matrix(m, m));
    const json& actions = field(j, "actions");
    if (!actions.is_object()) throw ParseError("'actions' must map basis names to matrices");
    for (auto it = actions.begin(); it != actions.end(); ++it) {
      Matrix a = matrix_from_json(it.value());
      if (a.rows() != m || a.cols() != m) {
        throw DimensionMismatch("action of '" + it.key() + "' is not " + std::to_string(m) + "x" + std::to_string(m));
      }
      f.action.actions[index_in(g.basis(), it.key())] = std::move(a);
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed module document: ") + e.what());
  }
}

json module_to_json(const OmegaAlgebra& g, const ModuleAction& m) {
  json out;
  out["dim"] = m.dim;
  json actions = json::object();
  for (std::size_t i = 0; i < g.dim(); ++i) actions[g.name(i)] = matrix_to_json(m.actions.at(i));
  out["actions"] = actions;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

OmegaAlgebra resolve_algebra(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return algebra_from_json(read_json_file(source));
  return build(parse_key(source));
}

}  // namespace omegalie
