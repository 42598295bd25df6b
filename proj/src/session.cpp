#include "gradec/session.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gradec/error.hpp"
#include "gradec/fixture_data.hpp"
#include "gradec/parse.hpp"

namespace gradec {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "gradec-session";

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, path + ": " + what);
}

// Runs f, prefixing any library error with the JSON path it came from.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

void check_keys(const Json& obj, const std::string& path, const std::vector<std::string>& required,
                const std::vector<std::string>& optional) {
  if (!obj.is_object()) schema(path, "expected an object");
  std::vector<std::string> missing;
  for (const auto& k : required)
    if (!obj.contains(k)) missing.push_back(k);
  if (!missing.empty()) {
    std::string list;
    for (const auto& k : missing) list += (list.empty() ? "" : ", ") + k;
    schema(path, "missing required keys: " + list);
  }
  for (const auto& [k, v] : obj.items())
    if (std::find(required.begin(), required.end(), k) == required.end() &&
        std::find(optional.begin(), optional.end(), k) == optional.end())
      schema(path, "unknown key '" + k + "'");
}

std::string get_string(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = obj.at(key);
  if (!v.is_string()) schema(path + "." + key, "expected a string");
  return v.get<std::string>();
}

bool valid_label(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string coefficient_text(const Json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  schema(path, "expected a coefficient string or an integer");
}

Scalar parse_coefficient(const Json& v, const Ring& ring, const std::string& path, ParseOptions options = {}) {
  const std::string text = coefficient_text(v, path);
  return at_path(path, [&] { return parse_scalar(text, ring, options); });
}

std::vector<std::string> string_list(const Json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) schema(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::vector<int> int_list(const Json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) schema(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(v[i].get<int>());
  }
  return out;
}

void require_unique(const std::vector<std::string>& names, const std::string& path, const std::string& what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error(ErrorKind::ValidationError, path + ": duplicate " + what + " '" + n + "'");
}

AlgebraPtr parse_algebra(const Json& j, const Ring& ring) {
  const std::string path = "algebra";
  check_keys(j, path, {"name", "basis", "degrees", "unit", "products"}, {});
  const std::string name = get_string(j, "name", path);
  const auto basis = string_list(j.at("basis"), path + ".basis");
  const auto degrees = int_list(j.at("degrees"), path + ".degrees");
  const std::string unit = get_string(j, "unit", path);
  if (basis.empty()) schema(path + ".basis", "the basis is empty");
  for (const auto& b : basis)
    if (!valid_label(b)) schema(path + ".basis", "label '" + b + "' must be letters, digits and '_'");
  require_unique(basis, path + ".basis", "basis label");
  if (degrees.size() != basis.size())
    schema(path + ".degrees", "has " + std::to_string(degrees.size()) + " entries for " + std::to_string(basis.size()) +
                                  " basis elements");
  auto index = [&](const std::string& label, const std::string& where) {
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end()) throw Error(ErrorKind::UnknownName, where + ": '" + label + "' is not a basis label");
    return static_cast<std::size_t>(it - basis.begin());
  };
  const std::size_t u = index(unit, path + ".unit");
  const Json& prods = j.at("products");
  if (!prods.is_object()) schema(path + ".products", "expected an object keyed by \"a*b\"");
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> table;
  for (const auto& [key, value] : prods.items()) {
    const std::string ppath = path + ".products[\"" + key + "\"]";
    const auto star = key.find('*');
    if (star == std::string::npos || key.find('*', star + 1) != std::string::npos)
      schema(ppath, "key must have the form \"a*b\"");
    const std::size_t a = index(key.substr(0, star), ppath), b = index(key.substr(star + 1), ppath);
    if (a == u || b == u) schema(ppath, "products with the unit are implied and may not be given");
    if (!value.is_object()) schema(ppath, "expected an object mapping basis labels to coefficients");
    std::map<std::size_t, Scalar> row;
    for (const auto& [label, coeff] : value.items()) {
      // structure constants live in A: no division
      Scalar c = parse_coefficient(coeff, ring, ppath + "." + label, ParseOptions{false});
      if (!c.is_zero()) row[index(label, ppath)] = c;
    }
    table[{a, b}] = std::move(row);
  }
  return std::make_shared<GradedAlgebra>(make_algebra(name, ring, basis, degrees, unit, table));
}

Specialization parse_specialization(const Json& j, const Ring& ring, const std::string& path) {
  check_keys(j, path, {"name", "target", "assignments"}, {});
  const std::string name = get_string(j, "name", path);
  const Ring target = at_path(path + ".target", [&] { return parse_ring(get_string(j, "target", path)); });
  const Json& asg = j.at("assignments");
  if (!asg.is_object()) schema(path + ".assignments", "expected an object mapping variables to values");
  std::map<std::string, Scalar> values;
  for (const auto& [var, v] : asg.items()) values.emplace(var, parse_coefficient(v, target, path + ".assignments." + var));
  return at_path(path, [&] { return make_specialization(name, ring, target, values); });
}

GradedModuleRep parse_module(const Json& j, const Session& s, const std::string& path, std::string& over) {
  check_keys(j, path, {"name", "degrees", "action"}, {"over"});
  GradedModuleRep mod;
  mod.name = get_string(j, "name", path);
  over = j.contains("over") ? get_string(j, "over", path) : "K";
  if (over == "K") {
    mod.algebra = s.algebra;
    mod.field = s.generic_field();
  } else {
    mod.algebra = at_path(path + ".over", [&] { return s.specialized_algebra(over); });
    mod.field = mod.algebra->ring;
  }
  mod.degrees = int_list(j.at("degrees"), path + ".degrees");
  const std::size_t d = mod.degrees.size();
  const Json& action = j.at("action");
  if (!action.is_object()) schema(path + ".action", "expected an object keyed by basis label");
  const GradedAlgebra& alg = *mod.algebra;
  for (const auto& [label, m] : action.items())
    if (std::find(alg.basis.begin(), alg.basis.end(), label) == alg.basis.end())
      throw Error(ErrorKind::UnknownName, path + ".action: '" + label + "' is not a basis label");
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    const std::string& label = alg.basis[b];
    const std::string mpath = path + ".action." + label;
    if (!action.contains(label)) {
      if (b == alg.unit) {
        mod.action.push_back(Matrix::identity(mod.field, d));
        continue;
      }
      schema(path + ".action", "no matrix for basis element '" + label + "'");
    }
    const Json& rows = action.at(label);
    if (!rows.is_array() || rows.size() != d)
      schema(mpath, "expected " + std::to_string(d) + " rows (one per module basis vector)");
    Matrix m(mod.field, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      if (!rows[r].is_array() || rows[r].size() != d)
        schema(mpath + "[" + std::to_string(r) + "]", "expected " + std::to_string(d) + " entries");
      for (std::size_t c = 0; c < d; ++c)
        m(r, c) = parse_coefficient(rows[r][c], mod.field, mpath + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    mod.action.push_back(std::move(m));
  }
  return mod;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const GradedModuleRep& Session::module(const std::string& n) const {
  for (const auto& m : modules)
    if (m.name == n) return m;
  throw Error(ErrorKind::UnknownName, "session " + name + " has no module '" + n + "'");
}

const Specialization& Session::specialization(const std::string& n) const {
  for (const auto& s : specializations)
    if (s.name == n) return s;
  throw Error(ErrorKind::UnknownName, "session " + name + " has no specialization '" + n + "'");
}

AlgebraPtr Session::specialized_algebra(const std::string& spec) const {
  auto it = specialized.find(spec);
  if (it == specialized.end()) throw Error(ErrorKind::UnknownName, "session " + name + " has no specialization '" + spec + "'");
  return it->second;
}

std::vector<GradedModuleRep> Session::generic_modules() const {
  std::vector<GradedModuleRep> out;
  for (std::size_t i = 0; i < modules.size(); ++i)
    if (module_over[i] == "K") out.push_back(modules[i]);
  return out;
}

SpecializationTower Session::tower(const std::string& n) const {
  for (const auto& t : towers) {
    if (t.name != n) continue;
    const Specialization& theta = specialization(t.theta);
    const Specialization& theta_prime = specialization(t.theta_prime);
    const Ring b = t.intermediate == "L" ? theta.target() : parse_ring(t.intermediate);
    return make_tower(t.name, theta, theta_prime, b, algebra.get());
  }
  throw Error(ErrorKind::UnknownName, "session " + name + " has no tower '" + n + "'");
}

Session parse_session(const std::string& text, const std::string& origin, bool validate) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, origin + ": invalid JSON: " + e.what());
  }
  check_keys(j, origin, {"name", "ring", "algebra"},
             {"format", "version", "description", "modules", "specializations", "towers"});
  if (j.contains("format") && j.at("format") != kFormat) schema(origin + ".format", std::string("expected \"") + kFormat + "\"");
  if (j.contains("version") && j.at("version") != 1) schema(origin + ".version", "only version 1 is supported");
  Session s;
  s.name = get_string(j, "name", origin);
  if (j.contains("description")) s.description = get_string(j, "description", origin);
  s.ring = at_path("ring", [&] {
    const Json& r = j.at("ring");
    if (!r.is_string()) schema("ring", "expected a ring string such as \"ZZ[v^+-1]\"");
    return parse_ring(r.get<std::string>());
  });
  s.algebra = parse_algebra(j.at("algebra"), s.ring);

  const Json empty = Json::array();
  const Json& specs = j.contains("specializations") ? j.at("specializations") : empty;
  if (!specs.is_array()) schema("specializations", "expected an array");
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string path = "specializations[" + std::to_string(i) + "]";
    s.specializations.push_back(parse_specialization(specs[i], s.ring, path));
    const Specialization& sp = s.specializations.back();
    s.specialized.emplace(sp.name, at_path(path, [&] { return std::make_shared<GradedAlgebra>(specialize_algebra(*s.algebra, sp)); }));
  }
  {
    std::vector<std::string> names;
    for (const auto& sp : s.specializations) names.push_back(sp.name);
    require_unique(names, "specializations", "specialization");
  }

  const Json& mods = j.contains("modules") ? j.at("modules") : empty;
  if (!mods.is_array()) schema("modules", "expected an array");
  for (std::size_t i = 0; i < mods.size(); ++i) {
    std::string over;
    s.modules.push_back(parse_module(mods[i], s, "modules[" + std::to_string(i) + "]", over));
    s.module_over.push_back(over);
  }
  {
    std::vector<std::string> names;
    for (const auto& m : s.modules) names.push_back(m.name);
    require_unique(names, "modules", "module");
  }

  const Json& towers = j.contains("towers") ? j.at("towers") : empty;
  if (!towers.is_array()) schema("towers", "expected an array");
  for (std::size_t i = 0; i < towers.size(); ++i) {
    const std::string path = "towers[" + std::to_string(i) + "]";
    check_keys(towers[i], path, {"name", "theta", "theta_prime", "intermediate"}, {});
    TowerSpec t{get_string(towers[i], "name", path), get_string(towers[i], "theta", path),
                get_string(towers[i], "theta_prime", path), get_string(towers[i], "intermediate", path)};
    at_path(path, [&] {
      s.specialization(t.theta);
      s.specialization(t.theta_prime);
      if (t.intermediate != "L") parse_ring(t.intermediate);
      return 0;
    });
    s.towers.push_back(std::move(t));
  }
  {
    std::vector<std::string> names;
    for (const auto& t : s.towers) names.push_back(t.name);
    require_unique(names, "towers", "tower");
  }

  if (validate) {
    std::string list;
    for (const auto& [what, report] : validate_session(s))
      for (const auto& v : report.violations) list += "\n  " + what + ": " + v;
    if (!list.empty()) throw Error(ErrorKind::ValidationError, origin + " fails validation:" + list);
  }
  return s;
}

Session load_session_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str(), path, validate);
}

std::vector<std::pair<std::string, ValidationReport>> validate_session(const Session& s) {
  std::vector<std::pair<std::string, ValidationReport>> out;
  out.emplace_back("algebra " + s.algebra->name, validate_algebra(*s.algebra));
  for (const auto& m : s.modules) {
    ValidationReport r;
    if (m.degrees.size() != m.dim()) r.add("degree vector has the wrong length");
    else r = validate_module(m);
    out.emplace_back("module " + m.name, std::move(r));
  }
  return out;
}

std::string emit_session(const Session& s) {
  Json j;
  j["format"] = kFormat;
  j["version"] = 1;
  j["name"] = s.name;
  if (!s.description.empty()) j["description"] = s.description;
  j["ring"] = s.ring->to_string();
  const GradedAlgebra& alg = *s.algebra;
  Json a;
  a["name"] = alg.name;
  a["basis"] = alg.basis;
  a["degrees"] = alg.degrees;
  a["unit"] = alg.basis[alg.unit];
  Json prods = Json::object();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      if (i == alg.unit || k == alg.unit) continue;
      Json row = Json::object();
      for (std::size_t m = 0; m < alg.dim(); ++m)
        if (!alg.products[i][k][m].is_zero()) row[alg.basis[m]] = to_string(alg.products[i][k][m]);
      if (!row.empty()) prods[alg.basis[i] + "*" + alg.basis[k]] = std::move(row);
    }
  a["products"] = std::move(prods);
  j["algebra"] = std::move(a);
  Json mods = Json::array();
  for (std::size_t i = 0; i < s.modules.size(); ++i) {
    const auto& m = s.modules[i];
    Json mj;
    mj["name"] = m.name;
    if (s.module_over[i] != "K") mj["over"] = s.module_over[i];
    mj["degrees"] = m.degrees;
    Json act = Json::object();
    for (std::size_t b = 0; b < m.algebra->dim(); ++b)
      if (b != m.algebra->unit) act[m.algebra->basis[b]] = matrix_json(m.action[b]);
    mj["action"] = std::move(act);
    mods.push_back(std::move(mj));
  }
  j["modules"] = std::move(mods);
  Json specs = Json::array();
  for (const auto& sp : s.specializations) {
    Json sj;
    sj["name"] = sp.name;
    sj["target"] = sp.target()->to_string();
    Json asg = Json::object();
    for (const auto& [var, v] : sp.hom.images) asg[var] = to_string(v);
    sj["assignments"] = std::move(asg);
    specs.push_back(std::move(sj));
  }
  j["specializations"] = std::move(specs);
  Json towers = Json::array();
  for (const auto& t : s.towers)
    towers.push_back(Json{{"name", t.name}, {"theta", t.theta}, {"theta_prime", t.theta_prime}, {"intermediate", t.intermediate}});
  j["towers"] = std::move(towers);
  return j.dump(2) + "\n";
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : generated::fixtures) out.emplace_back(name);
  return out;
}

const std::string& fixture_text(const std::string& name) {
  static const std::map<std::string, std::string> texts = [] {
    std::map<std::string, std::string> m;
    for (const auto& [n, t] : generated::fixtures) m.emplace(std::string(n), std::string(t));
    return m;
  }();
  auto it = texts.find(name);
  if (it == texts.end()) {
    std::string known;
    for (const auto& [n, t] : texts) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::UnknownFixture, "no fixture '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

Session load_fixture(const std::string& name, bool validate) {
  return parse_session(fixture_text(name), "fixture " + name, validate);
}

}  // namespace gradec
