#include "gradec/cli.hpp"

#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradec/decomp.hpp"
#include "gradec/error.hpp"
#include "gradec/session.hpp"

namespace gradec {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string session_path;
  std::string fixture;
  std::string format = "text";
  std::uint64_t seed = 0;
  int depth = 2;
  std::size_t max_dim = 64;
  std::vector<std::string> modules;
  std::string spec;
  std::string tower;
  std::string show;

  bool json() const { return format == "json"; }
  SimplesOptions options() const { return {seed, max_dim, depth}; }
};

Json class_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.rational().get_num().get_si();
  return j;
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

Json action_json(const ModuleRep& m) {
  Json j = Json::object();
  for (std::size_t b = 0; b < m.algebra->dim(); ++b) j[m.algebra->basis[b]] = matrix_json(m.action[b]);
  return j;
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r].push_back(to_string(m(r, c)));
      width = std::max(width, cells[r].back().size());
    }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << indent << "[";
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "  " : "") << std::setw(static_cast<int>(width)) << row[c];
    out << "]\n";
  }
  return out.str();
}

std::string table_text(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                       const std::vector<std::vector<std::string>>& cells) {
  std::size_t first = 0;
  for (const auto& r : rows) first = std::max(first, r.size());
  std::vector<std::size_t> width;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t w = cols[c].size();
    for (const auto& row : cells) w = std::max(w, row[c].size());
    width.push_back(w);
  }
  std::ostringstream out;
  out << "  " << std::string(first, ' ');
  for (std::size_t c = 0; c < cols.size(); ++c) out << "  " << std::left << std::setw(static_cast<int>(width[c])) << cols[c];
  out << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << "  " << std::left << std::setw(static_cast<int>(first)) << rows[r];
    for (std::size_t c = 0; c < cols.size(); ++c) out << "  " << std::left << std::setw(static_cast<int>(width[c])) << cells[r][c];
    out << "\n";
  }
  return out.str();
}

std::string degrees_text(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + ")";
}

std::vector<GradedModuleRep> selected_modules(const Session& s, const Flags& f) {
  if (f.modules.empty()) return s.generic_modules();
  std::vector<GradedModuleRep> out;
  for (const auto& n : f.modules) out.push_back(s.module(n));
  return out;
}

std::string q1_cell(long v) { return std::to_string(v); }

Json decomp_json(const GradedDecompMatrix& d, const std::vector<std::vector<long>>& q1) {
  Json j;
  j["theta"] = d.theta;
  j["rows"] = d.rows;
  j["cols"] = d.cols;
  j["row_dims"] = d.row_dims;
  j["col_dims"] = d.col_dims;
  Json m = Json::array();
  for (const auto& row : d.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(class_json(e));
    m.push_back(std::move(r));
  }
  j["matrix"] = std::move(m);
  j["q1"] = q1;
  Json meta;
  meta["normalization"] = d.normalization;
  meta["seed"] = d.seed;
  Json resc = Json::array();
  for (std::size_t r = 0; r < d.rescalings.size(); ++r) {
    Json x;
    x["module"] = d.rows[r];
    Json scale = Json::array();
    for (const auto& s : d.rescalings[r].scale) scale.push_back(to_string(s));
    x["scale"] = std::move(scale);
    x["steps"] = d.rescalings[r].steps;
    resc.push_back(std::move(x));
  }
  meta["rescalings"] = std::move(resc);
  j["metadata"] = std::move(meta);
  return j;
}

std::string decomp_text(const std::string& title, const GradedDecompMatrix& d, const std::vector<std::vector<long>>& q1) {
  std::vector<std::vector<std::string>> cells, cells1;
  for (std::size_t r = 0; r < d.entries.size(); ++r) {
    cells.emplace_back();
    cells1.emplace_back();
    for (std::size_t c = 0; c < d.entries[r].size(); ++c) {
      cells.back().push_back(to_string(d.entries[r][c]));
      cells1.back().push_back(q1_cell(q1[r][c]));
    }
  }
  std::vector<std::string> rows, cols;
  for (std::size_t r = 0; r < d.rows.size(); ++r) rows.push_back(d.rows[r] + " [" + std::to_string(d.row_dims[r]) + "]");
  for (std::size_t c = 0; c < d.cols.size(); ++c) cols.push_back(d.cols[c] + " [" + std::to_string(d.col_dims[c]) + "]");
  return title + "\n" + table_text(rows, cols, cells) + "at q = 1:\n" + table_text(rows, cols, cells1);
}

Json simples_json(const SimpleSet& set) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& s = set.simples[i];
    Json j;
    j["name"] = s.name;
    j["dim"] = s.dim();
    j["degrees"] = s.degrees;
    Json chi = Json::array();
    for (const auto& c : set.characters[i]) chi.push_back(to_string(c));
    j["character"] = std::move(chi);
    j["action"] = action_json(s);
    arr.push_back(std::move(j));
  }
  return arr;
}

int cmd_validate(const Session& s, const Flags& f, std::ostream& out) {
  const auto reports = validate_session(s);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& [what, report] : reports) {
    ok = ok && report.ok();
    if (f.json()) {
      arr.push_back(Json{{"object", what}, {"ok", report.ok()}, {"violations", report.violations}});
    } else {
      out << what << ": " << (report.ok() ? "ok" : std::to_string(report.violations.size()) + " violation(s)") << "\n";
      for (const auto& v : report.violations) out << "  - " << v << "\n";
    }
  }
  if (f.json()) out << Json{{"command", "validate"}, {"session", s.name}, {"ok", ok}, {"reports", arr}}.dump() << "\n";
  return ok ? 0 : 1;
}

int cmd_character(const Session& s, const Flags& f, std::ostream& out) {
  Json arr = Json::array();
  for (const auto& m : selected_modules(s, f)) {
    const GradedCharacter chi = graded_character(m);
    Json values = Json::object();
    if (!f.json()) out << "graded character of " << m.name << " (degrees " << degrees_text(m.degrees) << "):\n";
    for (std::size_t b = 0; b < chi.basis.size(); ++b) {
      Json terms = Json::object();
      for (const auto& [e, c] : chi.values[b].terms()) terms[std::to_string(e)] = to_string(c);
      values[chi.basis[b]] = std::move(terms);
      if (!f.json()) out << "  " << chi.basis[b] << ": " << to_string(chi.values[b]) << "\n";
    }
    arr.push_back(Json{{"module", m.name}, {"character", values}});
  }
  if (f.json()) out << Json{{"command", "character"}, {"session", s.name}, {"modules", arr}}.dump() << "\n";
  return 0;
}

int cmd_fingerprint(const Session& s, const Flags& f, std::ostream& out) {
  Json arr = Json::array();
  for (const auto& m : selected_modules(s, f)) {
    const Fingerprint fp = fingerprint(m, default_evaluation_set(*m.algebra, f.depth));
    Json elems = Json::array();
    if (!f.json()) out << "fingerprint of " << m.name << ":\n";
    for (std::size_t h = 0; h < fp.labels.size(); ++h) {
      Json polys = Json::object();
      for (const auto& [d, p] : fp.polys[h]) {
        polys[std::to_string(d)] = to_string(p);
        if (!f.json()) out << "  " << fp.labels[h] << ", degree " << d << ": " << to_string(p) << "\n";
      }
      elems.push_back(Json{{"element", fp.labels[h]}, {"charpolys", polys}});
    }
    arr.push_back(Json{{"module", m.name}, {"elements", elems}});
  }
  if (f.json()) out << Json{{"command", "fingerprint"}, {"session", s.name}, {"modules", arr}}.dump() << "\n";
  return 0;
}

const Specialization& require_spec(const Session& s, const Flags& f) {
  if (f.spec.empty()) throw Error(ErrorKind::SchemaError, "this command needs --spec");
  return s.specialization(f.spec);
}

int cmd_specialize(const Session& s, const Flags& f, std::ostream& out) {
  const Specialization& theta = require_spec(s, f);
  const AlgebraPtr lh = s.specialized_algebra(theta.name);
  Json arr = Json::array();
  bool integral = true;
  for (const auto& m : selected_modules(s, f)) {
    const ModuleReduction r = reduce_module(m, theta, lh);
    const ValidationReport integ = check_integrality(fingerprint(m, default_evaluation_set(*m.algebra, f.depth)), s.ring);
    integral = integral && integ.ok();
    if (f.json()) {
      Json scale = Json::array();
      for (const auto& x : r.rescaling.scale) scale.push_back(to_string(x));
      arr.push_back(Json{{"module", m.name},
                         {"scale", scale},
                         {"steps", r.rescaling.steps},
                         {"degrees", r.reduced.degrees},
                         {"lattice", action_json(r.lattice)},
                         {"reduced", action_json(r.reduced)},
                         {"integral", integ.ok()},
                         {"integrality_violations", integ.violations}});
    } else {
      out << m.name << " at " << theta.name << " (into " << theta.target()->to_string() << ")\n";
      out << "  basis scaling:";
      for (const auto& x : r.rescaling.scale) out << " " << to_string(x);
      out << "\n";
      for (const auto& st : r.rescaling.steps) out << "    " << st << "\n";
      out << "  degrees " << degrees_text(r.reduced.degrees) << "\n";
      for (std::size_t b = 0; b < lh->dim(); ++b) out << "  " << lh->basis[b] << ":\n" << matrix_text(r.reduced.action[b], "    ");
      out << "  fingerprint coefficients in " << s.ring->to_string() << ": " << (integ.ok() ? "yes" : "no") << "\n";
      for (const auto& v : integ.violations) out << "    - " << v << "\n";
    }
  }
  if (f.json())
    out << Json{{"command", "specialize"}, {"session", s.name}, {"theta", theta.name}, {"modules", arr}}.dump() << "\n";
  return integral ? 0 : 2;
}

int cmd_simples(const Session& s, const Flags& f, std::ostream& out) {
  AlgebraPtr alg = f.spec.empty() ? s.algebra : s.specialized_algebra(f.spec);
  const auto rad = radical(*alg);
  const SimpleSet set = compute_simples(alg, f.options());
  const bool split = check_split(alg, f.options());
  if (f.json()) {
    out << Json{{"command", "simples"},
                {"session", s.name},
                {"algebra", alg->name},
                {"field", alg->ring->to_string()},
                {"radical_dimension", rad.size()},
                {"split", split},
                {"normalization", "minimal degree 0"},
                {"simples", simples_json(set)}}
               .dump()
        << "\n";
  } else {
    out << "algebra " << alg->name << " over " << alg->ring->to_string() << "\n";
    out << "  radical dimension " << rad.size() << ", split: " << (split ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
      const auto& m = set.simples[i];
      out << "  " << m.name << ": dimension " << m.dim() << ", degrees " << degrees_text(m.degrees) << ", character (";
      for (std::size_t b = 0; b < set.characters[i].size(); ++b) out << (b ? ", " : "") << to_string(set.characters[i][b]);
      out << ")\n";
    }
  }
  return 0;
}

int cmd_decompose(const Session& s, const Flags& f, std::ostream& out) {
  const Specialization& theta = require_spec(s, f);
  const AlgebraPtr lh = s.specialized_algebra(theta.name);
  const SimpleSet set = compute_simples(lh, f.options());
  const GradedDecompMatrix d = decomposition_matrix(theta, selected_modules(s, f), set, f.options());
  const auto q1 = evaluate_q1(d);
  if (f.json()) {
    Json j{{"command", "decompose"}, {"session", s.name}};
    const Json body = decomp_json(d, q1);
    for (const auto& [k, v] : body.items()) j[k] = v;
    out << j.dump() << "\n";
  } else {
    out << decomp_text("graded decomposition matrix at " + theta.name + " (into " + theta.target()->to_string() + ")", d, q1);
    out << "grading: " << d.normalization << "\n";
    for (std::size_t i = 0; i < set.size(); ++i)
      out << "  " << set.simples[i].name << ": degrees " << degrees_text(set.simples[i].degrees) << "\n";
  }
  return 0;
}

int cmd_diagram(const Session& s, const Flags& f, std::ostream& out) {
  const Specialization& theta = require_spec(s, f);
  const SimpleSet set = compute_simples(s.specialized_algebra(theta.name), f.options());
  const DiagramReport report = verify_diagram(theta, selected_modules(s, f), set, f.options());
  if (f.json()) {
    out << Json{{"command", "diagram"}, {"session", s.name}, {"theta", theta.name}, {"ok", report.ok()},
                {"checks", report.lines}, {"failures", report.failures}}
               .dump()
        << "\n";
  } else {
    for (const auto& l : report.lines) out << "ok   " << l << "\n";
    for (const auto& l : report.failures) out << "FAIL " << l << "\n";
    out << (report.ok() ? "PASS" : "FAIL") << ": diagram commutes for " << theta.name << "\n";
  }
  return report.ok() ? 0 : 2;
}

int cmd_factorcheck(const Session& s, const Flags& f, std::ostream& out) {
  if (f.tower.empty()) throw Error(ErrorKind::SchemaError, "factorcheck needs --tower");
  const SpecializationTower tower = s.tower(f.tower);
  const FactorizationReport r = factorization_check(tower, s.algebra, s.generic_modules(), f.options());
  const auto q1a = evaluate_q1(r.d_theta), q1b = evaluate_q1(r.d_theta_prime), q1c = evaluate_q1(r.d_phi);
  if (f.json()) {
    Json prod = Json::array();
    for (const auto& row : r.product) {
      Json jr = Json::array();
      for (const auto& e : row) jr.push_back(class_json(e));
      prod.push_back(std::move(jr));
    }
    out << Json{{"command", "factorcheck"},
                {"session", s.name},
                {"tower", tower.name},
                {"intermediate", tower.intermediate->to_string()},
                {"ok", true},
                {"d_theta", decomp_json(r.d_theta, q1a)},
                {"d_theta_prime", decomp_json(r.d_theta_prime, q1b)},
                {"d_theta_theta_prime", decomp_json(r.d_phi, q1c)},
                {"product", prod}}
               .dump()
        << "\n";
  } else {
    out << decomp_text("D_theta (" + tower.theta.name + "):", r.d_theta, q1a);
    out << decomp_text("D_theta' (" + tower.theta_prime.name + "):", r.d_theta_prime, q1b);
    out << decomp_text("D_theta,theta' (through " + tower.intermediate->to_string() + "):", r.d_phi, q1c);
    out << "PASS: D_θ′ = D_{θ,θ′}·D_θ (rows are source simples, so the matrix product is D_θ·D_{θ,θ′})\n";
  }
  return 0;
}

int cmd_fixtures(const Flags& f, std::ostream& out) {
  if (!f.show.empty()) {
    out << fixture_text(f.show);
    return 0;
  }
  Json arr = Json::array();
  for (const auto& n : fixture_names()) {
    const Session s = load_fixture(n, false);
    if (f.json())
      arr.push_back(Json{{"name", n}, {"description", s.description}});
    else
      out << n << ": " << s.description << "\n";
  }
  if (f.json()) out << Json{{"command", "fixtures"}, {"fixtures", arr}}.dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Graded decomposition matrices of graded algebras under specializations", "gradec"};
  app.require_subcommand(1);
  auto* src = app.add_option_group("session");
  src->add_option("--session", f.session_path, "session file (JSON)");
  src->add_option("--fixture", f.fixture, "embedded fixture name");
  src->require_option(0, 1);
  app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", f.seed, "seed for random splitting elements");
  app.add_option("--depth", f.depth, "maximal word length of evaluation elements")->check(CLI::Range(1, 4));
  app.add_option("--max-dim", f.max_dim, "largest module dimension handled");

  auto sub = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    return c;
  };
  auto* validate = sub("validate", "check the algebra and module axioms");
  auto* character = sub("character", "graded characters of modules");
  auto* fp = sub("fingerprint", "characteristic polynomials of degree-zero elements on graded pieces");
  auto* specialize = sub("specialize", "lattice and modular reduction of modules");
  auto* simples = sub("simples", "simple modules of the algebra or of a specialization");
  auto* decompose = sub("decompose", "graded decomposition matrix");
  auto* diagram = sub("diagram", "compare fingerprints before and after reduction");
  auto* factor = sub("factorcheck", "factorization of decomposition matrices along a tower");
  auto* fixtures = sub("fixtures", "list the embedded fixtures");
  for (auto* c : {character, fp, specialize, decompose, diagram}) c->add_option("--module", f.modules, "module name (repeatable)");
  specialize->add_option("--spec", f.spec, "specialization")->required();
  simples->add_option("--spec", f.spec, "specialization (default: the algebra itself)");
  decompose->add_option("--spec", f.spec, "specialization")->required();
  diagram->add_option("--spec", f.spec, "specialization")->required();
  factor->add_option("--tower", f.tower, "tower")->required();
  fixtures->add_option("--show", f.show, "print one fixture");

  std::vector<const char*> argv{"gradec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (fixtures->parsed()) return cmd_fixtures(f, out);
    if (f.session_path.empty() && f.fixture.empty()) throw Error(ErrorKind::SchemaError, "give --session FILE or --fixture NAME");
    const bool strict = !validate->parsed();
    const Session s = f.fixture.empty() ? load_session_file(f.session_path, strict) : load_fixture(f.fixture, strict);
    if (validate->parsed()) return cmd_validate(s, f, out);
    if (character->parsed()) return cmd_character(s, f, out);
    if (fp->parsed()) return cmd_fingerprint(s, f, out);
    if (specialize->parsed()) return cmd_specialize(s, f, out);
    if (simples->parsed()) return cmd_simples(s, f, out);
    if (decompose->parsed()) return cmd_decompose(s, f, out);
    if (diagram->parsed()) return cmd_diagram(s, f, out);
    if (factor->parsed()) return cmd_factorcheck(s, f, out);
    return 1;
  } catch (const Error& e) {
    if (f.json())
      out << Json{{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.detail()}}}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return is_validation_kind(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    if (f.json()) out << Json{{"error", {{"kind", "InternalError"}, {"message", e.what()}}}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gradec
