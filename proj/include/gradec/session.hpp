#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradec/specialize.hpp"

namespace gradec {

struct TowerSpec {
  std::string name;
  std::string theta;
  std::string theta_prime;
  std::string intermediate;  // a ring string, or "L" for the target of theta
};

/// Everything one session file declares: a base ring A, one graded algebra
/// over A, modules over K = Frac(A) or over a specialized algebra, and the
/// specializations and towers that act on them.
struct Session {
  std::string name;
  std::string description;
  Ring ring;
  AlgebraPtr algebra;
  std::vector<GradedModuleRep> modules;
  std::vector<std::string> module_over;  // "K" or a specialization name
  std::vector<Specialization> specializations;
  std::vector<TowerSpec> towers;
  std::map<std::string, AlgebraPtr> specialized;  // LH for each specialization

  Ring generic_field() const { return fraction_field(ring); }
  const GradedModuleRep& module(const std::string& name) const;
  const Specialization& specialization(const std::string& name) const;
  AlgebraPtr specialized_algebra(const std::string& spec) const;
  /// Modules over K, in file order.
  std::vector<GradedModuleRep> generic_modules() const;
  SpecializationTower tower(const std::string& name) const;
};

/// Parses and checks a session. Names, references, shapes and coefficient
/// strings are always checked (SchemaError, SyntaxError, ...); with
/// `validate` the algebra and module axioms are checked too (ValidationError
/// listing every violation).
Session parse_session(const std::string& text, const std::string& origin = "<input>", bool validate = true);
Session load_session_file(const std::string& path, bool validate = true);

/// Algebra and module reports, keyed by "algebra NAME" / "module NAME".
std::vector<std::pair<std::string, ValidationReport>> validate_session(const Session& s);

/// Normalized JSON text: canonical coefficient strings, fixed key order.
std::string emit_session(const Session& s);

std::vector<std::string> fixture_names();
const std::string& fixture_text(const std::string& name);  // UnknownFixture
Session load_fixture(const std::string& name, bool validate = true);

}  // namespace gradec
