#include "gradec/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gradec/cyclotomic.hpp"
#include "gradec/error.hpp"

namespace gradec {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::NonUnitAssignment: return "NonUnitAssignment";
    case ErrorKind::FractionFieldMismatch: return "FractionFieldMismatch";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::LatticeNotFound: return "LatticeNotFound";
    case ErrorKind::KernelNotNested: return "KernelNotNested";
    case ErrorKind::PhiNotDefinedOnB: return "PhiNotDefinedOnB";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::DimensionBound: return "DimensionBound";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::SplittingFailed: return "SplittingFailed";
    case ErrorKind::NotGradable: return "NotGradable";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Error";
}

bool is_validation_kind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UndeclaredVariable:
    case ErrorKind::RingMismatch:
    case ErrorKind::UnsupportedRing:
    case ErrorKind::NonSquare:
    case ErrorKind::AlgebraMismatch:
    case ErrorKind::FieldMismatch:
    case ErrorKind::MissingAssignment:
    case ErrorKind::NonUnitAssignment:
    case ErrorKind::FractionFieldMismatch:
    case ErrorKind::NotAHomomorphism:
    case ErrorKind::SchemaError:
    case ErrorKind::ValidationError:
    case ErrorKind::UnknownName:
    case ErrorKind::UnknownFixture:
      return true;
    default:
      return false;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_var_name(const std::string& name) {
  bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  if (!ok) throw Error(ErrorKind::UnsupportedRing, "invalid variable name '" + name + "'");
}

void check_vars(const Ring& base, const std::vector<std::string>& vars) {
  if (vars.empty()) throw Error(ErrorKind::UnsupportedRing, "polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : ring_variables(base)) seen.insert(v);
  for (const auto& v : vars) {
    check_var_name(v);
    if (!seen.insert(v).second) throw Error(ErrorKind::UnsupportedRing, "variable '" + v + "' declared twice");
  }
}

}  // namespace

bool RingDescriptor::is_field() const {
  switch (kind_) {
    case RingKind::Rationals:
    case RingKind::Fraction:
    case RingKind::Cyclotomic:
    case RingKind::PrimeField:
      return true;
    default:
      return false;
  }
}

std::uint64_t RingDescriptor::characteristic() const {
  switch (kind_) {
    case RingKind::PrimeField: return prime_;
    case RingKind::Polynomial:
    case RingKind::Laurent:
    case RingKind::Fraction:
      return base_->characteristic();
    default:
      return 0;
  }
}

std::string RingDescriptor::to_string() const {
  auto joined = [this] {
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    return s;
  };
  switch (kind_) {
    case RingKind::Integers: return "ZZ";
    case RingKind::Rationals: return "QQ";
    case RingKind::PrimeField: return "GF(" + std::to_string(prime_) + ")";
    case RingKind::Cyclotomic:
      return "QQ(zeta_" + std::to_string(order_) + (generator_ == "z" ? "" : ":" + generator_) + ")";
    case RingKind::Polynomial: return base_->to_string() + "[" + joined() + "]";
    case RingKind::Laurent: return base_->to_string() + "[" + joined() + "^+-1]";
    case RingKind::Fraction: return "Frac(" + base_->to_string() + ")";
  }
  return "?";
}

Ring integers() {
  static const Ring r = [] {
    auto d = std::make_shared<RingDescriptor>();
    d->kind_ = RingKind::Integers;
    return Ring(d);
  }();
  return r;
}

Ring rationals() {
  static const Ring r = [] {
    auto d = std::make_shared<RingDescriptor>();
    d->kind_ = RingKind::Rationals;
    return Ring(d);
  }();
  return r;
}

Ring prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::UnsupportedRing, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t(1) << 31)) throw Error(ErrorKind::UnsupportedRing, "prime too large (limit 2^31)");
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::PrimeField;
  d->prime_ = p;
  return d;
}

Ring cyclotomic_field(unsigned e, const std::string& generator) {
  if (e == 0) throw Error(ErrorKind::UnsupportedRing, "cyclotomic order must be positive");
  if (e > 1000) throw Error(ErrorKind::UnsupportedRing, "cyclotomic order too large");
  check_var_name(generator);
  // Q(zeta_1) = Q(zeta_2) = Q, but keep the descriptor so values print uniformly.
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::Cyclotomic;
  d->order_ = e;
  d->degree_ = euler_phi(e);
  d->generator_ = generator;
  d->modulus_ = cyclotomic_poly(e);
  return d;
}

Ring polynomial_ring(const Ring& base, std::vector<std::string> vars) {
  if (base->kind() == RingKind::Fraction)
    throw Error(ErrorKind::UnsupportedRing, "polynomials over a fraction field are not supported");
  check_vars(base, vars);
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::Polynomial;
  d->base_ = base;
  d->vars_ = std::move(vars);
  return d;
}

Ring laurent_ring(const Ring& base, std::vector<std::string> vars) {
  if (base->kind() == RingKind::Fraction)
    throw Error(ErrorKind::UnsupportedRing, "Laurent polynomials over a fraction field are not supported");
  check_vars(base, vars);
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::Laurent;
  d->base_ = base;
  d->vars_ = std::move(vars);
  return d;
}

Ring fraction_field(const Ring& base) {
  switch (base->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return rationals();
    case RingKind::Cyclotomic:
    case RingKind::PrimeField:
    case RingKind::Fraction:
      return base;
    case RingKind::Polynomial:
    case RingKind::Laurent:
      break;
  }
  if (base->nvars() != 1)
    throw Error(ErrorKind::UnsupportedRing, "fraction fields are supported for one variable only, got " + base->to_string());
  const Ring& coeffs = base->base();
  if (coeffs->kind() == RingKind::Polynomial || coeffs->kind() == RingKind::Laurent)
    throw Error(ErrorKind::UnsupportedRing, "fraction fields of iterated polynomial rings are not supported");
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::Fraction;
  d->base_ = base;
  d->vars_ = base->vars();
  d->numerator_ring_ = polynomial_ring(field_of(coeffs), base->vars());
  return d;
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::PrimeField:
      return a->prime() == b->prime();
    case RingKind::Cyclotomic:
      return a->order() == b->order() && a->generator() == b->generator();
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return a->vars() == b->vars() && same_ring(a->base(), b->base());
    case RingKind::Fraction:
      // Frac(Z[v]), Frac(Q[v]) and Frac(Z[v^+-1]) are all Q(v).
      return a->vars() == b->vars() && same_ring(a->numerator_ring(), b->numerator_ring());
  }
  return false;
}

Ring field_of(const Ring& r) {
  if (r->is_field()) return r;
  return fraction_field(r);
}

std::vector<std::string> ring_variables(const Ring& r) {
  std::vector<std::string> out;
  for (const RingDescriptor* d = r.get(); d; d = d->base().get()) {
    if (d->kind() == RingKind::Fraction) continue;
    if (d->kind() == RingKind::Cyclotomic) out.push_back(d->generator());
    for (const auto& v : d->vars()) out.push_back(v);
  }
  return out;
}

}  // namespace gradec

namespace gradec {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct RingTextParser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "ring '" + text + "' at position " + std::to_string(pos) + ": " + what);
  }
  bool eat(const std::string& token) {
    if (text.compare(pos, token.size(), token) != 0) return false;
    pos += token.size();
    return true;
  }
  std::uint64_t number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 18) fail("expected a number");
    return std::stoull(text.substr(start, pos - start));
  }
  std::string name() {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string n = text.substr(start, pos - start);
    if (!valid_name(n)) fail("expected a variable name");
    return n;
  }
  Ring ring() {
    Ring r;
    if (eat("ZZ")) {
      r = integers();
    } else if (eat("GF(")) {
      r = prime_field(number());
      if (!eat(")")) fail("expected ')'");
    } else if (eat("QQ(zeta_")) {
      const auto e = number();
      std::string gen = "z";
      if (eat(":")) gen = name();
      if (!eat(")")) fail("expected ')'");
      if (e == 0 || e > 100000) fail("bad cyclotomic order");
      r = cyclotomic_field(static_cast<unsigned>(e), gen);
    } else if (eat("QQ")) {
      r = rationals();
    } else if (eat("Frac(")) {
      r = fraction_field(ring());
      if (!eat(")")) fail("expected ')'");
    } else {
      fail("expected ZZ, QQ, GF(p), QQ(zeta_e) or Frac(...)");
    }
    while (eat("[")) {
      std::vector<std::string> vars{name()};
      while (eat(",")) vars.push_back(name());
      const bool laurent = eat("^+-1");
      if (!eat("]")) fail("expected ']'");
      r = laurent ? laurent_ring(r, vars) : polynomial_ring(r, vars);
    }
    return r;
  }
};

}  // namespace

Ring parse_ring(const std::string& text) {
  RingTextParser p{text};
  Ring r = p.ring();
  if (p.pos != text.size()) p.fail("unexpected trailing text");
  return r;
}

}  // namespace gradec
