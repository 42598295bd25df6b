#include "gradec/scalar.hpp"

#include <algorithm>
#include <map>

#include "gradec/error.hpp"
#include "gradec/upoly.hpp"

namespace gradec {

struct ScalarAccess {
  static const Scalar::Data& data(const Scalar& s) { return s.data_; }
  static Scalar make(Ring r, Scalar::Data d) { return Scalar(std::move(r), std::move(d)); }
};

namespace {

using Access = ScalarAccess;

[[noreturn]] void mismatch(const Ring& a, const Ring& b, const char* op) {
  throw Error(ErrorKind::RingMismatch, std::string(op) + " between " + a->to_string() + " and " + b->to_string());
}

void require_same(const Scalar& a, const Scalar& b, const char* op) {
  if (!same_ring(a.ring(), b.ring())) mismatch(a.ring(), b.ring(), op);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const mpz_class& n, std::uint64_t p) {
  mpz_class r = n % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

// Reduce a coordinate vector modulo the monic cyclotomic polynomial.
std::vector<mpq_class> reduce_cyclo(std::vector<mpq_class> v, const RingDescriptor& r) {
  const auto& phi = r.modulus();
  const std::size_t n = r.degree();
  for (std::size_t i = v.size(); i-- > n;) {
    if (v[i] == 0) continue;
    mpq_class c = v[i];
    for (std::size_t j = 0; j <= n; ++j) v[i - n + j] -= c * phi[j];
  }
  v.resize(n, 0);
  return v;
}

Monomial zero_mono(std::size_t n) { return Monomial(n, 0); }

std::shared_ptr<const PolyRep> make_rep(std::vector<Term> terms) {
  auto rep = std::make_shared<PolyRep>();
  rep->terms = std::move(terms);
  return rep;
}

std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::vector<Term> kept;
  kept.reserve(out.size());
  for (auto& t : out)
    if (!t.coeff.is_zero()) kept.push_back(std::move(t));
  return kept;
}

std::vector<Term> add_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Scalar c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial mono_add(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = a[k] + b[k];
  return m;
}

std::vector<Term> mul_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && b.size() == 1) {
    Scalar c = a[0].coeff * b[0].coeff;
    if (c.is_zero()) return {};
    return {{mono_add(a[0].mono, b[0].mono), std::move(c)}};
  }
  std::map<Monomial, Scalar> acc;
  for (const auto& s : a) {
    for (const auto& t : b) {
      Monomial m = mono_add(s.mono, t.mono);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), s.coeff * t.coeff);
      } else {
        it->second = it->second + s.coeff * t.coeff;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, c});
  return out;
}

// Univariate conversions used by fraction fields.
UPoly to_upoly(const Scalar& p) {
  const Ring& field = p.ring()->base();
  std::vector<Scalar> coeffs;
  for (const auto& t : p.terms()) {
    const int d = t.mono[0];
    if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, Scalar::zero(field));
    coeffs[d] = t.coeff;
  }
  return UPoly(field, std::move(coeffs));
}

Scalar from_upoly(const Ring& poly_ring, const UPoly& u) {
  std::vector<Term> terms;
  for (int i = 0; i <= u.degree(); ++i)
    if (!u.coeffs()[i].is_zero()) terms.push_back({Monomial{i}, u.coeffs()[i]});
  return Access::make(poly_ring, make_rep(std::move(terms)));
}

Scalar make_fraction_normalized(const Ring& r, Scalar num, Scalar den) {
  const Ring& nr = r->numerator_ring();
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    auto rep = std::make_shared<FracRep>(FracRep{Scalar::zero(nr), Scalar::one(nr)});
    return Access::make(r, rep);
  }
  const bool den_constant = den.terms().size() == 1 && den.terms()[0].mono[0] == 0;
  if (!den_constant) {
    UPoly n = to_upoly(num), d = to_upoly(den);
    UPoly g = gcd(n, d);
    if (g.degree() > 0) {
      n = divmod(n, g).first;
      d = divmod(d, g).first;
    }
    num = from_upoly(nr, n);
    den = from_upoly(nr, d);
  }
  const Scalar lc = den.terms().back().coeff;
  if (!lc.is_one()) {
    const Scalar inv = inverse(lc);
    std::vector<Term> nt = num.terms(), dt = den.terms();
    for (auto& t : nt) t.coeff = t.coeff * inv;
    for (auto& t : dt) t.coeff = t.coeff * inv;
    num = Access::make(nr, make_rep(std::move(nt)));
    den = Access::make(nr, make_rep(std::move(dt)));
  }
  return Access::make(r, std::make_shared<FracRep>(FracRep{std::move(num), std::move(den)}));
}

// Element of a Laurent or polynomial ring in one variable as num/den over the
// numerator ring of a fraction field.
std::pair<Scalar, Scalar> split_laurent(const Scalar& x, const Ring& nr) {
  int shift = 0;
  for (const auto& t : x.terms()) shift = std::min(shift, t.mono[0]);
  std::vector<Term> terms;
  for (const auto& t : x.terms()) terms.push_back({Monomial{t.mono[0] - shift}, coerce(t.coeff, nr->base())});
  Scalar num = Scalar::polynomial(nr, std::move(terms));
  Scalar den = Scalar::polynomial(nr, {{Monomial{-shift}, Scalar::one(nr->base())}});
  return {num, den};
}

int sign_leading(const Scalar& x) {
  switch (x.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return sgn(x.rational());
    case RingKind::Cyclotomic:
      for (std::size_t i = x.coords().size(); i-- > 0;)
        if (x.coords()[i] != 0) return sgn(x.coords()[i]);
      return 0;
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return x.terms().empty() ? 0 : sign_leading(x.terms().back().coeff);
    case RingKind::Fraction:
      return sign_leading(x.numerator());
    case RingKind::PrimeField:
      return x.residue() == 0 ? 0 : 1;
  }
  return 0;
}

int structural_compare(const Scalar& a, const Scalar& b) {
  switch (a.kind()) {
    case RingKind::PrimeField:
      return a.residue() < b.residue() ? -1 : (a.residue() > b.residue() ? 1 : 0);
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const auto& x = a.terms();
      const auto& y = b.terms();
      std::size_t i = x.size(), j = y.size();
      while (i > 0 && j > 0) {
        --i;
        --j;
        if (x[i].mono != y[j].mono) return x[i].mono < y[j].mono ? -1 : 1;
        int c = structural_compare(x[i].coeff, y[j].coeff);
        if (c) return c;
      }
      if (i == j) return 0;
      return i < j ? -1 : 1;
    }
    case RingKind::Fraction: {
      int c = structural_compare(a.numerator(), b.numerator());
      return c ? c : structural_compare(a.denominator(), b.denominator());
    }
    default:
      return compare(a, b);
  }
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

bool is_compound(const std::string& s) { return s.find(' ') != std::string::npos; }

std::string mono_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[k];
    if (m[k] != 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-') {
      s += " - " + parts[i].substr(1);
    } else {
      s += " + " + parts[i];
    }
  }
  return s;
}

std::string term_string(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  if (is_compound(coeff)) return "(" + coeff + ")*" + mono;
  return coeff + "*" + mono;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Scalar::Scalar() : ring_(integers()), data_(mpq_class(0)) {}

Scalar Scalar::zero(const Ring& r) {
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return Scalar(r, mpq_class(0));
    case RingKind::PrimeField:
      return Scalar(r, std::uint64_t(0));
    case RingKind::Cyclotomic:
      return Scalar(r, std::vector<mpq_class>(r->degree(), mpq_class(0)));
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return Scalar(r, make_rep({}));
    case RingKind::Fraction: {
      const Ring& nr = r->numerator_ring();
      return Scalar(r, std::make_shared<FracRep>(FracRep{zero(nr), one(nr)}));
    }
  }
  return Scalar();
}

Scalar Scalar::one(const Ring& r) { return from_int(r, 1); }

Scalar Scalar::from_int(const Ring& r, long n) { return from_integer(r, mpz_class(n)); }

Scalar Scalar::from_integer(const Ring& r, const mpz_class& n) {
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return Scalar(r, mpq_class(n));
    case RingKind::PrimeField:
      return Scalar(r, reduce_mod(n, r->prime()));
    case RingKind::Cyclotomic: {
      std::vector<mpq_class> v(r->degree(), mpq_class(0));
      v[0] = n;
      return Scalar(r, std::move(v));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      Scalar c = from_integer(r->base(), n);
      if (c.is_zero()) return zero(r);
      return Scalar(r, make_rep({{zero_mono(r->nvars()), c}}));
    }
    case RingKind::Fraction: {
      const Ring& nr = r->numerator_ring();
      return Scalar(r, std::make_shared<FracRep>(FracRep{from_integer(nr, n), one(nr)}));
    }
  }
  return Scalar();
}

Scalar Scalar::from_rational(const Ring& r, const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  switch (r->kind()) {
    case RingKind::Integers:
      if (q.get_den() != 1) throw Error(ErrorKind::InexactDivision, q.get_str() + " is not an integer");
      return Scalar(r, q);
    case RingKind::Rationals:
      return Scalar(r, q);
    case RingKind::PrimeField:
      throw Error(ErrorKind::RingMismatch, "no canonical map from QQ to " + r->to_string());
    case RingKind::Cyclotomic: {
      std::vector<mpq_class> v(r->degree(), mpq_class(0));
      v[0] = q;
      return Scalar(r, std::move(v));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      Scalar c = from_rational(r->base(), q);
      if (c.is_zero()) return zero(r);
      return Scalar(r, make_rep({{zero_mono(r->nvars()), c}}));
    }
    case RingKind::Fraction: {
      const Ring& nr = r->numerator_ring();
      return Scalar(r, std::make_shared<FracRep>(FracRep{from_rational(nr, q), one(nr)}));
    }
  }
  return Scalar();
}

Scalar Scalar::variable(const Ring& r, const std::string& name) {
  switch (r->kind()) {
    case RingKind::Cyclotomic:
      if (name == r->generator()) {
        std::vector<mpq_class> v(2, mpq_class(0));
        v[1] = 1;
        return Scalar(r, reduce_cyclo(std::move(v), *r));
      }
      break;
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const auto& vars = r->vars();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it != vars.end()) {
        Monomial m = zero_mono(vars.size());
        m[it - vars.begin()] = 1;
        return Scalar(r, make_rep({{m, one(r->base())}}));
      }
      Scalar c = variable(r->base(), name);
      return Scalar(r, make_rep({{zero_mono(vars.size()), c}}));
    }
    case RingKind::Fraction: {
      const Ring& nr = r->numerator_ring();
      return Scalar(r, std::make_shared<FracRep>(FracRep{variable(nr, name), one(nr)}));
    }
    default:
      break;
  }
  throw Error(ErrorKind::UndeclaredVariable, "'" + name + "' is not a variable of " + r->to_string());
}

Scalar Scalar::residue(const Ring& r, std::int64_t value) {
  if (r->kind() != RingKind::PrimeField) throw Error(ErrorKind::RingMismatch, "residue() needs a prime field");
  const std::int64_t p = static_cast<std::int64_t>(r->prime());
  std::int64_t v = value % p;
  if (v < 0) v += p;
  return Scalar(r, static_cast<std::uint64_t>(v));
}

Scalar Scalar::cyclotomic(const Ring& r, std::vector<mpq_class> coords) {
  if (r->kind() != RingKind::Cyclotomic) throw Error(ErrorKind::RingMismatch, "cyclotomic() needs a cyclotomic field");
  if (coords.size() < r->degree()) coords.resize(r->degree(), 0);
  for (auto& c : coords) c.canonicalize();
  return Scalar(r, reduce_cyclo(std::move(coords), *r));
}

Scalar Scalar::polynomial(const Ring& r, std::vector<Term> terms) {
  if (r->kind() != RingKind::Polynomial && r->kind() != RingKind::Laurent)
    throw Error(ErrorKind::RingMismatch, "polynomial() needs a polynomial ring");
  for (auto& t : terms) {
    if (t.mono.size() != r->nvars()) throw Error(ErrorKind::RingMismatch, "monomial has wrong number of variables");
    if (r->kind() == RingKind::Polynomial)
      for (int e : t.mono)
        if (e < 0) throw Error(ErrorKind::InexactDivision, "negative exponent in " + r->to_string());
    if (!same_ring(t.coeff.ring(), r->base())) t.coeff = coerce(t.coeff, r->base());
  }
  return Scalar(r, make_rep(normalize_terms(std::move(terms))));
}

Scalar Scalar::fraction(const Ring& r, const Scalar& num, const Scalar& den) {
  if (r->kind() != RingKind::Fraction) throw Error(ErrorKind::RingMismatch, "fraction() needs a fraction field");
  const Ring& nr = r->numerator_ring();
  return make_fraction_normalized(r, coerce(num, nr), coerce(den, nr));
}

// ---------------------------------------------------------------------------
// Accessors

bool Scalar::is_zero() const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return std::get<mpq_class>(data_) == 0;
    case RingKind::PrimeField:
      return std::get<std::uint64_t>(data_) == 0;
    case RingKind::Cyclotomic:
      for (const auto& c : std::get<std::vector<mpq_class>>(data_))
        if (c != 0) return false;
      return true;
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return std::get<std::shared_ptr<const PolyRep>>(data_)->terms.empty();
    case RingKind::Fraction:
      return std::get<std::shared_ptr<const FracRep>>(data_)->num.is_zero();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

const mpq_class& Scalar::rational() const {
  if (kind() != RingKind::Integers && kind() != RingKind::Rationals)
    throw Error(ErrorKind::RingMismatch, "rational() on " + ring_->to_string());
  return std::get<mpq_class>(data_);
}

std::uint64_t Scalar::residue() const {
  if (kind() != RingKind::PrimeField) throw Error(ErrorKind::RingMismatch, "residue() on " + ring_->to_string());
  return std::get<std::uint64_t>(data_);
}

const std::vector<mpq_class>& Scalar::coords() const {
  if (kind() != RingKind::Cyclotomic) throw Error(ErrorKind::RingMismatch, "coords() on " + ring_->to_string());
  return std::get<std::vector<mpq_class>>(data_);
}

const std::vector<Term>& Scalar::terms() const {
  if (kind() != RingKind::Polynomial && kind() != RingKind::Laurent)
    throw Error(ErrorKind::RingMismatch, "terms() on " + ring_->to_string());
  return std::get<std::shared_ptr<const PolyRep>>(data_)->terms;
}

const Scalar& Scalar::numerator() const {
  if (kind() != RingKind::Fraction) throw Error(ErrorKind::RingMismatch, "numerator() on " + ring_->to_string());
  return std::get<std::shared_ptr<const FracRep>>(data_)->num;
}

const Scalar& Scalar::denominator() const {
  if (kind() != RingKind::Fraction) throw Error(ErrorKind::RingMismatch, "denominator() on " + ring_->to_string());
  return std::get<std::shared_ptr<const FracRep>>(data_)->den;
}

Scalar Scalar::constant_term() const {
  if (kind() != RingKind::Polynomial && kind() != RingKind::Laurent) return *this;
  const auto& ts = terms();
  Monomial z = zero_mono(ring_->nvars());
  for (const auto& t : ts)
    if (t.mono == z) return t.coeff;
  return zero(ring_->base());
}

// ---------------------------------------------------------------------------
// Arithmetic

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b, "addition");
  const Ring& r = a.ring();
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return Access::make(r, mpq_class(a.rational() + b.rational()));
    case RingKind::PrimeField:
      return Access::make(r, (a.residue() + b.residue()) % r->prime());
    case RingKind::Cyclotomic: {
      std::vector<mpq_class> v = a.coords();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords()[i];
      return Access::make(r, std::move(v));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return Access::make(r, make_rep(add_terms(a.terms(), b.terms(), false)));
    case RingKind::Fraction: {
      if (a.denominator() == b.denominator()) return make_fraction_normalized(r, a.numerator() + b.numerator(), a.denominator());
      return make_fraction_normalized(r, a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                                      a.denominator() * b.denominator());
    }
  }
  return Scalar();
}

Scalar operator-(const Scalar& a) {
  const Ring& r = a.ring();
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return Access::make(r, mpq_class(-a.rational()));
    case RingKind::PrimeField:
      return Access::make(r, (r->prime() - a.residue()) % r->prime());
    case RingKind::Cyclotomic: {
      std::vector<mpq_class> v = a.coords();
      for (auto& c : v) c = -c;
      return Access::make(r, std::move(v));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      std::vector<Term> ts = a.terms();
      for (auto& t : ts) t.coeff = -t.coeff;
      return Access::make(r, make_rep(std::move(ts)));
    }
    case RingKind::Fraction:
      return Access::make(r, std::make_shared<FracRep>(FracRep{-a.numerator(), a.denominator()}));
  }
  return Scalar();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b, "subtraction");
  if (a.kind() == RingKind::Polynomial || a.kind() == RingKind::Laurent)
    return Access::make(a.ring(), make_rep(add_terms(a.terms(), b.terms(), true)));
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b, "multiplication");
  const Ring& r = a.ring();
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return Access::make(r, mpq_class(a.rational() * b.rational()));
    case RingKind::PrimeField:
      return Access::make(r, a.residue() * b.residue() % r->prime());
    case RingKind::Cyclotomic: {
      const auto& x = a.coords();
      const auto& y = b.coords();
      std::vector<mpq_class> v(x.size() + y.size() - 1, mpq_class(0));
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
          if (y[j] != 0) v[i + j] += x[i] * y[j];
      }
      return Access::make(r, reduce_cyclo(std::move(v), *r));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return Access::make(r, make_rep(mul_terms(a.terms(), b.terms())));
    case RingKind::Fraction: {
      if (a.is_zero() || b.is_zero()) return Scalar::zero(r);
      return make_fraction_normalized(r, a.numerator() * b.numerator(), a.denominator() * b.denominator());
    }
  }
  return Scalar();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  switch (a.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return a.rational() == b.rational();
    case RingKind::PrimeField:
      return a.residue() == b.residue();
    case RingKind::Cyclotomic:
      return a.coords() == b.coords();
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const auto& x = a.terms();
      const auto& y = b.terms();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].mono != y[i].mono || !(x[i].coeff == y[i].coeff)) return false;
      return true;
    }
    case RingKind::Fraction:
      return a.numerator() == b.numerator() && a.denominator() == b.denominator();
  }
  return false;
}

namespace {

// Exact division of polynomials with non-negative exponents. The quotient is
// found by repeatedly cancelling the lexicographically largest term; a single
// divisor is a Groebner basis of its ideal, so a stuck step proves the
// division is inexact.
std::vector<Term> divide_poly_terms(const Ring& r, std::vector<Term> rem, const std::vector<Term>& g) {
  if (g.empty()) throw Error(ErrorKind::DivisionByZero, "division by zero polynomial");
  const Term& lead = g.back();
  std::vector<Term> quot;
  std::size_t guard = 0;
  while (!rem.empty()) {
    if (++guard > 100000) throw Error(ErrorKind::InexactDivision, "polynomial division did not terminate");
    const Term& top = rem.back();
    Monomial diff(top.mono.size());
    for (std::size_t k = 0; k < diff.size(); ++k) {
      diff[k] = top.mono[k] - lead.mono[k];
      if (diff[k] < 0) throw Error(ErrorKind::InexactDivision, "polynomial division leaves a remainder");
    }
    Scalar c = divide(top.coeff, lead.coeff);
    std::vector<Term> step{{diff, c}};
    quot.push_back({diff, c});
    rem = add_terms(rem, mul_terms(step, g), true);
  }
  (void)r;
  return normalize_terms(std::move(quot));
}

Scalar divide_poly(const Scalar& a, const Scalar& b) {
  const Ring& r = a.ring();
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in " + r->to_string());
  if (a.is_zero()) return a;
  if (r->kind() == RingKind::Polynomial) return Access::make(r, make_rep(divide_poly_terms(r, a.terms(), b.terms())));
  // Laurent: shift both into the polynomial range, divide, shift back.
  const std::size_t n = r->nvars();
  auto min_exps = [n](const std::vector<Term>& ts) {
    Monomial m(n, 0);
    bool first = true;
    for (const auto& t : ts) {
      for (std::size_t k = 0; k < n; ++k) m[k] = first ? t.mono[k] : std::min(m[k], t.mono[k]);
      first = false;
    }
    return m;
  };
  auto shift = [n](std::vector<Term> ts, const Monomial& by, int sign) {
    for (auto& t : ts)
      for (std::size_t k = 0; k < n; ++k) t.mono[k] += sign * by[k];
    return ts;
  };
  Monomial ma = min_exps(a.terms()), mb = min_exps(b.terms());
  std::vector<Term> q = divide_poly_terms(r, shift(a.terms(), ma, -1), shift(b.terms(), mb, -1));
  Monomial net(n);
  for (std::size_t k = 0; k < n; ++k) net[k] = ma[k] - mb[k];
  return Access::make(r, make_rep(shift(std::move(q), net, 1)));
}

}  // namespace

Scalar inverse(const Scalar& a) {
  const Ring& r = a.ring();
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + r->to_string());
  switch (r->kind()) {
    case RingKind::Integers:
      if (a.rational() == 1 || a.rational() == -1) return a;
      throw Error(ErrorKind::InexactDivision, a.rational().get_str() + " is not a unit in ZZ");
    case RingKind::Rationals:
      return Access::make(r, mpq_class(1 / a.rational()));
    case RingKind::PrimeField:
      return Access::make(r, mod_pow(a.residue(), r->prime() - 2, r->prime()));
    case RingKind::Cyclotomic: {
      if (r->degree() == 1) return Access::make(r, std::vector<mpq_class>{mpq_class(1 / a.coords()[0])});
      const Ring q = rationals();
      std::vector<Scalar> ac, mc;
      for (const auto& c : a.coords()) ac.push_back(Scalar::from_rational(q, c));
      for (const auto& c : r->modulus()) mc.push_back(Scalar::from_integer(q, c));
      ExtendedGcd eg = extended_gcd(UPoly(q, ac), UPoly(q, mc));
      std::vector<mpq_class> v;
      for (const auto& c : eg.s.coeffs()) v.push_back(c.rational());
      return Scalar::cyclotomic(r, std::move(v));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const auto& ts = a.terms();
      if (ts.size() == 1) {
        const bool constant = std::all_of(ts[0].mono.begin(), ts[0].mono.end(), [](int e) { return e == 0; });
        if (constant || r->kind() == RingKind::Laurent) {
          Monomial m = ts[0].mono;
          for (auto& e : m) e = -e;
          return Access::make(r, make_rep({{m, inverse(ts[0].coeff)}}));
        }
      }
      throw Error(ErrorKind::InexactDivision, to_string(a) + " is not a unit in " + r->to_string());
    }
    case RingKind::Fraction:
      return make_fraction_normalized(r, a.denominator(), a.numerator());
  }
  return Scalar();
}

Scalar divide(const Scalar& a, const Scalar& b) {
  require_same(a, b, "division");
  const Ring& r = a.ring();
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in " + r->to_string());
  switch (r->kind()) {
    case RingKind::Integers: {
      mpq_class q = a.rational() / b.rational();
      if (q.get_den() != 1)
        throw Error(ErrorKind::InexactDivision, a.rational().get_str() + "/" + b.rational().get_str() + " is not an integer");
      return Access::make(r, q);
    }
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return divide_poly(a, b);
    case RingKind::Fraction:
      if (a.is_zero()) return a;
      return make_fraction_normalized(r, a.numerator() * b.denominator(), a.denominator() * b.numerator());
    default:
      return a * inverse(b);
  }
}

Scalar pow(const Scalar& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  Scalar result = Scalar::one(a.ring());
  Scalar base = a;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

int compare(const Scalar& a, const Scalar& b) {
  require_same(a, b, "comparison");
  if (a == b) return 0;
  if (a.ring()->characteristic() != 0) return structural_compare(a, b);
  return sign_leading(b - a) > 0 ? -1 : 1;
}

std::string to_string(const Scalar& a) {
  const Ring& r = a.ring();
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return rational_string(a.rational());
    case RingKind::PrimeField:
      return std::to_string(a.residue());
    case RingKind::Cyclotomic: {
      std::vector<std::string> parts;
      const auto& v = a.coords();
      for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? r->generator() : r->generator() + "^" + std::to_string(i));
        parts.push_back(term_string(rational_string(v[i]), mono));
      }
      return join_terms(parts);
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      std::vector<std::string> parts;
      const auto& ts = a.terms();
      for (std::size_t i = ts.size(); i-- > 0;)
        parts.push_back(term_string(to_string(ts[i].coeff), mono_string(ts[i].mono, r->vars())));
      return join_terms(parts);
    }
    case RingKind::Fraction: {
      std::string num = to_string(a.numerator());
      if (a.denominator().is_one()) return num;
      std::string den = to_string(a.denominator());
      if (is_compound(num)) num = "(" + num + ")";
      if (is_compound(den) || den.find_first_of("*/") != std::string::npos) den = "(" + den + ")";
      return num + "/" + den;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Embeddings

Scalar coerce(const Scalar& a, const Ring& target) {
  const Ring& src = a.ring();
  if (same_ring(src, target)) return a;
  auto fail = [&]() -> Scalar {
    throw Error(ErrorKind::RingMismatch, "no canonical map from " + src->to_string() + " to " + target->to_string());
  };
  switch (src->kind()) {
    case RingKind::Integers:
      return Scalar::from_integer(target, a.rational().get_num());
    case RingKind::Rationals:
      if (target->characteristic() != 0 || target->kind() == RingKind::Integers) {
        if (target->kind() == RingKind::Integers && a.rational().get_den() == 1)
          return Scalar::from_integer(target, a.rational().get_num());
        return fail();
      }
      if ((target->kind() == RingKind::Polynomial || target->kind() == RingKind::Laurent) &&
          target->base()->kind() == RingKind::Integers && a.rational().get_den() != 1)
        return fail();
      return Scalar::from_rational(target, a.rational());
    case RingKind::PrimeField:
      if (target->characteristic() != src->prime()) return fail();
      if (target->kind() == RingKind::Polynomial || target->kind() == RingKind::Laurent) {
        Scalar c = coerce(a, target->base());
        return Scalar::polynomial(target, {{Monomial(target->nvars(), 0), c}});
      }
      if (target->kind() == RingKind::Fraction) {
        const Ring& nr = target->numerator_ring();
        return Scalar::fraction(target, coerce(a, nr), Scalar::one(nr));
      }
      return fail();
    case RingKind::Cyclotomic:
      if (target->kind() == RingKind::Cyclotomic) {
        if (target->order() % src->order() != 0) return fail();
        Scalar gen = pow(Scalar::variable(target, target->generator()), target->order() / src->order());
        Scalar out = Scalar::zero(target);
        Scalar power = Scalar::one(target);
        for (const auto& c : a.coords()) {
          out = out + Scalar::from_rational(target, c) * power;
          power = power * gen;
        }
        return out;
      }
      if (target->kind() == RingKind::Polynomial || target->kind() == RingKind::Laurent) {
        Scalar c = coerce(a, target->base());
        return Scalar::polynomial(target, {{Monomial(target->nvars(), 0), c}});
      }
      if (target->kind() == RingKind::Fraction) {
        const Ring& nr = target->numerator_ring();
        return Scalar::fraction(target, coerce(a, nr), Scalar::one(nr));
      }
      return fail();
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      if (target->kind() == RingKind::Fraction) {
        if (src->nvars() != 1 || src->vars() != target->vars()) return fail();
        const Ring& nr = target->numerator_ring();
        auto [num, den] = split_laurent(a, nr);
        return Scalar::fraction(target, num, den);
      }
      if (target->kind() != RingKind::Polynomial && target->kind() != RingKind::Laurent) {
        // Constants may still embed into a coefficient ring.
        if (a.terms().empty()) return Scalar::zero(target);
        if (a.terms().size() == 1 &&
            std::all_of(a.terms()[0].mono.begin(), a.terms()[0].mono.end(), [](int e) { return e == 0; }))
          return coerce(a.terms()[0].coeff, target);
        return fail();
      }
      std::vector<std::size_t> index;
      for (const auto& v : src->vars()) {
        auto it = std::find(target->vars().begin(), target->vars().end(), v);
        if (it == target->vars().end()) return fail();
        index.push_back(it - target->vars().begin());
      }
      std::vector<Term> terms;
      for (const auto& t : a.terms()) {
        Monomial m(target->nvars(), 0);
        for (std::size_t k = 0; k < index.size(); ++k) m[index[k]] = t.mono[k];
        if (target->kind() == RingKind::Polynomial)
          for (int e : m)
            if (e < 0) return fail();
        terms.push_back({m, coerce(t.coeff, target->base())});
      }
      return Scalar::polynomial(target, std::move(terms));
    }
    case RingKind::Fraction:
      if (target->kind() == RingKind::Fraction && target->vars() == src->vars()) {
        const Ring& nr = target->numerator_ring();
        return Scalar::fraction(target, coerce(a.numerator(), nr), coerce(a.denominator(), nr));
      }
      return fail();
  }
  return fail();
}

bool coerces_to(const Ring& from, const Ring& to) {
  try {
    coerce(Scalar::one(from), to);
    for (const auto& v : ring_variables(from)) coerce(Scalar::variable(from, v), to);
    return true;
  } catch (const Error&) {
    return false;
  }
}

int univariate_degree(const Scalar& a) {
  if (a.is_zero()) return -1;
  if (a.kind() == RingKind::Polynomial || a.kind() == RingKind::Laurent) return a.terms().back().mono.at(0);
  return 0;
}

}  // namespace gradec
