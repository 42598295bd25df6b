#include "gradec/upoly.hpp"

#include "gradec/error.hpp"

namespace gradec {

UPoly::UPoly(Ring coeff_ring) : ring_(std::move(coeff_ring)) {}

UPoly::UPoly(Ring coeff_ring, std::vector<Scalar> coeffs) : ring_(std::move(coeff_ring)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_)
    if (!same_ring(c.ring(), ring_)) c = coerce(c, ring_);
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.ring(), {c}); }

UPoly UPoly::x(const Ring& r) { return UPoly(r, {Scalar::zero(r), Scalar::one(r)}); }

UPoly UPoly::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(c.ring()));
  v[degree] = c;
  return UPoly(c.ring(), std::move(v));
}

Scalar UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar::zero(ring_);
  return coeffs_[i];
}

const Scalar& UPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::DivisionByZero, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Scalar UPoly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(x.ring());
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coerce(coeffs_[i], x.ring());
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * inverse(leading());
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Scalar::from_int(ring_, static_cast<long>(i)));
  return UPoly(ring_, std::move(d));
}

UPoly UPoly::map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const {
  std::vector<Scalar> v;
  for (const auto& c : coeffs_) v.push_back(f(c));
  return UPoly(target, std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.ring_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
  return UPoly(a.ring_, std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.ring_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] - b.coeffs_[i];
  return UPoly(a.ring_, std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.ring_);
  std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.ring_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(a.ring_, std::move(v));
}

UPoly operator*(const UPoly& a, const Scalar& c) {
  std::vector<Scalar> v;
  for (const auto& x : a.coeffs_) v.push_back(x * c);
  return UPoly(a.ring_, std::move(v));
}

bool operator==(const UPoly& a, const UPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Ring& r = a.ring();
  if (a.degree() < b.degree()) return {UPoly(r), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quot(a.degree() - b.degree() + 1, Scalar::zero(r));
  const Scalar lead = b.leading();
  const bool unit_lead = lead.is_one();
  const Scalar inv = unit_lead ? lead : inverse(lead);
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i].is_zero()) continue;
    Scalar c = unit_lead ? rem[i] : rem[i] * inv;
    quot[i - b.degree()] = c;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] = rem[i - b.degree() + j] - c * b.coeffs()[j];
  }
  rem.resize(b.degree() > 0 ? b.degree() : 0, Scalar::zero(r));
  return {UPoly(r, std::move(quot)), UPoly(r, std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  const Ring& r = a.ring();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Scalar::one(r)), s1(r);
  UPoly t0(r), t1 = UPoly::constant(Scalar::one(r));
  while (!r1.is_zero()) {
    auto [q, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = inverse(r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.ring());
  return divmod(a * b, gcd(a, b)).first.monic();
}

UPoly pow(const UPoly& a, unsigned n) {
  UPoly result = UPoly::constant(Scalar::one(a.ring()));
  UPoly base = a;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

UPoly powmod(const UPoly& base, const mpz_class& n, const UPoly& modulus) {
  UPoly result = divmod(UPoly::constant(Scalar::one(base.ring())), modulus).second;
  UPoly b = divmod(base, modulus).second;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(n.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.monic();
  UPoly g = gcd(a, a.derivative());
  return divmod(a, g).first.monic();
}

int multiplicity(const UPoly& a, const UPoly& d) {
  if (d.degree() <= 0) throw Error(ErrorKind::NoSolution, "multiplicity of a constant");
  if (a.is_zero()) throw Error(ErrorKind::NoSolution, "multiplicity in the zero polynomial");
  int k = 0;
  UPoly x = a;
  while (true) {
    auto [q, r] = divmod(x, d);
    if (!r.is_zero()) return k;
    x = std::move(q);
    ++k;
  }
}

int compare(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = compare(a.coeffs()[i], b.coeffs()[i]);
    if (c) return c;
  }
  return 0;
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Scalar& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else if (cs.find(' ') != std::string::npos) {
      term = "(" + cs + ")*" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (first) {
      s = term;
    } else if (term[0] == '-') {
      s += " - " + term.substr(1);
    } else {
      s += " + " + term;
    }
    first = false;
  }
  return s;
}

}  // namespace gradec
