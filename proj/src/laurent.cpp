#include "gradec/laurent.hpp"

#include "gradec/error.hpp"

namespace gradec {

LaurentPoly::LaurentPoly(Ring coeff_ring, char var) : ring_(std::move(coeff_ring)), var_(var) {}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int exponent, char var) {
  LaurentPoly p(c.ring(), var);
  p.add_term(exponent, c);
  return p;
}

Scalar LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::NoSolution, "exponent range of the zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::NoSolution, "exponent range of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Scalar& c) {
  Scalar v = same_ring(c.ring(), ring_) ? c : coerce(c, ring_);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!v.is_zero()) terms_.emplace(e, std::move(v));
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p(ring_, var_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

Scalar LaurentPoly::at_one() const {
  Scalar s = Scalar::zero(ring_);
  for (const auto& [e, c] : terms_) s = s + c;
  return s;
}

LaurentPoly LaurentPoly::map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const {
  LaurentPoly p(target, var_);
  for (const auto& [e, c] : terms_) p.add_term(e, f(c));
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p = a;
  for (const auto& [e, c] : b.terms_) p.add_term(e, c);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p = a;
  for (const auto& [e, c] : b.terms_) p.add_term(e, -c);
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p(a.ring_, a.var_);
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) p.add_term(e + f, c * d);
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const Scalar& c) {
  LaurentPoly p(a.ring_, a.var_);
  for (const auto& [e, x] : a.terms_) p.add_term(e, x * c);
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  const std::string var(1, p.var());
  for (const auto& [e, c] : p.terms()) {
    std::string cs = to_string(c);
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
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
