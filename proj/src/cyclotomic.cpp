#include "gradec/cyclotomic.hpp"

#include "gradec/error.hpp"

namespace gradec {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

unsigned euler_phi(unsigned e) {
  unsigned result = e;
  unsigned n = e;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomic_poly(unsigned e) {
  if (e == 0) throw Error(ErrorKind::UnsupportedRing, "cyclotomic order must be positive");
  std::vector<mpz_class> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d == 0) poly = divide_monic(poly, cyclotomic_poly(d));
  }
  return poly;
}

}  // namespace gradec
