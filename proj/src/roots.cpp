#include "gradec/roots.hpp"

#include <algorithm>
#include <random>

#include "gradec/error.hpp"
#include "gradec/matrix.hpp"

namespace gradec {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod_u(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 eval_mod(const std::vector<u64>& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
  return acc;
}

// gcd of polynomials over GF(p) with word-size coefficients; returns degree.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 inv = powmod_u(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const u64 c = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

std::vector<u64> brute_roots_mod(const std::vector<u64>& f, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x)
    if (eval_mod(f, x, p) == 0) out.push_back(x);
  return out;
}

// --- GF(p) ---------------------------------------------------------------

void split_equal_degree(const UPoly& g, const Ring& field, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeffs()[0] * inverse(g.coeffs()[1]));
    return;
  }
  const u64 p = field->prime();
  for (int attempt = 0; attempt < 200; ++attempt) {
    Scalar delta = Scalar::residue(field, static_cast<std::int64_t>(rng() % p));
    UPoly shifted(field, {delta, Scalar::one(field)});
    UPoly h = powmod(shifted, mpz_class(static_cast<unsigned long>((p - 1) / 2)), g) -
              UPoly::constant(Scalar::one(field));
    UPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_equal_degree(d, field, rng, out);
      split_equal_degree(divmod(g, d).first, field, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::NoSolution, "root splitting over " + field->to_string() + " did not converge");
}

std::vector<Scalar> roots_prime_field(const UPoly& f) {
  const Ring& field = f.ring();
  const u64 p = field->prime();
  std::vector<Scalar> out;
  if (p <= 65536) {
    std::vector<u64> c;
    for (const auto& x : f.coeffs()) c.push_back(x.residue());
    for (u64 r : brute_roots_mod(c, p)) out.push_back(Scalar::residue(field, static_cast<std::int64_t>(r)));
    return out;
  }
  UPoly m = f.monic();
  UPoly xp = powmod(UPoly::x(field), mpz_class(static_cast<unsigned long>(p)), m);
  UPoly g = gcd(m, xp - UPoly::x(field));
  std::mt19937_64 rng(0);
  split_equal_degree(g, field, rng, out);
  return out;
}

// --- characteristic zero -------------------------------------------------

mpz_class mod_norm(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw Error(ErrorKind::NoSolution, "non-invertible residue during p-adic lifting");
  return r;
}

mpz_class eval_mpz(const std::vector<mpz_class>& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = mod_norm(acc * x + f[i], m);
  return acc;
}

std::vector<mpz_class> derivative_mpz(const std::vector<mpz_class>& f) {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

// Newton iteration for a simple root modulo m.
mpz_class hensel_lift(const std::vector<mpz_class>& f, mpz_class x, const mpz_class& m) {
  const auto df = derivative_mpz(f);
  for (int iter = 0; iter < 200; ++iter) {
    mpz_class fx = eval_mpz(f, x, m);
    if (fx == 0) return x;
    x = mod_norm(x - fx * inv_mod(eval_mpz(df, x, m), m), m);
  }
  throw Error(ErrorKind::NoSolution, "Hensel lifting did not converge");
}

// Inverse of a matrix over Z/m where the determinant is a unit.
std::vector<std::vector<mpz_class>> invert_mod(std::vector<std::vector<mpz_class>> a, const mpz_class& m) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpz_class>> inv(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    mpz_class g;
    while (piv < n) {
      mpz_gcd(g.get_mpz_t(), a[piv][c].get_mpz_t(), m.get_mpz_t());
      if (g == 1) break;
      ++piv;
    }
    if (piv == n) throw Error(ErrorKind::NoSolution, "Vandermonde matrix is singular modulo the prime");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const mpz_class s = inv_mod(a[c][c], m);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = mod_norm(a[c][j] * s, m);
      inv[c][j] = mod_norm(inv[c][j] * s, m);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpz_class f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = mod_norm(a[i][j] - f * a[c][j], m);
        inv[i][j] = mod_norm(inv[i][j] - f * inv[c][j], m);
      }
    }
  }
  return inv;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Bound on |coordinate| of an algebraic integer whose conjugates all have
// absolute value at most `conj_bound`, via the trace-dual basis.
mpz_class coordinate_bound(const Ring& field, const mpz_class& conj_bound) {
  if (field->kind() != RingKind::Cyclotomic || field->degree() == 1) return conj_bound;
  const unsigned n = field->degree();
  const Ring q = rationals();
  // Trace of zeta^k is the trace of multiplication by zeta^k.
  auto trace_of = [&](const Scalar& y) {
    mpq_class t = 0;
    Scalar basis = Scalar::one(field);
    const Scalar z = Scalar::variable(field, field->generator());
    for (unsigned j = 0; j < n; ++j) {
      t += (y * basis).coords()[j];
      basis = basis * z;
    }
    return t;
  };
  Matrix tr(q, n, n);
  const Scalar z = Scalar::variable(field, field->generator());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) tr(i, j) = Scalar::from_rational(q, trace_of(pow(z, static_cast<long>(i + j))));
  Matrix dual = inverse(tr);
  mpq_class best = 0;
  for (unsigned j = 0; j < n; ++j) {
    mpq_class row = 0;
    for (unsigned i = 0; i < n; ++i) row += abs(dual(j, i).rational());
    best = std::max(best, row);
  }
  return ceil_q(best * n * conj_bound) + 1;
}

std::vector<Scalar> roots_char0(const UPoly& input) {
  const Ring& field = input.ring();
  const bool cyclo = field->kind() == RingKind::Cyclotomic;
  const unsigned n = cyclo ? field->degree() : 1;
  const unsigned e = cyclo ? field->order() : 1;
  UPoly f = squarefree_part(input);
  const int m = f.degree();
  if (m <= 0) return {};
  if (m == 1) return {-f.coeffs()[0]};

  auto coords_of = [&](const Scalar& s) {
    return cyclo ? s.coords() : std::vector<mpq_class>{s.rational()};
  };
  // Substitute x = y / D so that the polynomial in y is monic and integral.
  mpz_class den = 1;
  for (const auto& c : f.coeffs())
    for (const auto& q : coords_of(c)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::vector<mpz_class>> g(m + 1, std::vector<mpz_class>(n, 0));
  mpz_class max_norm = 0;
  for (int k = 0; k <= m; ++k) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m - k));
    auto cs = coords_of(f.coeffs()[k]);
    mpz_class norm = 0;
    for (unsigned j = 0; j < n; ++j) {
      mpq_class v = cs[j] * scale;
      g[k][j] = v.get_num();
      norm += abs(g[k][j]);
    }
    if (k < m) max_norm = std::max(max_norm, norm);
  }
  const mpz_class bound = coordinate_bound(field, max_norm + 1);

  // A prime p = 1 mod e at which every conjugate reduction stays squarefree.
  u64 p = 1009;
  std::vector<u64> omegas;
  std::vector<std::vector<u64>> reductions;
  const auto phi = field->kind() == RingKind::Cyclotomic ? field->modulus() : std::vector<mpz_class>{-1, 1};
  for (;; ++p) {
    if (p % e != 1 % e || !is_prime(p)) continue;
    std::vector<u64> phi_mod;
    for (const auto& c : phi) phi_mod.push_back(mod_norm(c, mpz_class(static_cast<unsigned long>(p))).get_ui());
    omegas = brute_roots_mod(phi_mod, p);
    if (omegas.size() != n) continue;
    reductions.clear();
    bool ok = true;
    for (u64 w : omegas) {
      std::vector<u64> red(m + 1, 0);
      for (int k = 0; k <= m; ++k) {
        u64 acc = 0, power = 1;
        for (unsigned j = 0; j < n; ++j) {
          acc = (acc + mulmod(mod_norm(g[k][j], mpz_class(static_cast<unsigned long>(p))).get_ui(), power, p)) % p;
          power = mulmod(power, w, p);
        }
        red[k] = acc;
      }
      std::vector<u64> dred;
      for (int k = 1; k <= m; ++k) dred.push_back(mulmod(red[k], static_cast<u64>(k) % p, p));
      if (gcd_degree_mod(red, dred, p) != 0) {
        ok = false;
        break;
      }
      reductions.push_back(std::move(red));
    }
    if (ok) break;
    if (p > 1000000) throw Error(ErrorKind::NoSolution, "no suitable prime for root finding");
  }

  // Precision p^k > 2 * bound + 1.
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class modulus = pz;
  while (modulus <= 2 * bound + 1) modulus *= pz;

  std::vector<mpz_class> lifted_omega;
  for (u64 w : omegas) lifted_omega.push_back(hensel_lift(phi, mpz_class(static_cast<unsigned long>(w)), modulus));

  std::vector<std::vector<mpz_class>> lifted_roots(n);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<mpz_class> gw(m + 1);
    for (int k = 0; k <= m; ++k) {
      mpz_class acc = 0, power = 1;
      for (unsigned j = 0; j < n; ++j) {
        acc = mod_norm(acc + g[k][j] * power, modulus);
        power = mod_norm(power * lifted_omega[i], modulus);
      }
      gw[k] = acc;
    }
    for (u64 r : brute_roots_mod(reductions[i], p))
      lifted_roots[i].push_back(hensel_lift(gw, mpz_class(static_cast<unsigned long>(r)), modulus));
    if (lifted_roots[i].empty()) return {};
  }

  std::vector<std::vector<mpz_class>> vander(n, std::vector<mpz_class>(n));
  for (unsigned i = 0; i < n; ++i) {
    mpz_class power = 1;
    for (unsigned j = 0; j < n; ++j) {
      vander[i][j] = power;
      power = mod_norm(power * lifted_omega[i], modulus);
    }
  }
  const auto vinv = invert_mod(vander, modulus);
  const mpz_class half = modulus / 2;

  std::vector<Scalar> found;
  std::vector<std::size_t> choice(n, 0);
  const Scalar inv_den = Scalar::from_rational(field, mpq_class(1, 1) / mpq_class(den));
  while (true) {
    std::vector<mpq_class> cs(n);
    bool in_range = true;
    for (unsigned j = 0; j < n && in_range; ++j) {
      mpz_class acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += vinv[j][i] * lifted_roots[i][choice[i]];
      acc = mod_norm(acc, modulus);
      if (acc > half) acc -= modulus;
      if (abs(acc) > bound) in_range = false;
      cs[j] = acc;
    }
    if (in_range) {
      Scalar y = cyclo ? Scalar::cyclotomic(field, cs) : Scalar::from_rational(field, cs[0]);
      Scalar x = y * inv_den;
      if (f.eval(x).is_zero() && std::find(found.begin(), found.end(), x) == found.end()) found.push_back(x);
    }
    std::size_t pos = 0;
    while (pos < n && ++choice[pos] == lifted_roots[pos].size()) choice[pos++] = 0;
    if (pos == n) break;
    if (static_cast<int>(found.size()) == m) break;
  }
  return found;
}

}  // namespace

std::vector<Scalar> roots_in_field(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::NoSolution, "roots of the zero polynomial");
  const Ring& field = p.ring();
  std::vector<Scalar> out;
  if (p.degree() <= 0) return out;
  switch (field->kind()) {
    case RingKind::PrimeField:
      out = roots_prime_field(p);
      break;
    case RingKind::Rationals:
    case RingKind::Cyclotomic:
      out = roots_char0(p);
      break;
    default: {
      UPoly f = p.degree() > 1 && field->characteristic() == 0 ? squarefree_part(p) : p;
      if (f.degree() > 1)
        throw Error(ErrorKind::UnsupportedField, "root finding of degree " + std::to_string(f.degree()) + " over " +
                                                     field->to_string());
      out.push_back(-f.coeffs()[0] * inverse(f.coeffs()[1]));
    }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return compare(a, b) < 0; });
  return out;
}

}  // namespace gradec
