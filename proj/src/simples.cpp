#include "gradec/simples.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <random>

#include "gradec/error.hpp"
#include "gradec/roots.hpp"

namespace gradec {

namespace {

// Row-reduced spanning set, grown one vector at a time.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n) {}

  // Adds v if it is not already in the span; returns whether it was added.
  bool add(const std::vector<Scalar>& v) {
    std::vector<Scalar> w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = w[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[i][j].is_zero()) w[j] -= c * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < n_ && w[p].is_zero()) ++p;
    if (p == n_) return false;
    const Scalar inv = inverse(w[p]);
    for (auto& x : w) x *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Scalar> column_of(const Matrix& m, std::size_t c) {
  std::vector<Scalar> v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m(r, c));
  return v;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(a.rows(), Scalar::zero(a.ring()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

// Column basis of the submodule generated by v.
Matrix spin(const ModuleRep& mod, const std::vector<Scalar>& v) {
  const std::size_t d = mod.dim();
  SpanBuilder span(d);
  std::vector<std::vector<Scalar>> basis;
  std::queue<std::vector<Scalar>> todo;
  todo.push(v);
  while (!todo.empty() && span.size() < d) {
    auto w = std::move(todo.front());
    todo.pop();
    if (!span.add(w)) continue;
    for (const auto& a : mod.action) todo.push(mat_vec(a, w));
    basis.push_back(std::move(w));
  }
  if (span.size() == d) return Matrix::identity(mod.field, d);
  return Matrix::from_columns(mod.field, d, basis);
}

// Basis of the span of a list of equally sized matrices.
std::vector<Matrix> span_basis(const std::vector<Matrix>& mats) {
  std::vector<Matrix> out;
  if (mats.empty()) return out;
  const std::size_t rows = mats[0].rows(), cols = mats[0].cols();
  const RowEchelon e = rref(stack_flat(mats));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(unflatten(e.reduced.row(i), rows, cols));
  return out;
}

Matrix combination(const std::vector<Matrix>& basis, const std::vector<Scalar>& coeffs) {
  Matrix out(basis[0].ring(), basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) out = out + basis[i] * coeffs[i];
  return out;
}

// Coefficient vectors c with sum_i c_i x_i in the kernel of the linear form
// table g (g[i][k] = value of the k-th form on x_i).
std::vector<std::vector<Scalar>> left_kernel(const Matrix& g) {
  const Matrix k = kernel(g.transpose());
  std::vector<std::vector<Scalar>> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(column_of(k, c));
  return out;
}

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix zmul(const ZMatrix& a, const ZMatrix& b, const mpz_class& m) {
  const std::size_t n = a.size();
  ZMatrix c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  for (auto& row : c)
    for (auto& x : row) x = ((x % m) + m) % m;
  return c;
}

// Tr(z^(p^i)) mod p^(i+1), divided by p^i, for an integer lift of z.
Scalar power_trace_form(const Matrix& z, unsigned long p, unsigned i) {
  mpz_class pi, mod;
  mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
  mod = pi * p;
  ZMatrix lift(z.rows(), std::vector<mpz_class>(z.cols()));
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) lift[r][c] = static_cast<unsigned long>(z(r, c).residue());
  for (unsigned step = 0; step < i; ++step) {
    // lift <- lift^p
    ZMatrix result = lift, base = lift;
    unsigned long e = p - 1;
    while (e) {
      if (e & 1) result = zmul(result, base, mod);
      e >>= 1;
      if (e) base = zmul(base, base, mod);
    }
    lift = std::move(result);
  }
  mpz_class tr = 0;
  for (std::size_t r = 0; r < lift.size(); ++r) tr += lift[r][r];
  tr = ((tr % mod) + mod) % mod;
  if (tr % pi != 0) throw Error(ErrorKind::UnsupportedField, "power trace form is not divisible by p^" + std::to_string(i));
  mpz_class v = tr / pi;
  return Scalar::residue(z.ring(), static_cast<std::int64_t>(v.get_ui() % p));
}

// Radical as coefficient vectors over `basis`.
std::vector<std::vector<Scalar>> radical_coefficients(const std::vector<Matrix>& basis) {
  std::vector<std::vector<Scalar>> out;
  if (basis.empty()) return out;
  const Ring& field = basis[0].ring();
  const std::size_t r = basis.size(), n = basis[0].rows();
  if (!field->is_field()) throw Error(ErrorKind::UnsupportedField, "radical needs a field, got " + field->to_string());
  const std::uint64_t p = field->characteristic();
  if (p != 0 && field->kind() != RingKind::PrimeField)
    throw Error(ErrorKind::UnsupportedField, "radical in positive characteristic needs a prime field, got " + field->to_string());
  // Current ideal I, as coefficient vectors.
  std::vector<std::vector<Scalar>> ideal;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Scalar> e(r, Scalar::zero(field));
    e[i] = Scalar::one(field);
    ideal.push_back(std::move(e));
  }
  auto refine = [&](const std::function<Scalar(const Matrix&)>& form) {
    if (ideal.empty()) return;
    std::vector<Matrix> xs;
    for (const auto& c : ideal) xs.push_back(combination(basis, c));
    Matrix g(field, xs.size(), r);
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (std::size_t k = 0; k < r; ++k) g(j, k) = form(xs[j] * basis[k]);
    std::vector<std::vector<Scalar>> next;
    for (const auto& c : left_kernel(g)) {
      std::vector<Scalar> coeff(r, Scalar::zero(field));
      for (std::size_t j = 0; j < ideal.size(); ++j)
        for (std::size_t t = 0; t < r; ++t) coeff[t] += c[j] * ideal[j][t];
      next.push_back(std::move(coeff));
    }
    ideal = std::move(next);
  };
  refine([](const Matrix& z) { return z.trace(); });
  if (p != 0) {
    unsigned long power = p;
    for (unsigned i = 1; power <= n; ++i, power *= p) refine([p, i](const Matrix& z) { return power_trace_form(z, p, i); });
  }
  return ideal;
}

Matrix commutator_system(const std::vector<Matrix>& gens, std::size_t d, const Ring& field) {
  // Unknown X (d*d, row-major); rows: entries of X a - a X for every a.
  Matrix sys(field, gens.size() * d * d, d * d);
  std::size_t row = 0;
  for (const auto& a : gens)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row)
        for (std::size_t k = 0; k < d; ++k) {
          if (!a(k, j).is_zero()) sys(row, i * d + k) += a(k, j);
          if (!a(i, k).is_zero()) sys(row, k * d + j) -= a(i, k);
        }
  return sys;
}

std::vector<Matrix> commutant(const ModuleRep& mod) {
  const std::size_t d = mod.dim();
  const Matrix k = kernel(commutator_system(mod.action, d, mod.field));
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unflatten(column_of(k, c), d, d));
  return out;
}

// Elements of span(basis) commuting with every generator.
std::vector<Matrix> centre(const std::vector<Matrix>& basis, const std::vector<Matrix>& gens) {
  std::vector<Matrix> comms;
  std::vector<Matrix> out;
  if (basis.empty()) return out;
  const Ring& field = basis[0].ring();
  Matrix sys(field, gens.size() * basis[0].rows() * basis[0].cols(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t row = 0;
    for (const auto& g : gens) {
      const Matrix c = basis[i] * g - g * basis[i];
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t s = 0; s < c.cols(); ++s) sys(row++, i) = c(r, s);
    }
  }
  const Matrix k = kernel(sys);
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(combination(basis, column_of(k, c)));
  return out;
}

bool is_scalar_matrix(const Matrix& m) { return m.is_scalar(); }

// Nonzero proper invariant subspace of ker f(y) for y commuting with the
// action, if f has a useful factor.
std::optional<Matrix> commuting_split(const Matrix& y, bool& has_root) {
  const UPoly m = minpoly(y);
  has_root = false;
  if (m.degree() <= 1) return std::nullopt;
  const UPoly sf = squarefree_part(m);
  if (sf.degree() < m.degree()) {
    has_root = true;
    return kernel(eval_poly(sf, y));
  }
  auto roots = roots_in_field(m);
  if (roots.empty()) return std::nullopt;
  has_root = true;
  return kernel(y - Matrix::identity(y.ring(), y.rows()) * roots.front());
}

std::string print_poly(const UPoly& p) { return to_string(p); }

Scalar random_scalar(const Ring& field, std::mt19937_64& rng) {
  if (field->kind() == RingKind::PrimeField) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field->prime() - 1);
    return Scalar::residue(field, static_cast<std::int64_t>(dist(rng)));
  }
  std::uniform_int_distribution<long> dist(-3, 3);
  return Scalar::from_int(field, dist(rng));
}

// Proper nonzero submodule, or nothing if the module is absolutely irreducible.
std::optional<Matrix> find_submodule(const ModuleRep& mod, std::mt19937_64& rng) {
  const std::size_t d = mod.dim();
  if (d <= 1) return std::nullopt;
  const std::vector<Matrix> image = span_basis(mod.action);
  if (image.size() == d * d) return std::nullopt;

  // Radical of the image algebra: J M is a proper submodule when J != 0.
  const auto rad = radical_coefficients(image);
  if (!rad.empty()) {
    std::vector<std::vector<Scalar>> cols;
    for (const auto& c : rad) {
      const Matrix j = combination(image, c);
      for (std::size_t s = 0; s < d; ++s) cols.push_back(column_of(j, s));
    }
    return column_basis(Matrix::from_columns(mod.field, d, cols));
  }

  // Semisimple image with a non-trivial centre: central eigenspaces.
  for (const auto& z : centre(image, mod.action)) {
    if (is_scalar_matrix(z)) continue;
    bool has_root = false;
    auto sub = commuting_split(z, has_root);
    if (sub) return sub;
    throw Error(ErrorKind::NotSplit, "module " + mod.name + ": central element with minimal polynomial " +
                                         print_poly(minpoly(z)) + " has no root in " + mod.field->to_string());
  }

  // Simple image algebra acting on several copies of one simple module.
  std::vector<Matrix> comm;
  if (d <= 16) comm = commutant(mod);
  for (const auto& y : comm) {
    if (is_scalar_matrix(y)) continue;
    bool has_root = false;
    if (auto sub = commuting_split(y, has_root)) return sub;
  }
  auto try_image_element = [&](const Matrix& y) -> std::optional<Matrix> {
    if (is_scalar_matrix(y)) return std::nullopt;
    for (const auto& lambda : roots_in_field(minpoly(y))) {
      const Matrix k = kernel(y - Matrix::identity(mod.field, d) * lambda);
      std::vector<std::vector<Scalar>> candidates;
      std::vector<Scalar> sum(d, Scalar::zero(mod.field));
      for (std::size_t c = 0; c < k.cols(); ++c) {
        candidates.push_back(column_of(k, c));
        for (std::size_t r = 0; r < d; ++r) sum[r] += k(r, c);
      }
      if (k.cols() > 1) candidates.push_back(sum);
      for (const auto& v : candidates) {
        Matrix sub = spin(mod, v);
        if (sub.cols() < d) return sub;
      }
    }
    return std::nullopt;
  };
  for (const auto& a : mod.action)
    if (auto sub = try_image_element(a)) return sub;
  for (std::size_t i = 0; i < mod.action.size(); ++i)
    for (std::size_t j = 0; j < mod.action.size(); ++j)
      if (auto sub = try_image_element(mod.action[i] * mod.action[j])) return sub;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < image.size(); ++i) c.push_back(random_scalar(mod.field, rng));
    if (auto sub = try_image_element(combination(image, c))) return sub;
    if (!comm.empty()) {
      std::vector<Scalar> cc;
      for (std::size_t i = 0; i < comm.size(); ++i) cc.push_back(random_scalar(mod.field, rng));
      bool has_root = false;
      const Matrix y = combination(comm, cc);
      if (!is_scalar_matrix(y))
        if (auto sub = commuting_split(y, has_root)) return sub;
    }
  }
  throw Error(ErrorKind::SplittingFailed, "module " + mod.name + " of dimension " + std::to_string(d) +
                                              ": image algebra of dimension " + std::to_string(image.size()) +
                                              " and no splitting element found");
}

// Coefficients in the prime field, if the value lies there.
std::optional<Scalar> to_prime_field(const Scalar& x) {
  switch (x.kind()) {
    case RingKind::Integers:
      return Scalar::from_rational(rationals(), x.rational());
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return x;
    case RingKind::Cyclotomic: {
      const auto& c = x.coords();
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
      return Scalar::from_rational(rationals(), c.empty() ? mpq_class(0) : c[0]);
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      if (x.is_zero()) return to_prime_field(Scalar::zero(x.ring()->base()));
      const auto& t = x.terms();
      if (t.size() != 1 || std::any_of(t[0].mono.begin(), t[0].mono.end(), [](int e) { return e != 0; }))
        return std::nullopt;
      return to_prime_field(t[0].coeff);
    }
    case RingKind::Fraction: {
      if (!x.denominator().is_one()) return std::nullopt;
      return to_prime_field(x.numerator());
    }
  }
  return std::nullopt;
}

std::vector<Scalar> grading_eigenvalues(const Matrix& d0) {
  const UPoly m = minpoly(d0);
  const Ring& field = d0.ring();
  const Ring prime = field->characteristic() == 0 ? rationals() : prime_field(static_cast<unsigned long>(field->characteristic()));
  std::vector<Scalar> coeffs;
  bool in_prime = true;
  for (const auto& c : m.coeffs()) {
    auto v = to_prime_field(c);
    if (!v) {
      in_prime = false;
      break;
    }
    coeffs.push_back(*v);
  }
  std::vector<Scalar> roots;
  if (in_prime) {
    for (const auto& r : roots_in_field(UPoly(prime, coeffs))) roots.push_back(coerce(r, field));
  } else if (field->kind() == RingKind::Cyclotomic || field->kind() == RingKind::PrimeField ||
             field->kind() == RingKind::Rationals) {
    roots = roots_in_field(m);
  } else {
    throw Error(ErrorKind::NotGradable, "grading operator eigenvalues are not in the prime field");
  }
  if (static_cast<int>(roots.size()) != m.degree())
    throw Error(ErrorKind::NotGradable, "grading operator with minimal polynomial " + to_string(m) +
                                            " is not diagonalisable over " + field->to_string());
  return roots;
}

}  // namespace

std::size_t SimpleSet::find(const std::vector<Scalar>& character) const {
  for (std::size_t i = 0; i < characters.size(); ++i)
    if (characters[i] == character) return i;
  return characters.size();
}

std::vector<Matrix> matrix_algebra_radical(const std::vector<Matrix>& basis) {
  std::vector<Matrix> out;
  for (const auto& c : radical_coefficients(basis)) out.push_back(combination(basis, c));
  return out;
}

std::vector<std::vector<Scalar>> radical(const GradedAlgebra& alg) {
  const RingKind k = alg.ring->kind();
  if (k != RingKind::Rationals && k != RingKind::Cyclotomic && k != RingKind::PrimeField)
    throw Error(ErrorKind::UnsupportedField, "radical over " + alg.ring->to_string() + "; need QQ, QQ(zeta_e) or GF(p)");
  std::vector<Matrix> regular;
  for (std::size_t i = 0; i < alg.dim(); ++i) regular.push_back(left_multiplication(alg, i));
  return radical_coefficients(regular);
}

std::size_t endomorphism_dimension(const ModuleRep& mod) { return commutant(mod).size(); }

std::vector<ModuleRep> simple_factors(const ModuleRep& mod, const SimplesOptions& opts) {
  if (mod.dim() > opts.max_dim)
    throw Error(ErrorKind::DimensionBound, "module " + mod.name + " has dimension " + std::to_string(mod.dim()) +
                                               ", above the bound " + std::to_string(opts.max_dim));
  std::mt19937_64 rng(opts.seed);
  std::vector<ModuleRep> out;
  std::vector<ModuleRep> todo{mod};
  while (!todo.empty()) {
    ModuleRep m = std::move(todo.back());
    todo.pop_back();
    if (m.dim() == 0) continue;
    auto sub = find_submodule(m, rng);
    if (!sub) {
      out.push_back(std::move(m));
      continue;
    }
    // Pushed in reverse so the submodule is handled first.
    todo.push_back(quotient(m, *sub));
    todo.push_back(submodule(m, *sub));
  }
  return out;
}

std::vector<std::size_t> composition_factors(const ModuleRep& mod, const SimpleSet& set, const SimplesOptions& opts) {
  std::vector<std::size_t> counts(set.size(), 0);
  for (const auto& f : simple_factors(mod, opts)) {
    const auto chi = ungraded_character(f);
    const std::size_t i = set.find(chi);
    if (i == set.size())
      throw Error(ErrorKind::NoSolution, "module " + mod.name + " has a composition factor of dimension " +
                                             std::to_string(f.dim()) + " that is not in the simple set");
    ++counts[i];
  }
  return counts;
}

bool check_split(const AlgebraPtr& alg, const SimplesOptions& opts) {
  try {
    const SimpleSet set = compute_simples(alg, opts);
    for (const auto& s : set.simples)
      if (endomorphism_dimension(s) != 1) return false;
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotSplit) return false;
    throw;
  }
}

GradedModuleRep grade_simple(const ModuleRep& simple) {
  const std::size_t d = simple.dim();
  const GradedAlgebra& alg = *simple.algebra;
  const Ring& field = simple.field;
  GradedModuleRep out;
  out.name = simple.name;
  out.algebra = simple.algebra;
  out.field = field;
  if (d == 0) {
    out.action = simple.action;
    return out;
  }
  if (d == 1) {
    out.action = simple.action;
    out.degrees = {0};
    auto report = validate_module(out);
    if (!report.ok()) throw Error(ErrorKind::NotGradable, "module " + simple.name + ": " + report.violations.front());
    return out;
  }
  // D a - a D = deg(b) a for every basis element b with matrix a.
  std::vector<Matrix> gens;
  std::vector<int> gen_degrees;
  for (std::size_t m = 0; m < alg.dim(); ++m)
    if (!simple.action[m].is_zero()) {
      gens.push_back(simple.action[m]);
      gen_degrees.push_back(alg.degrees[m]);
    }
  // commutator_system gives X a - a X.
  const Matrix sys = commutator_system(gens, d, field);
  Matrix rhs(field, sys.rows(), 1);
  {
    std::size_t row = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j, ++row) rhs(row, 0) = gens[g](i, j) * Scalar::from_int(field, gen_degrees[g]);
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw Error(ErrorKind::NotGradable, "module " + simple.name + ": no grading operator exists");
  Matrix d0 = unflatten(column_of(*sol, 0), d, d);
  const std::uint64_t p = field->characteristic();
  if (p == 0 || d % p != 0) {
    const Scalar mean = divide(d0.trace(), Scalar::from_int(field, static_cast<long>(d)));
    d0 = d0 - Matrix::identity(field, d) * mean;
  }
  const auto eigen = grading_eigenvalues(d0);
  std::vector<Matrix> spaces;
  std::size_t total = 0;
  for (const auto& lambda : eigen) {
    spaces.push_back(kernel(d0 - Matrix::identity(field, d) * lambda));
    total += spaces.back().cols();
  }
  if (total != d) throw Error(ErrorKind::NotGradable, "module " + simple.name + ": grading operator is not diagonalisable");

  auto assemble = [&](const std::vector<std::size_t>& order) {
    std::vector<std::vector<Scalar>> cols;
    for (auto b : order)
      for (std::size_t c = 0; c < spaces[b].cols(); ++c) cols.push_back(column_of(spaces[b], c));
    return Matrix::from_columns(field, d, cols);
  };
  std::vector<std::size_t> identity_order(spaces.size());
  std::iota(identity_order.begin(), identity_order.end(), 0);
  const Matrix basis = assemble(identity_order);
  const ModuleRep adapted = change_basis(simple, basis);
  std::vector<std::size_t> block_of, block_start;
  for (std::size_t b = 0; b < spaces.size(); ++b) {
    block_start.push_back(block_of.size());
    for (std::size_t c = 0; c < spaces[b].cols(); ++c) block_of.push_back(b);
  }

  // Block graph: an entry (r, s) of basis element m forces deg r = deg s + deg m.
  struct Edge {
    std::size_t from, to;
    int weight;
    std::string label;
  };
  std::vector<Edge> edges;
  for (std::size_t m = 0; m < alg.dim(); ++m) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const Matrix& a = adapted.action[m];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        if (!a(r, s).is_zero() && seen.insert({block_of[s], block_of[r]}).second)
          edges.push_back({block_of[s], block_of[r], alg.degrees[m], alg.basis[m]});
  }
  std::vector<std::optional<int>> deg(spaces.size());
  deg[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : edges) {
      if (deg[e.from] && !deg[e.to]) {
        deg[e.to] = *deg[e.from] + e.weight;
        changed = true;
      } else if (deg[e.to] && !deg[e.from]) {
        deg[e.from] = *deg[e.to] - e.weight;
        changed = true;
      }
    }
  }
  for (std::size_t b = 0; b < deg.size(); ++b)
    if (!deg[b])
      throw Error(ErrorKind::NotGradable, "module " + simple.name + ": homogeneous block " + std::to_string(b) +
                                              " is not linked to block 0, so the module is not simple");
  for (const auto& e : edges)
    if (*deg[e.to] != *deg[e.from] + e.weight)
      throw Error(ErrorKind::NotGradable, "module " + simple.name + ": " + e.label + " (degree " + std::to_string(e.weight) +
                                              ") maps block " + std::to_string(e.from) + " (degree " +
                                              std::to_string(*deg[e.from]) + ") to block " + std::to_string(e.to) +
                                              " (degree " + std::to_string(*deg[e.to]) + ")");
  int lo = *deg[0];
  for (const auto& x : deg) lo = std::min(lo, *x);
  std::vector<std::size_t> order = identity_order;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return *deg[a] < *deg[b]; });
  const ModuleRep sorted = change_basis(simple, assemble(order));
  out.action = sorted.action;
  for (auto b : order)
    for (std::size_t c = 0; c < spaces[b].cols(); ++c) out.degrees.push_back(*deg[b] - lo);
  auto report = validate_module(out);
  if (!report.ok()) throw Error(ErrorKind::NotGradable, "module " + simple.name + ": " + report.violations.front());
  return out;
}

SimpleSet compute_simples(const AlgebraPtr& alg, const SimplesOptions& opts) {
  const RingKind k = alg->ring->kind();
  if (k != RingKind::Rationals && k != RingKind::Cyclotomic && k != RingKind::PrimeField)
    throw Error(ErrorKind::UnsupportedField, "simple modules over " + alg->ring->to_string() +
                                                 "; need QQ, QQ(zeta_e) or GF(p)");
  const ModuleRep regular = forget_grading(regular_module(alg));
  std::vector<std::pair<std::vector<Scalar>, ModuleRep>> found;
  for (auto& f : simple_factors(regular, opts)) {
    auto chi = ungraded_character(f);
    bool dup = std::any_of(found.begin(), found.end(), [&](const auto& x) { return x.first == chi; });
    if (!dup) found.emplace_back(std::move(chi), std::move(f));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.dim() != b.second.dim()) return a.second.dim() < b.second.dim();
    return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                                        [](const Scalar& x, const Scalar& y) { return compare(x, y) < 0; });
  });
  SimpleSet set;
  set.algebra = alg;
  for (std::size_t i = 0; i < found.size(); ++i) {
    ModuleRep m = found[i].second;
    m.name = "S" + std::to_string(i + 1);
    set.simples.push_back(grade_simple(m));
    set.characters.push_back(found[i].first);
  }
  return set;
}

GradedClass graded_multiplicities(const GradedModuleRep& mod, const SimpleSet& set, const SimplesOptions& opts) {
  if (!same_ring(mod.field, set.algebra->ring))
    throw Error(ErrorKind::FieldMismatch, "module " + mod.name + " is over " + mod.field->to_string() +
                                              " but the simples are over " + set.algebra->ring->to_string());
  GradedClass result;
  if (mod.dim() == 0) return GradedClass(set.size(), LaurentPoly(integers(), 'q'));
  if (mod.field->characteristic() == 0) {
    std::vector<GradedCharacter> chars;
    for (const auto& s : set.simples) chars.push_back(graded_character(s));
    result = solve_multiplicities(graded_character(mod), chars, set.algebra->degree_zero_basis());
  } else {
    const auto elements = default_evaluation_set(*set.algebra, opts.depth);
    std::vector<Fingerprint> fps;
    for (const auto& s : set.simples) fps.push_back(fingerprint(s, elements));
    result = solve_multiplicities_by_fingerprint(fingerprint(mod, elements), fps);
  }
  const auto oracle = composition_factors(forget_grading(mod), set, opts);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Scalar at_one = result[i].at_one();
    if (at_one != Scalar::from_int(at_one.ring(), static_cast<long>(oracle[i])))
      throw Error(ErrorKind::OracleMismatch, "module " + mod.name + ", simple " + set.simples[i].name + ": graded multiplicity " +
                                                 to_string(result[i]) + " at q=1 is " + to_string(at_one) +
                                                 " but the composition series has " + std::to_string(oracle[i]));
  }
  return result;
}

}  // namespace gradec
