#include "gradec/decomp.hpp"

#include <algorithm>

#include "gradec/error.hpp"

namespace gradec {

namespace {

Fingerprint fingerprint_power(const Fingerprint& fp, long n, const Fingerprint& unit) {
  Fingerprint out = unit;
  for (long i = 0; i < n; ++i) out = fingerprint_product(out, fp);
  return out;
}

Fingerprint push_forward(const Fingerprint& fp, const Specialization& theta) {
  Fingerprint out{theta.target(), fp.labels, {}};
  for (const auto& per_degree : fp.polys) {
    std::map<int, UPoly> mapped;
    for (const auto& [deg, p] : per_degree) mapped.emplace(deg, p.map([&](const Scalar& c) { return theta.apply(c); }, theta.target()));
    out.polys.push_back(std::move(mapped));
  }
  return out;
}

std::string class_string(const GradedClass& c, const SimpleSet& set) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += ", ";
    s += set.simples[i].name + ": " + to_string(c[i]);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ModuleReduction reduce_module(const GradedModuleRep& mod, const Specialization& theta, const AlgebraPtr& target_algebra) {
  auto [lattice, record] = clear_denominators(mod, theta);
  GradedModuleRep reduced = modular_reduce(lattice, theta, target_algebra);
  return {std::move(lattice), std::move(record), std::move(reduced)};
}

GradedClass decompose_module(const GradedModuleRep& mod, const Specialization& theta, const SimpleSet& set,
                             const SimplesOptions& opts) {
  if (mod.dim() == 0) return GradedClass(set.size(), LaurentPoly(integers(), 'q'));
  const ModuleReduction r = reduce_module(mod, theta, set.algebra);
  return graded_multiplicities(r.reduced, set, opts);
}

GradedDecompMatrix decomposition_matrix(const Specialization& theta, const std::vector<GradedModuleRep>& kh_simples,
                                        const SimpleSet& set, const SimplesOptions& opts) {
  GradedDecompMatrix d;
  d.theta = theta.name;
  d.seed = opts.seed;
  for (const auto& s : set.simples) {
    d.cols.push_back(s.name);
    d.col_dims.push_back(s.dim());
  }
  // Rows in canonical order: dimension, then ungraded character.
  std::vector<std::pair<std::vector<Scalar>, const GradedModuleRep*>> order;
  for (const auto& v : kh_simples) order.emplace_back(ungraded_character(v), &v);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second->dim() != b.second->dim()) return a.second->dim() < b.second->dim();
    return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                                        [](const Scalar& x, const Scalar& y) { return compare(x, y) < 0; });
  });
  for (const auto& [chi, vp] : order) {
    const GradedModuleRep& v = *vp;
    d.rows.push_back(v.name);
    d.row_dims.push_back(v.dim());
    if (v.dim() == 0) {
      d.entries.emplace_back(set.size(), LaurentPoly(integers(), 'q'));
      d.rescalings.emplace_back();
      d.ungraded.emplace_back(set.size(), 0);
      continue;
    }
    const ModuleReduction r = reduce_module(v, theta, set.algebra);
    d.entries.push_back(graded_multiplicities(r.reduced, set, opts));
    d.rescalings.push_back(r.rescaling);
    d.ungraded.push_back(composition_factors(forget_grading(r.reduced), set, opts));
  }
  return d;
}

std::vector<std::vector<long>> evaluate_q1(const GradedDecompMatrix& d) {
  std::vector<std::vector<long>> out;
  for (std::size_t r = 0; r < d.entries.size(); ++r) {
    std::vector<long> row;
    for (std::size_t c = 0; c < d.entries[r].size(); ++c) {
      const long v = d.entries[r][c].at_one().rational().get_num().get_si();
      if (r < d.ungraded.size() && c < d.ungraded[r].size() && static_cast<long>(d.ungraded[r][c]) != v)
        throw Error(ErrorKind::OracleMismatch, "entry (" + d.rows[r] + ", " + d.cols[c] + ") is " + std::to_string(v) +
                                                   " at q=1 but the composition series gives " +
                                                   std::to_string(d.ungraded[r][c]));
      row.push_back(v);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<LaurentPoly>> multiply(const std::vector<std::vector<LaurentPoly>>& a,
                                               const std::vector<std::vector<LaurentPoly>>& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<LaurentPoly>> out;
  for (const auto& row : a) {
    if (row.size() != inner) throw Error(ErrorKind::NonSquare, "matrix shapes do not match for a product");
    std::vector<LaurentPoly> r(cols, LaurentPoly(integers(), 'q'));
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t c = 0; c < cols; ++c) r[c] = r[c] + row[k] * b[k][c];
    for (const auto& e : r)
      for (const auto& [exp, coeff] : e.terms())
        if (coeff.rational() < 0)
          throw Error(ErrorKind::FactorizationFailure, "negative coefficient at q^" + std::to_string(exp) + " in a product");
    out.push_back(std::move(r));
  }
  return out;
}

DiagramReport verify_reduction(const GradedModuleRep& mod, const Specialization& theta, const GradedModuleRep& reduced,
                               int depth) {
  DiagramReport report;
  const auto elements = default_evaluation_set(*mod.algebra, depth);
  const Fingerprint down = push_forward(fingerprint(mod, elements), theta);
  const Fingerprint side = fingerprint(reduced, elements);
  if (auto diff = fingerprint_difference(down, side))
    report.failures.push_back(mod.name + ": theta(fingerprint) differs from the fingerprint of the reduction at " + *diff);
  else
    report.lines.push_back(mod.name + ": theta(fingerprint) equals the fingerprint of the reduction on " +
                           std::to_string(elements.size()) + " elements");
  return report;
}

DiagramReport verify_diagram(const Specialization& theta, const std::vector<GradedModuleRep>& mods, const SimpleSet& set,
                             const SimplesOptions& opts) {
  DiagramReport report;
  const auto elements = default_evaluation_set(*set.algebra, opts.depth);
  std::vector<Fingerprint> simple_fps;
  for (const auto& s : set.simples) simple_fps.push_back(fingerprint(s, elements));
  const Fingerprint unit{set.algebra->ring, [&] {
                           std::vector<std::string> l;
                           for (const auto& e : elements) l.push_back(e.label);
                           return l;
                         }(),
                         std::vector<std::map<int, UPoly>>(elements.size())};
  for (const auto& mod : mods) {
    const ModuleReduction r = reduce_module(mod, theta, set.algebra);
    DiagramReport part = verify_reduction(mod, theta, r.reduced, opts.depth);
    report.lines.insert(report.lines.end(), part.lines.begin(), part.lines.end());
    report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    const GradedClass cls = graded_multiplicities(r.reduced, set, opts);
    Fingerprint from_class = unit;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (const auto& [j, c] : cls[i].terms())
        from_class = fingerprint_product(
            from_class, fingerprint_power(fingerprint_shift(simple_fps[i], j), c.rational().get_num().get_si(), unit));
    const Fingerprint down = push_forward(fingerprint(mod, elements), theta);
    if (auto diff = fingerprint_difference(down, from_class))
      report.failures.push_back(mod.name + ": theta(fingerprint) differs from the fingerprint of the class " +
                                class_string(cls, set) + " at " + *diff);
    else
      report.lines.push_back(mod.name + ": theta(fingerprint) equals the fingerprint of the class " + class_string(cls, set));
  }
  return report;
}

FactorizationReport factorization_check(const SpecializationTower& tower, const AlgebraPtr& algebra,
                                        const std::vector<GradedModuleRep>& kh_simples, const SimplesOptions& opts) {
  auto lh = std::make_shared<GradedAlgebra>(specialize_algebra(*algebra, tower.theta));
  auto lph = std::make_shared<GradedAlgebra>(specialize_algebra(*algebra, tower.theta_prime));
  const SimpleSet s_l = compute_simples(lh, opts);
  const SimpleSet s_lp = compute_simples(lph, opts);
  FactorizationReport out;
  out.d_theta = decomposition_matrix(tower.theta, kh_simples, s_l, opts);
  out.d_theta_prime = decomposition_matrix(tower.theta_prime, kh_simples, s_lp, opts);
  out.d_phi = decomposition_matrix(tower.phi, s_l.simples, s_lp, opts);
  out.product = multiply(out.d_theta.entries, out.d_phi.entries);
  for (std::size_t r = 0; r < out.product.size(); ++r)
    for (std::size_t c = 0; c < out.product[r].size(); ++c)
      if (!(out.product[r][c] == out.d_theta_prime.entries[r][c]))
        throw Error(ErrorKind::FactorizationFailure,
                    "tower " + tower.name + ", entry (" + out.d_theta_prime.rows[r] + ", " + out.d_theta_prime.cols[c] +
                        "): direct " + to_string(out.d_theta_prime.entries[r][c]) + ", through " +
                        tower.intermediate->to_string() + " " + to_string(out.product[r][c]));
  return out;
}

}  // namespace gradec
