#include "gradec/character.hpp"

#include <algorithm>
#include <set>

#include "gradec/error.hpp"

namespace gradec {

namespace {

std::map<int, std::vector<std::size_t>> degree_blocks(const GradedModuleRep& mod) {
  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t r = 0; r < mod.degrees.size(); ++r) blocks[mod.degrees[r]].push_back(r);
  return blocks;
}

Matrix restrict_block(const Matrix& a, const std::vector<std::size_t>& idx) {
  Matrix m(a.ring(), idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = a(idx[i], idx[j]);
  return m;
}

bool is_integral_value(const Scalar& c, mpz_class& out) {
  switch (c.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      if (c.rational().get_den() != 1) return false;
      out = c.rational().get_num();
      return true;
    case RingKind::Cyclotomic:
      for (std::size_t k = 1; k < c.coords().size(); ++k)
        if (c.coords()[k] != 0) return false;
      if (c.coords()[0].get_den() != 1) return false;
      out = c.coords()[0].get_num();
      return true;
    case RingKind::PrimeField:
      out = static_cast<unsigned long>(c.residue());
      return true;
    case RingKind::Fraction: {
      if (!c.denominator().is_one()) return false;
      const Scalar& n = c.numerator();
      if (n.is_zero()) {
        out = 0;
        return true;
      }
      if (n.terms().size() != 1 || n.terms()[0].mono[0] != 0) return false;
      return is_integral_value(n.terms()[0].coeff, out);
    }
    default:
      return false;
  }
}

GradedClass to_class(const std::vector<std::pair<std::size_t, int>>& unknowns, const Matrix& solution,
                     std::size_t nsimples, bool allow_residues) {
  GradedClass out(nsimples, LaurentPoly(integers(), 'q'));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const Scalar& c = solution(u, 0);
    if (c.is_zero()) continue;
    mpz_class n;
    if (!is_integral_value(c, n))
      throw Error(ErrorKind::NegativeMultiplicity,
                  "multiplicity " + to_string(c) + " of simple " + std::to_string(unknowns[u].first) + " in degree " +
                      std::to_string(unknowns[u].second) + " is not an integer");
    if (n < 0 && !allow_residues)
      throw Error(ErrorKind::NegativeMultiplicity,
                  "multiplicity " + n.get_str() + " of simple " + std::to_string(unknowns[u].first) + " in degree " +
                      std::to_string(unknowns[u].second) + " is negative");
    out[unknowns[u].first].add_term(unknowns[u].second, Scalar::from_integer(integers(), n));
  }
  return out;
}

}  // namespace

GradedCharacter graded_character(const GradedModuleRep& mod) {
  GradedCharacter chi;
  chi.ring = mod.field;
  chi.basis = mod.algebra->basis;
  const auto blocks = degree_blocks(mod);
  for (std::size_t m = 0; m < mod.action.size(); ++m) {
    LaurentPoly value(mod.field, 't');
    for (const auto& [deg, idx] : blocks) {
      Scalar tr = Scalar::zero(mod.field);
      for (std::size_t r : idx) tr = tr + mod.action[m](r, r);
      value.add_term(deg, tr);
    }
    chi.values.push_back(std::move(value));
  }
  return chi;
}

std::vector<Scalar> ungraded_character(const ModuleRep& mod) {
  std::vector<Scalar> out;
  for (const auto& a : mod.action) out.push_back(a.trace());
  return out;
}

std::vector<EvalElement> default_evaluation_set(const GradedAlgebra& alg, int depth) {
  std::vector<EvalElement> out;
  const std::size_t n = alg.dim();
  auto label_of = [&](const std::vector<std::size_t>& word) {
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "*" : "") + alg.basis[word[k]];
    return s;
  };
  out.push_back({alg.basis[alg.unit], {alg.unit}});
  for (std::size_t i = 0; i < n; ++i)
    if (i != alg.unit && alg.degrees[i] == 0) out.push_back({alg.basis[i], {i}});
  // Longer words, skipping the unit.
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t i = 0; i < n; ++i)
    if (i != alg.unit) frontier.push_back({i});
  for (int len = 2; len <= depth; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        if (i == alg.unit) continue;
        auto word = w;
        word.push_back(i);
        int deg = 0;
        for (auto k : word) deg += alg.degrees[k];
        if (deg == 0) out.push_back({label_of(word), word});
        next.push_back(std::move(word));
      }
    frontier = std::move(next);
  }
  return out;
}

Fingerprint fingerprint(const GradedModuleRep& mod, const std::vector<EvalElement>& elements) {
  Fingerprint fp;
  fp.ring = mod.field;
  const auto blocks = degree_blocks(mod);
  for (const auto& h : elements) {
    int deg = 0;
    for (auto k : h.word) deg += mod.algebra->degrees.at(k);
    if (deg != 0) throw Error(ErrorKind::ValidationError, "evaluation element " + h.label + " is not of degree 0");
    const Matrix a = mod.act_word(h.word);
    std::map<int, UPoly> per_degree;
    for (const auto& [d, idx] : blocks) per_degree.emplace(d, charpoly(restrict_block(a, idx)));
    fp.labels.push_back(h.label);
    fp.polys.push_back(std::move(per_degree));
  }
  return fp;
}

Fingerprint fingerprint(const GradedModuleRep& mod) { return fingerprint(mod, default_evaluation_set(*mod.algebra)); }

std::optional<std::string> fingerprint_difference(const Fingerprint& a, const Fingerprint& b) {
  if (!same_ring(a.ring, b.ring)) return "fingerprints live over " + a.ring->to_string() + " and " + b.ring->to_string();
  if (a.labels != b.labels) return std::string("fingerprints use different evaluation sets");
  for (std::size_t h = 0; h < a.labels.size(); ++h) {
    std::set<int> degs;
    for (const auto& [d, p] : a.polys[h]) degs.insert(d);
    for (const auto& [d, p] : b.polys[h]) degs.insert(d);
    for (int d : degs) {
      auto ia = a.polys[h].find(d);
      auto ib = b.polys[h].find(d);
      std::string pa = ia == a.polys[h].end() ? "1" : to_string(ia->second);
      std::string pb = ib == b.polys[h].end() ? "1" : to_string(ib->second);
      const bool equal = ia != a.polys[h].end() && ib != b.polys[h].end() ? ia->second == ib->second : pa == pb;
      if (!equal) return "element " + a.labels[h] + ", degree " + std::to_string(d) + ": " + pa + " vs " + pb;
    }
  }
  return std::nullopt;
}

bool fingerprint_equal(const Fingerprint& a, const Fingerprint& b) { return !fingerprint_difference(a, b); }

Fingerprint fingerprint_product(const Fingerprint& a, const Fingerprint& b) {
  if (a.labels != b.labels) throw Error(ErrorKind::ValidationError, "fingerprints use different evaluation sets");
  Fingerprint out = a;
  for (std::size_t h = 0; h < b.labels.size(); ++h)
    for (const auto& [d, p] : b.polys[h]) {
      auto it = out.polys[h].find(d);
      if (it == out.polys[h].end()) {
        out.polys[h].emplace(d, p);
      } else {
        it->second = it->second * p;
      }
    }
  return out;
}

Fingerprint fingerprint_shift(const Fingerprint& a, int j) {
  Fingerprint out = a;
  for (auto& per : out.polys) {
    std::map<int, UPoly> moved;
    for (auto& [d, p] : per) moved.emplace(d + j, p);
    per = std::move(moved);
  }
  return out;
}

GradedClass solve_multiplicities(const GradedCharacter& target, const std::vector<GradedCharacter>& simples,
                                 const std::vector<std::size_t>& degree_zero) {
  const Ring& field = target.ring;
  for (const auto& s : simples)
    if (!same_ring(s.ring, field)) throw Error(ErrorKind::FieldMismatch, "simple characters over a different field");
  // Exponent support of the target and of each simple.
  auto support = [&](const GradedCharacter& chi, int& lo, int& hi) {
    bool any = false;
    for (auto m : degree_zero) {
      const auto& v = chi.values[m];
      if (v.is_zero()) continue;
      lo = any ? std::min(lo, v.min_exponent()) : v.min_exponent();
      hi = any ? std::max(hi, v.max_exponent()) : v.max_exponent();
      any = true;
    }
    return any;
  };
  int tlo = 0, thi = 0;
  if (!support(target, tlo, thi)) return GradedClass(simples.size(), LaurentPoly(integers(), 'q'));
  std::vector<std::pair<std::size_t, int>> unknowns;
  std::vector<std::pair<int, int>> ranges;
  int elo = tlo, ehi = thi;
  for (std::size_t s = 0; s < simples.size(); ++s) {
    int lo = 0, hi = 0;
    if (!support(simples[s], lo, hi)) throw Error(ErrorKind::NoSolution, "simple character " + std::to_string(s) + " vanishes");
    for (int j = tlo - hi; j <= thi - lo; ++j) unknowns.push_back({s, j});
    elo = std::min(elo, tlo - hi + lo);
    ehi = std::max(ehi, thi - lo + hi);
  }
  std::vector<std::pair<std::size_t, int>> equations;
  for (auto m : degree_zero)
    for (int e = elo; e <= ehi; ++e) equations.push_back({m, e});
  Matrix a(field, equations.size(), unknowns.size());
  Matrix b(field, equations.size(), 1);
  for (std::size_t q = 0; q < equations.size(); ++q) {
    auto [m, e] = equations[q];
    b(q, 0) = target.values[m].coeff(e);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto [s, j] = unknowns[u];
      a(q, u) = simples[s].values[m].coeff(e - j);
    }
  }
  auto x = solve(a, b);
  if (!x) throw Error(ErrorKind::NoSolution, "target character is not a combination of shifted simple characters");
  if (rank(a) != unknowns.size())
    throw Error(ErrorKind::NoSolution, "shifted simple characters are linearly dependent; multiplicities not determined");
  return to_class(unknowns, *x, simples.size(), field->characteristic() != 0);
}

namespace {

// Refines a list of monic polynomials into a pairwise coprime base.
std::vector<UPoly> coprime_base(std::vector<UPoly> polys) {
  std::vector<UPoly> base;
  for (auto& p : polys) {
    if (p.degree() <= 0) continue;
    UPoly m = p.monic();
    if (std::find(base.begin(), base.end(), m) == base.end()) base.push_back(std::move(m));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        UPoly d = gcd(base[i], base[j]);
        if (d.degree() <= 0) continue;
        UPoly a = divmod(base[i], d).first.monic();
        UPoly b = divmod(base[j], d).first.monic();
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (UPoly* q : {&d, &a, &b})
          if (q->degree() > 0 && std::find(base.begin(), base.end(), *q) == base.end()) base.push_back(*q);
        changed = true;
      }
  }
  std::sort(base.begin(), base.end(), [](const UPoly& x, const UPoly& y) { return compare(x, y) < 0; });
  return base;
}

std::pair<int, int> degree_support(const Fingerprint& fp) {
  std::pair<int, int> r{0, 0};
  bool any = false;
  for (const auto& per : fp.polys)
    for (const auto& [d, p] : per) {
      r.first = any ? std::min(r.first, d) : d;
      r.second = any ? std::max(r.second, d) : d;
      any = true;
    }
  if (!any) throw Error(ErrorKind::NoSolution, "fingerprint of the zero module");
  return r;
}

}  // namespace

GradedClass solve_multiplicities_by_fingerprint(const Fingerprint& target, const std::vector<Fingerprint>& simples) {
  for (const auto& s : simples) {
    if (!same_ring(s.ring, target.ring)) throw Error(ErrorKind::FieldMismatch, "simple fingerprints over a different field");
    if (s.labels != target.labels) throw Error(ErrorKind::ValidationError, "fingerprints use different evaluation sets");
  }
  bool target_empty = true;
  for (const auto& per : target.polys) target_empty = target_empty && per.empty();
  if (target_empty) return GradedClass(simples.size(), LaurentPoly(integers(), 'q'));

  std::vector<UPoly> all;
  for (const auto& per : target.polys)
    for (const auto& [d, p] : per) all.push_back(p);
  for (const auto& s : simples)
    for (const auto& per : s.polys)
      for (const auto& [d, p] : per) all.push_back(p);
  const std::vector<UPoly> base = coprime_base(all);

  auto [tlo, thi] = degree_support(target);
  std::vector<std::pair<std::size_t, int>> unknowns;
  int elo = tlo, ehi = thi;
  for (std::size_t s = 0; s < simples.size(); ++s) {
    auto [lo, hi] = degree_support(simples[s]);
    for (int j = tlo - hi; j <= thi - lo; ++j) unknowns.push_back({s, j});
    elo = std::min(elo, tlo - hi + lo);
    ehi = std::max(ehi, thi - lo + hi);
  }
  auto exponent = [&](const std::map<int, UPoly>& per, int d, const UPoly& beta) {
    auto it = per.find(d);
    return it == per.end() ? 0 : multiplicity(it->second, beta);
  };
  const Ring q = rationals();
  const std::size_t neq = target.labels.size() * static_cast<std::size_t>(ehi - elo + 1) * base.size();
  Matrix a(q, neq, unknowns.size());
  Matrix b(q, neq, 1);
  std::size_t row = 0;
  for (std::size_t h = 0; h < target.labels.size(); ++h)
    for (int e = elo; e <= ehi; ++e)
      for (const auto& beta : base) {
        b(row, 0) = Scalar::from_int(q, exponent(target.polys[h], e, beta));
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          auto [s, j] = unknowns[u];
          a(row, u) = Scalar::from_int(q, exponent(simples[s].polys[h], e - j, beta));
        }
        ++row;
      }
  auto x = solve(a, b);
  if (!x) throw Error(ErrorKind::NoSolution, "target fingerprint is not a product of shifted simple fingerprints");
  if (rank(a) != unknowns.size())
    throw Error(ErrorKind::NoSolution, "simple fingerprints do not determine the multiplicities on this evaluation set");
  return to_class(unknowns, *x, simples.size(), false);
}

}  // namespace gradec
