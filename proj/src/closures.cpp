#include "jetclosure/closures.hpp"

#include <map>

#include "jetclosure/errors.hpp"

namespace jetclosure {

namespace {

void require_vanishing_at_origin(const Ideal& ideal, const char* what) {
  for (const auto& g : ideal.generators()) {
    if (!g.constant_coeff().is_zero()) {
      throw OriginNotOnVariety(std::string(what) + " generator " + g.to_string() +
                               " has a nonzero constant term");
    }
  }
}

std::vector<std::vector<std::uint32_t>> monomials_of_degree(std::size_t n, unsigned degree) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(n, 0);
  // Enumerate compositions of `degree` into n parts, descending lex.
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

// Positive integer weights making every generator weighted homogeneous,
// if a simple search finds them.
std::optional<std::vector<std::uint32_t>> grading_weights(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->arity();
  // Rows: exponent differences that must be orthogonal to the weights.
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : ideal.generators()) {
    const auto terms = g.terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      std::vector<mpq_class> row(n);
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = mpq_class(static_cast<long>(terms[k].monomial[i])) -
                 mpq_class(static_cast<long>(terms[0].monomial[i]));
      }
      rows.push_back(std::move(row));
    }
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    mpq_class inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || sgn(rows[q][c]) == 0) continue;
      mpq_class f = rows[q][c];
      for (std::size_t i = 0; i < n; ++i) rows[q][i] -= f * rows[r][i];
    }
    pivots.push_back(c);
    ++r;
  }
  // Null space basis, one vector per free column; try their sum.
  std::vector<mpq_class> w(n, 0);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    w[f] += 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) w[pivots[k]] -= rows[k][f];
  }
  mpz_class den = 1;
  for (const auto& v : w) {
    if (sgn(v) <= 0) return std::nullopt;
    den = lcm(den, v.get_den());
  }
  std::vector<std::uint32_t> out;
  mpz_class g = 0;
  for (const auto& v : w) g = gcd(g, mpz_class(v * den));
  for (const auto& v : w) {
    mpz_class z = mpz_class(v * den) / g;
    if (z > 1000) return std::nullopt;
    out.push_back(static_cast<std::uint32_t>(z.get_ui()));
  }
  return out;
}

// Every D_i(f) is homogeneous of degree i when x@k has weight k; selecting
// pairs by that weight keeps the basis computation graded.
GroebnerOptions jet_order_weights(const JetRing& jets, GroebnerOptions options) {
  options.selection_weights.assign(jets.ring()->arity(), 1);
  for (std::size_t j = 0; j < jets.base()->arity(); ++j) {
    for (unsigned i = std::max(1u, jets.first_order()); i <= jets.level(); ++i) {
      options.selection_weights[jets.index(j, i)] = i;
    }
  }
  return options;
}

void require_ambient(const Polynomial& g, const ClosureProblem& problem) {
  if (!same_ring(g.ring(), problem.ring())) throw RingMismatch("polynomial outside the problem's ring");
}

}  // namespace

ClosureProblem::ClosureProblem(Ideal relations, Ideal ideal)
    : relations_(std::move(relations)), ideal_(std::move(ideal)), combined_(relations_ + ideal_) {
  require_vanishing_at_origin(relations_, "relation");
  require_vanishing_at_origin(ideal_, "ideal");
}

JetClosureMembership jet_closure_member(const Polynomial& g, const ClosureProblem& problem,
                                        unsigned level, const GroebnerOptions& options) {
  require_ambient(g, problem);
  JetIdeal fiber = jet_ideal(problem.combined(), level, true);
  auto coefficients = hasse_schmidt_expand(g, fiber.jets);
  const GroebnerOptions weighted = jet_order_weights(fiber.jets, options);
  JetClosureMembership out;
  out.level = level;
  out.member = true;
  for (unsigned i = 0; i <= level; ++i) {
    Membership m = ideal_member(coefficients[i], fiber.ideal, weighted);
    if (!m.member && !out.first_failing_order) out.first_failing_order = i;
    out.member = out.member && m.member;
    out.coefficients.push_back({i, coefficients[i], m.member, std::move(m.certificate)});
  }
  return out;
}

namespace {

// Sparse vector over (order i, fiber monomial) coordinates.
using Coordinate = std::pair<unsigned, std::vector<std::uint32_t>>;
using SparseVector = std::map<Coordinate, FieldElement>;
using Combination = std::map<std::size_t, FieldElement>;

template <class Map>
void axpy(Map& y, const FieldElement& c, const Map& x) {
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.try_emplace(k, -(c * v));
    if (!fresh) {
      it->second -= c * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

// g in mjc depends only on g mod m^(m+1), and g -> (D_i(g)|_0 mod J)_i is
// linear, so mjc = ker + m^(m+1) where ker is the kernel of that map on
// polynomials of degree 1..m (a constant term is never allowed).
Ideal jet_closure_linear(const ClosureProblem& problem, unsigned level, const GroebnerOptions& options) {
  const Ring& base = problem.ring();
  const std::size_t n = base->arity();
  std::vector<Polynomial> gens;
  if (level > 0) {
    JetIdeal fiber = jet_ideal(problem.combined(), level, true);
    const auto basis = groebner_basis(fiber.ideal, MonomialOrder::degrevlex(), jet_order_weights(fiber.jets, options));
    struct Row {
      SparseVector image;
      Combination combination;
    };
    std::map<Coordinate, Row> echelon;  // keyed by the row's first coordinate
    std::vector<Monomial> domain;
    for (unsigned d = 1; d <= level; ++d) {
      for (auto& e : monomials_of_degree(n, d)) domain.emplace_back(std::move(e));
    }
    for (std::size_t k = 0; k < domain.size(); ++k) {
      const auto coefficients = hasse_schmidt_expand(Polynomial::monomial(base, domain[k]), fiber.jets);
      Row row;
      for (unsigned i = 0; i <= level; ++i) {
        const Polynomial remainder = reduce(coefficients[i], basis);
        for (const auto& t : remainder.terms()) {
          auto e = t.monomial.exponents();
          row.image.emplace(Coordinate{i, {e.begin(), e.end()}}, t.coeff);
        }
      }
      row.combination.emplace(k, FieldElement::one(base->field()));
      while (!row.image.empty()) {
        auto pivot = echelon.find(row.image.begin()->first);
        if (pivot == echelon.end()) break;
        FieldElement c = row.image.begin()->second / pivot->second.image.begin()->second;
        axpy(row.image, c, pivot->second.image);
        axpy(row.combination, c, pivot->second.combination);
      }
      if (row.image.empty()) {
        std::vector<Term> terms;
        for (const auto& [j, c] : row.combination) terms.push_back({domain[j], c});
        gens.push_back(Polynomial::from_terms(base, std::move(terms)));
      } else {
        auto key = row.image.begin()->first;
        echelon.emplace(std::move(key), std::move(row));
      }
    }
  }
  for (auto& e : monomials_of_degree(n, level + 1)) gens.push_back(Polynomial::monomial(base, Monomial(std::move(e))));
  return Ideal(base, groebner_basis(Ideal(base, std::move(gens)), MonomialOrder::degrevlex(), options));
}

}  // namespace

std::string to_string(ClosureMethod method) {
  return method == ClosureMethod::Linear ? "linear" : "elimination";
}

Ideal jet_closure(const ClosureProblem& problem, unsigned level, const GroebnerOptions& options,
                  ClosureMethod method) {
  if (method == ClosureMethod::Linear) return jet_closure_linear(problem, level, options);
  const Ring& base = problem.ring();
  const std::size_t n = base->arity();

  // k[x_1..x_n, x@1..x@m (per variable), @t]
  std::vector<std::string> names = base->names();
  names.push_back("@t");
  std::optional<JetRing> fiber_ring;
  std::vector<Polynomial> fiber_gens;
  if (level > 0) {
    JetIdeal fiber = jet_ideal(problem.combined(), level, true);
    const auto& jet_names = fiber.jets.ring()->names();
    names.insert(names.end(), jet_names.begin(), jet_names.end());
    fiber_gens = fiber.ideal.generators();
    fiber_ring = fiber.jets;
  }
  Ring big = RingContext::make(base->field(), names);
  const std::size_t t_index = n;
  Polynomial t = Polynomial::variable(big, t_index);

  std::vector<Polynomial> system;
  if (fiber_ring) {
    std::vector<std::size_t> shift(fiber_ring->ring()->arity());
    for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = n + 1 + k;
    for (const auto& f : fiber_gens) system.push_back(f.rename(big, shift, MonomialOrder::degrevlex()));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial param(big);
    for (unsigned i = 1; i <= level; ++i) {
      param += Polynomial::variable(big, n + 1 + fiber_ring->index(j, i)) * t.pow(i);
    }
    system.push_back(Polynomial::variable(big, j) - param);
  }
  system.push_back(t.pow(level + 1));
  // m^(m+1) lies in the kernel already; listing it keeps the x-block of the
  // elimination basis bounded.
  for (const auto& mono : monomials_of_degree(n, level + 1)) {
    std::vector<std::uint32_t> e(big->arity(), 0);
    std::copy(mono.begin(), mono.end(), e.begin());
    system.push_back(Polynomial::monomial(big, Monomial(std::move(e))));
  }

  GroebnerOptions tuned = options;
  if (auto w = grading_weights(problem.combined())) {
    // x_j, u_{j,i} and t get weights (m+1) w_j, (m+1) w_j - i and 1, which
    // makes the whole system homogeneous.
    tuned.selection_weights.assign(big->arity(), 1);
    for (std::size_t j = 0; j < n; ++j) {
      tuned.selection_weights[j] = (level + 1) * (*w)[j];
      for (unsigned i = 1; i <= level; ++i) {
        tuned.selection_weights[n + 1 + fiber_ring->index(j, i)] = (level + 1) * (*w)[j] - i;
      }
    }
  }
  Ideal kernel = eliminate(Ideal(big, std::move(system)), base->names(), tuned);
  std::vector<std::size_t> identity(n);
  for (std::size_t j = 0; j < n; ++j) identity[j] = j;
  std::vector<Polynomial> gens;
  for (const auto& g : kernel.generators()) gens.push_back(g.rename(base, identity, MonomialOrder::degrevlex()));
  return Ideal(base, std::move(gens));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Member:
      return "member";
    case Verdict::NonMember:
      return "non-member";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

JetSupportMembership jet_support_closure_member(const Polynomial& g, const ClosureProblem& problem,
                                                unsigned level, const GroebnerOptions& options,
                                                SupportReading reading) {
  require_ambient(g, problem);
  JetIdeal fiber = jet_ideal(problem.combined(), level, true);
  auto local = hasse_schmidt_expand(g, fiber.jets);

  std::optional<JetIdeal> global;
  std::vector<Polynomial> global_coeffs;
  if (reading == SupportReading::Literal) {
    global = jet_ideal(problem.combined(), level, false);
    global_coeffs = hasse_schmidt_expand(g, global->jets);
  }

  JetSupportMembership out;
  out.level = level;
  out.verdict = Verdict::Member;
  for (unsigned i = 0; i <= level; ++i) {
    SupportCoefficientCheck check{i, local[i], Verdict::NonMember, std::nullopt, std::nullopt};
    RadicalMembership reduced = radical_member(local[i], fiber.ideal, options);
    if (reduced.member) {
      check.verdict = Verdict::Member;
      check.certificate = std::move(reduced.rabinowitsch);
      check.exponent = reduced.exponent;
    }
    if (reading == SupportReading::Literal && reduced.member) {
      // Reduced-fiber membership is necessary; global radical membership of
      // D_i(g) or of its restriction is sufficient.
      check.verdict = Verdict::Undetermined;
      check.certificate.reset();
      check.exponent.reset();
      for (const auto& candidate : {global_coeffs[i], transport(local[i], fiber.jets, global->jets)}) {
        RadicalMembership lit = radical_member(candidate, global->ideal, options);
        if (lit.member) {
          check.verdict = Verdict::Member;
          check.certificate = std::move(lit.rabinowitsch);
          check.exponent = lit.exponent;
          break;
        }
      }
    }
    if (check.verdict == Verdict::NonMember) {
      if (!out.first_failing_order) out.first_failing_order = i;
      out.verdict = Verdict::NonMember;
    } else if (check.verdict == Verdict::Undetermined && out.verdict == Verdict::Member) {
      out.verdict = Verdict::Undetermined;
    }
    out.coefficients.push_back(std::move(check));
  }
  return out;
}

JetSupportReport jsc_member_up_to(const Polynomial& g, const ClosureProblem& problem,
                                  unsigned max_level, const GroebnerOptions& options,
                                  SupportReading reading) {
  JetSupportReport report;
  for (unsigned m = 0; m <= max_level; ++m) {
    report.levels.push_back(jet_support_closure_member(g, problem, m, options, reading));
    Verdict v = report.levels.back().verdict;
    if (v == Verdict::NonMember) {
      report.verdict = Verdict::NonMember;
      report.first_failing_level = m;
      break;
    }
    if (v == Verdict::Undetermined) report.verdict = Verdict::Undetermined;
  }
  return report;
}

ClosureChainReport arc_closure_approx(const ClosureProblem& problem, unsigned max_level,
                                      const GroebnerOptions& options, ClosureMethod method) {
  ClosureChainReport report;
  for (unsigned m = 0; m <= max_level; ++m) {
    try {
      Ideal closure = canonical(jet_closure(problem, m, options, method), options);
      Ideal cumulative =
          report.levels.empty()
              ? closure
              : canonical(ideal_intersect(report.levels.back().cumulative, closure, options), options);
      if (!ideal_contains(cumulative, problem.combined(), options)) {
        throw InvariantViolation("cumulative closure at level " + std::to_string(m) +
                                 " does not contain the ideal");
      }
      if (!report.levels.empty()) {
        if (!ideal_contains(report.levels.back().cumulative, cumulative, options)) {
          throw InvariantViolation("cumulative closure grew at level " + std::to_string(m));
        }
        if (!ideal_contains(report.levels.back().closure, closure, options)) {
          report.non_monotone_levels.push_back(m - 1);
        }
      }
      report.levels.push_back({m, std::move(closure), std::move(cumulative)});
    } catch (const ResourceGuardExceeded& e) {
      report.inconclusive = "level " + std::to_string(m) + ": " + e.what();
      break;
    }
  }
  if (report.levels.size() >= 2) {
    const Ideal& last = report.levels.back().cumulative;
    for (std::size_t k = 0; k + 1 < report.levels.size(); ++k) {
      if (ideal_equal(report.levels[k].cumulative, last, options)) {
        report.stabilized_at = report.levels[k].level;
        break;
      }
    }
  }
  return report;
}

}  // namespace jetclosure
