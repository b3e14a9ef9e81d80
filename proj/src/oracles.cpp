#include "jetclosure/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "jetclosure/errors.hpp"

namespace jetclosure {

namespace {

bool dominates(const Exponents& a, const Exponents& g) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < g[i]) return false;
  }
  return true;
}

std::uint64_t degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), std::uint64_t{0}); }

using Vec = std::vector<std::int64_t>;

Vec cross(const Vec& u, const Vec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Nonnegative normals that contain every facet normal of the Newton
// polyhedron (any nonnegative w gives a valid inequality).
std::vector<Vec> candidate_normals(const std::vector<Exponents>& gens) {
  const std::size_t n = gens.front().size();
  std::vector<Vec> directions;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    directions.push_back(e);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Vec d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = std::int64_t(gens[j][k]) - std::int64_t(gens[i][k]);
      directions.push_back(d);
    }
  }
  std::vector<Vec> normals;
  auto keep = [&](Vec w) {
    bool nonneg = std::all_of(w.begin(), w.end(), [](auto c) { return c >= 0; });
    bool nonpos = std::all_of(w.begin(), w.end(), [](auto c) { return c <= 0; });
    if (nonneg == nonpos) return;  // zero vector or mixed signs
    if (nonpos) {
      for (auto& c : w) c = -c;
    }
    normals.push_back(std::move(w));
  };
  if (n == 1) {
    normals.push_back({1});
  } else if (n == 2) {
    for (const auto& d : directions) keep({-d[1], d[0]});
  } else {
    for (std::size_t i = 0; i < directions.size(); ++i) {
      for (std::size_t j = i + 1; j < directions.size(); ++j) keep(cross(directions[i], directions[j]));
    }
  }
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  return normals;
}

bool violates_some_inequality(const std::vector<Exponents>& gens, const std::vector<Vec>& normals,
                              const Exponents& a) {
  for (const auto& w : normals) {
    auto dot = [&](const Exponents& p) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < p.size(); ++k) s += w[k] * std::int64_t(p[k]);
      return s;
    };
    std::int64_t lower = dot(gens.front());
    for (const auto& g : gens) lower = std::min(lower, dot(g));
    if (dot(a) < lower) return true;
  }
  return false;
}

void require_supported(const MonomialIdealSpec& ideal) {
  if (ideal.arity() > 3) throw InvalidArgument("monomial integral closure supports at most 3 variables");
}

}  // namespace

MonomialIdealSpec::MonomialIdealSpec(std::vector<Exponents> generators) {
  if (generators.empty()) throw InvalidArgument("monomial ideal needs at least one generator");
  const std::size_t n = generators.front().size();
  if (n == 0) throw InvalidArgument("monomial ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.size() != n) throw InvalidArgument("generators of different arity");
  }
  std::sort(generators.begin(), generators.end(), [](const Exponents& a, const Exponents& b) {
    auto da = degree(a), db = degree(b);
    return da != db ? da < db : a > b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto& g : generators) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& h) { return dominates(g, h); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdealSpec MonomialIdealSpec::from_ideal(const Ideal& ideal) {
  std::vector<Exponents> gens;
  for (const auto& p : ideal.generators()) {
    if (p.size() != 1) throw InvalidArgument("not a monomial ideal: " + p.to_string());
    auto e = p.leading_monomial().exponents();
    gens.emplace_back(e.begin(), e.end());
  }
  if (gens.empty()) throw InvalidArgument("the zero ideal is not a monomial ideal spec");
  return MonomialIdealSpec(std::move(gens));
}

bool MonomialIdealSpec::contains(const Exponents& a) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& g) { return dominates(a, g); });
}

Ideal MonomialIdealSpec::to_ideal(const Ring& ring) const {
  if (ring->arity() != arity()) throw InvalidArgument("ring arity does not match monomial ideal");
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(Polynomial::monomial(ring, Monomial(g)));
  return Ideal(ring, std::move(gens));
}

std::string MonomialIdealSpec::to_string(const std::vector<std::string>& names) const {
  auto ring = RingContext::make(FieldSpec::rationals(), names);
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += monomial_to_string(Monomial(gens_[i]), *ring);
  }
  return s + ")";
}

bool power_in_ideal_power(const MonomialIdealSpec& ideal, const Exponents& a, unsigned k) {
  Exponents bound(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) bound[i] = a[i] * k;
  // Minimal sums of j generators that still fit under the bound.
  std::vector<Exponents> sums{Exponents(a.size(), 0)};
  for (unsigned j = 0; j < k; ++j) {
    std::vector<Exponents> next;
    for (const auto& s : sums) {
      for (const auto& g : ideal.generators()) {
        Exponents t(s.size());
        bool fits = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
          t[i] = s[i] + g[i];
          fits = fits && t[i] <= bound[i];
        }
        if (fits) next.push_back(std::move(t));
      }
    }
    if (next.empty()) return false;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums.clear();
    for (const auto& t : next) {
      bool dominated = std::any_of(next.begin(), next.end(), [&](const Exponents& o) {
        return o != t && dominates(t, o);
      });
      if (!dominated) sums.push_back(t);
    }
  }
  return !sums.empty();
}

HullVerdict newton_hull_member(const MonomialIdealSpec& ideal, const Exponents& a, unsigned power_bound) {
  require_supported(ideal);
  if (a.size() != ideal.arity()) throw InvalidArgument("exponent vector has the wrong arity");
  if (ideal.contains(a)) return HullVerdict::Inside;
  const auto normals = candidate_normals(ideal.generators());
  if (violates_some_inequality(ideal.generators(), normals, a)) return HullVerdict::Outside;
  if (ideal.arity() <= 2) return HullVerdict::Inside;
  for (unsigned k = 2; k <= power_bound; ++k) {
    if (power_in_ideal_power(ideal, a, k)) return HullVerdict::Inside;
  }
  return HullVerdict::Inconclusive;
}

MonomialIdealSpec monomial_integral_closure(const MonomialIdealSpec& ideal, unsigned power_bound) {
  require_supported(ideal);
  const std::size_t n = ideal.arity();
  std::uint32_t box = 0;
  for (const auto& g : ideal.generators()) box = std::max<std::uint32_t>(box, degree(g));
  std::vector<Exponents> inside;
  Exponents a(n, 0);
  while (true) {
    switch (newton_hull_member(ideal, a, power_bound)) {
      case HullVerdict::Inside:
        inside.push_back(a);
        break;
      case HullVerdict::Outside:
        break;
      case HullVerdict::Inconclusive:
        throw Inconclusive("power test exhausted at bound " + std::to_string(power_bound));
    }
    std::size_t i = 0;
    while (i < n && a[i] == box) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  return MonomialIdealSpec(std::move(inside));
}

MonomialIdealSpec monomial_radical(const MonomialIdealSpec& ideal) {
  std::vector<Exponents> gens;
  for (auto g : ideal.generators()) {
    for (auto& e : g) e = e ? 1 : 0;
    gens.push_back(std::move(g));
  }
  return MonomialIdealSpec(std::move(gens));
}

std::vector<std::string> oracle_variable_names(std::size_t n) {
  std::vector<std::string> names;
  if (n <= 3) {
    const char* short_names[] = {"x", "y", "z"};
    return {short_names, short_names + n};
  }
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

bool RegularJscReport::consistent() const {
  return std::none_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.inconsistent; });
}

RegularJscReport cross_check_regular_jsc(const MonomialIdealSpec& ideal,
                                         const std::vector<Exponents>& candidates, unsigned max_level,
                                         const GroebnerOptions& options) {
  const auto names = oracle_variable_names(ideal.arity());
  Ring ring = RingContext::make(FieldSpec::rationals(), names);
  ClosureProblem problem(ideal.to_ideal(ring));
  RegularJscReport report{max_level, {}};
  for (const auto& a : candidates) {
    RegularJscCandidate c;
    c.exponents = a;
    c.monomial = monomial_to_string(Monomial(a), *ring);
    c.integral = newton_hull_member(ideal, a);
    auto jsc = jsc_member_up_to(Polynomial::monomial(ring, Monomial(a)), problem, max_level, options);
    c.jsc = jsc.verdict;
    c.first_failing_level = jsc.first_failing_level;
    c.inconsistent = c.integral == HullVerdict::Inside && c.jsc == Verdict::NonMember;
    c.bound_exhausted = c.integral == HullVerdict::Outside && c.jsc == Verdict::Member;
    report.candidates.push_back(std::move(c));
  }
  return report;
}

}  // namespace jetclosure
