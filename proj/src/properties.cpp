#include "jetclosure/properties.hpp"

#include "jetclosure/closures.hpp"
#include "jetclosure/corpus.hpp"

namespace jetclosure {

namespace {

std::string describe(const ClosureProblem& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.combined().generators().size(); ++i) {
    if (i) s += ", ";
    s += p.combined().generators()[i].to_string();
  }
  return s + ")";
}

void fail(PropertyResult& r, const std::string& what) {
  if (r.pass) r.detail = what;
  r.pass = false;
}

// Every positive coefficient check must carry a certificate that expands
// back to its target.
bool certificates_hold(const JetClosureMembership& m, std::size_t& checked) {
  for (const auto& c : m.coefficients) {
    if (!c.member || c.coefficient.is_zero()) continue;
    if (!c.certificate || !verify_certificate(*c.certificate)) return false;
    ++checked;
  }
  return true;
}

Ideal add_maximal_ideal(const Ideal& ideal) {
  std::vector<Polynomial> gens = ideal.generators();
  for (std::size_t j = 0; j < ideal.ring()->arity(); ++j) gens.push_back(Polynomial::variable(ideal.ring(), j));
  return Ideal(ideal.ring(), std::move(gens));
}

std::vector<Polynomial> monomials_of_degree(const Ring& ring, unsigned degree) {
  std::vector<Polynomial> out;
  const std::size_t n = ring->arity();
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      out.push_back(Polynomial::monomial(ring, Monomial(e)));
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

}  // namespace

PropertyResult corpus_closure_properties(std::uint64_t seed, std::size_t count, const GroebnerOptions& options) {
  PropertyResult r;
  const auto corpus = random_corpus(seed, count);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& p = corpus[k];
    const std::string name = "problem " + std::to_string(k) + " " + describe(p);
    ++r.cases;
    if (!ideal_equal(jet_closure(p, 0, options), add_maximal_ideal(p.combined()), options)) {
      fail(r, name + ": level-0 closure differs from ideal + m");
    }
    for (unsigned m = 1; m <= 3; ++m) {
      const std::string at = name + " level " + std::to_string(m);
      Ideal c = jet_closure(p, m, options);
      if (!ideal_contains(c, p.combined(), options)) fail(r, at + ": closure does not contain the ideal");
      if (!ideal_equal(jet_closure(ClosureProblem(c), m, options), c, options)) fail(r, at + ": not idempotent");
      for (const auto& mono : monomials_of_degree(p.ring(), m + 1)) {
        auto member = jet_closure_member(mono, p, m, options);
        if (!member.member) fail(r, at + ": " + mono.to_string() + " fails membership");
        if (!certificates_hold(member, r.certificates_checked)) fail(r, at + ": bad certificate for " + mono.to_string());
      }
    }
  }
  if (r.pass) {
    r.detail = std::to_string(r.cases) + " problems, levels 0-3, " + std::to_string(r.certificates_checked) +
               " certificates verified";
  }
  return r;
}

PropertyResult hasse_schmidt_sweep(std::uint64_t seed, std::size_t count) {
  PropertyResult r;
  CorpusRng rng(seed);
  static const std::vector<std::string> names{"x", "y", "z"};
  for (std::size_t k = 0; k < count; ++k) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    FieldSpec field = rng.uniform(0, 3) == 0 ? FieldSpec::prime(7) : FieldSpec::rationals();
    Ring ring = RingContext::make(field, {names.begin(), names.begin() + n});
    RandomPolynomialSpec spec;
    spec.min_degree = 0;
    spec.max_degree = 4;
    spec.max_terms = 4;
    Polynomial f = random_polynomial(rng, ring, spec);
    auto level = static_cast<unsigned>(rng.uniform(0, 5));
    bool local = rng.uniform(0, 1) == 1;
    JetRing jets(ring, level, local);
    ++r.cases;
    if (hasse_schmidt_expand(f, jets) != brute_force_expand(f, jets)) {
      fail(r, "f = " + f.to_string() + " over " + field.to_string() + ", level " + std::to_string(level) +
                  (local ? " local" : " global"));
    }
  }
  if (r.pass) r.detail = std::to_string(r.cases) + " random expansions agree";
  return r;
}

PropertyResult dual_route_sweep(std::uint64_t seed, std::size_t count, const GroebnerOptions& options) {
  PropertyResult r;
  CorpusRng rng(seed);
  RandomPolynomialSpec ideal_spec;
  ideal_spec.max_degree = 3;
  ideal_spec.max_terms = 2;
  std::size_t members = 0;
  for (std::size_t k = 0; k < count; ++k) {
    ClosureProblem p = random_problem(rng, 3, 2, ideal_spec);
    auto m = static_cast<unsigned>(rng.uniform(0, 3));
    Ideal kernel = jet_closure(p, m, options, ClosureMethod::Elimination);
    // Half the candidates are built inside the kernel so both answers occur.
    Polynomial g(p.ring());
    if (k % 2 == 0) {
      for (const auto& gen : kernel.generators()) {
        RandomPolynomialSpec mult;
        mult.min_degree = 0;
        mult.max_degree = 1;
        mult.max_terms = 2;
        g += gen * random_polynomial(rng, p.ring(), mult);
      }
    } else {
      RandomPolynomialSpec spec;
      spec.max_degree = m + 1;
      spec.max_terms = 3;
      g = random_polynomial(rng, p.ring(), spec);
    }
    ++r.cases;
    const std::string name = "g = " + g.to_string() + ", P = " + describe(p) + ", m = " + std::to_string(m);
    auto coefficient_route = jet_closure_member(g, p, m, options);
    Membership kernel_route = ideal_member(g, kernel, options);
    if (coefficient_route.member != kernel_route.member) fail(r, name + ": routes disagree");
    if (!certificates_hold(coefficient_route, r.certificates_checked)) fail(r, name + ": bad coefficient certificate");
    if (kernel_route.member) {
      ++members;
      if (!kernel_route.certificate || !verify_certificate(*kernel_route.certificate)) {
        fail(r, name + ": bad kernel certificate");
      } else {
        ++r.certificates_checked;
      }
    }
  }
  if (r.pass) {
    r.detail = std::to_string(r.cases) + " triples (" + std::to_string(members) + " members), " +
               std::to_string(r.certificates_checked) + " certificates verified";
  }
  return r;
}

}  // namespace jetclosure
