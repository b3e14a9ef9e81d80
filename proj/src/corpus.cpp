#include "jetclosure/corpus.hpp"

#include "jetclosure/errors.hpp"

namespace jetclosure {

std::int64_t CorpusRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Modulo bias is irrelevant at corpus scale.
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Polynomial random_polynomial(CorpusRng& rng, const Ring& ring, const RandomPolynomialSpec& spec) {
  if (spec.max_degree < spec.min_degree || spec.coeff_bound < 1) throw InvalidArgument("bad random polynomial spec");
  const std::size_t n = ring->arity();
  std::vector<Term> terms;
  auto count = rng.uniform(spec.max_terms ? 1 : 0, spec.max_terms);
  for (std::int64_t k = 0; k < count; ++k) {
    auto degree = static_cast<std::uint32_t>(rng.uniform(spec.min_degree, spec.max_degree));
    std::vector<std::uint32_t> e(n, 0);
    for (std::uint32_t d = 0; d < degree; ++d) ++e[rng.uniform(0, static_cast<std::int64_t>(n) - 1)];
    auto c = rng.uniform(1, spec.coeff_bound);
    if (rng.uniform(0, 1)) c = -c;
    terms.push_back({Monomial(std::move(e)), FieldElement::from_integer(ring->field(), c)});
  }
  auto p = Polynomial::from_terms(ring, std::move(terms));
  // Cancellation can empty a sum; fall back to a single variable power.
  if (p.is_zero() && count > 0) {
    return Polynomial::variable(ring, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1)))
        .pow(spec.min_degree);
  }
  return p;
}

ClosureProblem random_problem(CorpusRng& rng, std::uint32_t max_vars, std::uint32_t max_gens,
                              const RandomPolynomialSpec& spec) {
  static const std::vector<std::string> names{"x", "y", "z"};
  if (max_vars < 1 || max_vars > names.size() || max_gens < 1) throw InvalidArgument("bad corpus shape");
  auto n = static_cast<std::size_t>(rng.uniform(1, max_vars));
  Ring ring = RingContext::make(FieldSpec::rationals(), {names.begin(), names.begin() + n});
  std::vector<Polynomial> gens;
  auto g = rng.uniform(1, max_gens);
  for (std::int64_t i = 0; i < g; ++i) gens.push_back(random_polynomial(rng, ring, spec));
  return ClosureProblem(Ideal(ring, std::move(gens)));
}

std::vector<ClosureProblem> random_corpus(std::uint64_t seed, std::size_t count, std::uint32_t max_vars,
                                          std::uint32_t max_gens, const RandomPolynomialSpec& spec) {
  CorpusRng rng(seed);
  std::vector<ClosureProblem> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) corpus.push_back(random_problem(rng, max_vars, max_gens, spec));
  return corpus;
}

}  // namespace jetclosure
