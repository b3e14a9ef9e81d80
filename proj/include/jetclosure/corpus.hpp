#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jetclosure/closures.hpp"

namespace jetclosure {

struct RandomPolynomialSpec {
  std::uint32_t min_degree = 1;
  std::uint32_t max_degree = 3;
  std::uint32_t max_terms = 3;
  /// Coefficients are drawn from [-coeff_bound, coeff_bound] \ {0}.
  std::int64_t coeff_bound = 3;
};

/// Draws integers without std::uniform_int_distribution so that a seed
/// yields the same corpus on every standard library.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random polynomial whose monomials have degree in [min_degree, max_degree]
/// (so no constant term when min_degree >= 1). May be zero only if
/// max_terms is zero.
Polynomial random_polynomial(CorpusRng& rng, const Ring& ring, const RandomPolynomialSpec& spec = {});

/// Random problem in 1..max_vars variables (x, y, z), 1..max_gens ideal
/// generators, no relations.
ClosureProblem random_problem(CorpusRng& rng, std::uint32_t max_vars = 3, std::uint32_t max_gens = 3,
                              const RandomPolynomialSpec& spec = {});

/// `count` problems from one seed; the same seed gives the same corpus.
std::vector<ClosureProblem> random_corpus(std::uint64_t seed, std::size_t count, std::uint32_t max_vars = 3,
                                          std::uint32_t max_gens = 3, const RandomPolynomialSpec& spec = {});

}  // namespace jetclosure
