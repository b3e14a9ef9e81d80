#pragma once

#include <cstdint>
#include <string>

#include "jetclosure/groebner.hpp"

namespace jetclosure {

/// Outcome of a seeded property sweep.
struct PropertyResult {
  bool pass = true;
  std::size_t cases = 0;
  std::size_t certificates_checked = 0;
  /// One-line summary; names the first failing case otherwise.
  std::string detail;
};

inline constexpr std::uint64_t kDefaultPropertySeed = 20261016;

/// On `count` random problems (<= 3 variables, generators of degree <= 3):
/// the level-0 closure is ideal + m; at levels 1..3 the closure contains the
/// ideal, is idempotent, and every degree-(m+1) monomial passes coefficient
/// membership with verified certificates.
PropertyResult corpus_closure_properties(std::uint64_t seed = kDefaultPropertySeed, std::size_t count = 20,
                                         const GroebnerOptions& options = {});

/// Truncated Hasse-Schmidt expansion against full expansion on `count`
/// random polynomials of degree <= 4, levels 0..5, local and global.
PropertyResult hasse_schmidt_sweep(std::uint64_t seed = kDefaultPropertySeed, std::size_t count = 100);

/// Coefficient membership against membership in the elimination kernel on
/// `count` random (g, P, m <= 3) triples. Every positive answer's
/// certificates are re-verified by expansion.
PropertyResult dual_route_sweep(std::uint64_t seed = kDefaultPropertySeed, std::size_t count = 50,
                                const GroebnerOptions& options = {});

}  // namespace jetclosure
