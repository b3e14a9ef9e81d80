#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetclosure/closures.hpp"

namespace jetclosure {

using Exponents = std::vector<std::uint32_t>;

/// Monomial ideal given by exponent vectors. The constructor minimalizes:
/// duplicates and generators divisible by another generator are dropped,
/// the rest sorted by (total degree, lex descending).
class MonomialIdealSpec {
 public:
  /// Throws InvalidArgument on an empty list or mixed arity.
  explicit MonomialIdealSpec(std::vector<Exponents> generators);

  /// Throws InvalidArgument unless every generator is a single term.
  static MonomialIdealSpec from_ideal(const Ideal& ideal);

  std::size_t arity() const noexcept { return gens_.front().size(); }
  const std::vector<Exponents>& generators() const noexcept { return gens_; }
  /// Some generator divides x^a.
  bool contains(const Exponents& a) const;
  Ideal to_ideal(const Ring& ring) const;
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const MonomialIdealSpec&, const MonomialIdealSpec&) = default;

 private:
  std::vector<Exponents> gens_;
};

enum class HullVerdict { Inside, Outside, Inconclusive };

/// Default bound on k for the three-variable power test.
inline constexpr unsigned kPowerTestBound = 12;

/// x^a integral over I, i.e. a in conv(generators) + R_{>=0}^n. Exact
/// cross-product arithmetic for n <= 2; for n = 3 a positive answer needs
/// x^(ka) in I^k for some k <= power_bound and a negative one needs a
/// violated facet inequality, otherwise the answer is Inconclusive.
/// Throws InvalidArgument for n > 3.
HullVerdict newton_hull_member(const MonomialIdealSpec& ideal, const Exponents& a,
                               unsigned power_bound = kPowerTestBound);

/// x^(ka) in I^k (componentwise dominance by a sum of k generators).
bool power_in_ideal_power(const MonomialIdealSpec& ideal, const Exponents& a, unsigned k);

/// Minimal generators of the integral closure. Scans the box [0, D]^n with
/// D the largest generator degree. Throws InvalidArgument for n > 3 and
/// Inconclusive when some box point cannot be decided.
MonomialIdealSpec monomial_integral_closure(const MonomialIdealSpec& ideal,
                                            unsigned power_bound = kPowerTestBound);

/// Squarefree parts of the generators, minimalized.
MonomialIdealSpec monomial_radical(const MonomialIdealSpec& ideal);

struct RegularJscCandidate {
  Exponents exponents;
  std::string monomial;
  HullVerdict integral;
  Verdict jsc;
  std::optional<unsigned> first_failing_level;
  /// Outside the closure but no failing level found by the bound.
  bool bound_exhausted = false;
  /// Inside the closure yet excluded by the jet test; contradicts the
  /// regular-ring equality and is reported as an inconsistency.
  bool inconsistent = false;
};

struct RegularJscReport {
  unsigned max_level;
  std::vector<RegularJscCandidate> candidates;
  bool consistent() const;
};

/// Compares jet support membership with the Newton-polyhedron oracle on a
/// polynomial ring over Q (variables x, y, z, or x1..xn when n > 3).
RegularJscReport cross_check_regular_jsc(const MonomialIdealSpec& ideal,
                                         const std::vector<Exponents>& candidates, unsigned max_level,
                                         const GroebnerOptions& options = {});

/// Default variable names used by the oracle: x, y, z, then x1..xn.
std::vector<std::string> oracle_variable_names(std::size_t n);

}  // namespace jetclosure
