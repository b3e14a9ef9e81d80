#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetclosure/groebner.hpp"
#include "jetclosure/jet.hpp"

namespace jetclosure {

/// An ideal `a` of R = k[x]/b, presented in the ambient ring k[x]. All
/// closures are computed for b + a in k[x] and reported there; this is
/// exact because jet closures only depend on the quotient R/a.
class ClosureProblem {
 public:
  /// Throws OriginNotOnVariety when a generator has a nonzero constant
  /// term, RingMismatch when the two ideals live in different rings.
  ClosureProblem(Ideal relations, Ideal ideal);
  explicit ClosureProblem(Ideal ideal) : ClosureProblem(Ideal(ideal.ring()), ideal) {}

  const Ring& ring() const noexcept { return combined_.ring(); }
  const Ideal& relations() const noexcept { return relations_; }
  const Ideal& ideal() const noexcept { return ideal_; }
  const Ideal& combined() const noexcept { return combined_; }

 private:
  Ideal relations_;
  Ideal ideal_;
  Ideal combined_;
};

struct CoefficientCheck {
  unsigned order;
  /// D_order(g) restricted to the fiber over the origin.
  Polynomial coefficient;
  bool member;
  std::optional<MembershipCertificate> certificate;
};

struct JetClosureMembership {
  bool member = false;
  unsigned level = 0;
  std::vector<CoefficientCheck> coefficients;
  std::optional<unsigned> first_failing_order;
};

/// g in the m-jet closure: every D_i(g)|_0, i <= m, lies in the local jet
/// ideal of the combined ideal. Positive answers carry one certificate per
/// nonzero coefficient.
JetClosureMembership jet_closure_member(const Polynomial& g, const ClosureProblem& problem,
                                        unsigned level, const GroebnerOptions& options = {});

enum class ClosureMethod {
  /// Kernel of the coefficient map on k[x]/m^(m+1), by Gaussian
  /// elimination against a basis of the local jet ideal.
  Linear,
  /// Kernel of k[x] -> (k[u]/J)[t]/(t^(m+1)), x_j -> sum_i u_{j,i} t^i,
  /// by block-order elimination of u and t.
  Elimination,
};
std::string to_string(ClosureMethod method);

/// The full m-jet closure. Both methods are exact and return the reduced
/// degrevlex basis; elimination is far slower and serves as a cross-check.
Ideal jet_closure(const ClosureProblem& problem, unsigned level, const GroebnerOptions& options = {},
                  ClosureMethod method = ClosureMethod::Linear);

enum class Verdict { Member, NonMember, Undetermined };
std::string to_string(Verdict v);

/// How the support closure reads "D_i(g) in the radical, modulo m R_m".
enum class SupportReading {
  /// Radical of the fiber ideal (reduced fiber). Always decided.
  ReducedFiber,
  /// Radical of the global jet ideal, then restriction to the fiber.
  /// Decided only when a sufficient or a necessary condition settles it.
  Literal,
};

struct SupportCoefficientCheck {
  unsigned order;
  Polynomial coefficient;
  Verdict verdict;
  /// Rabinowitsch certificate backing a Member verdict.
  std::optional<MembershipCertificate> certificate;
  /// Power of two e with coefficient^e in the ideal, when found.
  std::optional<unsigned> exponent;
};

struct JetSupportMembership {
  Verdict verdict = Verdict::NonMember;
  unsigned level = 0;
  std::vector<SupportCoefficientCheck> coefficients;
  std::optional<unsigned> first_failing_order;
};

/// g in the m-jet support closure.
JetSupportMembership jet_support_closure_member(const Polynomial& g, const ClosureProblem& problem,
                                                unsigned level, const GroebnerOptions& options = {},
                                                SupportReading reading = SupportReading::ReducedFiber);

struct JetSupportReport {
  /// Member only if every level up to the bound passed. A NonMember
  /// verdict proves g is not in the jet support closure.
  Verdict verdict = Verdict::Member;
  std::optional<unsigned> first_failing_level;
  std::vector<JetSupportMembership> levels;
};

/// Runs the m-jet support test for m = 0..max_level, stopping at the first
/// failing level.
JetSupportReport jsc_member_up_to(const Polynomial& g, const ClosureProblem& problem,
                                  unsigned max_level, const GroebnerOptions& options = {},
                                  SupportReading reading = SupportReading::ReducedFiber);

struct ClosureChainLevel {
  unsigned level;
  /// C_m, the m-jet closure.
  Ideal closure;
  /// A_m, the intersection of C_0..C_m.
  Ideal cumulative;
};

struct ClosureChainReport {
  std::vector<ClosureChainLevel> levels;
  /// Least M0 < M with A_M0 = A_M for the last computed level M; empty
  /// when the last step still shrank the chain.
  std::optional<unsigned> stabilized_at;
  /// Levels m where C_(m+1) is not contained in C_m (recorded, not an error).
  std::vector<unsigned> non_monotone_levels;
  /// Set when a resource guard stopped the computation early.
  std::optional<std::string> inconclusive;
};

/// Finite-level approximation of the arc closure: C_m for m = 0..max_level
/// and the cumulative intersections A_m. A_m always contains the arc
/// closure, which contains the combined ideal.
ClosureChainReport arc_closure_approx(const ClosureProblem& problem, unsigned max_level,
                                      const GroebnerOptions& options = {},
                                      ClosureMethod method = ClosureMethod::Linear);

}  // namespace jetclosure
