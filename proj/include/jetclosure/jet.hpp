#pragma once

#include <string>
#include <vector>

#include "jetclosure/ideal.hpp"

namespace jetclosure {

/// Coordinate ring of the m-jet scheme of k^n, or of its fiber over the
/// origin when `local` is set.
///
/// Base variable `x` contributes jet variables `x@d .. x@m`, where d is 1
/// for local rings (the order-0 coordinates vanish on the fiber) and 0
/// otherwise. Variables are laid out base-variable-major.
class JetRing {
 public:
  JetRing(Ring base, unsigned level, bool local);

  const Ring& base() const noexcept { return base_; }
  const Ring& ring() const noexcept { return jet_; }
  unsigned level() const noexcept { return level_; }
  bool local() const noexcept { return local_; }
  unsigned first_order() const noexcept { return local_ ? 1u : 0u; }

  /// Index of `x_var@order` in ring(); precondition first_order() <= order <= level().
  std::size_t index(std::size_t var, unsigned order) const;

  static std::string jet_name(const std::string& base_name, unsigned order);

 private:
  Ring base_;
  Ring jet_;
  unsigned level_;
  bool local_;
};

/// [D_0(f), ..., D_m(f)]: the coefficients of t^0..t^m in
/// f(sum_i x@i t^i), computed with series arithmetic truncated at t^(m+1).
std::vector<Polynomial> hasse_schmidt_expand(const Polynomial& f, const JetRing& jets);

/// Same contract as hasse_schmidt_expand, computed by fully expanding
/// f(sum_i x@i t^i) in a ring containing t and reading off coefficients.
/// Independent of the truncated series code; used as an oracle.
std::vector<Polynomial> brute_force_expand(const Polynomial& f, const JetRing& jets);

/// Ideal of the m-jets of V(I) (or of its fiber over the origin), generated
/// by every nonzero D_i(f) for the given generators f of I and i <= m.
struct JetIdeal {
  JetRing jets;
  Ideal source;
  Ideal ideal;
};

/// Throws OriginNotOnVariety if `local` and a generator has a nonzero
/// constant term.
JetIdeal jet_ideal(const Ideal& ideal, unsigned level, bool local);

/// Moves a polynomial between jet rings by variable name; variables absent
/// from the target are set to zero (e.g. order-0 coordinates when moving
/// to a local ring).
Polynomial transport(const Polynomial& p, const JetRing& from, const JetRing& to);

}  // namespace jetclosure
