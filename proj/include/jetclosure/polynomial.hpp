#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jetclosure/field.hpp"
#include "jetclosure/monomial.hpp"
#include "jetclosure/ring.hpp"

namespace jetclosure {

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Canonical sparse polynomial: terms strictly descending under the
/// polynomial's monomial order, no zero coefficients, no repeated
/// monomials. The zero polynomial has no terms.
///
/// Binary operations require both operands to share ring and order and
/// throw RingMismatch otherwise.
class Polynomial {
 public:
  explicit Polynomial(Ring ring, MonomialOrder order = MonomialOrder::degrevlex());

  static Polynomial constant(Ring ring, const FieldElement& c,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial constant(Ring ring, long c, MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial variable(Ring ring, std::size_t index,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial monomial(Ring ring, Monomial m,
                             MonomialOrder order = MonomialOrder::degrevlex());
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::degrevlex());

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return *order_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const FieldElement& leading_coeff() const { return terms_.front().coeff; }
  FieldElement constant_coeff() const;
  /// -1 for the zero polynomial.
  long total_degree() const noexcept;
  /// True if every variable with a nonzero exponent has `allowed[i]` set.
  bool supported_in(const std::vector<bool>& allowed) const;

  /// Same polynomial sorted under another order.
  Polynomial in_order(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scale(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;

  /// In place: *this = a * *this - c * m * g. The workhorse of reduction.
  void scaled_sub(const FieldElement& a, const FieldElement& c, const Monomial& m,
                  const Polynomial& g);

  /// Ring homomorphism into `target` sending variable i to `images[i]`.
  Polynomial substitute(const Ring& target, std::span<const Polynomial> images) const;
  /// Moves every monomial into `target` by sending variable i to variable
  /// `index_map[i]`; variables mapped to `npos` must not occur.
  Polynomial rename(const Ring& target, std::span<const std::size_t> index_map,
                    const MonomialOrder& order) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Canonical text: descending terms, explicit `*` and `^`, `/` for
  /// non-integer rationals, "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(Ring ring, std::shared_ptr<const MonomialOrder> order)
      : ring_(std::move(ring)), order_(std::move(order)) {}
  /// Empty polynomial sharing this one's ring and order.
  Polynomial empty_like() const { return Polynomial(ring_, order_); }
  void check_compatible(const Polynomial& rhs) const;

  Ring ring_;
  std::shared_ptr<const MonomialOrder> order_;
  std::vector<Term> terms_;
};

/// Render a single monomial with the ring's variable names ("1" for the constant).
std::string monomial_to_string(const Monomial& m, const RingContext& ring);

}  // namespace jetclosure
