#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jetclosure {

/// Exponent vector of a power product, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial of the given arity.
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  /// Returns a copy with exponent `i` replaced.
  Monomial with(std::size_t i, std::uint32_t e) const;

  /// Bit (i mod 64) is set iff some variable i with that residue occurs.
  std::uint64_t support_mask() const noexcept { return mask_; }

  bool divides(const Monomial& other) const;
  /// Precondition: `divisor.divides(*this)`.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  /// No variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

 private:
  void refresh();

  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

/// A global, multiplicative total order on monomials of a fixed arity.
///
/// Block orders split the variables into an elimination block and a
/// remainder block; monomials are compared on the elimination block first
/// (with its inner order) and only then on the remainder.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Block };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  /// `eliminate[i]` marks variable i as belonging to the elimination block.
  /// Inner orders must be DegRevLex or Lex.
  static MonomialOrder block(std::vector<bool> eliminate, Kind inner_eliminated = Kind::DegRevLex,
                             Kind inner_remainder = Kind::DegRevLex);

  Kind kind() const noexcept { return kind_; }
  const std::vector<bool>& eliminated() const noexcept { return eliminate_; }

  /// Throws InvalidArgument on arity mismatch (or a block mask that does
  /// not fit the arity).
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<bool> eliminate_;
  // Variable indices of each block, derived from eliminate_.
  std::vector<std::uint32_t> eliminated_vars_;
  std::vector<std::uint32_t> remainder_vars_;
  Kind inner_eliminated_ = Kind::DegRevLex;
  Kind inner_remainder_ = Kind::DegRevLex;
};

}  // namespace jetclosure
