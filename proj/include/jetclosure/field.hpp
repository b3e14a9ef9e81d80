#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace jetclosure {

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rational, 0); }
  /// Throws InvalidArgument unless `p` is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  /// 0 for Q, p for F_p.
  std::uint32_t characteristic() const noexcept { return modulus_; }

  /// "Q" or "Fp <p>", the problem-file spelling.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class FieldElement;
  FieldSpec(Kind kind, std::uint32_t modulus) noexcept : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact scalar. Rationals are kept reduced with positive denominator;
/// residues are kept in [0, p). Mixing fields throws RingMismatch.
class FieldElement {
 public:
  /// Rational zero.
  FieldElement() = default;

  static FieldElement zero(const FieldSpec& field);
  static FieldElement one(const FieldSpec& field);
  static FieldElement from_integer(const FieldSpec& field, const mpz_class& value);
  static FieldElement from_integer(const FieldSpec& field, long value) {
    return from_integer(field, mpz_class(value));
  }
  /// Throws InvalidArgument when the denominator vanishes in the field.
  static FieldElement from_fraction(const FieldSpec& field, const mpz_class& num,
                                    const mpz_class& den);

  FieldSpec field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True for rationals with denominator 1 and for every residue.
  bool is_integer() const noexcept;
  /// Sign used for printing; residues are never negative.
  int sign() const noexcept;

  const mpq_class& rational() const;  // precondition: rational field
  std::uint32_t residue() const;      // precondition: prime field

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws InvalidArgument on zero

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Integer or `num/den`; residues print as their canonical representative.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  void check_same_field(const FieldElement& rhs) const;

  std::variant<mpq_class, Residue> value_{mpq_class(0)};
};

}  // namespace jetclosure
