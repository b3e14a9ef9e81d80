#include "jetclosure/field.hpp"

#include "jetclosure/errors.hpp"

namespace jetclosure {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidArgument("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "Fp " + std::to_string(modulus_);
}

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldElement FieldElement::zero(const FieldSpec& field) { return from_integer(field, 0L); }

FieldElement FieldElement::one(const FieldSpec& field) { return from_integer(field, 1L); }

FieldElement FieldElement::from_integer(const FieldSpec& field, const mpz_class& value) {
  FieldElement e;
  if (field.is_rational()) {
    e.value_ = mpq_class(value);
  } else {
    e.value_ = Residue{reduce_mod(value, field.modulus()), field.modulus()};
  }
  return e;
}

FieldElement FieldElement::from_fraction(const FieldSpec& field, const mpz_class& num,
                                         const mpz_class& den) {
  FieldElement n = from_integer(field, num);
  FieldElement d = from_integer(field, den);
  if (d.is_zero()) throw InvalidArgument("division by zero in " + field.to_string());
  return n / d;
}

FieldSpec FieldElement::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    // Modulus was validated when the residue was created.
    return FieldSpec(FieldSpec::Kind::Prime, r->modulus);
  }
  return FieldSpec::rationals();
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

bool FieldElement::is_integer() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_den() == 1;
  return true;
}

int FieldElement::sign() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  return std::get<Residue>(value_).value == 0 ? 0 : 1;
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw RingMismatch("rational value requested from a prime-field element");
}

std::uint32_t FieldElement::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw RingMismatch("residue requested from a rational element");
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus)) {
    throw RingMismatch("arithmetic between elements of different fields");
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement e = *this;
  if (auto* q = std::get_if<mpq_class>(&e.value_)) {
    *q = -*q;
  } else {
    auto& r = std::get<Residue>(e.value_);
    if (r.value != 0) r.value = r.modulus - r.value;
  }
  return e;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  FieldElement e = *this;
  if (auto* q = std::get_if<mpq_class>(&e.value_)) {
    *q = 1 / *q;
  } else {
    auto& r = std::get<Residue>(e.value_);
    r.value = pow_mod(r.value, r.modulus - 2, r.modulus);
  }
  return e;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>(
        (std::uint64_t{r.value} + std::get<Residue>(rhs.value_).value) % r.modulus);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>(
        std::uint64_t{r.value} * std::get<Residue>(rhs.value_).value % r.modulus);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  return std::get<FieldElement::Residue>(a.value_).value ==
         std::get<FieldElement::Residue>(b.value_).value;
}

std::string FieldElement::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

}  // namespace jetclosure
