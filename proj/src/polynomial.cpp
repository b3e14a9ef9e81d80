#include "jetclosure/polynomial.hpp"

#include <algorithm>

#include "jetclosure/errors.hpp"

namespace jetclosure {

namespace {

// Shared instance so that copies of default-ordered polynomials compare
// orders by pointer.
const std::shared_ptr<const MonomialOrder>& default_order() {
  static const auto order = std::make_shared<const MonomialOrder>(MonomialOrder::degrevlex());
  return order;
}

std::shared_ptr<const MonomialOrder> share(const MonomialOrder& order) {
  if (order == *default_order()) return default_order();
  return std::make_shared<const MonomialOrder>(order);
}

}  // namespace

Polynomial::Polynomial(Ring ring, MonomialOrder order)
    : ring_(std::move(ring)), order_(share(order)) {
  if (!ring_) throw InvalidArgument("polynomial without a ring");
}

Polynomial Polynomial::constant(Ring ring, const FieldElement& c, MonomialOrder order) {
  Polynomial p(std::move(ring), std::move(order));
  if (!(c.field() == p.ring_->field())) throw RingMismatch("constant from a different field");
  if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->arity()), c});
  return p;
}

Polynomial Polynomial::constant(Ring ring, long c, MonomialOrder order) {
  auto field = ring->field();
  return constant(std::move(ring), FieldElement::from_integer(field, c), std::move(order));
}

Polynomial Polynomial::variable(Ring ring, std::size_t index, MonomialOrder order) {
  if (index >= ring->arity()) throw InvalidArgument("variable index out of range");
  Monomial m = Monomial(ring->arity()).with(index, 1);
  return monomial(std::move(ring), std::move(m), std::move(order));
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, MonomialOrder order) {
  Polynomial p(std::move(ring), std::move(order));
  if (m.arity() != p.ring_->arity()) throw InvalidArgument("monomial arity mismatch");
  p.terms_.push_back({std::move(m), FieldElement::one(p.ring_->field())});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(std::move(ring), std::move(order));
  const auto& ord = *p.order_;
  for (const auto& t : terms) {
    if (t.monomial.arity() != p.ring_->arity()) throw InvalidArgument("monomial arity mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

FieldElement Polynomial::constant_coeff() const {
  // The constant monomial is minimal in every global order.
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return FieldElement::zero(ring_->field());
}

long Polynomial::total_degree() const noexcept {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.monomial.degree()));
  return d;
}

bool Polynomial::supported_in(const std::vector<bool>& allowed) const {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      if (t.monomial[i] != 0 && !allowed[i]) return false;
    }
  }
  return true;
}

Polynomial Polynomial::in_order(const MonomialOrder& order) const {
  if (order == *order_) return *this;
  return from_terms(ring_, terms_, order);
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) throw RingMismatch("polynomials from different rings");
  if (order_ != rhs.order_ && !(*order_ == *rhs.order_)) {
    throw RingMismatch("polynomials sorted under different monomial orders");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  scaled_sub(FieldElement::one(ring_->field()), -FieldElement::one(ring_->field()),
             Monomial(ring_->arity()), rhs);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  scaled_sub(FieldElement::one(ring_->field()), FieldElement::one(ring_->field()),
             Monomial(ring_->arity()), rhs);
  return *this;
}

void Polynomial::scaled_sub(const FieldElement& a, const FieldElement& c, const Monomial& m,
                            const Polynomial& g) {
  check_compatible(g);
  const auto& ord = *order_;
  const bool scale_self = !a.is_one();
  const bool shift = !m.is_one();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto lhs = terms_.begin();
  auto rhs = g.terms_.begin();
  while (lhs != terms_.end() || rhs != g.terms_.end()) {
    if (rhs == g.terms_.end()) {
      if (scale_self) lhs->coeff *= a;
      out.push_back(std::move(*lhs++));
      continue;
    }
    Monomial shifted = shift ? rhs->monomial * m : rhs->monomial;
    auto cmp = lhs == terms_.end() ? std::strong_ordering::less
                                   : ord.compare(lhs->monomial, shifted);
    if (cmp > 0) {
      if (scale_self) lhs->coeff *= a;
      out.push_back(std::move(*lhs++));
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), -(c * rhs->coeff)});
      ++rhs;
    } else {
      FieldElement coeff = scale_self ? a * lhs->coeff : lhs->coeff;
      coeff -= c * rhs->coeff;
      if (!coeff.is_zero()) out.push_back({std::move(shifted), std::move(coeff)});
      ++lhs;
      ++rhs;
    }
  }
  terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return a.empty_like();
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  Polynomial p = a.empty_like();
  const auto& ord = *a.order_;
  std::sort(products.begin(), products.end(),
            [&](const Term& s, const Term& t) { return ord.compare(s.monomial, t.monomial) > 0; });
  for (auto& t : products) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::scale(const FieldElement& c) const {
  Polynomial p = empty_like();
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  Polynomial p = empty_like();
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // Multiplicativity of the order keeps the result sorted.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = empty_like();
  result.terms_.push_back({Monomial(ring_->arity()), FieldElement::one(ring_->field())});
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scale(leading_coeff().inverse());
}

Polynomial Polynomial::substitute(const Ring& target, std::span<const Polynomial> images) const {
  if (images.size() != ring_->arity()) throw InvalidArgument("substitution needs one image per variable");
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) throw RingMismatch("substitution image outside target ring");
  }
  if (!(target->field() == ring_->field())) throw RingMismatch("substitution changes the field");
  const MonomialOrder& ord = images.empty() ? *order_ : images[0].order();
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1L, ord));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target, ord);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff, ord);
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::rename(const Ring& target, std::span<const std::size_t> index_map,
                              const MonomialOrder& order) const {
  if (index_map.size() != ring_->arity()) throw InvalidArgument("rename needs one index per variable");
  if (!(target->field() == ring_->field())) throw RingMismatch("rename changes the field");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(target->arity(), 0);
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] == npos || index_map[i] >= e.size()) {
        throw InvalidArgument("variable '" + ring_->name(i) + "' has no image in the target ring");
      }
      e[index_map[i]] += t.monomial[i];
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return from_terms(target, std::move(out), order);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string monomial_to_string(const Monomial& m, const RingContext& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    FieldElement c = t.coeff;
    if (c.sign() < 0) {
      out += '-';
      c = -c;
    } else if (k > 0) {
      out += '+';
    }
    if (t.monomial.is_one()) {
      out += c.to_string();
    } else {
      if (!c.is_one()) out += c.to_string() + '*';
      out += monomial_to_string(t.monomial, *ring_);
    }
  }
  return out;
}

}  // namespace jetclosure
