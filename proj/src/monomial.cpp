#include "jetclosure/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "jetclosure/errors.hpp"

namespace jetclosure {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { refresh(); }

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i & 63u);
  }
}

Monomial Monomial::with(std::size_t i, std::uint32_t e) const {
  Monomial m = *this;
  m.exps_[i] = e;
  m.refresh();
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (mask_ & ~other.mask_) != 0) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  q.refresh();
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  m.degree_ += b.degree_;
  m.mask_ |= b.mask_;
  return m;
}

MonomialOrder MonomialOrder::block(std::vector<bool> eliminate, Kind inner_eliminated,
                                   Kind inner_remainder) {
  if (inner_eliminated == Kind::Block || inner_remainder == Kind::Block) {
    throw InvalidArgument("block order inner orders must be degrevlex or lex");
  }
  MonomialOrder o(Kind::Block);
  o.eliminate_ = std::move(eliminate);
  for (std::uint32_t i = 0; i < o.eliminate_.size(); ++i) {
    (o.eliminate_[i] ? o.eliminated_vars_ : o.remainder_vars_).push_back(i);
  }
  o.inner_eliminated_ = inner_eliminated;
  o.inner_remainder_ = inner_remainder;
  return o;
}

namespace {

std::strong_ordering compare_full(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.arity();
  if (kind == MonomialOrder::Kind::Lex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = n; i-- > 0;) {
    // A smaller exponent in the last differing variable wins.
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

// Compares a and b restricted to the listed variables.
std::strong_ordering compare_block(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b,
                                   const std::vector<std::uint32_t>& vars) {
  if (kind == MonomialOrder::Kind::Lex) {
    for (auto i : vars) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  std::uint64_t da = 0, db = 0;
  for (auto i : vars) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = vars.size(); k-- > 0;) {
    auto i = vars[k];
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity()) {
    throw InvalidArgument("monomial arity mismatch: " + std::to_string(a.arity()) + " vs " +
                          std::to_string(b.arity()));
  }
  if (kind_ != Kind::Block) return compare_full(kind_, a, b);
  if (eliminate_.size() != a.arity()) {
    throw InvalidArgument("block order mask does not match monomial arity");
  }
  auto c = compare_block(inner_eliminated_, a, b, eliminated_vars_);
  if (c != 0) return c;
  return compare_block(inner_remainder_, a, b, remainder_vars_);
}

std::string MonomialOrder::to_string() const {
  auto name = [](Kind k) { return k == Kind::Lex ? std::string("lex") : std::string("degrevlex"); };
  if (kind_ != Kind::Block) return name(kind_);
  std::string mask;
  for (bool b : eliminate_) mask += b ? '1' : '0';
  return "block[" + mask + "](" + name(inner_eliminated_) + "," + name(inner_remainder_) + ")";
}

}  // namespace jetclosure
