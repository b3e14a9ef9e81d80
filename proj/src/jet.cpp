#include "jetclosure/jet.hpp"

#include "jetclosure/errors.hpp"

namespace jetclosure {

JetRing::JetRing(Ring base, unsigned level, bool local)
    : base_(std::move(base)), level_(level), local_(local) {
  if (local && level == 0) {
    // The local 0-jet fiber is a point; keep a placeholder ring so that
    // every expansion still has a home (all its coordinates vanish).
    jet_ = RingContext::make(base_->field(), {"@pt"});
    return;
  }
  std::vector<std::string> names;
  for (const auto& n : base_->names()) {
    for (unsigned i = first_order(); i <= level; ++i) names.push_back(jet_name(n, i));
  }
  jet_ = RingContext::make(base_->field(), std::move(names));
}

std::size_t JetRing::index(std::size_t var, unsigned order) const {
  if (order < first_order() || order > level_ || var >= base_->arity()) {
    throw InvalidArgument("jet coordinate out of range");
  }
  return var * (level_ + 1 - first_order()) + (order - first_order());
}

std::string JetRing::jet_name(const std::string& base_name, unsigned order) {
  return base_name + "@" + std::to_string(order);
}

namespace {

using Series = std::vector<Polynomial>;

Series truncated_product(const Series& a, const Series& b) {
  Series out(a.size(), Polynomial(a[0].ring()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

void check_base(const Polynomial& f, const JetRing& jets) {
  if (!same_ring(f.ring(), jets.base())) throw RingMismatch("polynomial is not in the jet ring's base");
}

}  // namespace

std::vector<Polynomial> hasse_schmidt_expand(const Polynomial& f, const JetRing& jets) {
  check_base(f, jets);
  const Ring& ring = jets.ring();
  const std::size_t len = jets.level() + 1;
  const std::size_t n = jets.base()->arity();
  Series zero(len, Polynomial(ring));

  // powers[j][e]: truncated series of x_j(t)^e.
  std::vector<std::vector<Series>> powers(n);
  auto power = [&](std::size_t j, std::uint32_t e) -> const Series& {
    auto& cache = powers[j];
    if (cache.empty()) {
      Series one = zero;
      one[0] = Polynomial::constant(ring, 1L);
      cache.push_back(std::move(one));
      if (jets.local() && jets.level() == 0) {
        cache.push_back(zero);
      } else {
        Series xj = zero;
        for (unsigned i = jets.first_order(); i <= jets.level(); ++i) {
          xj[i] = Polynomial::variable(ring, jets.index(j, i));
        }
        cache.push_back(std::move(xj));
      }
    }
    while (cache.size() <= e) cache.push_back(truncated_product(cache.back(), cache[1]));
    return cache[e];
  };

  Series result = zero;
  const Polynomial sorted = f.in_order(MonomialOrder::degrevlex());
  for (const auto& t : sorted.terms()) {
    // Local arcs have order >= 1 in every coordinate.
    if (jets.local() && t.monomial.degree() > jets.level()) continue;
    Series term = zero;
    term[0] = Polynomial::constant(ring, t.coeff);
    for (std::size_t j = 0; j < n; ++j) {
      if (t.monomial[j] != 0) term = truncated_product(term, power(j, t.monomial[j]));
    }
    for (std::size_t i = 0; i < len; ++i) result[i] += term[i];
  }
  return result;
}

std::vector<Polynomial> brute_force_expand(const Polynomial& f, const JetRing& jets) {
  check_base(f, jets);
  const Ring& ring = jets.ring();
  auto names = ring->names();
  names.push_back("@t");
  Ring aux = RingContext::make(ring->field(), names);
  const std::size_t t_index = names.size() - 1;
  Polynomial t = Polynomial::variable(aux, t_index);

  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < jets.base()->arity(); ++j) {
    Polynomial image(aux);
    if (!(jets.local() && jets.level() == 0)) {
      for (unsigned i = jets.first_order(); i <= jets.level(); ++i) {
        image += Polynomial::variable(aux, jets.index(j, i)) * t.pow(i);
      }
    }
    images.push_back(std::move(image));
  }
  Polynomial full = f.in_order(MonomialOrder::degrevlex()).substitute(aux, images);

  std::vector<std::vector<Term>> buckets(jets.level() + 1);
  for (const auto& term : full.terms()) {
    std::uint32_t e = term.monomial[t_index];
    if (e > jets.level()) continue;
    std::vector<std::uint32_t> exps(term.monomial.exponents().begin(),
                                    term.monomial.exponents().end() - 1);
    buckets[e].push_back({Monomial(std::move(exps)), term.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(ring, std::move(b)));
  return out;
}

JetIdeal jet_ideal(const Ideal& ideal, unsigned level, bool local) {
  JetRing jets(ideal.ring(), level, local);
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) {
    if (local && !f.constant_coeff().is_zero()) {
      throw OriginNotOnVariety("generator " + f.to_string() +
                               " does not vanish at the origin; local jets are undefined");
    }
    for (auto& d : hasse_schmidt_expand(f, jets)) {
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  Ideal jet(jets.ring(), std::move(gens));
  return {std::move(jets), ideal, std::move(jet)};
}

Polynomial transport(const Polynomial& p, const JetRing& from, const JetRing& to) {
  if (!same_ring(p.ring(), from.ring())) throw RingMismatch("polynomial is not in the source jet ring");
  std::vector<Polynomial> images;
  for (const auto& name : from.ring()->names()) {
    auto idx = to.ring()->index_of(name);
    images.push_back(idx ? Polynomial::variable(to.ring(), *idx) : Polynomial(to.ring()));
  }
  return p.in_order(MonomialOrder::degrevlex()).substitute(to.ring(), images);
}

}  // namespace jetclosure
