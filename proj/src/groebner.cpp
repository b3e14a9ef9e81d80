#include "jetclosure/groebner.hpp"

#include <algorithm>
#include <limits>

#include "jetclosure/errors.hpp"

namespace jetclosure {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(const GroebnerOptions& options)
      : end_(Clock::now() + options.timeout), budget_ms_(options.timeout.count()) {}

  void check() {
    if ((++counter_ & 31u) == 0 && Clock::now() > end_) {
      throw ResourceGuardExceeded("Groebner computation exceeded its " +
                                  std::to_string(budget_ms_) + " ms budget");
    }
  }

 private:
  Clock::time_point end_;
  long long budget_ms_;
  unsigned counter_ = 0;
};

// A polynomial with its bookkeeping: poly = scalar * target + sum rep[j] * gens[j].
// `scalar` only matters for normal forms; basis elements have an implicit
// zero target.
struct Work {
  Polynomial poly;
  std::vector<Polynomial> rep;
  FieldElement scalar;
};

struct Scalars {
  FieldElement a;
  FieldElement c;
};

// a, c with a * lc_p == c * lc_g, chosen integral and coprime over Q so
// that a * p - c * m * g stays fraction free.
Scalars cancel_scalars(const FieldElement& lc_p, const FieldElement& lc_g) {
  const FieldSpec field = lc_p.field();
  if (!field.is_rational()) return {FieldElement::one(field), lc_p / lc_g};
  const mpq_class& p = lc_p.rational();
  const mpq_class& g = lc_g.rational();
  mpz_class a = g.get_num() * p.get_den();
  mpz_class c = p.get_num() * g.get_den();
  mpz_class d = gcd(a, c);
  a /= d;
  c /= d;
  if (a < 0) {
    a = -a;
    c = -c;
  }
  return {FieldElement::from_integer(field, a), FieldElement::from_integer(field, c)};
}

// Divisor turning p into a primitive integer polynomial with positive
// leading coefficient (Q), or a monic one (F_p).
FieldElement content(const Polynomial& p) {
  const FieldSpec field = p.ring()->field();
  if (!field.is_rational()) return p.leading_coeff();
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& t : p.terms()) {
    const mpq_class& q = t.coeff.rational();
    num = gcd(num, q.get_num());
    den = lcm(den, q.get_den());
  }
  if (p.leading_coeff().sign() < 0) num = -num;
  return FieldElement::from_fraction(field, num, den);
}

void strip(Work& w) {
  if (w.poly.is_zero()) return;
  FieldElement d = content(w.poly);
  if (d.is_one()) return;
  FieldElement inv = d.inverse();
  w.poly = w.poly.scale(inv);
  for (auto& r : w.rep) r = r.scale(inv);
  w.scalar *= inv;
}

void step(Work& p, const Scalars& s, const Monomial& m, const Work& g) {
  p.poly.scaled_sub(s.a, s.c, m, g.poly);
  for (std::size_t j = 0; j < p.rep.size(); ++j) p.rep[j].scaled_sub(s.a, s.c, m, g.rep[j]);
  p.scalar *= s.a;
}

// Fully reduces p by the reducers (first divisible leading monomial wins).
// Terms before position k are already irreducible.
void reduce_full(Work& p, const std::vector<const Work*>& reducers, Deadline* deadline,
                 const Work* skip = nullptr) {
  std::size_t k = 0;
  while (k < p.poly.size()) {
    if (deadline) deadline->check();
    const Monomial mono = p.poly.terms()[k].monomial;
    const Work* hit = nullptr;
    for (const Work* g : reducers) {
      if (g != skip && g->poly.leading_monomial().divides(mono)) {
        hit = g;
        break;
      }
    }
    if (!hit) {
      ++k;
      continue;
    }
    Scalars s = cancel_scalars(p.poly.terms()[k].coeff, hit->poly.leading_coeff());
    step(p, s, mono.quotient(hit->poly.leading_monomial()), *hit);
    strip(p);
  }
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Presentation order for bases: ascending leading degree, then descending
// under the basis order.
void sort_presentation(std::vector<std::size_t>& idx, const std::vector<Polynomial>& polys,
                       const MonomialOrder& order) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Monomial& ma = polys[a].leading_monomial();
    const Monomial& mb = polys[b].leading_monomial();
    if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
    return order.compare(ma, mb) > 0;
  });
}

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerOptions& options)
      : order_(order), options_(options), deadline_(options) {}

  void add_input(Work w) {
    reduce_full(w, active_works(), &deadline_);
    if (w.poly.is_zero()) return;
    strip(w);
    insert(std::move(w));
  }

  void run() {
    while (!pairs_.empty()) {
      deadline_.check();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (better(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (p.lcm.degree() > options_.max_pair_degree) {
        throw ResourceGuardExceeded("S-pair degree " + std::to_string(p.lcm.degree()) +
                                    " exceeds the bound " +
                                    std::to_string(options_.max_pair_degree));
      }
      Work s = spoly(works_[p.i], works_[p.j], p.lcm);
      reduce_full(s, active_works(), &deadline_);
      if (s.poly.is_zero()) continue;
      strip(s);
      insert(std::move(s));
    }
  }

  GroebnerData finish() {
    GroebnerData out{order_, {}, {}};
    // Gebauer-Moeller keeps the active leading monomials pairwise non-dividing.
    std::vector<const Work*> reducers = active_works();
    std::vector<Work> reduced;
    for (const Work* g : reducers) {
      Work w = *g;
      reduce_full(w, reducers, &deadline_, g);
      FieldElement lc = w.poly.leading_coeff();
      if (!lc.is_one()) {
        FieldElement inv = lc.inverse();
        w.poly = w.poly.scale(inv);
        for (auto& r : w.rep) r = r.scale(inv);
      }
      reduced.push_back(std::move(w));
    }
    std::vector<Polynomial> polys;
    for (const auto& w : reduced) polys.push_back(w.poly);
    std::vector<std::size_t> idx(polys.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    sort_presentation(idx, polys, order_);
    for (std::size_t k : idx) {
      out.basis.push_back(reduced[k].poly);
      if (!reduced[k].rep.empty()) out.lift.push_back(reduced[k].rep);
    }
    return out;
  }

 private:
  std::uint64_t selection_degree(const Monomial& m) const {
    const auto& w = options_.selection_weights;
    if (w.size() != m.arity()) return m.degree();
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += std::uint64_t{w[i]} * m[i];
    return d;
  }

  bool better(const Pair& a, const Pair& b) const {
    std::uint64_t da = selection_degree(a.lcm), db = selection_degree(b.lcm);
    if (da != db) return da < db;
    auto c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  std::vector<const Work*> active_works() const {
    std::vector<const Work*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&works_[k]);
    return out;
  }

  Work spoly(const Work& f, const Work& g, const Monomial& lcm) const {
    const FieldSpec field = f.poly.ring()->field();
    Monomial mf = lcm.quotient(f.poly.leading_monomial());
    Work s{f.poly.mul_term(mf, FieldElement::one(field)), {}, FieldElement::one(field)};
    for (const auto& r : f.rep) s.rep.push_back(r.mul_term(mf, FieldElement::one(field)));
    Scalars sc = cancel_scalars(f.poly.leading_coeff(), g.poly.leading_coeff());
    step(s, sc, lcm.quotient(g.poly.leading_monomial()), g);
    strip(s);
    return s;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Work h) {
    const std::size_t hi = works_.size();
    works_.push_back(std::move(h));
    const Monomial& lh = works_[hi].poly.leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g : active_) {
      candidates.push_back({g, hi, works_[g].poly.leading_monomial().lcm(lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool coprime = works_[p.i].poly.leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t q = k + 1; q < candidates.size() && !dominated; ++q) {
          dominated = candidates[q].lcm.divides(p.lcm);
        }
        for (std::size_t q = 0; q < kept.size() && !dominated; ++q) {
          dominated = kept[q].lcm.divides(p.lcm);
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (!works_[p.i].poly.leading_monomial().coprime(lh)) fresh.push_back(std::move(p));
    }
    std::vector<Pair> survivors;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(works_[p.i].poly.leading_monomial().lcm(lh) == p.lcm) &&
                  !(works_[p.j].poly.leading_monomial().lcm(lh) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs_ = std::move(survivors);

    std::vector<std::size_t> next;
    for (std::size_t g : active_) {
      if (!lh.divides(works_[g].poly.leading_monomial())) next.push_back(g);
    }
    next.push_back(hi);
    active_ = std::move(next);
  }

  MonomialOrder order_;
  GroebnerOptions options_;
  Deadline deadline_;
  std::vector<Work> works_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

Ring extend_ring(const Ring& ring, const std::string& extra) {
  auto names = ring->names();
  names.push_back(extra);
  return RingContext::make(ring->field(), std::move(names));
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

GroebnerData buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                        const GroebnerOptions& options, bool track) {
  Buchberger engine(order, options);
  const std::size_t n = generators.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& g = generators[j];
    if (!same_ring(g.ring(), generators[0].ring())) throw RingMismatch("generators from different rings");
    const FieldSpec field = g.ring()->field();
    Work w{g.in_order(order), {}, FieldElement::one(field)};
    if (track) {
      for (std::size_t i = 0; i < n; ++i) {
        w.rep.push_back(i == j ? Polynomial::constant(g.ring(), 1L, order) : Polynomial(g.ring(), order));
      }
    }
    strip(w);
    engine.add_input(std::move(w));
  }
  engine.run();
  return engine.finish();
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                                       const GroebnerOptions& options) {
  return ideal.groebner(order, options)->basis;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring(), f.order());
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const FieldSpec field = f.ring()->field();
  Polynomial s = f.mul_term(l.quotient(f.leading_monomial()), f.leading_coeff().inverse());
  s.scaled_sub(FieldElement::one(field), g.leading_coeff().inverse(), l.quotient(g.leading_monomial()), g);
  return s;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  const FieldSpec field = f.ring()->field();
  std::vector<Work> works;
  for (const auto& d : divisors) {
    if (!d.is_zero()) works.push_back({d.in_order(f.order()), {}, FieldElement::one(field)});
  }
  std::vector<const Work*> reducers;
  for (const auto& w : works) reducers.push_back(&w);
  Work p{f, {}, FieldElement::one(field)};
  reduce_full(p, reducers, nullptr);
  return p.poly.scale(p.scalar.inverse());
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(g.in_order(MonomialOrder::degrevlex()));
  }
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) throw RingMismatch("sum of ideals from different rings");
  auto gens = a.generators_;
  gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
  return Ideal(a.ring_, std::move(gens));
}

std::shared_ptr<const GroebnerData> Ideal::groebner(const MonomialOrder& order,
                                                    const GroebnerOptions& options,
                                                    bool track) const {
  {
    std::lock_guard lock(cache_->mutex);
    for (const auto& e : cache_->entries) {
      if (e->order == order && (!track || e->tracked())) return e;
    }
  }
  auto data = std::make_shared<const GroebnerData>(buchberger(generators_, order, options, track));
  std::lock_guard lock(cache_->mutex);
  for (const auto& e : cache_->entries) {
    if (e->order == order && (!track || e->tracked())) return e;
  }
  cache_->entries.push_back(data);
  return data;
}

NormalForm normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order,
                       const GroebnerOptions& options) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("normal form across rings");
  const Ring& ring = ideal.ring();
  const FieldSpec field = ring->field();
  const auto& gens = ideal.generators();
  auto data = ideal.groebner(order, options, true);

  std::vector<Work> basis;
  for (std::size_t k = 0; k < data->basis.size(); ++k) {
    basis.push_back({data->basis[k], data->lift[k], FieldElement::one(field)});
  }
  std::vector<const Work*> reducers;
  for (const auto& w : basis) reducers.push_back(&w);

  Work p{f.in_order(order), std::vector<Polynomial>(gens.size(), Polynomial(ring, order)),
         FieldElement::one(field)};
  Deadline deadline(options);
  reduce_full(p, reducers, &deadline);

  // p = scalar * f + sum rep_j * g_j.
  FieldElement inv = p.scalar.inverse();
  Polynomial remainder = p.poly.scale(inv).in_order(f.order());
  MembershipCertificate cert{f - remainder, gens, {}};
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (p.rep[j].is_zero()) continue;
    cert.cofactors.push_back({p.rep[j].scale(-inv).in_order(MonomialOrder::degrevlex()), j});
  }
  cert.target = cert.target.in_order(MonomialOrder::degrevlex());
  return {std::move(remainder), std::move(cert)};
}

Membership ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options) {
  NormalForm nf = normal_form(f, ideal, MonomialOrder::degrevlex(), options);
  if (!nf.remainder.is_zero()) return {false, std::nullopt};
  return {true, std::move(nf.certificate)};
}

RadicalMembership radical_member(const Polynomial& f, const Ideal& ideal,
                                 const GroebnerOptions& options, bool find_exponent) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch("radical membership across rings");
  const Ring& ring = ideal.ring();
  Ring extended = extend_ring(ring, "@w");
  auto embed = identity_map(ring->arity());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rename(extended, embed, MonomialOrder::degrevlex()));
  Polynomial w = Polynomial::variable(extended, ring->arity());
  Polynomial fe = f.in_order(MonomialOrder::degrevlex()).rename(extended, embed, MonomialOrder::degrevlex());
  gens.push_back(Polynomial::constant(extended, 1L) - w * fe);
  Ideal rabinowitsch(extended, std::move(gens));

  RadicalMembership out;
  Membership one = ideal_member(Polynomial::constant(extended, 1L), rabinowitsch, options);
  out.member = one.member;
  out.rabinowitsch = std::move(one.certificate);
  if (!out.member || !find_exponent) return out;

  Polynomial power = f.in_order(MonomialOrder::degrevlex());
  for (unsigned e = 1; e <= 64; e *= 2) {
    if (power.total_degree() > 2 * static_cast<long>(options.max_pair_degree)) break;
    Membership m = ideal_member(power, ideal, options);
    if (m.member) {
      out.exponent = e;
      out.power_certificate = std::move(m.certificate);
      break;
    }
    power = power * power;
  }
  return out;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep,
                const GroebnerOptions& options) {
  const Ring& ring = ideal.ring();
  if (keep.empty()) throw InvalidArgument("elimination must keep at least one variable");
  std::vector<bool> kept(ring->arity(), false);
  for (const auto& name : keep) {
    auto idx = ring->index_of(name);
    if (!idx) throw InvalidArgument("unknown variable '" + name + "' in elimination");
    kept[*idx] = true;
  }
  std::vector<std::string> names;
  std::vector<std::size_t> index_map(ring->arity(), Polynomial::npos);
  std::vector<bool> eliminated(ring->arity());
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    eliminated[i] = !kept[i];
    if (kept[i]) {
      index_map[i] = names.size();
      names.push_back(ring->name(i));
    }
  }
  Ring sub = names.size() == ring->arity() ? ring : RingContext::make(ring->field(), names);
  MonomialOrder order = names.size() == ring->arity() ? MonomialOrder::degrevlex()
                                                      : MonomialOrder::block(eliminated);
  auto data = ideal.groebner(order, options);
  std::vector<Polynomial> out;
  for (const auto& g : data->basis) {
    if (g.supported_in(kept)) out.push_back(g.rename(sub, index_map, MonomialOrder::degrevlex()));
  }
  return Ideal(sub, std::move(out));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("intersection of ideals from different rings");
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  Ring extended = extend_ring(ring, "@w");
  auto embed = identity_map(ring->arity());
  Polynomial w = Polynomial::variable(extended, ring->arity());
  Polynomial one_minus_w = Polynomial::constant(extended, 1L) - w;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(w * g.rename(extended, embed, MonomialOrder::degrevlex()));
  for (const auto& g : b.generators()) {
    gens.push_back(one_minus_w * g.rename(extended, embed, MonomialOrder::degrevlex()));
  }
  Ideal elim = eliminate(Ideal(extended, std::move(gens)), ring->names(), options);
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(g.rename(ring, embed, MonomialOrder::degrevlex()));
  return Ideal(ring, std::move(out));
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("comparing ideals from different rings");
  auto ga = groebner_basis(a, MonomialOrder::degrevlex(), options);
  auto gb = groebner_basis(b, MonomialOrder::degrevlex(), options);
  if (ga.size() != gb.size()) return false;
  for (std::size_t k = 0; k < ga.size(); ++k) {
    if (!(ga[k] == gb[k])) return false;
  }
  return true;
}

bool ideal_contains(const Ideal& b, const Ideal& a, const GroebnerOptions& options) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("comparing ideals from different rings");
  auto basis = groebner_basis(b, MonomialOrder::degrevlex(), options);
  for (const auto& g : a.generators()) {
    if (!reduce(g, basis).is_zero()) return false;
  }
  return true;
}

bool verify_certificate(const MembershipCertificate& c) {
  try {
    Polynomial sum(c.target.ring(), c.target.order());
    for (const auto& cf : c.cofactors) {
      if (cf.generator >= c.generators.size()) return false;
      sum += cf.cofactor.in_order(c.target.order()) * c.generators[cf.generator].in_order(c.target.order());
    }
    return sum == c.target;
  } catch (const RingMismatch&) {
    return false;
  }
}

Ideal canonical(const Ideal& ideal, const GroebnerOptions& options) {
  return Ideal(ideal.ring(), groebner_basis(ideal, MonomialOrder::degrevlex(), options));
}

}  // namespace jetclosure
