#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetclosure/ideal.hpp"

namespace jetclosure {

/// Reduced Groebner basis of `generators` (Buchberger with Gebauer-Moeller
/// pair criteria, normal selection). Basis elements are monic and listed by
/// ascending leading-monomial degree, ties broken by descending order.
/// With `track`, `lift` expresses each basis element in the generators.
GroebnerData buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                        const GroebnerOptions& options = {}, bool track = false);

/// Cached reduced basis of I.
std::vector<Polynomial> groebner_basis(const Ideal& ideal,
                                       const MonomialOrder& order = MonomialOrder::degrevlex(),
                                       const GroebnerOptions& options = {});

/// Leading-term S-polynomial.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full remainder of f on division by `divisors` (first divisor with a
/// dividing leading monomial wins). No Groebner property is assumed.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

struct NormalForm {
  Polynomial remainder;
  /// certificate.target == f - remainder.
  MembershipCertificate certificate;
};

/// Normal form of f with respect to the reduced basis of I.
NormalForm normal_form(const Polynomial& f, const Ideal& ideal,
                       const MonomialOrder& order = MonomialOrder::degrevlex(),
                       const GroebnerOptions& options = {});

struct Membership {
  bool member = false;
  /// Present iff member.
  std::optional<MembershipCertificate> certificate;
  explicit operator bool() const noexcept { return member; }
};

Membership ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options = {});

struct RadicalMembership {
  bool member = false;
  /// 1 = sum c_i g_i + c (1 - w f) over the ring extended by `@w`.
  std::optional<MembershipCertificate> rabinowitsch;
  /// Smallest power of two e <= 64 with f^e in I, when found.
  std::optional<unsigned> exponent;
  std::optional<MembershipCertificate> power_certificate;
  explicit operator bool() const noexcept { return member; }
};

/// f in sqrt(I), decided by 1 in I + (1 - w f) with a fresh variable w.
RadicalMembership radical_member(const Polynomial& f, const Ideal& ideal,
                                 const GroebnerOptions& options = {}, bool find_exponent = true);

/// I intersected with k[keep], returned in the subring whose variables are
/// `keep` in their original relative order. The generators are the reduced
/// degrevlex basis of the elimination ideal.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep,
                const GroebnerOptions& options = {});

/// I intersected with J, via elimination of w from wI + (1-w)J.
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// Equality of reduced degrevlex bases.
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// a contained in b.
bool ideal_contains(const Ideal& b, const Ideal& a, const GroebnerOptions& options = {});

/// Recomputes sum cofactor * generator with plain polynomial arithmetic
/// and compares it with the target.
bool verify_certificate(const MembershipCertificate& certificate);

/// Ideal generated by the reduced degrevlex basis of I (canonical presentation).
Ideal canonical(const Ideal& ideal, const GroebnerOptions& options = {});

}  // namespace jetclosure
