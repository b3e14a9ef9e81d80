#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "jetclosure/polynomial.hpp"

namespace jetclosure {

/// Resource guards for Groebner computations. Exceeding either raises
/// ResourceGuardExceeded.
struct GroebnerOptions {
  std::uint32_t max_pair_degree = 40;
  std::chrono::milliseconds timeout = std::chrono::seconds(120);
  /// Per-variable weights for S-pair selection (empty: total degree).
  /// Affects only the order in which pairs are processed.
  std::vector<std::uint32_t> selection_weights;
};

/// target = sum of cofactor * generators[index], checkable by expansion.
struct MembershipCertificate {
  struct Cofactor {
    Polynomial cofactor;
    std::size_t generator;
  };
  Polynomial target;
  std::vector<Polynomial> generators;
  std::vector<Cofactor> cofactors;
};

/// A reduced Groebner basis together with the expression of each basis
/// element in terms of the ideal's generators (empty when not tracked).
struct GroebnerData {
  MonomialOrder order;
  std::vector<Polynomial> basis;
  /// lift[k][j]: coefficient of generator j in basis[k].
  std::vector<std::vector<Polynomial>> lift;
  bool tracked() const noexcept { return !lift.empty() || basis.empty(); }
};

/// Finitely generated ideal of a polynomial ring. Zero generators are
/// dropped; generators are stored in degrevlex order. Groebner bases are
/// cached per order, shared between copies and safe to populate from
/// several threads.
class Ideal {
 public:
  explicit Ideal(Ring ring, std::vector<Polynomial> generators = {});

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  /// Sum of ideals: concatenated generator lists.
  friend Ideal operator+(const Ideal& a, const Ideal& b);

  /// Cached reduced basis for `order`; computes it on first use. With
  /// `track` set the result carries the lift matrix.
  std::shared_ptr<const GroebnerData> groebner(const MonomialOrder& order,
                                               const GroebnerOptions& options,
                                               bool track = false) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::shared_ptr<const GroebnerData>> entries;
  };

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace jetclosure
