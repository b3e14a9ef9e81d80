#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jetclosure/field.hpp"

namespace jetclosure {

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// k[x_1..x_n]: a coefficient field and an ordered list of distinct
/// variable names. Two contexts with the same field and names are the same
/// ring, regardless of object identity.
class RingContext {
 public:
  /// Throws InvalidArgument on an empty or duplicated name list.
  static Ring make(FieldSpec field, std::vector<std::string> names);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same variables over another field.
  Ring with_field(FieldSpec field) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  RingContext(FieldSpec field, std::vector<std::string> names)
      : field_(field), names_(std::move(names)) {}
  FieldSpec field_;
  std::vector<std::string> names_;
};

bool same_ring(const Ring& a, const Ring& b) noexcept;

/// True for a plain identifier: [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(const std::string& s) noexcept;

}  // namespace jetclosure
