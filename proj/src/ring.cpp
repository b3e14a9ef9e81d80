#include "jetclosure/ring.hpp"

#include <cctype>
#include <set>

#include "jetclosure/errors.hpp"

namespace jetclosure {

Ring RingContext::make(FieldSpec field, std::vector<std::string> names) {
  if (names.empty()) throw InvalidArgument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  }
  return Ring(new RingContext(field, std::move(names)));
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Ring RingContext::with_field(FieldSpec field) const { return make(field, names_); }

bool same_ring(const Ring& a, const Ring& b) noexcept {
  return a == b || (a && b && *a == *b);
}

bool is_identifier(const std::string& s) noexcept {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

}  // namespace jetclosure
