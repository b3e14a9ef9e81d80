#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetclosure/groebner.hpp"
#include "jetclosure/parser.hpp"

namespace testing {

inline constexpr std::uint64_t kCorpusTestSeed = 20261016;

inline jetclosure::Ring ring(std::vector<std::string> names,
                             jetclosure::FieldSpec field = jetclosure::FieldSpec::rationals()) {
  return jetclosure::RingContext::make(field, std::move(names));
}

inline jetclosure::Polynomial P(const jetclosure::Ring& r, const std::string& text) {
  return jetclosure::parse_polynomial(text, r);
}

inline jetclosure::Ideal I(const jetclosure::Ring& r, const std::vector<std::string>& gens) {
  std::vector<jetclosure::Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return jetclosure::Ideal(r, std::move(ps));
}

inline std::vector<std::string> strs(const std::vector<jetclosure::Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace testing
