#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jetclosure/field.hpp"
#include "jetclosure/ideal.hpp"

namespace jetclosure::cli {

enum ExitCode : int {
  kSuccess = 0,
  kSuiteFailure = 1,
  kInputError = 2,
  kResourceGuard = 3,
  kInvariantViolation = 4,
};

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::optional<unsigned> level;
  std::optional<unsigned> max_level;
  OutputFormat format = OutputFormat::Text;
  double timeout_seconds = 120;
  std::uint32_t max_pair_degree = 40;
  bool literal_mjsc = false;
  std::optional<FieldSpec> field_override;
  bool timings = false;

  GroebnerOptions groebner_options() const;
};

/// Environment variable holding the default timeout in seconds.
inline constexpr const char* kTimeoutEnv = "JETCLOSURE_TIMEOUT";

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Entry point of the `jetclosure` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetclosure::cli
