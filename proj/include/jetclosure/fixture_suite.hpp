#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetclosure/field.hpp"

namespace jetclosure::cli {

enum class RowStatus { Pass, Fail, Skipped };
std::string to_string(RowStatus s);

struct SuiteRow {
  std::string name;
  /// Provenance tag from the fixture ([PUBLISHED], [DERIVED], ...).
  std::string tag;
  RowStatus status = RowStatus::Pass;
  /// Mismatches, errors, or the reason for skipping.
  std::vector<std::string> notes;
};

/// Runs every `*.expected` fixture in `directory` (sorted by name).
///
/// Fixture format:
///   #! problem: <file relative to the fixture>
///   #! tag: [DERIVED]
///   #! char-exclude: 2 3      (skip under a field override of these characteristics)
///   #! pinned-field: Q        (skip under any other field override)
///   #  free comment
///   === <subcommand and flags>
///   <json path> = <expected value>
///
/// Each `===` block runs the subcommand in-process with JSON output; every
/// assertion compares the value at the path (e.g. `generators`,
/// `level_results[-1].verdict`) rendered as text: strings bare, arrays
/// joined by ", " (an empty array is `[]`).
std::vector<SuiteRow> run_fixture_suite(const std::string& directory,
                                        const std::optional<FieldSpec>& field_override,
                                        const std::vector<std::string>& extra_flags = {});

}  // namespace jetclosure::cli
