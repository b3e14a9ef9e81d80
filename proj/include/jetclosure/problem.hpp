#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetclosure/closures.hpp"

namespace jetclosure {

/// Parsed problem file.
///
///   # comment
///   field Q                 | field Fp <prime>
///   vars x, y, z
///   relation <expr>         (zero or more; generators of the relations)
///   ideal <expr>            (one or more)
///   candidate <name> = <expr>
///
/// `field` and `vars` are read first, so the remaining lines may come in
/// any order.
struct ProblemFile {
  struct Candidate {
    std::string name;
    Polynomial poly;
  };

  Ring ring;
  std::vector<Polynomial> relations;
  std::vector<Polynomial> ideal;
  std::vector<Candidate> candidates;

  ClosureProblem problem() const;
  const Candidate* find_candidate(std::string_view name) const;
};

/// Throws ParseError (offset into `text`, message prefixed by the line
/// number) on malformed input. `field_override` replaces the declared field.
ProblemFile parse_problem_file(std::string_view text,
                               const std::optional<FieldSpec>& field_override = std::nullopt);

/// Reads and parses a file; throws InvalidArgument when it cannot be read.
ProblemFile load_problem_file(const std::string& path,
                              const std::optional<FieldSpec>& field_override = std::nullopt);

/// "Q", "Fp 7" (also "Fp7", "F7"). Throws InvalidArgument.
FieldSpec parse_field_spec(std::string_view text);

}  // namespace jetclosure
