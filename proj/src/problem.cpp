#include "jetclosure/problem.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "jetclosure/errors.hpp"
#include "jetclosure/parser.hpp"

namespace jetclosure {

namespace {

struct Line {
  std::size_t number;
  std::size_t offset;  // of the first byte of `text` within the file
  std::string_view keyword;
  std::string_view rest;
  std::size_t rest_offset;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s, std::size_t* skipped = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  if (skipped) *skipped = b;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(const Line& line, const std::string& what, std::size_t offset) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what, offset);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    std::string_view body = trim(raw, &lead);
    if (!body.empty()) {
      std::size_t kw_end = 0;
      while (kw_end < body.size() && !is_space(body[kw_end])) ++kw_end;
      std::size_t rest_lead = 0;
      std::string_view rest = trim(body.substr(kw_end), &rest_lead);
      lines.push_back({number, start + lead, body.substr(0, kw_end), rest, start + lead + kw_end + rest_lead});
    }
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return lines;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  text = trim(text);
  if (text == "Q" || text == "QQ") return FieldSpec::rationals();
  std::string_view digits;
  if (text.starts_with("Fp")) {
    digits = trim(text.substr(2));
  } else if (text.starts_with("F")) {
    digits = trim(text.substr(1));
  } else {
    throw InvalidArgument("unknown field '" + std::string(text) + "' (expected Q or Fp <prime>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || p > UINT32_MAX) {
    throw InvalidArgument("bad field modulus '" + std::string(digits) + "'");
  }
  return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

ClosureProblem ProblemFile::problem() const {
  return ClosureProblem(Ideal(ring, relations), Ideal(ring, ideal));
}

const ProblemFile::Candidate* ProblemFile::find_candidate(std::string_view name) const {
  for (const auto& c : candidates) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ProblemFile parse_problem_file(std::string_view text, const std::optional<FieldSpec>& field_override) {
  const auto lines = split_lines(text);
  std::optional<FieldSpec> field;
  std::optional<std::vector<std::string>> names;
  const Line* vars_line = nullptr;
  for (const auto& line : lines) {
    if (line.keyword == "field") {
      if (field) fail(line, "duplicate field declaration", line.offset);
      try {
        field = parse_field_spec(line.rest);
      } catch (const InvalidArgument& e) {
        fail(line, e.what(), line.rest_offset);
      }
    } else if (line.keyword == "vars") {
      if (names) fail(line, "duplicate vars declaration", line.offset);
      names.emplace();
      vars_line = &line;
      std::size_t pos = 0;
      while (pos <= line.rest.size()) {
        std::size_t comma = line.rest.find(',', pos);
        if (comma == std::string_view::npos) comma = line.rest.size();
        std::size_t lead = 0;
        auto name = trim(line.rest.substr(pos, comma - pos), &lead);
        if (!is_identifier(std::string(name))) fail(line, "bad variable name '" + std::string(name) + "'", line.rest_offset + pos + lead);
        names->emplace_back(name);
        pos = comma + 1;
      }
    }
  }
  if (!field) throw ParseError("missing 'field' line", 0);
  if (!names) throw ParseError("missing 'vars' line", 0);
  if (field_override) field = field_override;

  ProblemFile file;
  try {
    file.ring = RingContext::make(*field, *names);
  } catch (const InvalidArgument& e) {
    fail(*vars_line, e.what(), vars_line->rest_offset);
  }
  auto parse = [&](const Line& line, std::string_view expr, std::size_t offset) {
    try {
      return parse_polynomial(expr, file.ring);
    } catch (const ParseError& e) {
      fail(line, e.detail(), offset + e.position());
    }
  };
  for (const auto& line : lines) {
    if (line.keyword == "field" || line.keyword == "vars") continue;
    if (line.keyword == "relation") {
      file.relations.push_back(parse(line, line.rest, line.rest_offset));
    } else if (line.keyword == "ideal") {
      file.ideal.push_back(parse(line, line.rest, line.rest_offset));
    } else if (line.keyword == "candidate") {
      auto eq = line.rest.find('=');
      if (eq == std::string_view::npos) fail(line, "expected 'candidate <name> = <expr>'", line.rest_offset);
      auto name = trim(line.rest.substr(0, eq));
      if (!is_identifier(std::string(name))) fail(line, "bad candidate name '" + std::string(name) + "'", line.rest_offset);
      if (file.find_candidate(name)) fail(line, "duplicate candidate '" + std::string(name) + "'", line.rest_offset);
      file.candidates.push_back({std::string(name), parse(line, line.rest.substr(eq + 1), line.rest_offset + eq + 1)});
    } else {
      fail(line, "unknown keyword '" + std::string(line.keyword) + "'", line.offset);
    }
  }
  if (file.ideal.empty()) throw ParseError("no 'ideal' line", text.size());
  return file;
}

ProblemFile load_problem_file(const std::string& path, const std::optional<FieldSpec>& field_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read problem file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_file(buffer.str(), field_override);
}

}  // namespace jetclosure
