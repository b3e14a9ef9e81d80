#include "jetclosure/fixture_suite.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jetclosure/cli.hpp"
#include "jetclosure/problem.hpp"

namespace jetclosure::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

namespace {

struct Block {
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> assertions;
};

struct Fixture {
  std::string problem;
  std::string tag;
  std::vector<std::uint32_t> excluded_characteristics;
  std::optional<FieldSpec> pinned_field;
  std::vector<Block> blocks;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Fixture parse_fixture(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  Fixture f;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("#!")) {
      auto body = trim(line.substr(2));
      auto colon = body.find(':');
      if (colon == std::string::npos) throw std::runtime_error("line " + std::to_string(number) + ": bad directive");
      auto key = trim(body.substr(0, colon));
      auto value = trim(body.substr(colon + 1));
      if (key == "problem") {
        f.problem = value;
      } else if (key == "tag") {
        f.tag = value;
      } else if (key == "pinned-field") {
        f.pinned_field = parse_field_spec(value);
      } else if (key == "char-exclude") {
        for (const auto& w : words(value)) f.excluded_characteristics.push_back(static_cast<std::uint32_t>(std::stoul(w)));
      } else {
        throw std::runtime_error("line " + std::to_string(number) + ": unknown directive '" + key + "'");
      }
    } else if (line.starts_with("#")) {
      continue;
    } else if (line.starts_with("===")) {
      f.blocks.push_back({words(line.substr(3)), {}});
    } else {
      auto eq = line.find(" = ");
      if (eq == std::string::npos || f.blocks.empty()) {
        throw std::runtime_error("line " + std::to_string(number) + ": expected '<path> = <value>'");
      }
      f.blocks.back().assertions.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 3)));
    }
  }
  if (f.problem.empty()) throw std::runtime_error("missing '#! problem:' directive");
  if (f.blocks.empty()) throw std::runtime_error("no '===' blocks");
  return f;
}

std::string render_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (v.empty()) return "[]";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += render_value(v[i]);
    }
    return s;
  }
  return v.dump();
}

// Paths like `generators`, `level_results[-1].verdict`.
std::optional<json> lookup(const json& root, const std::string& path) {
  const json* cur = &root;
  std::istringstream in(path);
  for (std::string part; std::getline(in, part, '.');) {
    std::string key = part;
    std::vector<long> indices;
    if (auto br = part.find('['); br != std::string::npos) {
      key = part.substr(0, br);
      std::string rest = part.substr(br);
      while (!rest.empty()) {
        auto close = rest.find(']');
        if (rest[0] != '[' || close == std::string::npos) return std::nullopt;
        indices.push_back(std::stol(rest.substr(1, close - 1)));
        rest = rest.substr(close + 1);
      }
    }
    if (!key.empty()) {
      if (!cur->is_object() || !cur->contains(key)) return std::nullopt;
      cur = &(*cur)[key];
    }
    for (long i : indices) {
      if (!cur->is_array()) return std::nullopt;
      long n = static_cast<long>(cur->size());
      if (i < 0) i += n;
      if (i < 0 || i >= n) return std::nullopt;
      cur = &(*cur)[static_cast<std::size_t>(i)];
    }
  }
  return *cur;
}

SuiteRow run_fixture(const fs::path& path, const std::optional<FieldSpec>& field_override,
                     const std::vector<std::string>& extra_flags) {
  SuiteRow row{path.stem().string(), "", RowStatus::Pass, {}};
  Fixture f;
  try {
    f = parse_fixture(path);
  } catch (const std::exception& e) {
    row.status = RowStatus::Fail;
    row.notes.push_back("malformed fixture: " + std::string(e.what()));
    return row;
  }
  row.tag = f.tag;
  if (field_override) {
    auto p = field_override->characteristic();
    if (std::find(f.excluded_characteristics.begin(), f.excluded_characteristics.end(), p) !=
        f.excluded_characteristics.end()) {
      row.status = RowStatus::Skipped;
      row.notes.push_back("warning: not valid in characteristic " + std::to_string(p));
      return row;
    }
    if (f.pinned_field && *f.pinned_field != *field_override) {
      row.status = RowStatus::Skipped;
      row.notes.push_back("values pinned over " + f.pinned_field->to_string() + " only");
      return row;
    }
  }
  const std::string problem = (path.parent_path() / f.problem).string();
  for (const auto& block : f.blocks) {
    std::vector<std::string> args = block.args;
    args.insert(args.begin() + (args.empty() ? 0 : 1), problem);
    args.insert(args.end(), {"--format", "json"});
    if (field_override) args.insert(args.end(), {"--field", field_override->to_string()});
    args.insert(args.end(), extra_flags.begin(), extra_flags.end());
    std::ostringstream out, err;
    int code = run(args, out, err);
    const std::string command = [&] {
      std::string s;
      for (const auto& a : block.args) s += (s.empty() ? "" : " ") + a;
      return s;
    }();
    json result;
    try {
      result = json::parse(out.str());
    } catch (const std::exception&) {
      row.status = RowStatus::Fail;
      row.notes.push_back(command + ": exit " + std::to_string(code) + ", " + trim(err.str()));
      continue;
    }
    result["exit"] = code;
    for (const auto& [key, expected] : block.assertions) {
      auto actual = lookup(result, key);
      std::string got = actual ? render_value(*actual) : "<missing>";
      if (got != expected) {
        row.status = RowStatus::Fail;
        row.notes.push_back(command + ": " + key + " = " + got + " (expected " + expected + ")");
      }
    }
  }
  return row;
}

}  // namespace

std::vector<SuiteRow> run_fixture_suite(const std::string& directory,
                                        const std::optional<FieldSpec>& field_override,
                                        const std::vector<std::string>& extra_flags) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(directory, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".expected") files.push_back(entry.path());
  }
  std::vector<SuiteRow> rows;
  if (ec) {
    rows.push_back({"fixtures", "", RowStatus::Fail, {"cannot read fixture directory '" + directory + "'"}});
    return rows;
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) rows.push_back(run_fixture(f, field_override, extra_flags));
  return rows;
}

}  // namespace jetclosure::cli
