#include "jetclosure/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "jetclosure/closures.hpp"
#include "jetclosure/errors.hpp"
#include "jetclosure/fixture_suite.hpp"
#include "jetclosure/oracles.hpp"
#include "jetclosure/parser.hpp"
#include "jetclosure/problem.hpp"
#include "jetclosure/properties.hpp"

#ifndef JETCLOSURE_FIXTURES_DIR
#define JETCLOSURE_FIXTURES_DIR "fixtures"
#endif

namespace jetclosure::cli {

using json = nlohmann::ordered_json;

GroebnerOptions RunConfig::groebner_options() const {
  GroebnerOptions o;
  o.max_pair_degree = max_pair_degree;
  o.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000));
  return o;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

// Everything a command reports; rendered as text or JSON.
struct Report {
  Report() = default;
  Report(std::string cmd, std::optional<std::string> dig, std::string res)
      : command(std::move(cmd)), digest(std::move(dig)), result(std::move(res)) {}

  std::string command;
  std::optional<std::string> digest;
  std::string result;
  std::vector<std::string> generators;
  bool certificates_verified = true;
  std::optional<unsigned> stabilized_at;
  bool reports_stabilization = false;
  json level_results = json::array();
  std::vector<std::string> notes;  // extra text-mode lines
  int exit_code = kSuccess;
};

std::vector<std::string> strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> basis_strings(const Ideal& ideal, const GroebnerOptions& o) {
  return strings(canonical(ideal, o).generators());
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

std::string hex_digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

void render(const Report& r, const RunConfig& config, double seconds, std::ostream& out) {
  if (config.format == OutputFormat::Json) {
    json j;
    j["command"] = r.command;
    j["input_digest"] = r.digest ? json(*r.digest) : json(nullptr);
    j["result"] = r.result;
    j["generators"] = r.generators;
    j["certificates_verified"] = r.certificates_verified;
    j["stabilized_at"] = r.stabilized_at ? json(*r.stabilized_at) : json(nullptr);
    j["level_results"] = r.level_results;
    j["timings"] = config.timings ? json{{"total_seconds", seconds}} : json(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  out << "command: " << r.command << "\n";
  if (r.digest) out << "input: " << *r.digest << "\n";
  out << "result: " << r.result << "\n";
  if (r.command != "verify-paper") {
    out << "generators:\n";
    if (r.generators.empty()) out << "  0\n";
    for (const auto& g : r.generators) out << "  " << g << "\n";
  }
  out << "certificates: " << (r.certificates_verified ? "verified" : "NOT VERIFIED") << "\n";
  if (r.reports_stabilization) {
    out << "stabilized_at: " << (r.stabilized_at ? std::to_string(*r.stabilized_at) : "none") << "\n";
  }
  for (const auto& line : r.notes) out << line << "\n";
  if (config.timings) out << "time: " << seconds << " s\n";
}

struct Loaded {
  ProblemFile file;
  std::string digest;
};

Loaded load(const std::string& path, const RunConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read problem file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return {parse_problem_file(text, config.field_override), hex_digest(text)};
}

Polynomial target_polynomial(const ProblemFile& file, const std::string& poly, const std::string& candidate) {
  if (!poly.empty() && !candidate.empty()) throw InvalidArgument("give either --poly or --candidate, not both");
  if (!candidate.empty()) {
    const auto* c = file.find_candidate(candidate);
    if (!c) throw InvalidArgument("no candidate named '" + candidate + "'");
    return c->poly;
  }
  if (poly.empty()) throw InvalidArgument("missing --poly or --candidate");
  return parse_polynomial(poly, file.ring);
}

unsigned require_level(const std::optional<unsigned>& level, const char* flag) {
  if (!level) throw InvalidArgument(std::string("missing ") + flag);
  return *level;
}

Report cmd_jet(const Loaded& in, const RunConfig& config, bool local) {
  const auto o = config.groebner_options();
  unsigned m = require_level(config.level, "--level");
  JetIdeal jets = jet_ideal(Ideal(in.file.ring, in.file.relations) + Ideal(in.file.ring, in.file.ideal), m, local);
  Report r("jet", in.digest, "ok");
  r.generators = basis_strings(jets.ideal, o);
  for (std::size_t k = 0; k < jets.source.generators().size(); ++k) {
    const auto& f = jets.source.generators()[k];
    auto d = hasse_schmidt_expand(f, jets.jets);
    for (unsigned i = 0; i <= m; ++i) {
      if (d[i].is_zero()) continue;
      r.level_results.push_back({{"generator", f.to_string()}, {"order", i}, {"derivation", d[i].to_string()}});
      r.notes.push_back("D_" + std::to_string(i) + "(" + f.to_string() + ") = " + d[i].to_string());
    }
  }
  r.notes.insert(r.notes.begin(), std::string("level ") + std::to_string(m) + (local ? ", local" : ", global") +
                                      "; nonzero derivations:");
  return r;
}

Report cmd_closure(const Loaded& in, const RunConfig& config, ClosureMethod method) {
  unsigned m = require_level(config.level, "--level");
  Ideal c = jet_closure(in.file.problem(), m, config.groebner_options(), method);
  Report r("closure", in.digest, "ok");
  r.generators = strings(c.generators());
  r.level_results.push_back({{"level", m}, {"method", to_string(method)}});
  r.notes.push_back("level " + std::to_string(m) + " (" + to_string(method) + ")");
  return r;
}

Report cmd_member(const Loaded& in, const RunConfig& config, const Polynomial& g) {
  unsigned m = require_level(config.level, "--level");
  auto res = jet_closure_member(g, in.file.problem(), m, config.groebner_options());
  Report r("member", in.digest, res.member ? "true" : "false");
  r.generators = {g.to_string()};
  std::size_t verified = 0;
  for (const auto& c : res.coefficients) {
    bool ok = true;
    if (c.member && !c.coefficient.is_zero()) {
      ok = c.certificate && verify_certificate(*c.certificate);
      verified += ok;
    }
    r.certificates_verified = r.certificates_verified && ok;
    r.level_results.push_back({{"order", c.order}, {"coefficient", c.coefficient.to_string()}, {"member", c.member}});
    r.notes.push_back("D_" + std::to_string(c.order) + "(g)|0 = " + c.coefficient.to_string() + ": " +
                      (c.member ? "in J" : "not in J"));
  }
  r.notes.push_back("verified certificates: " + std::to_string(verified));
  return r;
}

Report cmd_ideal_member(const Loaded& in, const RunConfig& config, const Polynomial& g) {
  Ideal ideal = in.file.problem().combined();
  Membership m = ideal_member(g, ideal, config.groebner_options());
  Report r("ideal-member", in.digest, m.member ? "true" : "false");
  r.generators = {g.to_string()};
  if (m.certificate) {
    r.certificates_verified = verify_certificate(*m.certificate);
    json cofactors = json::array();
    for (const auto& c : m.certificate->cofactors) {
      const auto& gen = m.certificate->generators[c.generator];
      cofactors.push_back({{"generator", gen.to_string()}, {"cofactor", c.cofactor.to_string()}});
      r.notes.push_back("  (" + c.cofactor.to_string() + ") * (" + gen.to_string() + ")");
    }
    r.level_results.push_back({{"cofactors", cofactors}});
    r.notes.insert(r.notes.begin(), "certificate: g =");
  }
  return r;
}

Report cmd_jsc_member(const Loaded& in, const RunConfig& config, const Polynomial& g) {
  const auto reading = config.literal_mjsc ? SupportReading::Literal : SupportReading::ReducedFiber;
  const auto o = config.groebner_options();
  const ClosureProblem problem = in.file.problem();
  std::vector<JetSupportMembership> levels;
  Verdict verdict = Verdict::Member;
  if (config.max_level) {
    auto rep = jsc_member_up_to(g, problem, *config.max_level, o, reading);
    levels = std::move(rep.levels);
    verdict = rep.verdict;
  } else {
    levels.push_back(jet_support_closure_member(g, problem, require_level(config.level, "--level or --max-level"), o,
                                                reading));
    verdict = levels.back().verdict;
  }
  Report r("jsc-member", in.digest, to_string(verdict));
  r.generators = {g.to_string()};
  for (const auto& l : levels) {
    json coeffs = json::array();
    for (const auto& c : l.coefficients) {
      if (c.certificate) r.certificates_verified = r.certificates_verified && verify_certificate(*c.certificate);
      coeffs.push_back({{"order", c.order}, {"coefficient", c.coefficient.to_string()}, {"verdict", to_string(c.verdict)}});
    }
    r.level_results.push_back({{"level", l.level},
                               {"verdict", to_string(l.verdict)},
                               {"first_failing_order", l.first_failing_order ? json(*l.first_failing_order) : json(nullptr)},
                               {"coefficients", coeffs}});
    r.notes.push_back("level " + std::to_string(l.level) + ": " + to_string(l.verdict) +
                      (l.first_failing_order ? " (order " + std::to_string(*l.first_failing_order) + ")" : ""));
  }
  r.notes.insert(r.notes.begin(), std::string("reading: ") + (config.literal_mjsc ? "literal" : "reduced fiber"));
  return r;
}

Report cmd_arc_approx(const Loaded& in, const RunConfig& config) {
  const auto o = config.groebner_options();
  unsigned max_level = require_level(config.max_level, "--max-level");
  const ClosureProblem problem = in.file.problem();
  auto chain = arc_closure_approx(problem, max_level, o);
  Report r("arc-approx", in.digest, "");
  r.reports_stabilization = true;
  r.stabilized_at = chain.stabilized_at;
  if (chain.inconclusive) {
    r.result = "inconclusive";
    r.exit_code = kResourceGuard;
    r.notes.push_back("stopped: " + *chain.inconclusive);
  } else {
    r.result = chain.stabilized_at ? "stabilized" : "not-stabilized";
  }
  for (const auto& l : chain.levels) {
    bool monotone = std::find(chain.non_monotone_levels.begin(), chain.non_monotone_levels.end(),
                              l.level == 0 ? ~0u : l.level - 1) == chain.non_monotone_levels.end();
    auto c = strings(l.closure.generators());
    auto a = strings(l.cumulative.generators());
    r.level_results.push_back({{"level", l.level}, {"closure", c}, {"cumulative", a}, {"contained_in_previous", monotone}});
    r.notes.push_back("level " + std::to_string(l.level) + ": C = (" + join(c) + "), A = (" + join(a) + ")" +
                      (monotone ? "" : "  [C not contained in previous C]"));
  }
  if (!chain.levels.empty()) {
    const Ideal& last = chain.levels.back().cumulative;
    r.generators = strings(last.generators());
    // The ideal must lie in every A_m; back that with checked certificates.
    for (const auto& g : problem.combined().generators()) {
      Membership m = ideal_member(g, last, o);
      r.certificates_verified = r.certificates_verified && m.member && m.certificate && verify_certificate(*m.certificate);
    }
  }
  return r;
}

Report cmd_integral_closure(const Loaded& in, const RunConfig& config) {
  if (!in.file.relations.empty()) throw InvalidArgument("integral-closure needs a polynomial ring (no relations)");
  const auto o = config.groebner_options();
  MonomialIdealSpec spec = MonomialIdealSpec::from_ideal(Ideal(in.file.ring, in.file.ideal));
  MonomialIdealSpec closure = monomial_integral_closure(spec);
  Report r("integral-closure", in.digest, "ok");
  r.generators = basis_strings(closure.to_ideal(in.file.ring), o);
  return r;
}

Report cmd_verify_paper(const std::string& fixtures, const RunConfig& config) {
  std::vector<std::string> extra;
  extra.push_back("--timeout");
  extra.push_back(std::to_string(config.timeout_seconds));
  auto rows = run_fixture_suite(fixtures, config.field_override, extra);

  // Seeded property sweeps run in-process.
  auto add_property = [&](const std::string& name, const PropertyResult& p) {
    SuiteRow row{name, "[PROPERTY]", p.pass ? RowStatus::Pass : RowStatus::Fail, {p.detail}};
    rows.push_back(std::move(row));
  };
  if (config.field_override && !config.field_override->is_rational()) {
    for (auto name : {"corpus-closure-properties", "hasse-schmidt-vs-brute-force", "coefficient-vs-kernel-membership"}) {
      rows.push_back({name, "[PROPERTY]", RowStatus::Skipped, {"random corpus is defined over Q"}});
    }
  } else {
    const auto o = config.groebner_options();
    add_property("corpus-closure-properties", corpus_closure_properties(kDefaultPropertySeed, 20, o));
    add_property("hasse-schmidt-vs-brute-force", hasse_schmidt_sweep(kDefaultPropertySeed, 100));
    add_property("coefficient-vs-kernel-membership", dual_route_sweep(kDefaultPropertySeed, 50, o));
  }

  std::size_t pass = 0, fail = 0, skip = 0;
  Report r("verify-paper", std::nullopt, "");
  for (const auto& row : rows) {
    (row.status == RowStatus::Pass ? pass : row.status == RowStatus::Fail ? fail : skip)++;
    r.level_results.push_back({{"row", row.name}, {"tag", row.tag}, {"status", to_string(row.status)}, {"notes", row.notes}});
    std::string line = to_string(row.status);
    line.resize(8, ' ');
    line += row.name + "  " + row.tag;
    r.notes.push_back(line);
    for (const auto& n : row.notes) r.notes.push_back("        " + n);
  }
  r.result = std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(skip) + " skipped";
  r.exit_code = fail ? kSuiteFailure : kSuccess;
  return r;
}

double default_timeout() {
  const char* env = std::getenv(kTimeoutEnv);
  if (!env || !*env) return 120;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0)) {
    throw InvalidArgument(std::string(kTimeoutEnv) + " must be a positive number of seconds");
  }
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config.timeout_seconds = default_timeout();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App app{"Jet closures, jet support closures and arc-closure approximations of polynomial ideals",
               "jetclosure"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string field;
  std::string file, poly, candidate, method = "linear";
  std::string fixtures = JETCLOSURE_FIXTURES_DIR;
  bool local = false;
  unsigned level = 0, max_level = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--timeout", config.timeout_seconds, "Groebner timeout in seconds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-pair-degree", config.max_pair_degree, "largest S-pair degree before giving up");
    sub->add_option("--field", field, "override the file's field: Q or 'Fp <p>'");
    sub->add_flag("--timings", config.timings, "report wall-clock time");
  };
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "problem file")->required();
    common(sub);
  };
  auto with_poly = [&](CLI::App* sub) {
    sub->add_option("--poly", poly, "polynomial to test");
    sub->add_option("--candidate", candidate, "named candidate from the file");
  };

  auto* jet = app.add_subcommand("jet", "jet ideal of ideal + relations");
  with_file(jet);
  auto* jet_level = jet->add_option("--level,-m", level, "jet level")->required();
  jet->add_flag("--local", local, "fiber over the origin");

  auto* closure = app.add_subcommand("closure", "m-jet closure");
  with_file(closure);
  auto* closure_level = closure->add_option("--level,-m", level, "jet level")->required();
  closure->add_option("--method", method, "linear or elimination")->check(CLI::IsMember({"linear", "elimination"}));

  auto* member = app.add_subcommand("member", "m-jet closure membership");
  with_file(member);
  with_poly(member);
  auto* member_level = member->add_option("--level,-m", level, "jet level")->required();

  auto* ideal_member_cmd = app.add_subcommand("ideal-member", "plain ideal membership with a certificate");
  with_file(ideal_member_cmd);
  with_poly(ideal_member_cmd);

  auto* jsc = app.add_subcommand("jsc-member", "jet support closure membership");
  with_file(jsc);
  with_poly(jsc);
  auto* jsc_level = jsc->add_option("--level,-m", level, "test a single level");
  auto* jsc_max = jsc->add_option("--max-level,-M", max_level, "test levels 0..M");
  jsc_level->excludes(jsc_max);
  jsc->add_flag("--literal-mjsc", config.literal_mjsc, "radical of the global jet ideal, then restrict");

  auto* arc = app.add_subcommand("arc-approx", "cumulative intersections of m-jet closures");
  with_file(arc);
  auto* arc_max = arc->add_option("--max-level,-M", max_level, "last level")->required();

  auto* integral = app.add_subcommand("integral-closure", "integral closure of a monomial ideal");
  with_file(integral);

  auto* verify = app.add_subcommand("verify-paper", "run the pinned regression suite");
  verify->add_option("--fixtures", fixtures, "fixture directory");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  if (format == "json") config.format = OutputFormat::Json;
  if ((jet->parsed() && jet_level->count()) || (closure->parsed() && closure_level->count()) ||
      (member->parsed() && member_level->count()) || (jsc->parsed() && jsc_level->count())) {
    config.level = level;
  }
  if ((jsc->parsed() && jsc_max->count()) || (arc->parsed() && arc_max->count())) config.max_level = max_level;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!field.empty()) config.field_override = parse_field_spec(field);
    Report r;
    if (verify->parsed()) {
      r = cmd_verify_paper(fixtures, config);
    } else {
      Loaded in = load(file, config);
      if (jet->parsed()) {
        r = cmd_jet(in, config, local);
      } else if (closure->parsed()) {
        r = cmd_closure(in, config, method == "elimination" ? ClosureMethod::Elimination : ClosureMethod::Linear);
      } else if (member->parsed()) {
        r = cmd_member(in, config, target_polynomial(in.file, poly, candidate));
      } else if (ideal_member_cmd->parsed()) {
        r = cmd_ideal_member(in, config, target_polynomial(in.file, poly, candidate));
      } else if (jsc->parsed()) {
        r = cmd_jsc_member(in, config, target_polynomial(in.file, poly, candidate));
      } else if (arc->parsed()) {
        r = cmd_arc_approx(in, config);
      } else {
        r = cmd_integral_closure(in, config);
      }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    render(r, config, seconds, out);
    if (!r.certificates_verified) {
      err << "error: a membership certificate failed verification\n";
      return kInvariantViolation;
    }
    return r.exit_code;
  } catch (const ResourceGuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const Inconclusive& e) {
    err << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const InvariantViolation& e) {
    err << "error: internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"jetclosure"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace jetclosure::cli
