#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "dnlift/errors.hpp"
#include "dnlift/json_io.hpp"
#include "dnlift/sld.hpp"
#include "dnlift/syntax.hpp"
#include "report.hpp"

namespace dnlift::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string program;
  std::string tau;
  std::string tau_plus;
  std::string filter;
  bool with_terms = false;
  std::size_t pattern_depth = 3;
  std::size_t depth = 0;
  std::size_t budget = 0;
  std::vector<std::string> seeds;
  std::string query;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

Query parse_command_line_query(const std::string& text) {
  try {
    return parse_query(text);
  } catch (const ParseError& e) {
    throw ParseError("in query '" + text + "': " + e.what(), 0, 0);
  }
}

Json violations_json(const std::vector<DnViolation>& vs) {
  Json out = Json::array();
  for (const DnViolation& v : vs) {
    out.push_back({{"clause_index", v.clause_index},
                   {"predicate", v.predicate},
                   {"position", v.position},
                   {"rule", to_string(v.rule)},
                   {"detail", v.detail}});
  }
  return out;
}

int check_dn(const Options& o, std::ostream& out) {
  const SourceProgram src = load_program(o.program);
  const Signature& sig = src.program.signature();
  std::vector<DnViolation> vs;
  Json certificate;
  std::string kind;
  if (!o.tau.empty()) {
    kind = "tau";
    PositionSet tau = positions_from_json(read_json(o.tau), sig);
    vs = check_dn_positions(tau, src.program);
    certificate = positions_to_json(tau, sig);
  } else {
    kind = "tau_plus";
    PositionTermMap tau_plus = positions_terms_from_json(read_json(o.tau_plus), sig);
    vs = check_dn_positions_terms(tau_plus, src.program);
    certificate = positions_terms_to_json(tau_plus, sig);
  }
  if (o.format == "json") {
    out << Json{{"schema_version", kSchemaVersion},
                {"program", o.program},
                {"kind", kind},
                {"certificate", certificate},
                {"dn", vs.empty()},
                {"violations", violations_json(vs)}}
               .dump(2)
        << "\n";
  } else if (vs.empty()) {
    out << "ok: certificate is DN for " << o.program << "\n";
  } else {
    for (const DnViolation& v : vs) out << "violation: " << to_string(v) << "\n";
  }
  return vs.empty() ? kOk : kNotDN;
}

int infer_dn(const Options& o, std::ostream& out) {
  const SourceProgram src = load_program(o.program);
  const Signature& sig = src.program.signature();
  const PositionSet tau = infer_max_positions(src.program);
  std::optional<PositionTermMap> tau_plus;
  if (o.with_terms) tau_plus = infer_positions_terms(src.program, o.pattern_depth);

  if (o.format == "json") {
    Json j = {{"schema_version", kSchemaVersion},
              {"program", o.program},
              {"tau", positions_to_json(tau, sig)}};
    if (tau_plus) j["tau_plus"] = positions_terms_to_json(*tau_plus, sig);
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [p, n] : sig) {
    out << "tau(" << p << "/" << n << ") = {";
    bool first = true;
    for (std::size_t i : tau.of(p)) {
      out << (first ? "" : ", ") << i;
      first = false;
    }
    out << "}\n";
  }
  if (tau_plus) {
    for (const auto& [p, n] : sig) {
      out << "tau+(" << p << "/" << n << ") = <";
      bool first = true;
      for (const auto& [i, u] : tau_plus->of(p)) {
        out << (first ? "" : ", ") << i << " -> " << u;
        first = false;
      }
      out << ">\n";
    }
  }
  return kOk;
}

int detect_loops(const Options& o, std::ostream& out, std::ostream& err) {
  const SourceProgram src = load_program(o.program);
  const Signature& sig = src.program.signature();
  AnalysisConfig config;
  config.pattern_depth = o.pattern_depth;
  if (o.depth) config.search.depth = o.depth;
  if (o.budget) config.search.node_budget = o.budget;
  for (const std::string& text : o.seeds) {
    Query q = parse_command_line_query(text);
    if (q.size() != 1) throw ParseError("seed '" + text + "' must be a single atom", 0, 0);
    config.seeds.push_back(q[0]);
  }
  if (!o.tau.empty()) {
    PositionSet tau = positions_from_json(read_json(o.tau), sig);
    if (auto vs = check_dn_positions(tau, src.program); !vs.empty()) {
      throw FilterNotDN("certificate is not DN: " + to_string(vs.front()));
    }
    config.filter = filter_of_positions(tau);
    config.filter_source = "tau";
  } else if (!o.tau_plus.empty()) {
    config.filter = filter_of_positions_terms(positions_terms_from_json(read_json(o.tau_plus), sig));
    config.filter_source = "tau_plus";
  } else if (!o.filter.empty()) {
    config.filter = filter_from_json(read_json(o.filter), sig);
    config.filter_source = "filter";
  }

  const AnalysisReport report = analyze(src, std::move(config));
  if (o.format == "json") {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    write_text(out, report);
  }
  for (std::size_t k = 0; k < report.verification.size(); ++k) {
    if (!report.verification[k].ok) {
      err << "error: witness for " << report.analysis.loops[k].looping_atom
          << " failed verification: " << report.verification[k].reason << "\n";
      return kInternal;
    }
  }
  return kOk;
}

int derive(const Options& o, std::ostream& out) {
  const SourceProgram src = load_program(o.program);
  const Query q = parse_command_line_query(o.query);
  EngineLimits limits;
  if (o.depth) limits.max_depth = o.depth;
  if (o.budget) limits.node_budget = o.budget;

  Json derivations = Json::array();
  std::ostringstream text;
  for_each_left_derivation(src.program, q, limits, [&](const Derivation& d) {
    derivations.push_back({{"status", to_string(d.status)},
                           {"length", d.length()},
                           {"final", to_string(d.last())},
                           {"steps", derivation_to_json(d)}});
    text << to_string(d.initial) << "\n";
    for (const DerivationStep& s : d.steps) {
      text << "  => [" << s.clause_index << "] " << to_string(s.to) << "\n";
    }
    text << "  (" << to_string(d.status) << ")\n";
    return true;
  });
  if (o.format == "json") {
    out << Json{{"schema_version", kSchemaVersion},
                {"program", o.program},
                {"query", to_string(q)},
                {"max_depth", limits.max_depth},
                {"derivations", std::move(derivations)}}
               .dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Non-termination analysis of definite logic programs", "dnlift"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.fallthrough();

  auto* check = app.add_subcommand("check-dn", "Check a certificate against a program");
  check->add_option("program", o.program, "Program file")->required();
  auto* check_tau = check->add_option("--tau", o.tau, "Set of positions (JSON)");
  auto* check_tau_plus =
      check->add_option("--tau-plus", o.tau_plus, "Positions with associated terms (JSON)");
  check_tau->excludes(check_tau_plus);

  auto* infer = app.add_subcommand("infer-dn", "Infer DN certificates");
  infer->add_option("program", o.program, "Program file")->required();
  infer->add_flag("--with-terms", o.with_terms, "Also infer positions with associated terms");
  infer->add_option("--pattern-depth", o.pattern_depth, "Maximum depth of associated terms")
      ->capture_default_str();

  auto* detect = app.add_subcommand("detect-loops", "Find left-looping atoms");
  detect->add_option("program", o.program, "Program file")->required();
  auto* d_tau = detect->add_option("--tau", o.tau, "Use this set of positions (JSON)");
  auto* d_tau_plus =
      detect->add_option("--tau-plus", o.tau_plus, "Use these positions with terms (JSON)");
  auto* d_filter = detect->add_option("--filter", o.filter, "Use this filter (JSON)");
  d_tau->excludes(d_tau_plus)->excludes(d_filter);
  d_tau_plus->excludes(d_filter);
  detect->add_option("--depth", o.depth, "Search depth (default 25)")
      ->check(CLI::PositiveNumber);
  detect->add_option("--budget", o.budget, "Resolution steps per atom (default 100000)")
      ->check(CLI::PositiveNumber);
  detect->add_option("--pattern-depth", o.pattern_depth, "Maximum depth of associated terms")
      ->capture_default_str();
  detect->add_option("--seeds", o.seeds, "Extra atoms to analyse");

  auto* der = app.add_subcommand("derive", "Print left derivations of a query");
  der->add_option("program", o.program, "Program file")->required();
  der->add_option("--query", o.query, "Query, comma-separated atoms")->required();
  der->add_option("--depth", o.depth, "Maximum derivation length (default 50)")
      ->check(CLI::PositiveNumber);
  der->add_option("--budget", o.budget, "Resolution steps (default 100000)")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (check->parsed() && o.tau.empty() && o.tau_plus.empty()) {
    err << "check-dn: one of --tau or --tau-plus is required\nRun with --help for more information.\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return check_dn(o, out);
    if (infer->parsed()) return infer_dn(o, out);
    if (detect->parsed()) return detect_loops(o, out, err);
    return derive(o, out);
  } catch (const ParseError& e) {
    err << "error: " << (e.line() ? o.program + ":" : "") << e.what() << "\n";
    return kInputError;
  } catch (const ArityClash& e) {
    err << "error: " << o.program << ": " << e.what() << "\n";
    return kInputError;
  } catch (const FilterNotDN& e) {
    err << "error: " << e.what() << "\n";
    return kNotDN;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace dnlift::cli
