#include "report.hpp"

#include <chrono>

namespace dnlift::cli {

AnalysisReport analyze(const SourceProgram& source, AnalysisConfig config) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.path = source.path;
  r.program = source.program;
  r.tau = infer_max_positions(r.program);
  r.tau_plus = infer_positions_terms(r.program, config.pattern_depth);
  r.filter = config.filter ? *config.filter : filter_of_positions_terms(r.tau_plus);
  r.analysis = detect_all(r.program, r.filter, config.search, config.seeds);
  for (const LoopWitness& w : r.analysis.loops) {
    r.verification.push_back(verify_witness(r.program, w, verification_steps(w)));
  }
  r.config = std::move(config);
  r.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::size_t verification_steps(const LoopWitness& w) {
  return 3 * (w.prefix.length() + w.segment.length());
}

Json class_to_json(const QueryClass& c) {
  Json positions = Json::array();
  for (std::size_t i = 0; i < c.positions().size(); ++i) {
    const PositionClass& pc = c.positions()[i];
    Json p = {{"position", i + 1}};
    switch (pc.kind) {
      case PositionClass::Kind::kMoreGeneralThan:
        p["kind"] = "more_general_than";
        break;
      case PositionClass::Kind::kAnyTerm:
        p["kind"] = "any_term";
        break;
      case PositionClass::Kind::kInstanceOf:
        p["kind"] = "instance_of";
        break;
      case PositionClass::Kind::kUnifiesWith:
        p["kind"] = "unifies_with";
        break;
    }
    if (pc.term) p["term"] = to_string(*pc.term);
    positions.push_back(std::move(p));
  }
  return {{"template", to_string(c.templ())},
          {"description", c.describe()},
          {"positions", std::move(positions)}};
}

Json witness_to_json(const LoopWitness& w, const Signature& signature) {
  Json j = {{"looping_atom", to_string(w.looping_atom)},
            {"filter", filter_to_json(w.filter, signature)},
            {"prefix", derivation_to_json(w.prefix)},
            {"segment", derivation_to_json(w.segment)},
            {"b1", to_string(w.pair.earlier)},
            {"b2", to_string(w.pair.later)},
            {"eta", substitution_to_json(w.pair.eta)}};
  if (w.via) {
    j["via"] = {{"entry", to_string(w.via->entry)},
                {"member", to_string(w.via->member)},
                {"eta", substitution_to_json(w.via->eta)}};
  }
  return j;
}

Json report_to_json(const AnalysisReport& r) {
  const Signature& sig = r.program.signature();
  Json clauses = Json::array();
  for (const Clause& c : r.program.clauses()) clauses.push_back(to_string(c));
  Json predicates = Json::array();
  for (const auto& [p, n] : sig) predicates.push_back(p + "/" + std::to_string(n));

  Json loops = Json::array();
  Json verdicts = Json::array();
  for (std::size_t k = 0; k < r.analysis.loops.size(); ++k) {
    const LoopWitness& w = r.analysis.loops[k];
    Json witness = witness_to_json(w, sig);
    witness["verified_steps"] = r.verification[k].steps_run;
    loops.push_back({{"atom", to_string(w.looping_atom)},
                     {"verdict", "loops"},
                     {"class", class_to_json(query_class(w))},
                     {"witness", std::move(witness)}});
  }
  Json unknowns = Json::array();
  for (const Atom& a : r.analysis.unknown) unknowns.push_back(to_string(a));

  Json seeds = Json::array();
  for (const Atom& a : r.config.seeds) seeds.push_back(to_string(a));

  return {
      {"schema_version", kSchemaVersion},
      {"program", {{"path", r.path}, {"clauses", clauses}, {"predicates", predicates}}},
      {"certificates",
       {{"tau", positions_to_json(r.tau, sig)},
        {"tau_plus", positions_terms_to_json(r.tau_plus, sig)}}},
      {"filter", filter_to_json(r.filter, sig)},
      {"loops", std::move(loops)},
      {"unknowns", std::move(unknowns)},
      {"config",
       {{"depth", r.config.search.depth},
        {"budget", r.config.search.node_budget},
        {"pattern_depth", r.config.pattern_depth},
        {"filter_source", r.config.filter_source},
        {"seeds", std::move(seeds)}}},
      {"timing_ms", r.timing_ms},
  };
}

namespace {

std::string positions_text(const PositionSet& tau) {
  std::string s = "<";
  bool first = true;
  for (const auto& [p, ps] : tau.positions) {
    if (ps.empty()) continue;
    if (!first) s += ", ";
    first = false;
    s += p + " -> {";
    bool first_pos = true;
    for (std::size_t i : ps) {
      if (!first_pos) s += ", ";
      first_pos = false;
      s += std::to_string(i);
    }
    s += "}";
  }
  return s + ">";
}

std::string positions_terms_text(const PositionTermMap& tau_plus) {
  std::string s = "<";
  bool first = true;
  for (const auto& [p, ps] : tau_plus.terms) {
    if (ps.empty()) continue;
    if (!first) s += ", ";
    first = false;
    s += p + " -> <";
    bool first_pos = true;
    for (const auto& [i, u] : ps) {
      if (!first_pos) s += ", ";
      first_pos = false;
      s += std::to_string(i) + " -> " + to_string(u);
    }
    s += ">";
  }
  return s + ">";
}

void write_chain(std::ostream& out, const Derivation& d) {
  out << to_string(d.initial);
  for (const DerivationStep& s : d.steps) out << " => " << to_string(s.to);
}

}  // namespace

void write_text(std::ostream& out, const AnalysisReport& r) {
  out << "program: " << (r.path.empty() ? "<input>" : r.path) << " (" << r.program.size()
      << " clauses)\n";
  out << "tau:    " << positions_text(r.tau) << "\n";
  out << "tau+:   " << positions_terms_text(r.tau_plus) << "\n";
  out << "filter: " << to_string(r.filter) << " [" << r.config.filter_source << "]\n";
  for (std::size_t k = 0; k < r.analysis.loops.size(); ++k) {
    const LoopWitness& w = r.analysis.loops[k];
    out << "\nloops: " << w.looping_atom << "\n";
    out << "  class:   " << query_class(w).describe() << "\n";
    if (w.prefix.length() > 0) {
      out << "  prefix:  ";
      write_chain(out, w.prefix);
      out << "\n";
    }
    out << "  segment: ";
    write_chain(out, w.segment);
    out << "\n";
    out << "  subsumes: " << w.pair.later << " is more general than " << w.pair.earlier
        << " for " << w.pair.eta << "\n";
    if (w.via) {
      out << "  via:     " << w.via->entry << " in the class of " << w.via->member << "\n";
    }
    out << "  verified: " << r.verification[k].steps_run << " steps\n";
  }
  for (const Atom& a : r.analysis.unknown) out << "\nunknown: " << a << "\n";
  if (!r.analysis.unknown.empty()) {
    out << "\nnote: \"unknown\" means no loop was found within depth " << r.config.search.depth
        << "; it is not a termination proof.\n";
  }
}

}  // namespace dnlift::cli
