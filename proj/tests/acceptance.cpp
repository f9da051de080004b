// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dnlift/dn.hpp"
#include "dnlift/errors.hpp"
#include "dnlift/json_io.hpp"
#include "dnlift/loops.hpp"
#include "support/support.hpp"

using namespace dnlift;
using namespace dnlift::testing;

namespace {

constexpr double kTimeLimitMs = 1000.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && first_failure_.empty()) first_failure_ = what;
    failed_ = failed_ || !condition;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    return {!failed_, failed_ ? first_failure_ + (notes_.empty() ? "" : " [" + notes_ + "]") : notes_};
  }

 private:
  bool failed_ = false;
  std::string first_failure_;
  std::string notes_;
};

struct CliResult {
  int code;
  Json json;
  std::string err;
};

CliResult run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  Json j;
  if (!out.str().empty()) j = Json::parse(out.str());
  return {code, j, err.str()};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

bool variant_atom(const Json& text, const std::string& expected) {
  return text.is_string() && is_variant(A(text.get<std::string>()), A(expected));
}

bool variant_term(const Json& text, const std::string& expected) {
  return text.is_string() && is_variant(T(text.get<std::string>()), T(expected));
}

const Json* find_loop(const Json& report, const std::string& atom) {
  for (const Json& l : report["loops"]) {
    if (variant_atom(l["atom"], atom)) return &l;
  }
  return nullptr;
}

bool class_is(const Json& loop, std::size_t position, const std::string& kind,
              const std::string& term = "") {
  const Json& p = loop["class"]["positions"][position - 1];
  if (p["kind"] != kind) return false;
  return term.empty() ? !p.contains("term") : variant_term(p["term"], term);
}

// AC1 ---------------------------------------------------------------------

Outcome example_1() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const std::string prog = program_path("loop1");
  CliResult infer = run_json({"infer-dn", prog});
  c.expect(infer.code == 0, "infer-dn exit code " + std::to_string(infer.code));
  c.expect(infer.json["tau"] == Json::parse(R"({"p/2": {"2": null}})"),
           "tau is " + infer.json["tau"].dump());
  CliResult detect = run_json({"detect-loops", prog});
  c.expect(detect.code == 0, "detect-loops exit code " + std::to_string(detect.code));
  const Json* loop = find_loop(detect.json, "p(f(X),Y)");
  c.expect(loop != nullptr, "p(f(X),Y) not reported as looping");
  if (loop) {
    c.expect(class_is(*loop, 1, "more_general_than", "f(X)"), "t1 is not 'more general than f(X)'");
    c.expect(class_is(*loop, 2, "any_term"), "t2 is not 'any term'");
    c.note((*loop)["class"]["description"].get<std::string>());
  }
  const double ms = elapsed_ms(start);
  c.expect(ms < kTimeLimitMs, "took " + std::to_string(ms) + " ms");
  return c.outcome();
}

// AC2 ---------------------------------------------------------------------

Outcome example_2() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const std::string prog = program_path("loop2");
  CliResult infer = run_json({"infer-dn", prog, "--with-terms"});
  const Json& entry = infer.json["tau_plus"]["p/2"];
  c.expect(entry.size() == 1 && entry.contains("2") && variant_term(entry["2"], "g(Y)"),
           "inferred tau+ is " + infer.json["tau_plus"].dump());
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{}, {"--tau-plus", data_path("certificates/loop2_tau_plus.json")}}) {
    std::vector<std::string> args{"detect-loops", prog};
    args.insert(args.end(), extra.begin(), extra.end());
    CliResult detect = run_json(args);
    const std::string mode = extra.empty() ? "inferred" : "supplied";
    c.expect(detect.code == 0, mode + ": exit code " + std::to_string(detect.code));
    const Json* loop = find_loop(detect.json, "p(f(X),g(Y))");
    c.expect(loop != nullptr, mode + ": p(f(X),g(Y)) not reported");
    if (loop) {
      c.expect(class_is(*loop, 1, "more_general_than", "f(X)"), mode + ": t1 class");
      c.expect(class_is(*loop, 2, "instance_of", "g(Y)"), mode + ": t2 not 'any instance of g(Y)'");
    }
  }
  const double ms = elapsed_ms(start);
  c.expect(ms < kTimeLimitMs, "took " + std::to_string(ms) + " ms");
  return c.outcome();
}

// AC3 ---------------------------------------------------------------------

Outcome example_3() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const std::string prog = program_path("loop3");
  CliResult infer = run_json({"infer-dn", prog, "--with-terms"});
  const Json& tp = infer.json["tau_plus"];
  c.expect(tp["p/2"].size() == 1 && variant_term(tp["p/2"]["2"], "Y") && tp["q/2"].size() == 1 &&
               variant_term(tp["q/2"]["2"], "g(X)"),
           "inferred tau+ is " + tp.dump());
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{}, {"--tau-plus", data_path("certificates/loop3_tau_plus.json")}}) {
    std::vector<std::string> args{"detect-loops", prog};
    args.insert(args.end(), extra.begin(), extra.end());
    CliResult detect = run_json(args);
    const std::string mode = extra.empty() ? "inferred" : "supplied";
    c.expect(detect.code == 0, mode + ": exit code " + std::to_string(detect.code));
    const Json* q = find_loop(detect.json, "q(a,g(X))");
    const Json* p = find_loop(detect.json, "p(f(X),Y)");
    c.expect(q != nullptr, mode + ": q(a,g(X)) not reported");
    c.expect(p != nullptr, mode + ": p(f(X),Y) not reported");
    if (q) c.expect(!(*q)["witness"].contains("via"), mode + ": q(a,g(X)) should loop directly");
    if (p) {
      const Json& w = (*p)["witness"];
      c.expect(w.contains("via") && variant_atom(w["via"]["entry"], "q(X1,g(X1))") &&
                   variant_atom(w["via"]["member"], "q(a,g(X))"),
               mode + ": p(f(X),Y) not propagated through q(X',g(X'))");
    }
  }
  const double ms = elapsed_ms(start);
  c.expect(ms < kTimeLimitMs, "took " + std::to_string(ms) + " ms");
  return c.outcome();
}

// AC4 ---------------------------------------------------------------------

Term f_tower(std::size_t k) {
  Term t = Term::variable("V");
  for (std::size_t i = 0; i < k; ++i) t = Term::compound("f", {t});
  return t;
}

Outcome example_4() {
  Check c;
  CliResult detect = run_json({"detect-loops", program_path("loop4")});
  c.expect(detect.code == 0, "exit code " + std::to_string(detect.code));
  c.expect(detect.json["loops"].empty(), "a loop was claimed: " + detect.json["loops"].dump());
  c.expect(detect.json["unknowns"].size() == 1 && variant_atom(detect.json["unknowns"][0], "p(X,X)"),
           "unknowns are " + detect.json["unknowns"].dump());

  const Program prog = corpus("loop4");
  std::vector<Derivation> ds = left_derivations(prog, Q("p(X,X)"), 5);
  c.expect(ds.size() == 1 && ds[0].length() == 5, "expected one derivation of length 5");
  if (ds.size() == 1) {
    for (std::size_t k = 1; k <= ds[0].length(); ++k) {
      const Query& q = ds[0].query(k);
      Atom expected{"p", {f_tower(k), f_tower(k)}};
      c.expect(q.size() == 1 && is_variant(q[0], expected),
               "query " + std::to_string(k) + " is " + to_string(q));
    }
    c.note("Q5 = " + to_string(ds[0].last()));
  }
  return c.outcome();
}

// AC5 ---------------------------------------------------------------------

Outcome intro_contrast() {
  Check c;
  const Program prog = corpus("intro");
  const Atom a = A("p(X,Y)");
  std::optional<LoopWitness> plain = detect_loop(prog, a, Filter{});
  c.expect(!plain.has_value(), "empty-domain filter produced a witness");
  PositionSet tau;
  tau.insert("p", 1);
  std::optional<LoopWitness> lifted = detect_loop(prog, a, filter_of_positions(tau));
  c.expect(lifted.has_value(), "tau = <p -> {1}> produced no witness");
  if (lifted) {
    c.expect(verify_witness(prog, *lifted, 20).ok, "witness does not replay for 20 steps");
    c.note("B2 = " + to_string(lifted->pair.later));
  }
  return c.outcome();
}

// AC6 ---------------------------------------------------------------------

Outcome dn_golden_set() {
  Check c;
  const auto start = std::chrono::steady_clock::now();

  PositionSet tau;
  tau.insert("append", 2);
  tau.insert("append3", 2);
  tau.insert("append3", 3);
  auto vs = check_dn_positions(tau, corpus("append3"));
  c.expect(vs.empty(), "append/append3 tau rejected: " + (vs.empty() ? "" : to_string(vs[0])));

  PositionSet tau_append;
  tau_append.insert("append", 2);
  const Program append = corpus("append");
  vs = check_dn_positions(tau_append, append.clause(0), 0);
  c.expect(vs.size() == 1 && vs[0].rule == DnRule::kMultipleHeadOccurrence && vs[0].position == 2,
           "APPEND fact not rejected with MultipleHeadOccurrence at position 2");
  c.expect(check_dn_positions(tau_append, append.clause(1), 1).empty(),
           "APPEND recursive clause rejected");

  PositionTermMap merge;
  merge.set("merge", 2, T("[X|Y]"));
  vs = check_dn_positions_terms(merge, corpus("merge"));
  c.expect(vs.empty(), "MERGE tau+ rejected: " + (vs.empty() ? "" : to_string(vs[0])));

  PositionTermMap pq;
  pq.set("p", 2, T("X"));
  pq.set("q", 2, T("g(X)"));
  vs = check_dn_positions_terms(pq, corpus("loop3"));
  c.expect(vs.empty(), "two-clause tau+ rejected: " + (vs.empty() ? "" : to_string(vs[0])));

  CliResult cli = run_json(
      {"check-dn", program_path("loop3"), "--tau-plus", data_path("certificates/loop3_tau_plus.json")});
  c.expect(cli.code == 0 && cli.json["dn"] == true, "check-dn on the two-clause program failed");

  const double ms = elapsed_ms(start);
  c.expect(ms < kTimeLimitMs, "took " + std::to_string(ms) + " ms");
  return c.outcome();
}

// AC7 ---------------------------------------------------------------------

struct NamedFilter {
  std::string name;
  Filter filter;
};

std::vector<NamedFilter> approved_filters(const std::string& name, const Program& prog) {
  std::vector<NamedFilter> out;
  for (const PositionSet& tau : all_position_sets(prog.signature())) {
    if (check_dn_positions(tau, prog).empty()) {
      out.push_back({"tau" + Json(positions_to_json(tau, prog.signature())).dump(),
                     filter_of_positions(tau)});
    }
  }
  std::vector<PositionTermMap> plus{infer_positions_terms(prog, 3)};
  if (name == "merge") {
    plus.emplace_back();
    plus.back().set("merge", 2, T("[X|Y]"));
  }
  if (name == "loop2") {
    plus.emplace_back();
    plus.back().set("p", 2, T("g(Y)"));
  }
  if (name == "loop3") {
    plus.emplace_back();
    plus.back().set("p", 2, T("X"));
    plus.back().set("q", 2, T("g(X)"));
  }
  for (const PositionTermMap& tp : plus) {
    if (check_dn_positions_terms(tp, prog).empty()) {
      out.push_back({"tau+" + positions_terms_to_json(tp, prog.signature()).dump(),
                     filter_of_positions_terms(tp)});
    }
  }
  return out;
}

Atom random_start(Rng& rng, const Program& prog, const std::vector<FunctionSymbol>& sig) {
  if (coin(rng, 0.5)) {
    const Atom& head = prog.clause(pick(rng, prog.size())).head;
    return apply(random_substitution(rng, vars_of(head), sig, var_pool({"X", "Y", "Z"}), 2, 0.3),
                 head);
  }
  auto it = prog.signature().begin();
  std::advance(it, pick(rng, prog.signature().size()));
  return random_atom(rng, it->first, it->second, sig, var_pool({"X", "Y", "Z"}), 2);
}

Outcome lifting_suite() {
  Check c;
  Rng rng(20240601);
  std::size_t trials = 0, certificates = 0, steps = 0;
  for (const std::string name : {"intro", "append_rec", "merge", "reverse", "loop1", "loop2", "loop3"}) {
    const Program prog = corpus(name);
    const auto sig = generation_signature(prog);
    for (const NamedFilter& nf : approved_filters(name, prog)) {
      ++certificates;
      for (int t = 0; t < 200; ++t, ++trials) {
        Derivation xi = random_left_derivation(rng, prog, Query(random_start(rng, prog, sig)), 8);
        steps += xi.length();
        FreshVariables fresh = FreshVariables::above(vars_of(xi.initial));
        Query lifted_initial = random_delta_more_general(rng, xi.initial, nf.filter, sig, fresh);
        if (!query_delta_mg(lifted_initial, xi.initial, nf.filter)) {
          c.expect(false, name + " " + nf.name + ": generator produced a non Δ-more general query");
          continue;
        }
        DerivationLiftResult r = lift_derivation(prog, xi, lifted_initial, nf.filter);
        if (auto* failed = std::get_if<CannotLift>(&r)) {
          c.expect(false, name + " " + nf.name + ": " + failed->reason);
          continue;
        }
        c.expect(is_delta_lift(std::get<Derivation>(r), xi, nf.filter),
                 name + " " + nf.name + ": is_delta_lift rejected the lifted derivation");
      }
    }
  }
  c.note(std::to_string(certificates) + " certificates, " + std::to_string(trials) + " trials, " +
         std::to_string(steps) + " lifted steps");
  return c.outcome();
}

// AC8 ---------------------------------------------------------------------

std::vector<std::string> const kAllCorpus{"intro", "append_rec", "append", "merge", "reverse",
                                          "append3", "loop1", "loop2", "loop3", "loop4"};

std::vector<std::tuple<DnRule, std::string, std::size_t>> verdict(const std::vector<DnViolation>& vs) {
  std::vector<std::tuple<DnRule, std::string, std::size_t>> out;
  for (const DnViolation& v : vs) out.emplace_back(v.rule, v.predicate, v.position);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome eta_and_renaming_suite() {
  Check c;
  Rng rng(77);
  std::size_t eta_checks = 0, renamings = 0, special = 0;

  // Var(η) ⊆ Var(Q, Q') for every witness found.
  for (const std::string& name : kAllCorpus) {
    const Program prog = corpus(name);
    const auto sig = generation_signature(prog);
    std::vector<Filter> filters{Filter{}, filter_of_positions(infer_max_positions(prog)),
                                filter_of_positions_terms(infer_positions_terms(prog, 3))};
    for (const Filter& delta : filters) {
      for (int t = 0; t < 100; ++t) {
        Derivation xi = random_left_derivation(rng, prog, Query(random_start(rng, prog, sig)), 4);
        const Query& q = xi.last();
        FreshVariables fresh = FreshVariables::above(vars_of(q));
        Query general = random_delta_more_general(rng, q, delta, sig, fresh);
        for (const auto& [lhs, rhs] : {std::pair{general, q}, std::pair{q, general}}) {
          std::optional<Substitution> eta = query_delta_mg(lhs, rhs, delta);
          if (!eta) continue;
          ++eta_checks;
          VarSet allowed = vars_of(lhs);
          collect_vars(rhs, allowed);
          const VarSet used = eta->vars();
          c.expect(std::includes(allowed.begin(), allowed.end(), used.begin(), used.end()),
                   name + ": Var(eta) escapes Var(Q,Q') for " + to_string(*eta));
          c.expect(query_delta_mg_for(lhs, rhs, delta, *eta), name + ": eta is not a witness");
        }
      }
    }
  }

  // DN verdicts do not depend on variable names.
  for (const std::string& name : kAllCorpus) {
    const Program prog = corpus(name);
    std::vector<PositionTermMap> certs{infer_positions_terms(prog, 3)};
    for (const PositionSet& tau : all_position_sets(prog.signature())) {
      certs.push_back(embed_positions(tau, Var{"X", 0}));
    }
    PositionTermMap odd;
    for (const auto& [p, n] : prog.signature()) {
      for (std::size_t i = 1; i <= n; ++i) odd.set(p, i, T("g(X,f(Y))"));
    }
    certs.push_back(odd);
    for (const Clause& clause : prog.clauses()) {
      for (const PositionTermMap& cert : certs) {
        const auto expected = verdict(check_dn_positions_terms(cert, clause));
        for (int r = 0; r < 50; ++r, ++renamings) {
          Clause renamed = apply(random_renaming(rng, vars_of(clause)), clause);
          c.expect(verdict(check_dn_positions_terms(cert, renamed)) == expected,
                   name + ": verdict changed under renaming " + to_string(renamed));
        }
      }
    }
  }

  // τ and its embedding as τ⁺ agree, clause by clause and on Δ-more general.
  for (const std::string& name : kAllCorpus) {
    const Program prog = corpus(name);
    const auto sig = generation_signature(prog);
    for (const PositionSet& tau : all_position_sets(prog.signature())) {
      const PositionTermMap embedded = embed_positions(tau, Var{"X", 0});
      const Filter f_tau = filter_of_positions(tau);
      const Filter f_plus = filter_of_positions_terms(embedded);
      for (const Clause& clause : prog.clauses()) {
        ++special;
        c.expect(check_dn_positions(tau, clause).empty() ==
                     check_dn_positions_terms(embedded, clause).empty(),
                 name + ": special case disagrees on " + to_string(clause));
      }
      for (int t = 0; t < 5; ++t) {
        const Atom a = random_start(rng, prog, sig);
        const Atom b = coin(rng, 0.5) ? random_start(rng, prog, sig)
                                      : apply(random_substitution(rng, vars_of(a), sig,
                                                                  var_pool({"Z"}), 1),
                                              a);
        c.expect(atom_delta_mg(a, b, f_tau).has_value() == atom_delta_mg(a, b, f_plus).has_value(),
                 name + ": filters disagree on " + to_string(a) + " vs " + to_string(b));
      }
    }
  }
  c.note(std::to_string(eta_checks) + " eta checks, " + std::to_string(renamings) +
         " renamings, " + std::to_string(special) + " special-case clause checks");
  return c.outcome();
}

// AC9 ---------------------------------------------------------------------

struct ClosureStats {
  std::size_t members = 0;
  std::size_t expansions = 0;
  std::size_t escapes = 0;
};

ClosureStats model_closure(const Program& prog, const Filter& delta,
                           const std::vector<FunctionSymbol>& sig, std::string& first_escape) {
  SuccessSetBounds bounds;
  bounds.derivation_depth = 6;
  bounds.term_depth = 2;
  bounds.signature = sig;
  const std::set<Atom> members = bounded_success_set(prog, bounds);

  ClosureStats stats;
  stats.members = members.size();
  for (const Atom& a : members) {
    std::vector<std::vector<Term>> columns;
    for (std::size_t i = 1; i <= a.arity(); ++i) {
      columns.push_back(enumerate_terms(sig, bounds.term_depth, success_set_slot(i)));
    }
    std::vector<std::size_t> idx(a.arity(), 0);
    for (;;) {
      Atom b{a.predicate, {}};
      for (std::size_t i = 0; i < a.arity(); ++i) b.args.push_back(columns[i][idx[i]]);
      if (expansion_member(b, a, delta)) {
        ++stats.expansions;
        if (!has_successful_derivation(prog, Query(b), bounds.derivation_depth + 2)) {
          if (stats.escapes++ == 0) first_escape = to_string(b) + " from " + to_string(a);
        }
      }
      std::size_t pos = 0;
      while (pos < a.arity() && ++idx[pos] == columns[pos].size()) idx[pos++] = 0;
      if (pos == a.arity()) break;
    }
  }
  return stats;
}

Outcome model_closure_check() {
  Check c;
  {
    PositionSet tau;
    tau.insert("p", 1);
    std::string escape;
    ClosureStats s = model_closure(P("p(X, a)."), filter_of_positions(tau),
                                   {{"a", 0}, {"f", 1}}, escape);
    c.expect(s.escapes == 0, "p(x,a): escape " + escape);
    c.expect(s.members > 0 && s.expansions > 0, "p(x,a): nothing was checked");
    c.note("p(x,a): " + std::to_string(s.members) + " members, " + std::to_string(s.expansions) +
           " expansions");
  }
  {
    PositionTermMap tp;
    tp.set("merge", 2, T("[X|Y]"));
    std::string escape;
    ClosureStats s = model_closure(corpus("merge"), filter_of_positions_terms(tp),
                                   {{"[]", 0}, {".", 2}}, escape);
    c.expect(s.escapes == 0, "MERGE: escape " + escape);
    c.note("MERGE: " + std::to_string(s.members) + " members (no base clause), " +
           std::to_string(s.expansions) + " expansions");
  }
  return c.outcome();
}

// AC10 --------------------------------------------------------------------

Outcome oracle_equivalence() {
  Check c;
  Rng rng(4242);
  const std::vector<FunctionSymbol> sig{{"a", 0}, {"b", 0}, {"f", 1}, {"g", 2}};
  const auto pool = var_pool({"X", "Y", "Z"});
  std::size_t matched = 0;
  for (int t = 0; t < 1000; ++t) {
    const Atom a = random_atom(rng, "p", 3, sig, pool, 3);
    const Atom b = coin(rng, 0.5)
                       ? apply(random_substitution(rng, vars_of(a), sig, pool, 1), a)
                       : random_atom(rng, "p", 3, sig, pool, 3);
    std::optional<Substitution> via_filter = atom_delta_mg(a, b, Filter{});
    std::optional<Substitution> via_match = match(a, b);
    c.expect(via_filter.has_value() == via_match.has_value(),
             "empty filter disagrees with match on " + to_string(a) + " / " + to_string(b));
    if (via_filter && via_match) {
      ++matched;
      c.expect(*via_filter == *via_match, "different witnesses for " + to_string(a));
    }
  }

  // Ground terms of depth <= 2 over {a, f/1, g/2}.
  std::vector<Term> ground{Term::constant("a")};
  for (int d = 0; d < 2; ++d) {
    std::vector<Term> next{Term::constant("a")};
    for (const Term& x : ground) next.push_back(Term::compound("f", {x}));
    for (const Term& x : ground) {
      for (const Term& y : ground) next.push_back(Term::compound("g", {x, y}));
    }
    ground = std::move(next);
  }
  const std::vector<FunctionSymbol> small{{"a", 0}, {"f", 1}, {"g", 2}};
  const auto xy = var_pool({"X", "Y"});
  const Var X{"X", 0}, Y{"Y", 0};
  std::size_t unifiable = 0;
  for (int t = 0; t < 200; ++t) {
    const Atom a = random_atom(rng, "p", 2, small, xy, 1);
    const Atom b = random_atom(rng, "p", 2, small, xy, 1);
    std::optional<Substitution> sigma = mgu(a, b);
    bool oracle_unifies = false;
    bool most_general = true;
    for (const Term& gx : ground) {
      for (const Term& gy : ground) {
        Substitution theta{{X, gx}, {Y, gy}};
        if (!(apply(theta, a) == apply(theta, b))) continue;
        oracle_unifies = true;
        if (sigma) {
          for (const Var& v : {X, Y}) {
            const Term tv = Term::variable(v);
            most_general = most_general && apply(theta, apply(*sigma, tv)) == apply(theta, tv);
          }
        }
      }
    }
    c.expect(sigma.has_value() == oracle_unifies,
             "mgu existence disagrees with the oracle on " + to_string(a) + " = " + to_string(b));
    if (sigma) {
      ++unifiable;
      c.expect(apply(*sigma, a) == apply(*sigma, b), "mgu does not unify " + to_string(a));
      c.expect(most_general, "a ground unifier is not an instance of the mgu for " + to_string(a) +
                                 " = " + to_string(b));
    }
  }
  c.note(std::to_string(matched) + "/1000 pairs matched, " + std::to_string(unifiable) +
         "/200 pairs unifiable");
  return c.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 p(f(x),y) loops, t1 more general than f(x), t2 any term", example_1},
      {"AC2 p(f(x),g(y)) loops, t2 any instance of g(y)", example_2},
      {"AC3 q(a,g(x)) loops directly, p(f(x),y) through q(x',g(x'))", example_3},
      {"AC4 p(x,x) stays unknown, f-towers grow for 5 steps", example_4},
      {"AC5 empty filter finds nothing, <p -> {1}> finds the loop", intro_contrast},
      {"AC6 DN checker golden set", dn_golden_set},
      {"AC7 lifting property over the corpus", lifting_suite},
      {"AC8 eta variables, renaming invariance, special case", eta_and_renaming_suite},
      {"AC9 success sets are closed under expansion", model_closure_check},
      {"AC10 empty-filter match and mgu oracles", oracle_equivalence},
  };
  int failures = 0;
  for (const auto& [title, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = elapsed_ms(start);
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << title << " (" << static_cast<long>(ms)
              << " ms)" << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed")
            << "\n";
  return failures ? 1 : 0;
}
