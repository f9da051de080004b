#pragma once

// Shared helpers for the test binaries: corpus access, short parsers and
// random generators for terms, atoms, queries and derivations.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "dnlift/dn.hpp"
#include "dnlift/filters.hpp"
#include "dnlift/sld.hpp"
#include "dnlift/syntax.hpp"
#include "dnlift/terms.hpp"

namespace dnlift::testing {

using Rng = std::mt19937_64;

inline std::string data_path(const std::string& relative) {
  return std::string(DNLIFT_TEST_DATA_DIR) + "/" + relative;
}

inline std::string program_path(const std::string& name) {
  return data_path("programs/" + name + ".pl");
}

inline Program corpus(const std::string& name) { return load_program(program_path(name)).program; }

inline Term T(const std::string& s) { return parse_term(s); }
inline Atom A(const std::string& s) { return parse_atom(s); }
inline Query Q(const std::string& s) { return parse_query(s); }
inline Program P(const std::string& s) { return parse_program(s); }

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<Var> var_pool(const std::vector<std::string>& names) {
  std::vector<Var> out;
  for (const std::string& n : names) out.push_back(Var{n, 0});
  return out;
}

/// Uniform-ish random term of depth at most `depth`.
inline Term random_term(Rng& rng, const std::vector<FunctionSymbol>& sig,
                        const std::vector<Var>& vars, std::size_t depth) {
  std::vector<const FunctionSymbol*> constants, functions;
  for (const FunctionSymbol& f : sig) (f.arity == 0 ? constants : functions).push_back(&f);
  const bool leaf = depth == 0 || functions.empty() || coin(rng, 0.4);
  if (leaf) {
    if (constants.empty() || (!vars.empty() && coin(rng, 0.5))) {
      return Term::variable(vars[pick(rng, vars.size())]);
    }
    return Term::constant(constants[pick(rng, constants.size())]->name);
  }
  const FunctionSymbol& f = *functions[pick(rng, functions.size())];
  std::vector<Term> args;
  for (std::size_t i = 0; i < f.arity; ++i) args.push_back(random_term(rng, sig, vars, depth - 1));
  return Term::compound(f.name, std::move(args));
}

inline Atom random_atom(Rng& rng, const std::string& predicate, std::size_t arity,
                        const std::vector<FunctionSymbol>& sig, const std::vector<Var>& vars,
                        std::size_t depth) {
  Atom a{predicate, {}};
  for (std::size_t i = 0; i < arity; ++i) a.args.push_back(random_term(rng, sig, vars, depth));
  return a;
}

/// Binds every variable of `vars` to a random term with probability p.
inline Substitution random_substitution(Rng& rng, const VarSet& vars,
                                        const std::vector<FunctionSymbol>& sig,
                                        const std::vector<Var>& pool, std::size_t depth,
                                        double p = 0.7) {
  Substitution s;
  for (const Var& v : vars) {
    if (coin(rng, p)) s.bind(v, random_term(rng, sig, pool, depth));
  }
  return s;
}

/// Replaces random subterms by distinct fresh variables "G<k>"; the result is
/// more general than t, with the fresh variables mapped back by matching.
inline Term random_generalization(Rng& rng, const Term& t, FreshVariables& fresh, double p = 0.25) {
  if (coin(rng, p)) return Term::variable("G", fresh.take());
  if (t.is_var() || t.arity() == 0) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(random_generalization(rng, a, fresh, p));
  return Term::compound(t.functor(), std::move(args));
}

/// A random term satisfying `cond`, built over `pool` and fresh variables.
inline Term random_satisfying(Rng& rng, const TermCondition& cond,
                              const std::vector<FunctionSymbol>& sig,
                              const std::vector<Var>& pool, FreshVariables& fresh) {
  if (cond.kind() == TermCondition::Kind::kAlwaysTrue) return random_term(rng, sig, pool, 2);
  const Term& u = cond.pattern();
  Substitution rename;
  for (const Var& v : vars_of(u)) rename.bind(v, Term::variable("U", fresh.take()));
  Term renamed = apply(rename, u);
  Term out = apply(random_substitution(rng, vars_of(renamed), sig, pool, 2), renamed);
  if (cond.kind() == TermCondition::Kind::kUnifiesWith && coin(rng, 0.5)) {
    out = random_term(rng, sig, pool, 2);
    if (!cond(out)) out = renamed;
  }
  return out;
}

/// A query Δ-more general than q: off-domain arguments are generalized,
/// distinguished ones replaced by random terms satisfying their condition
/// (free to share variables with the rest of the query).
inline Query random_delta_more_general(Rng& rng, const Query& q, const Filter& delta,
                                       const std::vector<FunctionSymbol>& sig,
                                       FreshVariables& fresh) {
  std::vector<Var> pool;
  for (const Var& v : vars_of(q)) pool.push_back(v);
  pool.push_back(Var{"W", 0});
  std::vector<Atom> atoms;
  for (const Atom& a : q.atoms) {
    Atom b{a.predicate, {}};
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (const TermCondition* cond = delta.find(a.predicate, i + 1)) {
        b.args.push_back(random_satisfying(rng, *cond, sig, pool, fresh));
      } else {
        b.args.push_back(random_generalization(rng, a.args[i], fresh));
      }
    }
    atoms.push_back(std::move(b));
  }
  return Query(std::move(atoms));
}

/// Random left derivation: each step picks uniformly among applicable clauses.
inline Derivation random_left_derivation(Rng& rng, const Program& program, const Query& q,
                                         std::size_t max_length) {
  Derivation d;
  d.initial = q;
  FreshVariables fresh = FreshVariables::above(vars_of(q));
  while (d.length() < max_length && !d.last().empty()) {
    std::vector<std::pair<DerivationStep, FreshVariables>> options;
    for (std::size_t ci = 0; ci < program.size(); ++ci) {
      FreshVariables branch = fresh;
      if (auto s = step(program, d.last(), 0, ci, branch)) options.emplace_back(std::move(*s), branch);
    }
    if (options.empty()) {
      d.status = DerivationStatus::kFailure;
      return d;
    }
    auto& chosen = options[pick(rng, options.size())];
    d.steps.push_back(std::move(chosen.first));
    fresh = chosen.second;
  }
  d.status = d.last().empty() ? DerivationStatus::kSuccess : DerivationStatus::kRunning;
  return d;
}

/// Injective renaming of `vars` onto random names and indices.
inline Substitution random_renaming(Rng& rng, const VarSet& vars) {
  static const std::vector<std::string> kNames{"A", "B", "X", "Y", "Z", "Xs", "Ys", "Zs", "R", "T"};
  Substitution s;
  VarSet used;
  for (const Var& v : vars) {
    Var w;
    do {
      w = Var{kNames[pick(rng, kNames.size())], static_cast<std::uint32_t>(pick(rng, 40))};
    } while (used.count(w));
    used.insert(w);
    s.bind(v, Term::variable(w));
  }
  return s;
}

/// Signature used for random terms over a program: its own symbols plus a
/// constant and a unary symbol so that every position can be filled.
inline std::vector<FunctionSymbol> generation_signature(const Program& program) {
  std::vector<FunctionSymbol> sig = function_symbols(program);
  for (FunctionSymbol extra : {FunctionSymbol{"a", 0}, FunctionSymbol{"f", 1}}) {
    if (std::find(sig.begin(), sig.end(), extra) == sig.end()) sig.push_back(extra);
  }
  return sig;
}

/// Every subset of every argument position of the program's symbols.
inline std::vector<PositionSet> all_position_sets(const Signature& signature) {
  std::vector<std::pair<std::string, std::size_t>> slots;
  for (const auto& [p, n] : signature) {
    for (std::size_t i = 1; i <= n; ++i) slots.emplace_back(p, i);
  }
  std::vector<PositionSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    PositionSet tau = empty_positions(signature);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask & (std::size_t{1} << k)) tau.insert(slots[k].first, slots[k].second);
    }
    out.push_back(std::move(tau));
  }
  return out;
}

}  // namespace dnlift::testing
