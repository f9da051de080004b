#pragma once

// Left-loop detection under a derivation neutral filter.
//
// A left loops when A ⟹* B1,… and B1 ⟹+ B2,… with B2 Δ-more general than
// B1. Every atom Δ-more general than a looping atom loops as well, which is
// what query classes describe and what propagation in detect_all exploits.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dnlift/filters.hpp"
#include "dnlift/sld.hpp"
#include "dnlift/terms.hpp"

namespace dnlift {

struct SubsumingPair {
  Atom earlier;  // B1
  Atom later;    // B2
  Substitution eta;
};

/// Set when the atom loops because it reaches an atom Δ-more general than
/// an atom already known to loop.
struct Propagation {
  Atom entry;
  Atom member;
  Substitution eta;
};

struct LoopWitness {
  Atom looping_atom;
  Filter filter;
  /// Left derivation of (looping_atom) to a query whose leftmost atom is B1,
  /// or Δ-more general than B1 when propagated. Empty when B1 is the atom.
  Derivation prefix;
  /// Left derivation of the atomic query (B1) to a query with leftmost B2.
  Derivation segment;
  SubsumingPair pair;
  std::optional<Propagation> via;
};

struct LoopSearchOptions {
  std::size_t depth = 25;
  /// Resolution steps allowed per analysed atom.
  std::size_t node_budget = 100000;
};

/// Throws FilterNotDN unless `delta` passes the DN1-DN4 check on `program`
/// (always-true conditions are checked as variable patterns).
void certify_filter(const Program& program, const Filter& delta);

/// Iterative deepening over prefix plus segment length. nullopt means no
/// witness within the bound, not termination. Throws FilterNotDN and
/// ResourceLimit.
std::optional<LoopWitness> detect_loop(const Program& program, const Atom& a, const Filter& delta,
                                       const LoopSearchOptions& options = {});

struct LoopAnalysis {
  std::vector<LoopWitness> loops;
  std::vector<Atom> unknown;
};

/// Seeds are the clause heads of `program` followed by `extra_seeds`, with
/// variants removed. Seeds first get a direct witness, then propagation
/// through Δ-more general leftmost atoms, then the general search. Results
/// follow seed order.
LoopAnalysis detect_all(const Program& program, const Filter& delta,
                        const LoopSearchOptions& options = {},
                        const std::vector<Atom>& extra_seeds = {});

struct PositionClass {
  enum class Kind { kMoreGeneralThan, kAnyTerm, kInstanceOf, kUnifiesWith };
  Kind kind = Kind::kAnyTerm;
  /// Unused for kAnyTerm.
  std::optional<Term> term;
};

std::string to_string(const PositionClass& pc);

class QueryClass {
 public:
  QueryClass(Atom templ, Filter filter);

  const Atom& templ() const { return template_; }
  const Filter& filter() const { return filter_; }
  /// One entry per argument position, in order.
  const std::vector<PositionClass>& positions() const { return positions_; }

  bool contains(const Atom& b) const;
  /// "p(t1, t2): t1 more general than f(X), t2 any term"
  std::string describe() const;

 private:
  Atom template_;
  Filter filter_;
  std::vector<PositionClass> positions_;
};

QueryClass query_class(const LoopWitness& w);

struct VerifyResult {
  bool ok = false;
  std::string reason;
  std::size_t steps_run = 0;
};

/// Replays the witness as a concrete left derivation of (looping_atom):
/// the prefix once, then the segment's clauses over and over, checking after
/// each round that the leftmost atom is Δ-more general than B1. Stops once
/// at least `steps` steps ran.
VerifyResult verify_witness(const Program& program, const LoopWitness& w, std::size_t steps);

/// Same replay started from `member`, which must be Δ-more general than
/// w.looping_atom.
VerifyResult verify_class_member(const Program& program, const LoopWitness& w, const Atom& member,
                                 std::size_t steps);

}  // namespace dnlift
