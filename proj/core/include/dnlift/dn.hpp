#pragma once

// Syntactic certificates of derivation neutrality.
//
// A PositionSet τ distinguishes argument positions whose head arguments are
// once-occurring variables flowing only to distinguished body positions.
// A PositionTermMap τ⁺ additionally attaches a pattern term u to every
// distinguished position (conditions DN1-DN4). Both induce filters; the
// associated filter of a checker-approved certificate is DN for the program.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dnlift/filters.hpp"
#include "dnlift/terms.hpp"

namespace dnlift {

struct PositionSet {
  std::map<std::string, std::set<std::size_t>> positions;

  const std::set<std::size_t>& of(const std::string& predicate) const;
  bool contains(const std::string& predicate, std::size_t position) const;
  void insert(const std::string& predicate, std::size_t position);
  bool empty_domain() const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;
};

struct PositionTermMap {
  std::map<std::string, std::map<std::size_t, Term>> terms;

  const std::map<std::size_t, Term>& of(const std::string& predicate) const;
  const Term* find(const std::string& predicate, std::size_t position) const;
  void set(const std::string& predicate, std::size_t position, Term u);
  bool empty_domain() const;

  friend bool operator==(const PositionTermMap&, const PositionTermMap&) = default;
};

/// τ₀ and τ⁺₀: every symbol of the signature mapped to the empty set.
PositionSet empty_positions(const Signature& signature);
PositionTermMap empty_positions_terms(const Signature& signature);

enum class DnRule {
  kNotAVariable,
  kMultipleHeadOccurrence,
  kEscapesToUndistinguishedBodyPosition,
  kDN1,
  kDN2,
  kDN3,
  kDN4,
};

std::string to_string(DnRule rule);

struct DnViolation {
  std::size_t clause_index = 0;
  std::string predicate;
  std::size_t position = 0;
  DnRule rule = DnRule::kNotAVariable;
  std::string detail;
};

std::string to_string(const DnViolation& v);

/// Empty result means τ is DN for the clause.
std::vector<DnViolation> check_dn_positions(const PositionSet& tau, const Clause& c,
                                            std::size_t clause_index = 0);
std::vector<DnViolation> check_dn_positions(const PositionSet& tau, const Program& program);

/// Empty result means τ⁺ is DN for the clause (DN1-DN4 all hold).
std::vector<DnViolation> check_dn_positions_terms(const PositionTermMap& tau_plus,
                                                  const Clause& c, std::size_t clause_index = 0);
std::vector<DnViolation> check_dn_positions_terms(const PositionTermMap& tau_plus,
                                                  const Program& program);

/// Δ[τ]: every distinguished position gets the always-true condition.
Filter filter_of_positions(const PositionSet& tau);
/// Δ[τ⁺]: position i of p gets "is an instance of τ⁺(p)(i)".
Filter filter_of_positions_terms(const PositionTermMap& tau_plus);

/// τ⁺(p) := τ(p) ↣ {x}
PositionTermMap embed_positions(const PositionSet& tau, const Var& x);

/// Inverse view of a filter as a τ⁺ (always-true becomes a variable pattern).
/// nullopt when the filter uses unifies-with conditions, which no syntactic
/// certificate covers.
std::optional<PositionTermMap> positions_terms_of_filter(const Filter& delta);

/// Greatest DN set of positions: start from every position of every symbol
/// and delete violating positions until stable. The conditions are
/// anti-monotone in τ, so the result is the unique maximum.
PositionSet infer_max_positions(const Program& program);

/// A DN set of positions with associated terms. For each position the
/// pattern is the most general common instance of the head arguments found
/// there (renamed apart); positions whose pattern would exceed
/// `max_pattern_depth`, or that break DN1/DN2/DN4 with that pattern, are
/// dropped, then DN3 is enforced by greatest-fixpoint deletion.
PositionTermMap infer_positions_terms(const Program& program, std::size_t max_pattern_depth);

}  // namespace dnlift
