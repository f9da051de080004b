#pragma once

// Term-conditions, filters and the Δ-more-general relation.
//
// A filter distinguishes some argument positions of each relation symbol and
// attaches a term-condition to each of them. An atom A is Δ-more general
// than B for η when, position by position, non-distinguished arguments of B
// are the η-instances of those of A and distinguished arguments of A satisfy
// their condition. B's distinguished arguments are left unconstrained.

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "dnlift/terms.hpp"

namespace dnlift {

class TermCondition {
 public:
  enum class Kind { kAlwaysTrue, kInstanceOf, kUnifiesWith };

  static TermCondition always_true() { return TermCondition(Kind::kAlwaysTrue, std::nullopt); }
  static TermCondition instance_of(Term pattern) {
    return TermCondition(Kind::kInstanceOf, std::move(pattern));
  }
  static TermCondition unifies_with(Term pattern) {
    return TermCondition(Kind::kUnifiesWith, std::move(pattern));
  }

  Kind kind() const { return kind_; }
  /// Precondition: kind() != kAlwaysTrue.
  const Term& pattern() const { return *pattern_; }

  /// Total: every term evaluates to true or false.
  bool operator()(const Term& t) const;

  friend bool operator==(const TermCondition&, const TermCondition&) = default;

 private:
  TermCondition(Kind kind, std::optional<Term> pattern)
      : kind_(kind), pattern_(std::move(pattern)) {}

  Kind kind_;
  std::optional<Term> pattern_;
};

bool eval_condition(const TermCondition& cond, const Term& t);

std::string to_string(TermCondition::Kind kind);
std::string to_string(const TermCondition& cond);

/// Per relation symbol, a partial map from 1-based argument positions to
/// term-conditions. Absent symbols distinguish no position.
class Filter {
 public:
  using Positions = std::map<std::size_t, TermCondition>;
  using Entries = std::map<std::string, Positions>;

  Filter() = default;

  /// Throws std::invalid_argument for position 0.
  void set(const std::string& predicate, std::size_t position, TermCondition cond);

  const Positions& positions(const std::string& predicate) const;
  const TermCondition* find(const std::string& predicate, std::size_t position) const;
  bool distinguishes(const std::string& predicate, std::size_t position) const {
    return find(predicate, position) != nullptr;
  }

  /// True when no position of any symbol is distinguished.
  bool empty_domain() const;
  const Entries& entries() const { return entries_; }

  /// Throws std::invalid_argument when a position exceeds the arity recorded
  /// in `signature` for its symbol.
  void check_bounds(const Signature& signature) const;

  friend bool operator==(const Filter&, const Filter&) = default;

 private:
  Entries entries_;
};

std::string to_string(const Filter& filter);

bool atom_delta_mg_for(const Atom& a, const Atom& b, const Filter& delta, const Substitution& eta);

/// Witness η for "a is Δ-more general than b", found by simultaneous
/// matching over the non-distinguished positions. Var(η) ⊆ Var(a, b).
std::optional<Substitution> atom_delta_mg(const Atom& a, const Atom& b, const Filter& delta);

/// One shared η for all atom pairs, folded left to right; no backtracking
/// is needed because matching is deterministic.
std::optional<Substitution> query_delta_mg(const Query& q1, const Query& q2, const Filter& delta);

bool query_delta_mg_for(const Query& q1, const Query& q2, const Filter& delta,
                        const Substitution& eta);

/// b ∈ [a]^Δ, i.e. b is Δ-more general than a for the empty substitution.
bool expansion_member(const Atom& b, const Atom& a, const Filter& delta);

}  // namespace dnlift
