#pragma once

// SLD-resolution: single steps, left derivations with standardization apart,
// Δ-lift checking and one-step lifting, and bounded success sets.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dnlift/filters.hpp"
#include "dnlift/terms.hpp"

namespace dnlift {

struct DerivationStep {
  Query from;
  std::size_t clause_index = 0;
  /// 0-based position of the selected atom in `from`.
  std::size_t selected_pos = 0;
  /// The renamed variant of the program clause actually used.
  Clause input_clause;
  Substitution mgu;
  Query to;
};

enum class DerivationStatus { kRunning, kSuccess, kFailure };

std::string to_string(DerivationStatus status);

struct Derivation {
  Query initial;
  std::vector<DerivationStep> steps;
  DerivationStatus status = DerivationStatus::kRunning;

  std::size_t length() const { return steps.size(); }
  /// Q_k for k in [0, length()].
  const Query& query(std::size_t k) const { return k == 0 ? initial : steps[k - 1].to; }
  const Query& last() const { return query(length()); }
  std::vector<std::size_t> clause_indices() const;
};

struct EngineLimits {
  std::size_t max_depth = 50;
  std::size_t node_budget = 100000;
};

/// Resolves the atom at `selected_pos` of `q` with a variant of clause
/// `clause_index` renamed apart from `q`. nullopt when the head does not
/// unify. Preconditions: q non-empty, indices in range (std::out_of_range
/// otherwise).
std::optional<DerivationStep> step(const Program& program, const Query& q,
                                   std::size_t selected_pos, std::size_t clause_index,
                                   FreshVariables& fresh);

/// Visitor for derivation enumeration; return false to stop.
using DerivationVisitor = std::function<bool(const Derivation&)>;

/// Depth-first enumeration of all left derivations of `q`, clause order as
/// written, each truncated at limits.max_depth. Every yielded derivation owns
/// its own fresh-variable supply. Throws ResourceLimit once more than
/// limits.node_budget steps have been built.
void for_each_left_derivation(const Program& program, const Query& q, const EngineLimits& limits,
                              const DerivationVisitor& visit);

std::vector<Derivation> left_derivations(const Program& program, const Query& q,
                                         std::size_t max_depth,
                                         std::size_t node_budget = EngineLimits{}.node_budget);

/// True when the first successful left derivation of `q` has at most
/// `max_depth` steps.
bool has_successful_derivation(const Program& program, const Query& q, std::size_t max_depth,
                               std::size_t node_budget = EngineLimits{}.node_budget);

/// Same clauses and selected positions for each of base's steps, and every
/// query of candidate Δ-more general than the corresponding query of base.
/// Only the prefix of base's length is compared.
bool is_delta_lift(const Derivation& candidate, const Derivation& base, const Filter& delta);

struct CannotLift {
  std::string reason;
};

using LiftResult = std::variant<DerivationStep, CannotLift>;

/// Performs from `lifted_from` the step `base` performs (same clause, same
/// selected position) and checks that the result is Δ-more general than
/// base.to. A CannotLift outcome means Δ is not derivation neutral for the
/// clause used (or `lifted_from` is not Δ-more general than base.from).
LiftResult lift_step(const Program& program, const DerivationStep& base, const Query& lifted_from,
                     const Filter& delta, FreshVariables& fresh);

using DerivationLiftResult = std::variant<Derivation, CannotLift>;

/// Chains lift_step along all steps of `base`, starting from `lifted_initial`.
DerivationLiftResult lift_derivation(const Program& program, const Derivation& base,
                                     const Query& lifted_initial, const Filter& delta);

struct FunctionSymbol {
  std::string name;
  std::size_t arity = 0;

  friend auto operator<=>(const FunctionSymbol&, const FunctionSymbol&) = default;
};

struct SuccessSetBounds {
  std::size_t derivation_depth = 4;
  std::size_t term_depth = 1;
  std::vector<FunctionSymbol> signature;
  std::size_t node_budget = 1000000;
};

/// Every term of depth ≤ max_depth over `signature`, plus the variable `slot`
/// (which may occur several times). Ordered by construction.
std::vector<Term> enumerate_terms(const std::vector<FunctionSymbol>& signature,
                                  std::size_t max_depth, const Var& slot);

/// Argument position i (1-based) of enumerated atoms uses variable V<i>.
Var success_set_slot(std::size_t position);

/// Atoms p(t1..tn), p ∈ Π_P, each ti from enumerate_terms with the slot
/// variable of position i, that have a successful derivation within the
/// derivation depth.
std::set<Atom> bounded_success_set(const Program& program, const SuccessSetBounds& bounds);

/// Function symbols occurring in the clauses of `program`.
std::vector<FunctionSymbol> function_symbols(const Program& program);

}  // namespace dnlift
