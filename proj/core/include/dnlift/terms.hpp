#pragma once

// Symbolic layer for definite logic programs: terms, atoms, queries,
// clauses, substitutions, unification, matching and renaming.
//
// All values are immutable once built. Terms share structure through
// reference-counted nodes, so copying a Term is cheap.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dnlift {

/// Variable identifier. Variables produced by standardization apart keep the
/// original name and carry a positive freshness index; source variables have
/// index 0. Ordering is lexicographic on (name, index).
struct Var {
  std::string name;
  std::uint32_t index = 0;

  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var&, const Var&) = default;
};

using VarSet = std::set<Var>;

inline constexpr const char* kListFunctor = ".";
inline constexpr const char* kNil = "[]";

class Term {
 public:
  static Term variable(Var v);
  static Term variable(std::string name, std::uint32_t index = 0);
  static Term compound(std::string functor, std::vector<Term> args);
  static Term constant(std::string name);
  static Term nil();
  static Term cons(Term head, Term tail);

  bool is_var() const { return node_->is_var; }
  bool is_compound() const { return !node_->is_var; }
  bool is_constant() const { return !node_->is_var && node_->args.empty(); }

  /// Precondition: is_var().
  const Var& var() const { return node_->var; }
  /// Precondition: is_compound().
  const std::string& functor() const { return node_->functor; }
  const std::vector<Term>& args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }

  /// Variables and constants have depth 0.
  std::size_t depth() const { return node_->depth; }
  /// Number of symbol occurrences.
  std::size_t size() const { return node_->size; }

  bool shares_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var = false;
    Var var;
    std::string functor;
    std::vector<Term> args;
    std::size_t depth = 0;
    std::size_t size = 1;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
};

/// Finite sequence of atoms; the empty query terminates a successful
/// derivation.
struct Query {
  std::vector<Atom> atoms;

  Query() = default;
  Query(std::vector<Atom> a) : atoms(std::move(a)) {}  // NOLINT: implicit by intent
  Query(Atom a) : atoms{std::move(a)} {}              // NOLINT

  bool empty() const { return atoms.empty(); }
  std::size_t size() const { return atoms.size(); }
  const Atom& operator[](std::size_t i) const { return atoms[i]; }

  friend bool operator==(const Query&, const Query&) = default;
  friend std::strong_ordering operator<=>(const Query&, const Query&) = default;
};

/// Definite clause `head :- body`; a fact has an empty body.
struct Clause {
  Atom head;
  Query body;

  bool is_fact() const { return body.empty(); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Relation symbol to arity.
using Signature = std::map<std::string, std::size_t>;

/// Ordered list of definite clauses. Construction enforces that every
/// relation symbol has a single arity across heads and bodies.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_.at(i); }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  const Signature& signature() const { return signature_; }
  std::optional<std::size_t> arity(const std::string& predicate) const;

 private:
  std::vector<Clause> clauses_;
  Signature signature_;
};

/// Registers the relation symbol of `atom`, throwing ArityClash when it is
/// already known with another arity.
void extend_signature(Signature& signature, const Atom& atom);

class Substitution {
 public:
  using Map = std::map<Var, Term>;
  using const_iterator = Map::const_iterator;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Var, Term>> bindings);

  /// Adds v/t. Identity bindings v/v are dropped so that the stored keys are
  /// exactly Dom(θ). Rebinding an existing variable replaces its term.
  void bind(const Var& v, Term t);
  void erase(const Var& v) { bindings_.erase(v); }

  const Term* lookup(const Var& v) const;
  bool contains(const Var& v) const { return bindings_.count(v) != 0; }

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const_iterator begin() const { return bindings_.begin(); }
  const_iterator end() const { return bindings_.end(); }

  VarSet domain() const;
  /// Variables occurring in the bound terms.
  VarSet range() const;
  VarSet vars() const;

  /// θ|V
  Substitution restricted(const VarSet& vs) const;
  /// Composition θσ: applying the result equals applying θ then σ.
  Substitution then(const Substitution& next) const;
  /// True when θ is a 1-1 mapping of variables onto variables.
  bool is_renaming() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map bindings_;
};

// Variable sets ------------------------------------------------------------

void collect_vars(const Term& t, VarSet& out);
void collect_vars(const Atom& a, VarSet& out);
void collect_vars(const Query& q, VarSet& out);
void collect_vars(const Clause& c, VarSet& out);

template <typename T>
VarSet vars_of(const T& x) {
  VarSet out;
  collect_vars(x, out);
  return out;
}

bool occurs_in(const Var& v, const Term& t);
/// Number of occurrences of `v` in the atom's arguments.
std::size_t count_occurrences(const Var& v, const Atom& a);

// Instances ----------------------------------------------------------------

Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);
Query apply(const Substitution& s, const Query& q);
Clause apply(const Substitution& s, const Clause& c);

// Unification --------------------------------------------------------------

/// Extends an idempotent substitution so that it also unifies `a` and `b`.
/// Occur check is always performed. Returns false (leaving `sigma` in an
/// unspecified but valid state) when no unifier exists.
bool unify_into(Substitution& sigma, const Term& a, const Term& b);

std::optional<Substitution> unify(const Term& a, const Term& b);
/// Idempotent most general unifier with Var(result) ⊆ Var(a, b), or nullopt
/// when predicates, arities or arguments clash.
std::optional<Substitution> mgu(const Atom& a, const Atom& b);

// Matching -----------------------------------------------------------------

/// One-way syntactic matching. Accumulates bindings for variables of the
/// general side; target variables are treated as constants. Several match
/// calls on one Matcher share a single substitution.
class Matcher {
 public:
  bool match(const Term& general, const Term& target);
  bool match(const Atom& general, const Atom& target);
  bool match(const Query& general, const Query& target);

  /// The accumulated bindings without identities.
  Substitution result() const;

 private:
  std::map<Var, Term> bound_;
};

/// η with apply(η, general) == target and Dom(η) ⊆ Var(general).
std::optional<Substitution> match(const Term& general, const Term& target);
std::optional<Substitution> match(const Atom& general, const Atom& target);
std::optional<Substitution> match(const Query& general, const Query& target);

template <typename T>
bool more_general(const T& general, const T& target) {
  return match(general, target).has_value();
}

template <typename T>
bool is_variant(const T& a, const T& b) {
  return match(a, b).has_value() && match(b, a).has_value();
}

// Renaming -----------------------------------------------------------------

/// Monotone source of freshness indices, owned by one derivation.
class FreshVariables {
 public:
  explicit FreshVariables(std::uint32_t next = 1) : next_(next) {}

  /// A supply whose indices are all above those occurring in `vars`.
  static FreshVariables above(const VarSet& vars);

  std::uint32_t take() { return next_++; }
  std::uint32_t peek() const { return next_; }

 private:
  std::uint32_t next_;
};

struct RenamedClause {
  Clause clause;
  Substitution renaming;
};

/// Variant of `c` disjoint from `avoid`. Every variable of `c` receives the
/// same fresh index drawn from `fresh`; indices are skipped until the result
/// is disjoint from `avoid`.
RenamedClause rename_apart(const Clause& c, const VarSet& avoid, FreshVariables& fresh);

// Printing (ISO-Prolog flavoured, list sugar restored) ----------------------

std::string to_string(const Var& v);
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Query& q);
std::string to_string(const Clause& c);
std::string to_string(const Substitution& s);
std::string to_string(const Program& p);

std::ostream& operator<<(std::ostream& os, const Var& v);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Query& q);
std::ostream& operator<<(std::ostream& os, const Clause& c);
std::ostream& operator<<(std::ostream& os, const Substitution& s);

}  // namespace dnlift
