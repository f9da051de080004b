#include "dnlift/terms.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dnlift/errors.hpp"

namespace dnlift {

// Errors live here to avoid a translation unit of their own.

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return message;
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(located(message, line, column)), reason_(message), line_(line), column_(column) {}

ArityClash::ArityClash(const std::string& predicate, std::size_t first, std::size_t second)
    : Error("relation symbol '" + predicate + "' used with arity " + std::to_string(first) +
            " and arity " + std::to_string(second)),
      predicate_(predicate) {}

ResourceLimit::ResourceLimit(std::size_t budget)
    : Error("derivation node budget of " + std::to_string(budget) + " exhausted"),
      budget_(budget) {}

// Term ---------------------------------------------------------------------

Term Term::variable(Var v) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->var = std::move(v);
  return Term(std::move(node));
}

Term Term::variable(std::string name, std::uint32_t index) {
  return variable(Var{std::move(name), index});
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->functor = std::move(functor);
  std::size_t depth = 0;
  std::size_t size = 1;
  for (const Term& a : args) {
    depth = std::max(depth, a.depth() + 1);
    size += a.size();
  }
  node->args = std::move(args);
  node->depth = depth;
  node->size = size;
  return Term(std::move(node));
}

Term Term::constant(std::string name) { return compound(std::move(name), {}); }

Term Term::nil() {
  static const Term kNilTerm = constant(kNil);
  return kNilTerm;
}

Term Term::cons(Term head, Term tail) {
  return compound(kListFunctor, {std::move(head), std::move(tail)});
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var() == b.var();
  if (a.size() != b.size() || a.functor() != b.functor() || a.arity() != b.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.args()[i] == b.args()[i])) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var()) {
    return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_var()) return a.var() <=> b.var();
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  if (auto c = a.functor() <=> b.functor(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Program ------------------------------------------------------------------

void extend_signature(Signature& signature, const Atom& atom) {
  auto [it, inserted] = signature.emplace(atom.predicate, atom.arity());
  if (!inserted && it->second != atom.arity()) {
    throw ArityClash(atom.predicate, it->second, atom.arity());
  }
}

Program::Program(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  for (const Clause& c : clauses_) {
    extend_signature(signature_, c.head);
    for (const Atom& b : c.body.atoms) extend_signature(signature_, b);
  }
}

std::optional<std::size_t> Program::arity(const std::string& predicate) const {
  auto it = signature_.find(predicate);
  if (it == signature_.end()) return std::nullopt;
  return it->second;
}

// Substitution -------------------------------------------------------------

Substitution::Substitution(std::initializer_list<std::pair<const Var, Term>> bindings) {
  for (const auto& [v, t] : bindings) bind(v, t);
}

void Substitution::bind(const Var& v, Term t) {
  if (t.is_var() && t.var() == v) {
    bindings_.erase(v);
    return;
  }
  bindings_.insert_or_assign(v, std::move(t));
}

const Term* Substitution::lookup(const Var& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

VarSet Substitution::domain() const {
  VarSet out;
  for (const auto& [v, t] : bindings_) out.insert(v);
  return out;
}

VarSet Substitution::range() const {
  VarSet out;
  for (const auto& [v, t] : bindings_) collect_vars(t, out);
  return out;
}

VarSet Substitution::vars() const {
  VarSet out = range();
  for (const auto& [v, t] : bindings_) out.insert(v);
  return out;
}

Substitution Substitution::restricted(const VarSet& vs) const {
  Substitution out;
  for (const auto& [v, t] : bindings_) {
    if (vs.count(v)) out.bindings_.emplace(v, t);
  }
  return out;
}

Substitution Substitution::then(const Substitution& next) const {
  Substitution out;
  for (const auto& [v, t] : bindings_) out.bind(v, apply(next, t));
  for (const auto& [v, t] : next.bindings_) {
    if (!bindings_.count(v)) out.bind(v, t);
  }
  return out;
}

bool Substitution::is_renaming() const {
  VarSet images;
  for (const auto& [v, t] : bindings_) {
    if (!t.is_var() || !images.insert(t.var()).second) return false;
  }
  // 1-1 onto its own domain: every image is either bound or moved into.
  return images == domain();
}

// Variable sets ------------------------------------------------------------

void collect_vars(const Term& t, VarSet& out) {
  if (t.is_var()) {
    out.insert(t.var());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

void collect_vars(const Atom& a, VarSet& out) {
  for (const Term& t : a.args) collect_vars(t, out);
}

void collect_vars(const Query& q, VarSet& out) {
  for (const Atom& a : q.atoms) collect_vars(a, out);
}

void collect_vars(const Clause& c, VarSet& out) {
  collect_vars(c.head, out);
  collect_vars(c.body, out);
}

bool occurs_in(const Var& v, const Term& t) {
  if (t.is_var()) return t.var() == v;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return occurs_in(v, a); });
}

namespace {

std::size_t count_in(const Var& v, const Term& t) {
  if (t.is_var()) return t.var() == v ? 1 : 0;
  std::size_t n = 0;
  for (const Term& a : t.args()) n += count_in(v, a);
  return n;
}

}  // namespace

std::size_t count_occurrences(const Var& v, const Atom& a) {
  std::size_t n = 0;
  for (const Term& t : a.args) n += count_in(v, t);
  return n;
}

// Instances ----------------------------------------------------------------

Term apply(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_var()) {
    const Term* bound = s.lookup(t.var());
    return bound ? *bound : t;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(s, a));
    changed = changed || !args.back().shares_node(a);
  }
  return changed ? Term::compound(t.functor(), std::move(args)) : t;
}

Atom apply(const Substitution& s, const Atom& a) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply(s, t));
  return out;
}

Query apply(const Substitution& s, const Query& q) {
  Query out;
  out.atoms.reserve(q.size());
  for (const Atom& a : q.atoms) out.atoms.push_back(apply(s, a));
  return out;
}

Clause apply(const Substitution& s, const Clause& c) {
  return Clause{apply(s, c.head), apply(s, c.body)};
}

// Unification --------------------------------------------------------------

namespace {

// Binds x/t in an idempotent substitution whose domain excludes x and the
// variables of t; keeps the result idempotent.
void extend_idempotent(Substitution& sigma, const Var& x, const Term& t) {
  Substitution single;
  single.bind(x, t);
  Substitution updated;
  for (const auto& [v, u] : sigma) updated.bind(v, apply(single, u));
  updated.bind(x, t);
  sigma = std::move(updated);
}

}  // namespace

bool unify_into(Substitution& sigma, const Term& a, const Term& b) {
  std::vector<std::pair<Term, Term>> pending{{a, b}};
  while (!pending.empty()) {
    auto [s, t] = std::move(pending.back());
    pending.pop_back();
    s = apply(sigma, s);
    t = apply(sigma, t);
    if (s == t) continue;
    if (!s.is_var() && t.is_var()) std::swap(s, t);
    if (s.is_var()) {
      if (occurs_in(s.var(), t)) return false;
      extend_idempotent(sigma, s.var(), t);
      continue;
    }
    if (s.functor() != t.functor() || s.arity() != t.arity()) return false;
    for (std::size_t i = s.arity(); i-- > 0;) pending.emplace_back(s.args()[i], t.args()[i]);
  }
  return true;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution sigma;
  if (!unify_into(sigma, a, b)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.arity() != b.arity()) return std::nullopt;
  Substitution sigma;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!unify_into(sigma, a.args[i], b.args[i])) return std::nullopt;
  }
  return sigma;
}

// Matching -----------------------------------------------------------------

bool Matcher::match(const Term& general, const Term& target) {
  if (general.is_var()) {
    auto [it, inserted] = bound_.emplace(general.var(), target);
    return inserted || it->second == target;
  }
  if (target.is_var() || general.functor() != target.functor() ||
      general.arity() != target.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < general.arity(); ++i) {
    if (!match(general.args()[i], target.args()[i])) return false;
  }
  return true;
}

bool Matcher::match(const Atom& general, const Atom& target) {
  if (general.predicate != target.predicate || general.arity() != target.arity()) return false;
  for (std::size_t i = 0; i < general.arity(); ++i) {
    if (!match(general.args[i], target.args[i])) return false;
  }
  return true;
}

bool Matcher::match(const Query& general, const Query& target) {
  if (general.size() != target.size()) return false;
  for (std::size_t i = 0; i < general.size(); ++i) {
    if (!match(general[i], target[i])) return false;
  }
  return true;
}

Substitution Matcher::result() const {
  Substitution out;
  for (const auto& [v, t] : bound_) out.bind(v, t);
  return out;
}

namespace {

template <typename T>
std::optional<Substitution> match_impl(const T& general, const T& target) {
  Matcher m;
  if (!m.match(general, target)) return std::nullopt;
  return m.result();
}

}  // namespace

std::optional<Substitution> match(const Term& general, const Term& target) {
  return match_impl(general, target);
}
std::optional<Substitution> match(const Atom& general, const Atom& target) {
  return match_impl(general, target);
}
std::optional<Substitution> match(const Query& general, const Query& target) {
  return match_impl(general, target);
}

// Renaming -----------------------------------------------------------------

FreshVariables FreshVariables::above(const VarSet& vars) {
  std::uint32_t top = 0;
  for (const Var& v : vars) top = std::max(top, v.index);
  return FreshVariables(top + 1);
}

RenamedClause rename_apart(const Clause& c, const VarSet& avoid, FreshVariables& fresh) {
  const VarSet own = vars_of(c);
  if (own.empty()) return {c, {}};

  // Two variables that differ only in their index would collapse onto one
  // name; fold the old index into the name in that case.
  std::set<std::string> names;
  bool name_clash = false;
  for (const Var& v : own) name_clash = name_clash || !names.insert(v.name).second;
  auto base_name = [&](const Var& v) {
    return name_clash ? v.name + "_" + std::to_string(v.index) : v.name;
  };

  for (;;) {
    const std::uint32_t index = fresh.take();
    Substitution renaming;
    bool disjoint = true;
    for (const Var& v : own) {
      Var renamed{base_name(v), index};
      if (avoid.count(renamed)) {
        disjoint = false;
        break;
      }
      renaming.bind(v, Term::variable(std::move(renamed)));
    }
    if (disjoint) return {apply(renaming, c), std::move(renaming)};
  }
}

}  // namespace dnlift
