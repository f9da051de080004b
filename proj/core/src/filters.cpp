#include "dnlift/filters.hpp"

#include <sstream>
#include <stdexcept>

namespace dnlift {

bool TermCondition::operator()(const Term& t) const {
  switch (kind_) {
    case Kind::kAlwaysTrue:
      return true;
    case Kind::kInstanceOf:
      return more_general(*pattern_, t);
    case Kind::kUnifiesWith: {
      FreshVariables fresh = FreshVariables::above(vars_of(t));
      Clause wrapped{Atom{"$pattern", {*pattern_}}, {}};
      RenamedClause renamed = rename_apart(wrapped, vars_of(t), fresh);
      return unify(renamed.clause.head.args[0], t).has_value();
    }
  }
  return false;
}

bool eval_condition(const TermCondition& cond, const Term& t) { return cond(t); }

std::string to_string(TermCondition::Kind kind) {
  switch (kind) {
    case TermCondition::Kind::kAlwaysTrue:
      return "true";
    case TermCondition::Kind::kInstanceOf:
      return "instance";
    case TermCondition::Kind::kUnifiesWith:
      return "unifies";
  }
  return "?";
}

std::string to_string(const TermCondition& cond) {
  switch (cond.kind()) {
    case TermCondition::Kind::kAlwaysTrue:
      return "true";
    case TermCondition::Kind::kInstanceOf:
      return "instance of " + to_string(cond.pattern());
    case TermCondition::Kind::kUnifiesWith:
      return "unifies with " + to_string(cond.pattern());
  }
  return "?";
}

void Filter::set(const std::string& predicate, std::size_t position, TermCondition cond) {
  if (position == 0) throw std::invalid_argument("filter positions are 1-based");
  entries_[predicate].insert_or_assign(position, std::move(cond));
}

const Filter::Positions& Filter::positions(const std::string& predicate) const {
  static const Positions kNone;
  auto it = entries_.find(predicate);
  return it == entries_.end() ? kNone : it->second;
}

const TermCondition* Filter::find(const std::string& predicate, std::size_t position) const {
  const Positions& ps = positions(predicate);
  auto it = ps.find(position);
  return it == ps.end() ? nullptr : &it->second;
}

bool Filter::empty_domain() const {
  for (const auto& [p, ps] : entries_) {
    if (!ps.empty()) return false;
  }
  return true;
}

void Filter::check_bounds(const Signature& signature) const {
  for (const auto& [p, ps] : entries_) {
    auto it = signature.find(p);
    if (it == signature.end()) continue;
    for (const auto& [i, cond] : ps) {
      if (i > it->second) {
        throw std::invalid_argument("position " + std::to_string(i) + " exceeds arity of " + p +
                                    "/" + std::to_string(it->second));
      }
    }
  }
}

std::string to_string(const Filter& filter) {
  std::ostringstream os;
  os << '<';
  bool first_pred = true;
  for (const auto& [p, ps] : filter.entries()) {
    if (ps.empty()) continue;
    if (!first_pred) os << ", ";
    first_pred = false;
    os << p << " -> <";
    bool first = true;
    for (const auto& [i, cond] : ps) {
      if (!first) os << ", ";
      first = false;
      os << i << " -> " << to_string(cond);
    }
    os << '>';
  }
  os << '>';
  return os.str();
}

namespace {

bool conditions_hold(const Atom& a, const Filter& delta) {
  for (const auto& [i, cond] : delta.positions(a.predicate)) {
    if (i <= a.arity() && !cond(a.args[i - 1])) return false;
  }
  return true;
}

bool match_off_domain(Matcher& m, const Atom& a, const Atom& b, const Filter& delta) {
  if (a.predicate != b.predicate || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (delta.distinguishes(a.predicate, i + 1)) continue;
    if (!m.match(a.args[i], b.args[i])) return false;
  }
  return conditions_hold(a, delta);
}

}  // namespace

bool atom_delta_mg_for(const Atom& a, const Atom& b, const Filter& delta,
                       const Substitution& eta) {
  if (a.predicate != b.predicate || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (const TermCondition* cond = delta.find(a.predicate, i + 1)) {
      if (!(*cond)(a.args[i])) return false;
    } else if (!(b.args[i] == apply(eta, a.args[i]))) {
      return false;
    }
  }
  return true;
}

std::optional<Substitution> atom_delta_mg(const Atom& a, const Atom& b, const Filter& delta) {
  Matcher m;
  if (!match_off_domain(m, a, b, delta)) return std::nullopt;
  return m.result();
}

std::optional<Substitution> query_delta_mg(const Query& q1, const Query& q2,
                                           const Filter& delta) {
  if (q1.size() != q2.size()) return std::nullopt;
  Matcher m;
  for (std::size_t k = 0; k < q1.size(); ++k) {
    if (!match_off_domain(m, q1[k], q2[k], delta)) return std::nullopt;
  }
  return m.result();
}

bool query_delta_mg_for(const Query& q1, const Query& q2, const Filter& delta,
                        const Substitution& eta) {
  if (q1.size() != q2.size()) return false;
  for (std::size_t k = 0; k < q1.size(); ++k) {
    if (!atom_delta_mg_for(q1[k], q2[k], delta, eta)) return false;
  }
  return true;
}

bool expansion_member(const Atom& b, const Atom& a, const Filter& delta) {
  return atom_delta_mg_for(b, a, delta, Substitution{});
}

}  // namespace dnlift
