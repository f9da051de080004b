#include "dnlift/dn.hpp"

#include <algorithm>
#include <sstream>

namespace dnlift {

// Certificates -------------------------------------------------------------

const std::set<std::size_t>& PositionSet::of(const std::string& predicate) const {
  static const std::set<std::size_t> kNone;
  auto it = positions.find(predicate);
  return it == positions.end() ? kNone : it->second;
}

bool PositionSet::contains(const std::string& predicate, std::size_t position) const {
  return of(predicate).count(position) != 0;
}

void PositionSet::insert(const std::string& predicate, std::size_t position) {
  positions[predicate].insert(position);
}

bool PositionSet::empty_domain() const {
  return std::all_of(positions.begin(), positions.end(),
                     [](const auto& entry) { return entry.second.empty(); });
}

const std::map<std::size_t, Term>& PositionTermMap::of(const std::string& predicate) const {
  static const std::map<std::size_t, Term> kNone;
  auto it = terms.find(predicate);
  return it == terms.end() ? kNone : it->second;
}

const Term* PositionTermMap::find(const std::string& predicate, std::size_t position) const {
  const auto& ps = of(predicate);
  auto it = ps.find(position);
  return it == ps.end() ? nullptr : &it->second;
}

void PositionTermMap::set(const std::string& predicate, std::size_t position, Term u) {
  terms[predicate].insert_or_assign(position, std::move(u));
}

bool PositionTermMap::empty_domain() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& entry) { return entry.second.empty(); });
}

PositionSet empty_positions(const Signature& signature) {
  PositionSet tau;
  for (const auto& [p, n] : signature) tau.positions[p];
  return tau;
}

PositionTermMap empty_positions_terms(const Signature& signature) {
  PositionTermMap tau_plus;
  for (const auto& [p, n] : signature) tau_plus.terms[p];
  return tau_plus;
}

std::string to_string(DnRule rule) {
  switch (rule) {
    case DnRule::kNotAVariable:
      return "NotAVariable";
    case DnRule::kMultipleHeadOccurrence:
      return "MultipleHeadOccurrence";
    case DnRule::kEscapesToUndistinguishedBodyPosition:
      return "EscapesToUndistinguishedBodyPosition";
    case DnRule::kDN1:
      return "DN1";
    case DnRule::kDN2:
      return "DN2";
    case DnRule::kDN3:
      return "DN3";
    case DnRule::kDN4:
      return "DN4";
  }
  return "?";
}

std::string to_string(const DnViolation& v) {
  std::ostringstream os;
  os << "clause " << v.clause_index << ", " << v.predicate << " position " << v.position << ": "
     << to_string(v.rule) << " (" << v.detail << ")";
  return os.str();
}

// Checkers -----------------------------------------------------------------

namespace {

bool intersects(const VarSet& a, const VarSet& b) {
  return std::any_of(a.begin(), a.end(), [&](const Var& v) { return b.count(v) != 0; });
}

std::string body_site(const Atom& atom, std::size_t body_index, std::size_t position) {
  return "position " + std::to_string(position) + " of " + to_string(atom) + " (body atom " +
         std::to_string(body_index + 1) + ")";
}

}  // namespace

std::vector<DnViolation> check_dn_positions(const PositionSet& tau, const Clause& c,
                                            std::size_t clause_index) {
  std::vector<DnViolation> out;
  const Atom& head = c.head;
  auto report = [&](std::size_t i, DnRule rule, std::string detail) {
    out.push_back(DnViolation{clause_index, head.predicate, i, rule, std::move(detail)});
  };

  for (std::size_t i : tau.of(head.predicate)) {
    if (i == 0 || i > head.arity()) continue;
    const Term& s = head.args[i - 1];
    if (!s.is_var()) {
      report(i, DnRule::kNotAVariable, "head argument " + to_string(s) + " is not a variable");
      continue;
    }
    if (std::size_t n = count_occurrences(s.var(), head); n > 1) {
      report(i, DnRule::kMultipleHeadOccurrence,
             to_string(s) + " occurs " + std::to_string(n) + " times in " + to_string(head));
    }
    for (std::size_t k = 0; k < c.body.size(); ++k) {
      const Atom& b = c.body[k];
      for (std::size_t j = 1; j <= b.arity(); ++j) {
        if (occurs_in(s.var(), b.args[j - 1]) && !tau.contains(b.predicate, j)) {
          report(i, DnRule::kEscapesToUndistinguishedBodyPosition,
                 to_string(s) + " reaches undistinguished " + body_site(b, k, j));
        }
      }
    }
  }
  return out;
}

std::vector<DnViolation> check_dn_positions(const PositionSet& tau, const Program& program) {
  std::vector<DnViolation> out;
  for (std::size_t ci = 0; ci < program.size(); ++ci) {
    auto v = check_dn_positions(tau, program.clause(ci), ci);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<DnViolation> check_dn_positions_terms(const PositionTermMap& tau_plus,
                                                  const Clause& c, std::size_t clause_index) {
  std::vector<DnViolation> out;
  const Atom& head = c.head;

  for (const auto& [i, u] : tau_plus.of(head.predicate)) {
    if (i == 0 || i > head.arity()) continue;
    const Term& s = head.args[i - 1];
    const VarSet s_vars = vars_of(s);
    auto report = [&](DnRule rule, std::string detail) {
      out.push_back(DnViolation{clause_index, head.predicate, i, rule, std::move(detail)});
    };

    for (std::size_t j = 1; j <= head.arity(); ++j) {
      if (j != i && intersects(s_vars, vars_of(head.args[j - 1]))) {
        report(DnRule::kDN1, to_string(s) + " shares variables with head argument " +
                                 std::to_string(j) + " " + to_string(head.args[j - 1]));
      }
    }
    if (!more_general(s, u)) {
      report(DnRule::kDN2, to_string(s) + " is not more general than " + to_string(u));
    }
    for (std::size_t k = 0; k < c.body.size(); ++k) {
      const Atom& b = c.body[k];
      for (std::size_t j = 1; j <= b.arity(); ++j) {
        if (!tau_plus.find(b.predicate, j) && intersects(s_vars, vars_of(b.args[j - 1]))) {
          report(DnRule::kDN3, "variables of " + to_string(s) + " reach undistinguished " +
                                   body_site(b, k, j));
        }
      }
    }
  }

  for (std::size_t k = 0; k < c.body.size(); ++k) {
    const Atom& b = c.body[k];
    for (const auto& [j, u] : tau_plus.of(b.predicate)) {
      if (j == 0 || j > b.arity()) continue;
      if (!more_general(u, b.args[j - 1])) {
        out.push_back(DnViolation{clause_index, b.predicate, j, DnRule::kDN4,
                                  to_string(b.args[j - 1]) + " at " + body_site(b, k, j) +
                                      " is not an instance of " + to_string(u)});
      }
    }
  }
  return out;
}

std::vector<DnViolation> check_dn_positions_terms(const PositionTermMap& tau_plus,
                                                  const Program& program) {
  std::vector<DnViolation> out;
  for (std::size_t ci = 0; ci < program.size(); ++ci) {
    auto v = check_dn_positions_terms(tau_plus, program.clause(ci), ci);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// Associated filters -------------------------------------------------------

Filter filter_of_positions(const PositionSet& tau) {
  Filter delta;
  for (const auto& [p, ps] : tau.positions) {
    for (std::size_t i : ps) delta.set(p, i, TermCondition::always_true());
  }
  return delta;
}

Filter filter_of_positions_terms(const PositionTermMap& tau_plus) {
  Filter delta;
  for (const auto& [p, ps] : tau_plus.terms) {
    for (const auto& [i, u] : ps) delta.set(p, i, TermCondition::instance_of(u));
  }
  return delta;
}

PositionTermMap embed_positions(const PositionSet& tau, const Var& x) {
  PositionTermMap out;
  for (const auto& [p, ps] : tau.positions) {
    auto& entry = out.terms[p];
    for (std::size_t i : ps) entry.insert_or_assign(i, Term::variable(x));
  }
  return out;
}

std::optional<PositionTermMap> positions_terms_of_filter(const Filter& delta) {
  PositionTermMap out;
  for (const auto& [p, ps] : delta.entries()) {
    auto& entry = out.terms[p];
    for (const auto& [i, cond] : ps) {
      switch (cond.kind()) {
        case TermCondition::Kind::kAlwaysTrue:
          entry.insert_or_assign(i, Term::variable("X"));
          break;
        case TermCondition::Kind::kInstanceOf:
          entry.insert_or_assign(i, cond.pattern());
          break;
        case TermCondition::Kind::kUnifiesWith:
          return std::nullopt;
      }
    }
  }
  return out;
}

// Inference ----------------------------------------------------------------

PositionSet infer_max_positions(const Program& program) {
  PositionSet tau;
  for (const auto& [p, n] : program.signature()) {
    auto& ps = tau.positions[p];
    for (std::size_t i = 1; i <= n; ++i) ps.insert(i);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t ci = 0; ci < program.size(); ++ci) {
      for (const DnViolation& v : check_dn_positions(tau, program.clause(ci), ci)) {
        changed = tau.positions[v.predicate].erase(v.position) > 0 || changed;
      }
    }
  }
  return tau;
}

namespace {

// Most general common instance of the arguments at `position` of every head
// of `predicate`; the first head keeps its own variable names.
std::optional<Term> common_head_instance(const Program& program, const std::string& predicate,
                                         std::size_t position) {
  std::optional<Term> acc;
  VarSet used;
  FreshVariables fresh;
  for (const Clause& c : program.clauses()) {
    if (c.head.predicate != predicate) continue;
    const Term& s = c.head.args[position - 1];
    if (!acc) {
      acc = s;
      collect_vars(s, used);
      continue;
    }
    Clause wrapper{Atom{"$arg", {s}}, {}};
    Term renamed = rename_apart(wrapper, used, fresh).clause.head.args[0];
    collect_vars(renamed, used);
    std::optional<Substitution> sigma = unify(*acc, renamed);
    if (!sigma) return std::nullopt;
    acc = apply(*sigma, *acc);
  }
  if (!acc) return Term::variable("X");
  return acc;
}

bool head_argument_isolated(const Atom& head, std::size_t position) {
  const VarSet own = vars_of(head.args[position - 1]);
  for (std::size_t j = 1; j <= head.arity(); ++j) {
    if (j != position && intersects(own, vars_of(head.args[j - 1]))) return false;
  }
  return true;
}

}  // namespace

PositionTermMap infer_positions_terms(const Program& program, std::size_t max_pattern_depth) {
  PositionTermMap tau_plus = empty_positions_terms(program.signature());

  for (const auto& [p, n] : program.signature()) {
    for (std::size_t i = 1; i <= n; ++i) {
      std::optional<Term> u = common_head_instance(program, p, i);
      if (!u || u->depth() > max_pattern_depth) continue;
      bool admissible = true;
      for (const Clause& c : program.clauses()) {
        if (c.head.predicate == p && !head_argument_isolated(c.head, i)) admissible = false;
        for (const Atom& b : c.body.atoms) {
          if (b.predicate == p && !more_general(*u, b.args[i - 1])) admissible = false;
        }
      }
      if (admissible) tau_plus.set(p, i, *u);
    }
  }

  // DN3 only depends on which positions are distinguished.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t ci = 0; ci < program.size(); ++ci) {
      for (const DnViolation& v : check_dn_positions_terms(tau_plus, program.clause(ci), ci)) {
        if (v.rule == DnRule::kDN3) changed = tau_plus.terms[v.predicate].erase(v.position) > 0 || changed;
      }
    }
  }
  return tau_plus;
}

}  // namespace dnlift
