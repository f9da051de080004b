#include "dnlift/sld.hpp"

#include <stdexcept>
#include <utility>

#include "dnlift/errors.hpp"

namespace dnlift {

std::string to_string(DerivationStatus status) {
  switch (status) {
    case DerivationStatus::kRunning:
      return "running";
    case DerivationStatus::kSuccess:
      return "success";
    case DerivationStatus::kFailure:
      return "failure";
  }
  return "?";
}

std::vector<std::size_t> Derivation::clause_indices() const {
  std::vector<std::size_t> out;
  out.reserve(steps.size());
  for (const DerivationStep& s : steps) out.push_back(s.clause_index);
  return out;
}

std::optional<DerivationStep> step(const Program& program, const Query& q,
                                   std::size_t selected_pos, std::size_t clause_index,
                                   FreshVariables& fresh) {
  if (selected_pos >= q.size()) throw std::out_of_range("selected atom position out of range");
  const Clause& clause = program.clause(clause_index);
  const Atom& selected = q[selected_pos];
  if (clause.head.predicate != selected.predicate || clause.head.arity() != selected.arity()) {
    return std::nullopt;
  }

  RenamedClause renamed = rename_apart(clause, vars_of(q), fresh);
  std::optional<Substitution> theta = mgu(selected, renamed.clause.head);
  if (!theta) return std::nullopt;

  std::vector<Atom> resolvent;
  resolvent.reserve(q.size() - 1 + renamed.clause.body.size());
  for (std::size_t k = 0; k < selected_pos; ++k) resolvent.push_back(q[k]);
  for (const Atom& b : renamed.clause.body.atoms) resolvent.push_back(b);
  for (std::size_t k = selected_pos + 1; k < q.size(); ++k) resolvent.push_back(q[k]);

  DerivationStep s;
  s.from = q;
  s.clause_index = clause_index;
  s.selected_pos = selected_pos;
  s.input_clause = std::move(renamed.clause);
  s.to = apply(*theta, Query(std::move(resolvent)));
  s.mgu = std::move(*theta);
  return s;
}

namespace {

class LeftEnumerator {
 public:
  LeftEnumerator(const Program& program, const EngineLimits& limits,
                 const DerivationVisitor& visit)
      : program_(program), limits_(limits), visit_(visit) {}

  void run(Derivation& d, FreshVariables fresh) {
    if (stopped_) return;
    const Query current = d.last();
    if (current.empty()) {
      emit(d, DerivationStatus::kSuccess);
      return;
    }
    if (d.length() >= limits_.max_depth) {
      emit(d, DerivationStatus::kRunning);
      return;
    }
    bool extended = false;
    for (std::size_t ci = 0; ci < program_.size() && !stopped_; ++ci) {
      FreshVariables branch = fresh;
      std::optional<DerivationStep> s = step(program_, current, 0, ci, branch);
      if (!s) continue;
      if (++nodes_ > limits_.node_budget) throw ResourceLimit(limits_.node_budget);
      extended = true;
      d.steps.push_back(std::move(*s));
      run(d, branch);
      d.steps.pop_back();
    }
    if (!extended) emit(d, DerivationStatus::kFailure);
  }

 private:
  void emit(Derivation& d, DerivationStatus status) {
    d.status = status;
    if (!visit_(d)) stopped_ = true;
  }

  const Program& program_;
  const EngineLimits& limits_;
  const DerivationVisitor& visit_;
  std::size_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

void for_each_left_derivation(const Program& program, const Query& q, const EngineLimits& limits,
                              const DerivationVisitor& visit) {
  Derivation d;
  d.initial = q;
  LeftEnumerator(program, limits, visit).run(d, FreshVariables::above(vars_of(q)));
}

std::vector<Derivation> left_derivations(const Program& program, const Query& q,
                                         std::size_t max_depth, std::size_t node_budget) {
  std::vector<Derivation> out;
  for_each_left_derivation(program, q, EngineLimits{max_depth, node_budget},
                           [&](const Derivation& d) {
                             out.push_back(d);
                             return true;
                           });
  return out;
}

bool has_successful_derivation(const Program& program, const Query& q, std::size_t max_depth,
                               std::size_t node_budget) {
  bool found = false;
  for_each_left_derivation(program, q, EngineLimits{max_depth, node_budget},
                           [&](const Derivation& d) {
                             found = d.status == DerivationStatus::kSuccess;
                             return !found;
                           });
  return found;
}

bool is_delta_lift(const Derivation& candidate, const Derivation& base, const Filter& delta) {
  if (base.length() > candidate.length()) return false;
  for (std::size_t k = 0; k < base.length(); ++k) {
    if (candidate.steps[k].clause_index != base.steps[k].clause_index ||
        candidate.steps[k].selected_pos != base.steps[k].selected_pos) {
      return false;
    }
  }
  for (std::size_t k = 0; k <= base.length(); ++k) {
    if (!query_delta_mg(candidate.query(k), base.query(k), delta)) return false;
  }
  return true;
}

LiftResult lift_step(const Program& program, const DerivationStep& base, const Query& lifted_from,
                     const Filter& delta, FreshVariables& fresh) {
  if (!query_delta_mg(lifted_from, base.from, delta)) {
    return CannotLift{"query " + to_string(lifted_from) + " is not Δ-more general than " +
                      to_string(base.from)};
  }
  std::optional<DerivationStep> s =
      step(program, lifted_from, base.selected_pos, base.clause_index, fresh);
  if (!s) {
    return CannotLift{"atom " + to_string(lifted_from[base.selected_pos]) +
                      " does not unify with the head of clause " +
                      std::to_string(base.clause_index)};
  }
  if (!query_delta_mg(s->to, base.to, delta)) {
    return CannotLift{"resolvent " + to_string(s->to) + " is not Δ-more general than " +
                      to_string(base.to)};
  }
  return std::move(*s);
}

DerivationLiftResult lift_derivation(const Program& program, const Derivation& base,
                                     const Query& lifted_initial, const Filter& delta) {
  Derivation out;
  out.initial = lifted_initial;
  FreshVariables fresh = FreshVariables::above(vars_of(lifted_initial));
  if (base.length() == 0 && !query_delta_mg(lifted_initial, base.initial, delta)) {
    return CannotLift{"initial query is not Δ-more general than the base initial query"};
  }
  for (const DerivationStep& b : base.steps) {
    LiftResult r = lift_step(program, b, out.last(), delta, fresh);
    if (auto* failed = std::get_if<CannotLift>(&r)) return std::move(*failed);
    out.steps.push_back(std::move(std::get<DerivationStep>(r)));
  }
  out.status = out.last().empty() ? DerivationStatus::kSuccess : DerivationStatus::kRunning;
  return out;
}

// Bounded success sets -----------------------------------------------------

std::vector<Term> enumerate_terms(const std::vector<FunctionSymbol>& signature,
                                  std::size_t max_depth, const Var& slot) {
  std::vector<Term> base{Term::variable(slot)};
  for (const FunctionSymbol& f : signature) {
    if (f.arity == 0) base.push_back(Term::constant(f.name));
  }
  std::vector<Term> current = base;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<Term> next = base;
    for (const FunctionSymbol& f : signature) {
      if (f.arity == 0) continue;
      std::vector<std::size_t> pick(f.arity, 0);
      for (;;) {
        std::vector<Term> args;
        args.reserve(f.arity);
        for (std::size_t k : pick) args.push_back(current[k]);
        next.push_back(Term::compound(f.name, std::move(args)));
        std::size_t pos = 0;
        while (pos < f.arity && ++pick[pos] == current.size()) pick[pos++] = 0;
        if (pos == f.arity) break;
      }
    }
    current = std::move(next);
  }
  return current;
}

Var success_set_slot(std::size_t position) { return Var{"V" + std::to_string(position), 0}; }

std::set<Atom> bounded_success_set(const Program& program, const SuccessSetBounds& bounds) {
  std::set<Atom> out;
  for (const auto& [predicate, arity] : program.signature()) {
    std::vector<std::vector<Term>> columns;
    for (std::size_t i = 1; i <= arity; ++i) {
      columns.push_back(enumerate_terms(bounds.signature, bounds.term_depth, success_set_slot(i)));
    }
    std::vector<std::size_t> pick(arity, 0);
    for (;;) {
      Atom a{predicate, {}};
      for (std::size_t i = 0; i < arity; ++i) a.args.push_back(columns[i][pick[i]]);
      if (has_successful_derivation(program, Query(a), bounds.derivation_depth,
                                    bounds.node_budget)) {
        out.insert(std::move(a));
      }
      std::size_t pos = 0;
      while (pos < arity && ++pick[pos] == columns[pos].size()) pick[pos++] = 0;
      if (pos == arity) break;
    }
  }
  return out;
}

namespace {

void collect_functions(const Term& t, std::set<FunctionSymbol>& out) {
  if (t.is_var()) return;
  out.insert(FunctionSymbol{t.functor(), t.arity()});
  for (const Term& a : t.args()) collect_functions(a, out);
}

}  // namespace

std::vector<FunctionSymbol> function_symbols(const Program& program) {
  std::set<FunctionSymbol> found;
  for (const Clause& c : program.clauses()) {
    for (const Term& t : c.head.args) collect_functions(t, found);
    for (const Atom& b : c.body.atoms) {
      for (const Term& t : b.args) collect_functions(t, found);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace dnlift
