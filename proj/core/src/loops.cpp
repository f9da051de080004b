#include "dnlift/loops.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "dnlift/dn.hpp"
#include "dnlift/errors.hpp"

namespace dnlift {

void certify_filter(const Program& program, const Filter& delta) {
  try {
    delta.check_bounds(program.signature());
  } catch (const std::invalid_argument& e) {
    throw FilterNotDN(e.what());
  }
  std::optional<PositionTermMap> tau_plus = positions_terms_of_filter(delta);
  if (!tau_plus) {
    throw FilterNotDN("filters with unifies-with conditions cannot be certified");
  }
  std::vector<DnViolation> violations = check_dn_positions_terms(*tau_plus, program);
  if (!violations.empty()) {
    throw FilterNotDN("filter is not derivation neutral: " + to_string(violations.front()));
  }
}

namespace {

struct Node {
  Derivation derivation;
  FreshVariables fresh;
};

Node root(const Atom& a) {
  Node n{Derivation{}, FreshVariables::above(vars_of(a))};
  n.derivation.initial = Query(a);
  return n;
}

bool contains_variant(const std::vector<Atom>& atoms, const Atom& a) {
  return std::any_of(atoms.begin(), atoms.end(), [&](const Atom& b) { return is_variant(a, b); });
}

// Applies the clauses of `indices` in order to the leftmost atom.
bool replay(const Program& program, Derivation& d, FreshVariables& fresh,
            const std::vector<std::size_t>& indices) {
  for (std::size_t ci : indices) {
    if (d.last().empty()) return false;
    std::optional<DerivationStep> s = step(program, d.last(), 0, ci, fresh);
    if (!s) return false;
    d.steps.push_back(std::move(*s));
  }
  return true;
}

class Searcher {
 public:
  Searcher(const Program& program, const Filter& delta, const LoopSearchOptions& options)
      : program_(program), delta_(delta), options_(options) {}

  std::optional<LoopWitness> direct(const Atom& a, bool allow_prefix) {
    std::vector<std::vector<Node>> levels;
    levels.push_back({root(a)});
    for (std::size_t d = 1; d <= options_.depth; ++d) {
      std::vector<Atom> tried;
      const std::size_t k_max = allow_prefix ? d - 1 : 0;
      for (std::size_t k = 0; k <= k_max; ++k) {
        if (k == levels.size()) levels.push_back(expand(levels.back()));
        for (const Node& node : levels[k]) {
          const Query& q = node.derivation.last();
          if (q.empty() || contains_variant(tried, q[0])) continue;
          tried.push_back(q[0]);
          if (auto w = segment_from(q[0], d - k)) {
            w->looping_atom = a;
            w->prefix = node.derivation;
            return w;
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<LoopWitness> propagated(const Atom& a, const std::vector<const LoopWitness*>& members) {
    std::vector<Node> level{root(a)};
    for (std::size_t k = 0; k <= options_.depth && !level.empty(); ++k) {
      for (const Node& node : level) {
        const Query& q = node.derivation.last();
        if (q.empty()) continue;
        for (const LoopWitness* m : members) {
          std::optional<Substitution> eta = atom_delta_mg(q[0], m->looping_atom, delta_);
          if (!eta) continue;
          Node lifted = node;
          if (!replay(program_, lifted.derivation, lifted.fresh, m->prefix.clause_indices())) {
            continue;
          }
          LoopWitness w;
          w.looping_atom = a;
          w.filter = delta_;
          w.prefix = std::move(lifted.derivation);
          w.segment = m->segment;
          w.pair = m->pair;
          w.via = Propagation{q[0], m->looping_atom, std::move(*eta)};
          return w;
        }
      }
      if (k < options_.depth) level = expand(level);
    }
    return std::nullopt;
  }

 private:
  void count() {
    if (++nodes_ > options_.node_budget) throw ResourceLimit(options_.node_budget);
  }

  std::vector<Node> expand(const std::vector<Node>& level) {
    std::vector<Node> next;
    for (const Node& node : level) {
      const Query& q = node.derivation.last();
      if (q.empty()) continue;
      for (std::size_t ci = 0; ci < program_.size(); ++ci) {
        FreshVariables fresh = node.fresh;
        std::optional<DerivationStep> s = step(program_, q, 0, ci, fresh);
        if (!s) continue;
        count();
        Node child{node.derivation, fresh};
        child.derivation.steps.push_back(std::move(*s));
        next.push_back(std::move(child));
      }
    }
    return next;
  }

  std::optional<LoopWitness> segment_from(const Atom& b1, std::size_t max_length) {
    Node n = root(b1);
    if (!grow(n, b1, max_length)) return std::nullopt;
    LoopWitness w;
    w.filter = delta_;
    const Atom& b2 = n.derivation.last()[0];
    w.pair = SubsumingPair{b1, b2, *atom_delta_mg(b2, b1, delta_)};
    w.segment = std::move(n.derivation);
    return w;
  }

  bool grow(Node& n, const Atom& b1, std::size_t max_length) {
    const Query q = n.derivation.last();
    if (q.empty()) return false;
    if (n.derivation.length() > 0 && atom_delta_mg(q[0], b1, delta_)) return true;
    if (n.derivation.length() == max_length) return false;
    for (std::size_t ci = 0; ci < program_.size(); ++ci) {
      FreshVariables saved = n.fresh;
      std::optional<DerivationStep> s = step(program_, q, 0, ci, n.fresh);
      if (s) {
        count();
        n.derivation.steps.push_back(std::move(*s));
        if (grow(n, b1, max_length)) return true;
        n.derivation.steps.pop_back();
      }
      n.fresh = saved;
    }
    return false;
  }

  const Program& program_;
  const Filter& delta_;
  const LoopSearchOptions& options_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<LoopWitness> detect_loop(const Program& program, const Atom& a, const Filter& delta,
                                       const LoopSearchOptions& options) {
  certify_filter(program, delta);
  return Searcher(program, delta, options).direct(a, true);
}

LoopAnalysis detect_all(const Program& program, const Filter& delta,
                        const LoopSearchOptions& options, const std::vector<Atom>& extra_seeds) {
  certify_filter(program, delta);

  std::vector<Atom> seeds;
  auto add_seed = [&](const Atom& a) {
    if (!contains_variant(seeds, a)) seeds.push_back(a);
  };
  for (const Clause& c : program.clauses()) add_seed(c.head);
  for (const Atom& a : extra_seeds) add_seed(a);

  std::vector<std::optional<LoopWitness>> found(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    found[i] = Searcher(program, delta, options).direct(seeds[i], false);
  }

  std::vector<bool> searched(seeds.size(), false);
  for (;;) {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<const LoopWitness*> members;
      for (const auto& w : found) {
        if (w) members.push_back(&*w);
      }
      if (members.empty()) break;
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (found[i]) continue;
        found[i] = Searcher(program, delta, options).propagated(seeds[i], members);
        if (found[i]) {
          changed = true;
          break;
        }
      }
    }

    bool progress = false;
    for (std::size_t i = 0; i < seeds.size() && !progress; ++i) {
      if (found[i] || searched[i]) continue;
      searched[i] = true;
      found[i] = Searcher(program, delta, options).direct(seeds[i], true);
      progress = found[i].has_value();
    }
    if (!progress) break;
  }

  LoopAnalysis out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (found[i]) {
      out.loops.push_back(std::move(*found[i]));
    } else {
      out.unknown.push_back(seeds[i]);
    }
  }
  return out;
}

// Query classes ------------------------------------------------------------

std::string to_string(const PositionClass& pc) {
  switch (pc.kind) {
    case PositionClass::Kind::kMoreGeneralThan:
      return "more general than " + to_string(*pc.term);
    case PositionClass::Kind::kAnyTerm:
      return "any term";
    case PositionClass::Kind::kInstanceOf:
      return "any instance of " + to_string(*pc.term);
    case PositionClass::Kind::kUnifiesWith:
      return "any term unifying with " + to_string(*pc.term);
  }
  return "?";
}

QueryClass::QueryClass(Atom templ, Filter filter)
    : template_(std::move(templ)), filter_(std::move(filter)) {
  for (std::size_t i = 0; i < template_.arity(); ++i) {
    const TermCondition* cond = filter_.find(template_.predicate, i + 1);
    PositionClass pc;
    if (!cond) {
      pc = {PositionClass::Kind::kMoreGeneralThan, template_.args[i]};
    } else if (cond->kind() == TermCondition::Kind::kAlwaysTrue || cond->pattern().is_var()) {
      pc = {PositionClass::Kind::kAnyTerm, std::nullopt};
    } else if (cond->kind() == TermCondition::Kind::kInstanceOf) {
      pc = {PositionClass::Kind::kInstanceOf, cond->pattern()};
    } else {
      pc = {PositionClass::Kind::kUnifiesWith, cond->pattern()};
    }
    positions_.push_back(std::move(pc));
  }
}

bool QueryClass::contains(const Atom& b) const {
  return atom_delta_mg(b, template_, filter_).has_value();
}

std::string QueryClass::describe() const {
  std::ostringstream os;
  os << template_.predicate;
  if (positions_.empty()) return os.str();
  os << '(';
  for (std::size_t i = 0; i < positions_.size(); ++i) os << (i ? ", t" : "t") << i + 1;
  os << "): ";
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    os << (i ? ", t" : "t") << i + 1 << ' ' << to_string(positions_[i]);
  }
  return os.str();
}

QueryClass query_class(const LoopWitness& w) { return QueryClass(w.looping_atom, w.filter); }

// Verification -------------------------------------------------------------

namespace {

VerifyResult refuted(std::string reason, std::size_t steps_run = 0) {
  return VerifyResult{false, std::move(reason), steps_run};
}

VerifyResult replay_witness(const Program& program, const LoopWitness& w, const Atom& start,
                            std::size_t steps) {
  const Atom& b1 = w.pair.earlier;
  if (w.segment.length() == 0) return refuted("empty segment");
  if (!(w.segment.initial == Query(b1))) return refuted("segment does not start from B1");
  const Query& end = w.segment.last();
  if (end.empty() || !(end[0] == w.pair.later)) {
    return refuted("B2 is not the leftmost atom of the segment's last query");
  }
  if (!atom_delta_mg_for(w.pair.later, b1, w.filter, w.pair.eta)) {
    return refuted("eta does not make B2 Δ-more general than B1");
  }
  if (!(w.prefix.initial == Query(w.looping_atom))) {
    return refuted("prefix does not start from the looping atom");
  }

  Derivation d;
  d.initial = Query(start);
  FreshVariables fresh = FreshVariables::above(vars_of(start));
  if (!replay(program, d, fresh, w.prefix.clause_indices())) {
    return refuted("prefix does not replay from " + to_string(start), d.length());
  }
  auto leftmost_ok = [&](bool allow_variant) {
    const Query& q = d.last();
    if (q.empty()) return false;
    return (allow_variant && is_variant(q[0], b1)) || atom_delta_mg(q[0], b1, w.filter);
  };
  if (!leftmost_ok(true)) {
    return refuted("after the prefix the leftmost atom is not Δ-more general than B1",
                   d.length());
  }
  const std::vector<std::size_t> segment = w.segment.clause_indices();
  while (d.length() < steps) {
    if (!replay(program, d, fresh, segment)) {
      return refuted("segment does not replay at step " + std::to_string(d.length()),
                     d.length());
    }
    if (!leftmost_ok(false)) {
      return refuted("leftmost atom " + to_string(d.last()[0]) + " is not Δ-more general than B1",
                     d.length());
    }
  }
  return VerifyResult{true, {}, d.length()};
}

}  // namespace

VerifyResult verify_witness(const Program& program, const LoopWitness& w, std::size_t steps) {
  return replay_witness(program, w, w.looping_atom, steps);
}

VerifyResult verify_class_member(const Program& program, const LoopWitness& w, const Atom& member,
                                 std::size_t steps) {
  if (!is_variant(member, w.looping_atom) && !atom_delta_mg(member, w.looping_atom, w.filter)) {
    return refuted(to_string(member) + " is not in the class of " + to_string(w.looping_atom));
  }
  return replay_witness(program, w, member, steps);
}

}  // namespace dnlift
