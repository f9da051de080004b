#include "dnlift/json_io.hpp"

#include <algorithm>
#include <charconv>

#include "dnlift/errors.hpp"
#include "dnlift/syntax.hpp"

namespace dnlift {

namespace {

std::string key_of(const std::string& predicate, std::size_t arity) {
  return predicate + "/" + std::to_string(arity);
}

std::size_t arity_or(const Signature& signature, const std::string& predicate,
                     std::size_t fallback) {
  auto it = signature.find(predicate);
  return it == signature.end() ? fallback : it->second;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error("invalid " + what + " '" + text + "'");
  }
  return value;
}

struct Key {
  std::string predicate;
  std::size_t arity;
};

Key parse_key(const std::string& key, const Signature& signature) {
  const std::size_t slash = key.rfind('/');
  if (slash == std::string::npos || slash == 0) {
    throw Error("predicate key '" + key + "' is not of the form name/arity");
  }
  Key k{key.substr(0, slash), parse_count(key.substr(slash + 1), "arity in '" + key + "'")};
  if (auto it = signature.find(k.predicate); it != signature.end() && it->second != k.arity) {
    throw Error("'" + key + "' disagrees with the program, which uses " +
                key_of(k.predicate, it->second));
  }
  return k;
}

// Calls f(predicate, position, value) for every entry, validating the shape.
template <typename F>
void for_each_entry(const Json& j, const Signature& signature, F&& f) {
  if (!j.is_object()) throw Error("certificate must be a JSON object");
  for (const auto& [key, positions] : j.items()) {
    const Key k = parse_key(key, signature);
    if (!positions.is_object()) throw Error("value of '" + key + "' must be an object");
    f(k.predicate, std::size_t{0}, Json());
    for (const auto& [pos, value] : positions.items()) {
      const std::size_t i = parse_count(pos, "position");
      if (i == 0 || i > k.arity) {
        throw Error("position " + pos + " is out of range for " + key);
      }
      f(k.predicate, i, value);
    }
  }
}

Term pattern_of(const Json& value) {
  if (!value.is_string()) throw Error("pattern must be a string");
  return parse_term(value.get<std::string>());
}

template <typename Map>
std::set<std::string> predicates_of(const Map& m, const Signature& signature) {
  std::set<std::string> out;
  for (const auto& [p, n] : signature) out.insert(p);
  for (const auto& [p, ps] : m) out.insert(p);
  return out;
}

}  // namespace

Json positions_to_json(const PositionSet& tau, const Signature& signature) {
  Json out = Json::object();
  for (const std::string& p : predicates_of(tau.positions, signature)) {
    const auto& ps = tau.of(p);
    Json entry = Json::object();
    for (std::size_t i : ps) entry[std::to_string(i)] = nullptr;
    const std::size_t fallback = ps.empty() ? 0 : *ps.rbegin();
    out[key_of(p, arity_or(signature, p, fallback))] = std::move(entry);
  }
  return out;
}

Json positions_terms_to_json(const PositionTermMap& tau_plus, const Signature& signature) {
  Json out = Json::object();
  for (const std::string& p : predicates_of(tau_plus.terms, signature)) {
    const auto& ps = tau_plus.of(p);
    Json entry = Json::object();
    for (const auto& [i, u] : ps) entry[std::to_string(i)] = to_string(u);
    const std::size_t fallback = ps.empty() ? 0 : ps.rbegin()->first;
    out[key_of(p, arity_or(signature, p, fallback))] = std::move(entry);
  }
  return out;
}

Json filter_to_json(const Filter& delta, const Signature& signature) {
  Json out = Json::object();
  for (const std::string& p : predicates_of(delta.entries(), signature)) {
    const auto& ps = delta.positions(p);
    Json entry = Json::object();
    for (const auto& [i, cond] : ps) {
      Json c = {{"kind", to_string(cond.kind())}};
      if (cond.kind() != TermCondition::Kind::kAlwaysTrue) c["pattern"] = to_string(cond.pattern());
      entry[std::to_string(i)] = std::move(c);
    }
    const std::size_t fallback = ps.empty() ? 0 : ps.rbegin()->first;
    out[key_of(p, arity_or(signature, p, fallback))] = std::move(entry);
  }
  return out;
}

PositionSet positions_from_json(const Json& j, const Signature& signature) {
  PositionSet tau;
  for_each_entry(j, signature, [&](const std::string& p, std::size_t i, const Json& value) {
    if (i == 0) {
      tau.positions[p];
      return;
    }
    if (!value.is_null()) throw Error("set-of-positions entries must be null");
    tau.insert(p, i);
  });
  return tau;
}

PositionTermMap positions_terms_from_json(const Json& j, const Signature& signature) {
  PositionTermMap tau_plus;
  for_each_entry(j, signature, [&](const std::string& p, std::size_t i, const Json& value) {
    if (i == 0) {
      tau_plus.terms[p];
      return;
    }
    tau_plus.set(p, i, value.is_null() ? Term::variable("X") : pattern_of(value));
  });
  return tau_plus;
}

Filter filter_from_json(const Json& j, const Signature& signature) {
  Filter delta;
  for_each_entry(j, signature, [&](const std::string& p, std::size_t i, const Json& value) {
    if (i == 0) return;
    if (!value.is_object() || !value.contains("kind") || !value["kind"].is_string()) {
      throw Error("filter entries need a \"kind\"");
    }
    const std::string kind = value["kind"].get<std::string>();
    if (kind == "true") {
      delta.set(p, i, TermCondition::always_true());
    } else if (kind == "instance" || kind == "unifies") {
      if (!value.contains("pattern")) throw Error("\"" + kind + "\" conditions need a pattern");
      Term u = pattern_of(value["pattern"]);
      delta.set(p, i,
                kind == "instance" ? TermCondition::instance_of(u) : TermCondition::unifies_with(u));
    } else {
      throw Error("unknown condition kind '" + kind + "'");
    }
  });
  return delta;
}

Json substitution_to_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [v, t] : s) out[to_string(v)] = to_string(t);
  return out;
}

Json derivation_to_json(const Derivation& d) {
  Json out = Json::array();
  for (const DerivationStep& s : d.steps) {
    out.push_back({{"query", to_string(s.from)},
                   {"clause_index", s.clause_index},
                   {"selected_pos", s.selected_pos},
                   {"mgu", substitution_to_json(s.mgu)},
                   {"input_clause", to_string(s.input_clause)},
                   {"resolvent", to_string(s.to)}});
  }
  return out;
}

}  // namespace dnlift
