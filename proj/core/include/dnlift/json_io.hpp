#pragma once

// JSON forms of certificates, filters and derivations. Predicates are keyed
// "name/arity" and positions by their 1-based decimal index.
//
//   positions:  {"append/3": {"2": null}}
//   terms:      {"p/2": {"2": "g(Y)"}}
//   filters:    {"p/2": {"2": {"kind": "instance", "pattern": "g(Y)"}}}

#include <nlohmann/json.hpp>

#include "dnlift/dn.hpp"
#include "dnlift/filters.hpp"
#include "dnlift/sld.hpp"
#include "dnlift/terms.hpp"

namespace dnlift {

using Json = nlohmann::json;

/// Every symbol of `signature` gets a key, distinguished positions or not.
Json positions_to_json(const PositionSet& tau, const Signature& signature);
Json positions_terms_to_json(const PositionTermMap& tau_plus, const Signature& signature);
Json filter_to_json(const Filter& delta, const Signature& signature);

/// The readers throw Error on malformed documents, on positions outside
/// [1, arity], and on keys whose arity disagrees with `signature`. Symbols
/// unknown to `signature` are kept.
PositionSet positions_from_json(const Json& j, const Signature& signature);
/// A null value stands for a variable pattern.
PositionTermMap positions_terms_from_json(const Json& j, const Signature& signature);
Filter filter_from_json(const Json& j, const Signature& signature);

Json substitution_to_json(const Substitution& s);
/// [{query, clause_index, selected_pos, mgu, input_clause, resolvent}, ...]
Json derivation_to_json(const Derivation& d);

}  // namespace dnlift
