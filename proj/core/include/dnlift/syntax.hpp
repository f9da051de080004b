#pragma once

// Definite-clause syntax in the usual Prolog notation.
//
//   append([], Ys, Ys).
//   append([X|Xs], Ys, [X|Zs]) :- append(Xs, Ys, Zs).
//
// Variables start with an uppercase letter or '_'; each '_' is a distinct
// anonymous variable. Lists desugar to '.'/2 and '[]'. Numbers are
// constants. Negation, cut, disjunction and operators are rejected.

#include <cstddef>
#include <string>
#include <vector>

#include "dnlift/terms.hpp"

namespace dnlift {

struct SourceSpan {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct SourceProgram {
  std::string path;
  std::string text;
  Program program;
  /// Start of each clause, parallel to program.clauses().
  std::vector<SourceSpan> spans;
};

/// Throws ParseError or ArityClash.
Program parse_program(const std::string& text);
SourceProgram parse_source(const std::string& text, const std::string& path = "");
/// Reads and parses a file; throws Error when it cannot be read.
SourceProgram load_program(const std::string& path);

Term parse_term(const std::string& text);
Atom parse_atom(const std::string& text);
/// Comma-separated atoms, optionally ending with '.'; "true" is the empty query.
Query parse_query(const std::string& text);

}  // namespace dnlift
