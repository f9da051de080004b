#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dnlift/dn.hpp"
#include "dnlift/json_io.hpp"
#include "dnlift/loops.hpp"
#include "dnlift/syntax.hpp"

namespace dnlift::cli {

inline constexpr const char* kSchemaVersion = "1.0";

struct AnalysisConfig {
  /// Filter to use instead of the one associated with the inferred τ⁺.
  std::optional<Filter> filter;
  std::string filter_source = "inferred";
  LoopSearchOptions search;
  std::size_t pattern_depth = 3;
  std::vector<Atom> seeds;
};

struct AnalysisReport {
  std::string path;
  Program program;
  PositionSet tau;
  PositionTermMap tau_plus;
  Filter filter;
  AnalysisConfig config;
  LoopAnalysis analysis;
  /// Parallel to analysis.loops.
  std::vector<VerifyResult> verification;
  double timing_ms = 0;
};

/// Infers both certificates, certifies the filter, detects loops and
/// re-verifies every witness. Throws FilterNotDN and ResourceLimit.
AnalysisReport analyze(const SourceProgram& source, AnalysisConfig config);

/// Witnesses replay for this many steps before being reported.
std::size_t verification_steps(const LoopWitness& w);

Json report_to_json(const AnalysisReport& report);
void write_text(std::ostream& out, const AnalysisReport& report);

Json witness_to_json(const LoopWitness& w, const Signature& signature);
Json class_to_json(const QueryClass& c);

}  // namespace dnlift::cli
