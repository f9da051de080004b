#include <benchmark/benchmark.h>

#include "dnlift/dn.hpp"
#include "dnlift/loops.hpp"
#include "dnlift/sld.hpp"
#include "dnlift/syntax.hpp"

namespace {

using namespace dnlift;

Program corpus(const std::string& name) {
  return load_program(std::string(DNLIFT_BENCH_DATA_DIR) + "/programs/" + name + ".pl").program;
}

Term list_of(std::size_t n) {
  Term t = Term::nil();
  for (std::size_t i = 0; i < n; ++i) t = Term::cons(Term::variable("X", static_cast<std::uint32_t>(i)), t);
  return t;
}

void BM_Unify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Atom a{"p", {list_of(n), Term::variable("Y")}};
  const Atom b{"p", {Term::variable("Z"), list_of(n)}};
  for (auto _ : state) benchmark::DoNotOptimize(mgu(a, b));
}
BENCHMARK(BM_Unify)->Range(8, 512);

void BM_Derive(benchmark::State& state) {
  const Program prog = corpus("append");
  const Query q = parse_query("append(X, Y, Z)");
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(left_derivations(prog, q, depth));
}
BENCHMARK(BM_Derive)->DenseRange(4, 16, 4);

void BM_DetectAll(benchmark::State& state, const char* name) {
  const Program prog = corpus(name);
  const Filter f = filter_of_positions_terms(infer_positions_terms(prog, 3));
  for (auto _ : state) benchmark::DoNotOptimize(detect_all(prog, f));
}
BENCHMARK_CAPTURE(BM_DetectAll, loop3, "loop3");
BENCHMARK_CAPTURE(BM_DetectAll, append3, "append3");
BENCHMARK_CAPTURE(BM_DetectAll, loop4, "loop4");

void BM_Infer(benchmark::State& state, const char* name) {
  const Program prog = corpus(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(infer_max_positions(prog));
    benchmark::DoNotOptimize(infer_positions_terms(prog, 3));
  }
}
BENCHMARK_CAPTURE(BM_Infer, merge, "merge");
BENCHMARK_CAPTURE(BM_Infer, append3, "append3");

}  // namespace
BENCHMARK_MAIN();
