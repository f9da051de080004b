#include <gtest/gtest.h>

#include "dnlift/errors.hpp"
#include "dnlift/loops.hpp"
#include "support/support.hpp"

using namespace dnlift;
using namespace dnlift::testing;

namespace {

Filter inferred(const Program& prog) { return filter_of_positions_terms(infer_positions_terms(prog, 3)); }

TEST(Loops, IntroNeedsTheFilter) {
  const Program prog = corpus("intro");
  EXPECT_FALSE(detect_loop(prog, A("p(X, Y)"), Filter{}));
  auto w = detect_loop(prog, A("p(X, Y)"), inferred(prog));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->prefix.length(), 0u);
  EXPECT_EQ(w->segment.length(), 1u);
  EXPECT_TRUE(verify_witness(prog, *w, 10).ok);
}

TEST(Loops, ClassOfFirstExample) {
  const Program prog = corpus("loop1");
  auto w = detect_loop(prog, A("p(f(X), Y)"), inferred(prog));
  ASSERT_TRUE(w);
  const QueryClass c = query_class(*w);
  EXPECT_EQ(c.describe(), "p(t1, t2): t1 more general than f(X), t2 any term");
  EXPECT_TRUE(c.contains(A("p(Z, a)")));
  EXPECT_TRUE(c.contains(A("p(f(Z), g(b))")));
  EXPECT_FALSE(c.contains(A("p(f(a), a)")));
}

TEST(Loops, LoopFourIsUnknown) {
  const Program prog = corpus("loop4");
  const LoopAnalysis r = detect_all(prog, inferred(prog));
  EXPECT_TRUE(r.loops.empty());
  ASSERT_EQ(r.unknown.size(), 1u);
}

TEST(Loops, PropagationThroughQ) {
  const Program prog = corpus("loop3");
  const LoopAnalysis r = detect_all(prog, inferred(prog));
  ASSERT_EQ(r.loops.size(), 2u);
  EXPECT_TRUE(r.unknown.empty());
  for (const LoopWitness& w : r.loops) {
    EXPECT_TRUE(verify_witness(prog, w, 3 * (w.prefix.length() + w.segment.length())).ok);
    if (w.looping_atom.predicate == "p") {
      ASSERT_TRUE(w.via);
      EXPECT_TRUE(is_variant(w.via->entry, A("q(X, g(X))")));
    }
  }
}

TEST(Loops, AppendFactStaysUnknown) {
  const Program prog = corpus("append");
  const LoopAnalysis r = detect_all(prog, inferred(prog));
  ASSERT_EQ(r.loops.size(), 1u);
  EXPECT_EQ(r.loops[0].looping_atom, prog.clause(1).head);
  ASSERT_EQ(r.unknown.size(), 1u);
}

TEST(Loops, ExtraSeedsAreAnalysed) {
  const Program prog = corpus("loop1");
  const LoopAnalysis r = detect_all(prog, inferred(prog), {}, {A("p(a, b)"), A("p(Z, W)")});
  ASSERT_EQ(r.loops.size(), 2u);
  EXPECT_TRUE(is_variant(r.loops[1].looping_atom, A("p(Z, W)")));
  ASSERT_EQ(r.unknown.size(), 1u);
  EXPECT_EQ(r.unknown[0], A("p(a, b)"));
}

TEST(Loops, EmptyProgram) {
  const LoopAnalysis r = detect_all(Program{}, Filter{});
  EXPECT_TRUE(r.loops.empty());
  EXPECT_TRUE(r.unknown.empty());
}

TEST(Loops, RejectsNonNeutralFilters) {
  PositionSet tau;
  tau.insert("append", 2);
  EXPECT_THROW(detect_loop(corpus("append"), A("append(X, Y, Z)"), filter_of_positions(tau)),
               FilterNotDN);
  Filter u;
  u.set("p", 2, TermCondition::unifies_with(T("a")));
  EXPECT_THROW(certify_filter(corpus("loop1"), u), FilterNotDN);
}

TEST(Loops, BudgetIsEnforced) {
  const Program prog = corpus("loop4");
  LoopSearchOptions options;
  options.node_budget = 5;
  EXPECT_THROW(detect_loop(prog, A("p(X, X)"), inferred(prog), options), ResourceLimit);
}

TEST(Loops, WrongEtaIsRefuted) {
  const Program prog = corpus("loop1");
  auto w = detect_loop(prog, A("p(f(X), Y)"), inferred(prog));
  ASSERT_TRUE(w);
  LoopWitness broken = *w;
  broken.pair.later = A("p(a, g(Y))");
  EXPECT_FALSE(verify_witness(prog, broken, 6).ok);
  LoopWitness wrong_atom = *w;
  wrong_atom.looping_atom = A("p(a, Y)");
  EXPECT_FALSE(verify_witness(prog, wrong_atom, 6).ok);
}

TEST(LoopsProperty, ClassMembersLoop) {
  Rng rng(41);
  for (const std::string name : {"intro", "loop1", "loop2", "loop3", "merge", "append_rec"}) {
    const Program prog = corpus(name);
    const auto sig = generation_signature(prog);
    const Filter f = inferred(prog);
    for (const LoopWitness& w : detect_all(prog, f).loops) {
      const QueryClass c = query_class(w);
      for (int t = 0; t < 10; ++t) {
        FreshVariables fresh = FreshVariables::above(vars_of(w.looping_atom));
        const Query member = random_delta_more_general(rng, Query(w.looping_atom), f, sig, fresh);
        EXPECT_TRUE(c.contains(member[0])) << member;
        const VerifyResult r = verify_class_member(prog, w, member[0], 12);
        EXPECT_TRUE(r.ok) << name << " " << member << ": " << r.reason;
      }
    }
  }
}

}  // namespace
