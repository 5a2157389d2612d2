#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fim/submonoid.hpp"
#include "util.hpp"

using namespace fim;

TEST_CASE("pi_subgroup worked examples") {
  PiSubgroup p1 = pi_subgroup(compile("(aa|AAA)*"));
  CHECK(p1.p == 1);
  CHECK(p1.u_sym.pi == 1);

  PiSubgroup p2 = pi_subgroup(compile("(a|A)*"));
  CHECK(p2.p == 1);
  CHECK(p2.u_sym.pi == 1);

  PiSubgroup p3 = pi_subgroup(compile("(aa|AA)*"));
  CHECK(p3.p == 2);
  CHECK(p3.u_sym.pi == 2);

  // witnesses and their inverses are members
  for (auto [expr, ps] : std::vector<std::pair<std::string, PiSubgroup>>{
           {"(aa|AAA)*", p1}, {"(a|A)*", p2}, {"(aa|AA)*", p3}}) {
    Automaton a = compile(expr);
    CHECK(member_fast(a, ps.u));
    CHECK(member_fast(a, ps.u_sym));
    CHECK(member_fast(a, inverse(ps.u_sym)));
    CHECK(inverse(ps.u_sym) ==
          multiply(multiply(inverse(ps.u), ps.u), inverse(ps.u)));
  }

  // one-sided images are rejected
  CHECK_THROWS_AS(pi_subgroup(compile("a*")), precondition_error);
  CHECK_THROWS_AS(pi_subgroup(compile("(aA)*")), precondition_error);
}

TEST_CASE("generators of (aA)* is exactly {1, aa^-1}") {
  GeneratorSet gs = generators(compile("(aA)*"));
  CHECK(gs.case_id == 1);
  CHECK(gs.X == std::vector<Element>{identity(), Element{0, 0, 1}});
  REQUIRE(gs.certified.has_value());
  CHECK(*gs.certified);
}

TEST_CASE("generators rejects non-submonoids") {
  CHECK_THROWS_AS(generators(compile("a")), precondition_error);
  CHECK_THROWS_AS(generators(compile("aa|A")), precondition_error);
}

TEST_CASE("generators across the three cases, certified") {
  // case is determined by the pi-image: {0} / one-sided / two-sided
  struct Case {
    const char* expr;
    int want_case;
  };
  const Case suite[] = {
      // case 1: pi-image {0}
      {"(aA)*", 1},
      {"(Aa)*", 1},
      {"(aA|Aa)*", 1},
      {"1", 1},
      {"(aaAA)*", 1},
      // case 2: one-sided
      {"a*", 2},
      {"(aa)*", 2},
      {"(a|aa)*", 2},
      {"(aaA)*", 2},
      {"A*", 2},
      {"(A|AA)*", 2},
      // case 3: two-sided. The 18n' ball is only tractable when the
      // reduced automaton has very few states (n' = 2(m^4 n + r) reaches
      // the hundreds already at m = 3, and the ball grows cubically), so
      // the feasible case-3 inputs are the expressions denoting F itself.
      {"(a|A)*", 3},
      {"(a|A|aA)*", 3},
      {"(Aa|a|A)*", 3},
  };
  for (const Case& c : suite) {
    CAPTURE(c.expr);
    Automaton a = compile(c.expr);
    GenOptions opts;
    opts.prune = true;
    GeneratorSet gs = generators(a, opts);
    CHECK(gs.case_id == c.want_case);
    // every generator is a member, and certification passed
    for (const Element& x : gs.X) CHECK(member_fast(a, x));
    REQUIRE(gs.certified.has_value());
    CHECK(*gs.certified);
  }
}

TEST_CASE("case 2 with a negative-side image inverts and inverts back") {
  GeneratorSet gs = generators(compile("A*"));
  CHECK(gs.case_id == 2);
  CHECK(gs.inverted);
  for (const Element& x : gs.X) {
    CHECK(x.pi <= 0);
    CHECK(member_fast(compile("A*"), x));
  }
}

TEST_CASE("case 1 generator sets are closed under products in the monoid") {
  for (const char* expr : {"(aA)*", "(aA|Aa)*", "(aaAA)*"}) {
    Automaton a = compile(expr);
    GeneratorSet gs = generators(a);
    for (const Element& x : gs.X)
      for (const Element& y : gs.X) CHECK(member_fast(a, multiply(x, y)));
  }
}

TEST_CASE("pruned sets generate the same submonoid as the full ball") {
  std::mt19937 rng(181);
  for (const char* expr : {"(aA)*", "a*", "(a|aa)*", "(a|A)*"}) {
    Automaton a = compile(expr);
    GenOptions full, pruned;
    pruned.prune = true;
    GeneratorSet fs = generators(a, full);
    GeneratorSet ps = generators(a, pruned);
    CHECK(ps.X.size() <= fs.X.size());
    // pruned generators are products of nothing smaller: each full-ball
    // element must be generated by the pruned set (spot-check via products
    // of up to three pruned generators plus direct membership)
    std::int64_t cap = 0;
    for (const Element& x : fs.X) cap = std::max(cap, norm(x));
    std::set<Element> gen(ps.X.begin(), ps.X.end());
    gen.insert(identity());
    for (bool changed = true; changed;) {
      changed = false;
      for (const Element& g : std::vector<Element>(gen.begin(), gen.end()))
        for (const Element& x : ps.X) {
          Element p = multiply(g, x);
          if (norm(p) <= cap && gen.insert(p).second) changed = true;
        }
    }
    int covered = 0;
    for (const Element& x : fs.X) covered += gen.count(x);
    CHECK(covered == static_cast<int>(fs.X.size()));
  }
}

TEST_CASE("star_height_one worked examples") {
  RatExpr e1 = star_height_one(parse_expr("((aA)*)*"));
  CHECK(star_height(e1) <= 1);
  CHECK(equal(compile(e1), compile("(aA)*")).holds);

  RatExpr e2 = star_height_one(parse_expr("a*"));
  CHECK(star_height(e2) <= 1);
  CHECK(equal(compile(e2), compile("a*")).holds);

  RatExpr e3 = star_height_one(parse_expr("(a*|A)*"));
  CHECK(star_height(e3) <= 1);
  CHECK(equal(compile(e3), compile("(a|A)*")).holds);

  RatExpr e4 = star_height_one(parse_expr("aA|1"));
  CHECK(star_height(e4) == 0);
}

TEST_CASE("star_height_one on nested and concatenated stars") {
  for (const char* expr : {"a(aA)*", "(aA)*(Aa)*", "((aa)*)*"}) {
    CAPTURE(expr);
    RatExpr out = star_height_one(parse_expr(expr));
    CHECK(star_height(out) <= 1);
    CHECK(equal(compile(out), compile(expr)).holds);
  }
}
