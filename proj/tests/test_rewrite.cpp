#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "ucstar/rewrite.hpp"
#include "ucstar/term_text.hpp"

using namespace ucstar;

TEST_CASE("normalize with the basic rule sets") {
  CHECK(normalize(parse_term("s.s'.s"), partial_isometry_rules({"s"})) == parse_term("s"));
  CHECK(normalize(parse_term("s'.s.s'"), partial_isometry_rules({"s"})) == parse_term("s'"));
  CHECK(normalize(parse_term("p.p"), projection_rules({"p"})) == parse_term("p"));
  CHECK(normalize(parse_term("p'.p.p'"), projection_rules({"p"})) == parse_term("p"));
  CHECK(normalize(parse_term("q2.q1.q2"), commuting_projection_rules({"q1", "q2"})) == parse_term("q1.q2"));
  CHECK(normalize(parse_term("S1'.S2 + S1'.S1.S2"), cuntz_rules({"S1", "S2"}, "one")) == parse_term("S2"));
  CHECK(normalize(parse_term("one.s - s"), unit_rules("one")).is_zero());

  RuleSet el = el_rules_rowfinite(ZeroOneMatrix::from_rows("11,10"));
  CHECK(normalize(parse_term("T1.T1'.T2.T2'"), el).is_zero());
  CHECK(normalize(parse_term("0"), el).is_zero());
}

TEST_CASE("el_rules_rowfinite reads CK2 from the rows of A") {
  RuleSet el = el_rules_rowfinite(ZeroOneMatrix::from_rows("11,10"));
  auto find = [&](std::string const& name) -> Rule const* {
    for (auto const& r : el.rules())
      if (r.name == name) return &r;
    return nullptr;
  };
  REQUIRE(find("CK2:1"));
  CHECK(find("CK2:1")->pattern == parse_word("T1'.T1"));
  CHECK(find("CK2:1")->replacement == parse_term("T1.T1' + T2.T2'"));
  REQUIRE(find("CK2:2"));
  CHECK(find("CK2:2")->replacement == parse_term("T1.T1'"));

  auto inf = ZeroOneMatrix::truncated({{1, 1}, {1, 0}}, {true, false});
  CHECK_THROWS_AS(el_rules_rowfinite(inf), std::invalid_argument);
  CHECK_NOTHROW(el_rules_rowfinite(ZeroOneMatrix::truncated({{1, 1}, {1, 0}}, {true, true})));
}

TEST_CASE("check_identity derives EL1 and EL3") {
  ZeroOneMatrix A = ZeroOneMatrix::from_rows("11,10");
  RuleSet el = el_rules_rowfinite(A);
  CHECK(check_identity(parse_term("T1'.T1.T2'.T2"), parse_term("T2'.T2.T1'.T1"), el));
  CHECK(check_identity(parse_term("T1'.T1.T2.T2'"), Coefficient(A(1, 2)) * parse_term("T2.T2'"), el));
  CHECK(check_identity(parse_term("T2'.T2.T2.T2'"), Coefficient(A(2, 2)) * parse_term("T2.T2'"), el));
  CHECK_FALSE(check_identity(parse_term("s"), parse_term("s'"), el));
  CHECK_FALSE(check_identity(parse_term("s"), parse_term("s'"), partial_isometry_rules({"s"})));
}

TEST_CASE("rules must decrease the termination measure") {
  Signature sig;
  sig.kinds["s"] = GeneratorKind::partial_isometry;
  CHECK_THROWS(RuleSet("bad", sig, {{"grow", parse_word("s"), parse_term("s.s'.s")}}));
  CHECK_THROWS(RuleSet("swap", sig, {{"swap", parse_word("s.s'"), parse_term("s'.s")}}));
  CHECK_THROWS(RuleSet("empty", sig, {{"empty", Word{}, parse_term("s")}}));
  CHECK_NOTHROW(RuleSet("ok", sig, {{"order", parse_word("s'.s"), parse_term("s.s'")}}));
}

TEST_CASE("budget and trace") {
  RuleSet pi = partial_isometry_rules({"s"});
  Term t = parse_term("s.s'.s.s'.s.s'.s");
  CHECK_THROWS_AS(normalize(t, pi, 1), BudgetExceeded);
  std::ostringstream trace;
  CHECK(normalize(t, pi, kDefaultStepBudget, &trace) == parse_term("s"));
  CHECK(trace.str().find("s:partial-isometry") != std::string::npos);
}

TEST_CASE("degree, is_fixed and expectation") {
  Signature sig;
  for (auto g : {"s", "t"}) sig.kinds[g] = GeneratorKind::partial_isometry;
  sig.kinds["p"] = GeneratorKind::projection;
  CHECK(degree(parse_word("s"), sig) == 1);
  CHECK(degree(parse_word("s.t'"), sig) == 0);
  // Direct count: unstarred s, s; starred t; p contributes nothing.
  CHECK(degree(parse_word("s.s.p.t'"), sig) == 2 - 1);

  CHECK(is_fixed(parse_term("s.s'"), sig));
  CHECK_FALSE(is_fixed(parse_term("s"), sig));
  CHECK(is_fixed(Term(), sig));

  CHECK(expectation(parse_term("s.s'"), sig) == parse_term("s.s'"));
  CHECK(expectation(parse_term("s"), sig).is_zero());
  CHECK(expectation(parse_term("2*s + 3*s.s'"), sig) == parse_term("3*s.s'"));
}

TEST_CASE("built-in rule sets are degree homogeneous") {
  CHECK(projection_rules({"p", "q"}).degree_homogeneous());
  CHECK(commuting_projection_rules({"p", "q", "r"}).degree_homogeneous());
  CHECK(partial_isometry_rules({"s", "t"}).degree_homogeneous());
  CHECK(unit_rules("one").degree_homogeneous());
  CHECK(cuntz_rules({"S1", "S2", "S3"}, "one").degree_homogeneous());
  CHECK(el_rules_rowfinite(ZeroOneMatrix::from_rows("111,101,010")).degree_homogeneous());
  Signature sig;
  sig.kinds["s"] = GeneratorKind::partial_isometry;
  CHECK_FALSE(RuleSet("x", sig, {{"kill", parse_word("s.s"), parse_term("s")}}).degree_homogeneous());
}

TEST_CASE("normal forms: determinism and degree support") {
  std::mt19937 rng(77);
  RuleSet el = el_rules_rowfinite(ZeroOneMatrix::from_rows("11,10"));
  Signature const& sig = el.signature();
  for (int k = 0; k < 100; ++k) {
    Term t = testing::random_term(rng, {"T1", "T2"}, 4, 5);
    Term a = normalize(t, el);
    CHECK(a == normalize(t, el));
    CHECK(normalize(a, el) == a);
    std::set<long> before, after;
    for (auto const& [w, c] : t) before.insert(degree(w, sig));
    for (auto const& [w, c] : a) after.insert(degree(w, sig));
    for (long d : after) CHECK(before.count(d) == 1);
  }
}

TEST_CASE("expectation laws on random terms") {
  std::mt19937 rng(5);
  Signature sig;
  for (auto g : {"s", "t"}) sig.kinds[g] = GeneratorKind::partial_isometry;
  sig.kinds["p"] = GeneratorKind::projection;
  for (int k = 0; k < 200; ++k) {
    Term x = testing::random_term(rng, {"s", "t", "p"});
    Term y = testing::random_term(rng, {"s", "t", "p"});
    Term ex = expectation(x, sig);
    CHECK(expectation(ex, sig) == ex);
    CHECK(expectation(x + y, sig) == ex + expectation(y, sig));
    CHECK(expectation(adjoint(x), sig) == adjoint(ex));
    CHECK(is_fixed(ex, sig));
  }
}
