#include <random>

#include "doctest.h"
#include "support.hpp"
#include "ucstar/term.hpp"
#include "ucstar/term_text.hpp"

using namespace ucstar;

TEST_CASE("add, mul and adjoint on small terms") {
  Term s(gen("s")), t(gen("t")), u(gen("u"));
  Word w{gen("s"), star("t")};
  Term x = parse_term("(2+3i)*s.t' - 1/2*p");

  CHECK(add(x, Term()) == x);
  CHECK(add(x, Coefficient(-1) * x).is_zero());
  CHECK(Term(w, 2) + Term(w, 3) == Term(w, 5));

  CHECK(mul(s, t) == Term(Word{gen("s"), gen("t")}));
  CHECK(mul(x, Term()).is_zero());
  CHECK(mul(s + t, u) == parse_term("s.u + t.u"));

  CHECK(adjoint(mul(s, t)) == parse_term("t'.s'"));
  CHECK(adjoint(adjoint(x)) == x);
  CHECK(adjoint(parse_term("(2+i)*s")) == parse_term("(2-i)*s'"));
}

TEST_CASE("canonical storage drops zero coefficients") {
  Term a = parse_term("s + t - s");
  CHECK(a == Term(gen("t")));
  CHECK(a.size() == 1);
  Term z = parse_term("s.t - s.t");
  CHECK(z.is_zero());
  CHECK(to_string(z) == "0");
}

TEST_CASE("word order is shortlex") {
  Word a{gen("t")};
  Word b{gen("s"), gen("s")};
  Word c{gen("s"), star("s")};
  CHECK(a < b);
  CHECK(b < c);
  CHECK(Word{} < a);
  Term t = parse_term("s.s' + s.s + t");
  std::vector<Word> order;
  for (auto const& [w, k] : t) order.push_back(w);
  CHECK(order == std::vector<Word>{a, b, c});
}

TEST_CASE("term text") {
  CHECK(to_string(parse_term("(2+3i)*s.t'.p")) == "(2+3i)*s.t'.p");
  CHECK(to_string(parse_term("(i)*s")) == "(i)*s");
  CHECK(to_string(parse_term("-(i)*s + 3")) == "3 + (-i)*s");
  CHECK(to_string(parse_term("1/2*a - 2/4*a")) == "0");
  CHECK(to_string(parse_term("i")) == "i");  // a generator named i
  CHECK(parse_term("(i)") == Term::scalar(Coefficient::imaginary_unit()));

  CHECK_THROWS_AS(parse_term("s..t"), ParseError);
  CHECK_THROWS_AS(parse_term("s +"), ParseError);
  CHECK_THROWS_AS(parse_term("(2+3)*s"), ParseError);
  std::set<std::string> known{"s"};
  try {
    parse_term("s.t'", &known);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("coefficient arithmetic is exact") {
  Coefficient a(Rational(1, 3), Rational(-2, 5));
  CHECK(a * a.inverse() == Coefficient(1));
  CHECK((a / a) == Coefficient(1));
  CHECK(Coefficient::imaginary_unit() * Coefficient::imaginary_unit() == Coefficient(-1));
  CHECK_THROWS(Coefficient().inverse());
}

TEST_CASE("algebraic laws on random terms") {
  std::mt19937 rng(1234);
  std::vector<std::string> gens{"s", "t", "p"};
  for (int trial = 0; trial < 200; ++trial) {
    Term x = testing::random_term(rng, gens);
    Term y = testing::random_term(rng, gens);
    Term z = testing::random_term(rng, gens);
    CHECK(adjoint(mul(x, y)) == mul(adjoint(y), adjoint(x)));
    CHECK(adjoint(adjoint(x)) == x);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    CHECK(add(x, y) == add(y, x));
    CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
    // Re-canonicalizing changes nothing, and printing round-trips.
    Term again;
    for (auto const& [w, c] : x) again.add_word(w, c);
    CHECK(again == x);
    CHECK(parse_term(to_string(x)) == x);
  }
}
