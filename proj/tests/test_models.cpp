#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ucstar/models.hpp"
#include "ucstar/term_text.hpp"
#include "ucstar/ultragraph.hpp"

using namespace ucstar;

namespace {

std::size_t dense_rank(SparseOperator const& op) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(op.to_dense());
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Ultragraph three_vertex() {
  return Ultragraph::parse(
      "vertices u v w\n"
      "edge a u -> {v,w}\n"
      "edge b v -> {u}\n"
      "edge c w -> {u,v}\n"
      "edge d u -> {w}\n");
}

}  // namespace

TEST_CASE("Fock model dimensions and ranks") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t L = 2; L <= 4; ++L) {
      Representation f = fock_rep(n, L);
      std::size_t dim = 0, below = 0;
      for (std::size_t k = 0; k <= L; ++k) dim += power(n, k);
      for (std::size_t k = 0; k < L; ++k) below += power(n, k);
      CHECK(f.dim() == dim);
      CHECK_NOTHROW(f.validate());
      Term defect = Term(Word{});
      for (std::size_t i = 1; i <= n; ++i) defect -= parse_term("S" + std::to_string(i) + ".S" + std::to_string(i) + "'");
      CHECK(dense_rank(evaluate(f, defect)) == 1);
      CHECK(dense_rank(evaluate(f, parse_term("S1'.S1"))) == below);
      CHECK(f.params.at("L") == std::to_string(L));
    }
  CHECK(fock_rep(2, 4).dim() == 31);
  CHECK(fock_rep(2, 2).basis_labels ==
        std::vector<std::string>{"[]", "[1]", "[2]", "[1,1]", "[1,2]", "[2,1]", "[2,2]"});
  CHECK_THROWS(fock_rep(1, 3));
  Representation inf = fock_infinity_rep(3, 3);
  CHECK(inf.dim() == 1 + 3 + 9 + 27);
  CHECK(inf.assign.count("T3") == 1);
  CHECK(inf.assign.count("T4") == 0);
}

TEST_CASE("path enumeration for 0-1 matrices") {
  ZeroOneMatrix A = ZeroOneMatrix::from_rows("11,10");
  CHECK(enumerate_paths(A, 2) == std::vector<Path>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(enumerate_paths(ZeroOneMatrix::from_rows("01,10"), 3) == std::vector<Path>{{1, 2, 1}, {2, 1, 2}});
  // Fibonacci counts for the golden mean shift.
  std::vector<std::size_t> fib{2, 3, 5, 8, 13};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_paths(A, n).size() == fib[n - 1]);
  CHECK(pathspace_rep(A, 4).dim() == 2 + 3 + 5 + 8);
  CHECK(word_label({1, 2}) == "[1,2]");
  CHECK(path_label({1, 2}) == "(1,2)");
}

TEST_CASE("random sequences are paths exactly when A allows every step") {
  ZeroOneMatrix A = ZeroOneMatrix::from_rows("110,011,101");
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> letter(1, 3), len(1, 5);
  std::map<std::size_t, std::set<Path>> cache;
  for (int k = 0; k < 1000; ++k) {
    Path p(len(rng));
    for (auto& x : p) x = letter(rng);
    if (!cache.count(p.size())) {
      auto all = enumerate_paths(A, p.size());
      cache[p.size()] = std::set<Path>(all.begin(), all.end());
    }
    bool admissible = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) admissible &= A(p[i], p[i + 1]) == 1;
    CHECK(cache[p.size()].count(p) == (admissible ? 1u : 0u));
  }
}

TEST_CASE("pathspace model relations") {
  ZeroOneMatrix A = ZeroOneMatrix::from_rows("11,10");
  Representation rep = pathspace_rep(A, 5);
  CHECK(rep.model_tag.find("l2(F) factor omitted") != std::string::npos);
  auto inside = rep.interior_indices();
  // CK2 on the interior: T_i* T_i = sum_j A(i,j) T_j T_j*.
  for (std::size_t i = 1; i <= 2; ++i) {
    Term lhs = parse_term("T" + std::to_string(i) + "'.T" + std::to_string(i));
    Term rhs;
    for (std::size_t j = 1; j <= 2; ++j)
      if (A(i, j)) rhs += parse_term("T" + std::to_string(j) + ".T" + std::to_string(j) + "'");
    SparseOperator d = evaluate(rep, lhs - rhs).compress(rep.interior);
    CHECK(operator_norm(d) < 1e-12);
  }
  CHECK_FALSE(inside.empty());
  CHECK_THROWS(pathspace_rep(A, 2));
}

TEST_CASE("ultragraph parsing and closure") {
  Ultragraph G = three_vertex();
  CHECK(Ultragraph::parse(G.str()) == G);
  CHECK(G.projection_name(0b101) == "p_u_w");
  CHECK(G.projection_name(0) == "p_");
  CHECK(G.edge_name(2) == "s_c");
  CHECK_THROWS(Ultragraph::parse("vertices u\nedge a u -> {}\n"));
  CHECK_THROWS(Ultragraph::parse("vertices u\nedge a x -> {u}\n"));
  CHECK_THROWS(Ultragraph::parse("vertices u\nedge a u -> {u}\nedge a u -> {u}\n"));
  // Singletons generate every subset under unions.
  CHECK(g0_closure(G).size() == 8);

  Ultragraph H = Ultragraph::parse("vertices x y z\nedge e x -> {y,z}\n");
  std::vector<VertexSet> expect{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  CHECK(g0_closure(H) == expect);
}

TEST_CASE("ultragraph paths follow ranges") {
  Ultragraph G = three_vertex();
  auto const& E = G.edges();
  for (std::size_t n = 1; n <= 4; ++n) {
    auto paths = enumerate_paths(G, n);
    std::set<Path> got(paths.begin(), paths.end());
    std::size_t brute = 0;
    Path p(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < n; ++i) ok &= ((E[p[i]].range >> E[p[i + 1]].source) & 1u) != 0;
      if (ok) {
        ++brute;
        CHECK(got.count(p) == 1);
      }
      std::size_t k = 0;
      while (k < n && ++p[k] == E.size()) p[k++] = 0;
      if (k == n) break;
    }
    CHECK(paths.size() == brute);
  }
}

TEST_CASE("ultragraph relations hold in the truncated model") {
  Ultragraph G = three_vertex();
  GeneratingTriple t = ultragraph_triple(G);
  Representation rep = ultragraph_rep(G, 4);
  for (auto const& r : t.norm_relations()) {
    auto rep_r = check_norm(rep, r);
    CHECK_MESSAGE(rep_r.ok(), r.id);
  }
}

TEST_CASE("ultragraph normal forms") {
  Ultragraph G = three_vertex();
  RuleSet rules = ultragraph_rules(G);
  auto canon = [&](std::string const& s) { return ultragraph_canonical(parse_term(s), G, rules); };
  CHECK(canon("s_a'.s_a") == parse_term("p_v + p_w"));
  CHECK(canon("s_a'.s_b").is_zero());
  CHECK(canon("s_a.s_b").is_zero() == false);
  CHECK(canon("s_a.s_a").is_zero());
  CHECK(canon("p_u.p_v").is_zero());
  CHECK(canon("p_u_v.p_v_w") == parse_term("p_v"));
  CHECK(canon("p_u_v") == parse_term("p_u + p_v"));
}

TEST_CASE("witness_span") {
  Ultragraph G = three_vertex();
  std::vector<Term> X{parse_term("s_a.s_c'"), parse_term("s_b.p_u.s_b'")};
  WitnessResult w = witness_span(G, X);
  CHECK(w.pass);
  CHECK(w.N == 1);
  CHECK(w.F == std::vector<std::size_t>{0, 1, 2});
  CHECK(w.span_dim > 0);
  CHECK(w.span_dim <= w.Y.size());
  WitnessNumeric n = witness_rank_check(G, X, w, 4);
  CHECK(n.max_residual < 1e-10);
  CHECK(n.rank_with_products == n.rank_y);

  WitnessResult single = witness_span(G, {parse_term("p_u")});
  CHECK(single.pass);
  CHECK(single.span_dim == 1);

  // Ungraded elements generate an infinite-dimensional algebra.
  WitnessResult bad = witness_span(G, {parse_term("s_a"), parse_term("s_b'")});
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.witness.empty());
  CHECK_THROWS_AS(witness_rank_check(G, {parse_term("s_a")}, bad, 4), std::invalid_argument);

  CHECK_THROWS_AS(witness_span(G, X, 1), BudgetExceeded);
  CHECK_THROWS(witness_span(G, {parse_term("zz")}));
}
