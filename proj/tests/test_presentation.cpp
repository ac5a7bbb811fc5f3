#include "doctest.h"
#include "ucstar/presentation.hpp"
#include "ucstar/term_text.hpp"

using namespace ucstar;

namespace {

bool has_relation(GeneratingTriple const& t, std::string const& id, Term const& term) {
  for (auto const& r : t.norm_relations())
    if (r.id == id) return r.term == term;
  return false;
}

}  // namespace

TEST_CASE("cuntz_triple") {
  GeneratingTriple t = cuntz_triple(2);
  CHECK(t.generators().size() == 3);
  CHECK(t.has_unit());
  CHECK(has_relation(t, "S1:isometry", parse_term("S1'.S1 - one")));
  CHECK(has_relation(t, "S2:isometry", parse_term("S2'.S2 - one")));
  CHECK(has_relation(t, "cuntz-sum", parse_term("S1.S1' + S2.S2' - one")));
  CHECK(t.norm_relations().size() == 7);
  CHECK_THROWS_AS(cuntz_triple(1), std::invalid_argument);

  // n isometry laws, 2n unit laws, one sum relation.
  GeneratingTriple t3 = cuntz_triple(3);
  CHECK(t3.norm_relations().size() == 3 + 2 * 3 + 1);
}

TEST_CASE("cuntz_infinity_triple") {
  GeneratingTriple t = cuntz_infinity_triple();
  REQUIRE(t.sot_relations().size() == 1);
  SotNet const& net = t.sot_relations()[0];
  CHECK(net.element(NetIndex{std::size_t{1}}) == parse_term("one - T1.T1'"));
  CHECK(net.element(NetIndex{std::size_t{3}}) == parse_term("one - T1.T1' - T2.T2' - T3.T3'"));
  REQUIRE(net.certificate);
  CHECK(net.certificate->bound == 1);
  CHECK(net.certificate->tag == CertificateTag::projection_defect);
  CHECK(t.kind_of("T17") == GeneratorKind::isometry);
  CHECK_FALSE(t.kind_of("T0"));

  GeneratingTriple m = t.truncate(4);
  CHECK(m.generator_names().size() == 5);
  CHECK(m.sot_relations()[0].scheme.label_count == 4u);
  CHECK(has_relation(m, "T4:isometry", parse_term("T4'.T4 - one")));
}

TEST_CASE("exel_laca_triple") {
  ZeroOneMatrix A = ZeroOneMatrix::from_rows("11,10");
  GeneratingTriple t = exel_laca_triple(A, true);
  SotNet const* ck2 = nullptr;
  SotNet const* ck1 = nullptr;
  for (auto const& n : t.sot_relations()) {
    if (n.id == "CK2:1") ck2 = &n;
    if (n.id == "CK1") ck1 = &n;
  }
  REQUIRE(ck2);
  REQUIRE(ck1);
  CHECK(ck2->element(subset_index({1, 2})) == parse_term("T1'.T1 - T1.T1' - T2.T2'"));
  CHECK(ck2->element(subset_index({2})) == parse_term("T1'.T1 - T2.T2'"));
  CHECK(ck2->certificate->bound == 2);
  CHECK(ck1->element(subset_index({1, 2})) == parse_term("one - T1.T1' - T2.T2'"));

  GeneratingTriple nu = exel_laca_triple(A, false);
  CHECK_FALSE(nu.has_unit());
  CHECK(has_relation(nu, "orth:1:2", parse_term("T1'.T2")));
  for (auto const& n : nu.sot_relations()) CHECK(n.id != "CK1");

  try {
    exel_laca_triple(ZeroOneMatrix({{1, 1}, {0, 0}}), true);
    FAIL("zero row accepted");
  } catch (std::invalid_argument const& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
}

TEST_CASE("sample_net") {
  SotNet net = cuntz_infinity_triple().sot_relations()[0];
  auto s = sample_net(net, {std::size_t{1}, std::size_t{2}, std::size_t{4}});
  REQUIRE(s.size() == 3);
  CHECK(s[2] == parse_term("one - T1.T1' - T2.T2' - T3.T3' - T4.T4'"));
  CHECK(sample_net(net, {}).empty());
  CHECK_THROWS(sample_net(net, {std::size_t{2}, std::size_t{1}}));
  CHECK_THROWS(sample_net(net, {std::size_t{0}}));

  SotNet ck1 = exel_laca_triple(ZeroOneMatrix::from_rows("11,11"), true).sot_relations()[0];
  auto t = sample_net(ck1, {subset_index({1}), subset_index({1, 2})});
  CHECK(t.size() == 2);
  CHECK_THROWS(sample_net(ck1, {subset_index({1, 2}), subset_index({2})}));
  CHECK_THROWS(sample_net(ck1, {subset_index({3})}));
}

TEST_CASE("index schemes are directed") {
  IndexScheme nat{SchemeKind::naturals, std::nullopt};
  IndexScheme sub{SchemeKind::finite_subsets, std::nullopt};
  NetIndex a = subset_index({1, 3}), b = subset_index({2});
  NetIndex j = index_join(a, b);
  CHECK(index_leq(sub, a, j));
  CHECK(index_leq(sub, b, j));
  CHECK_FALSE(index_leq(sub, a, b));
  CHECK(index_leq(nat, NetIndex{std::size_t{2}}, index_join(NetIndex{std::size_t{2}}, NetIndex{std::size_t{5}})));
  CHECK(to_string(a) == "{1,3}");
}

TEST_CASE("generating triple validation") {
  CHECK_THROWS(GeneratingTriple::make("x", {{"s", GeneratorKind::partial_isometry}},
                                      {{"r", parse_term("s.t"), 0, RelationOrigin::user}}, {}));
  CHECK_THROWS(GeneratingTriple::make("x", {{"s", GeneratorKind::partial_isometry}},
                                      {{"r", parse_term("s - 1"), 0, RelationOrigin::user}}, {}));
  CHECK_THROWS(GeneratingTriple::make("x", {{"s", GeneratorKind::partial_isometry}, {"s", GeneratorKind::projection}},
                                      {}, {}));
  GeneratingTriple p = GeneratingTriple::make("x", {{"p", GeneratorKind::projection}}, {}, {});
  CHECK(has_relation(p, "p:selfadjoint", parse_term("p - p'")));
  CHECK(has_relation(p, "p:idempotent", parse_term("p.p - p")));
}
