#include <doctest.h>

#include <set>

#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/harness/catalog.hpp"
#include "ringlab/harness/oracles.hpp"
#include "ringlab/harness/report.hpp"
#include "ringlab/harness/suites.hpp"

using namespace ringlab;

TEST_CASE("default catalog") {
  const auto& cat = default_catalog();
  CHECK(cat.size() >= 25);
  std::set<RingSpec::Kind> kinds;
  for (const auto& spec : cat) {
    CAPTURE(spec);
    const auto r = realize(spec);
    CHECK(r.order() <= 4096);
    kinds.insert(r.spec().kind);
  }
  CHECK(kinds.size() == 8);
  for (const auto& [coeff, group] : default_group_ring_pairs()) {
    CAPTURE(coeff);
    CAPTURE(group);
    CHECK_NOTHROW(parse_ring_spec(coeff));
    CHECK_NOTHROW(parse_group_spec(group));
  }
}

TEST_CASE("classification report") {
  const auto r = realize("Z/4");
  const auto j = classification_report(r, {1, true});
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["spec"] == "Z/4");
  CHECK(j["order"] == 4);
  CHECK(j["characteristic"] == 4);
  CHECK(j["commutative"] == true);
  CHECK(j["subsets"]["units"] == 2);
  CHECK(j["subsets"]["nilpotents"] == 2);
  CHECK(j["elements"]["nilpotents"] == nlohmann::ordered_json::array({"0", "2"}));
  CHECK(j["predicates"]["TFine"]["holds"] == false);
  CHECK(j["predicates"]["TFine"]["counterexample"]["handle"] == 2);
  CHECK(j["predicates"]["NilClean"]["holds"] == true);
  CHECK(j["structure"]["NI"] == true);
  CHECK(j["structure"]["unit_group"]["class"] == 1);
  CHECK_FALSE(j.contains("timing"));
  CHECK(classification_report(r, {1, false}).contains("timing"));

  const auto capped = classification_report(realize("M(2,Z/3)"), {1, true, 10});
  CHECK(capped["structure"]["unit_group"].contains("error"));

  const auto md = report_markdown(j);
  CHECK(md.find("# Z/4") == 0);
  CHECK(md.find("| TFine | false | `2` |") != std::string::npos);
}

TEST_CASE("stable reports are identical across runs and job counts") {
  for (const char* spec : {"M(2,Z/2)", "GR(Z/2,C3)", "UT(2,Z/4)"}) {
    CAPTURE(spec);
    const auto a = classification_report(realize(spec), {1, true}).dump();
    const auto b = classification_report(realize(spec), {8, true}).dump();
    CHECK(a == b);
  }
}

TEST_CASE("decomposition report") {
  const auto r = realize("Z/4");
  const auto ok = decomposition_report(r, 3, DecompositionKind::NilClean);
  CHECK(ok["result"] == "certificate");
  CHECK(ok["verified"] == true);
  CHECK(ok["parts"]["part_a"] == "1");
  CHECK(ok["parts"]["part_b"] == "2");
  const auto fail = decomposition_report(r, 2, DecompositionKind::TFine);
  CHECK(fail["result"] == "exhaustive_failure");
  CHECK(fail["failure"]["search_space_size"] == 2);
}

TEST_CASE("oracle sanity") {
  CHECK(oracle::is_field(realize("GF(3,2)")));
  CHECK_FALSE(oracle::is_field(realize("Z/9")));
  CHECK(oracle::jacobson_by_maximal_left_ideals(realize("Z/8")) == std::vector<Handle>{0, 2, 4, 6});
  CHECK(oracle::jacobson_by_maximal_left_ideals(realize("M(2,Z/2)")) == std::vector<Handle>{0});
  CHECK_THROWS_AS(oracle::jacobson_by_maximal_left_ideals(realize("Z/32")), CapExceeded);
  CHECK(oracle::count_additive_endomorphisms({2, 2}) == 16);
  CHECK(oracle::count_additive_endomorphisms({4}) == 4);
  CHECK(oracle::count_additive_endomorphisms({3, 9}) == 3 * 3 * 3 * 9);
  CHECK(oracle::tfine_counterexample(realize("Z/4")) == Handle{2});
  CHECK_FALSE(oracle::tfine_counterexample(realize("GF(2,2)")).has_value());
  CHECK_FALSE(oracle::find_isomorphism(realize("Z/4"), realize("GF(2,2)")).has_value());
  CHECK_FALSE(oracle::find_isomorphism(realize("Z/4"), realize("Prod(Z/2,Z/2)")).has_value());
  CHECK(oracle::find_isomorphism(realize("Z/6"), realize("Prod(Z/2,Z/3)")).has_value());
}

TEST_CASE("trivializations hold on small rings") {
  for (const char* spec : {"Z/12", "M(2,Z/2)", "UT(2,Z/3)", "GR(Z/2,C4)", "End(Ab[2,4])"}) {
    CAPTURE(spec);
    const auto failures = trivialization_failures(realize(spec));
    CHECK(failures.empty());
  }
}

TEST_CASE("suites") {
  const auto c1 = run_acceptance_check(1);
  CHECK(c1.id == "1");
  CHECK(c1.pass);
  const auto c9 = run_acceptance_check(9);
  CHECK(c9.pass);
  CHECK_FALSE(run_suite("nonexistent").has_value());
  SuiteResult s{"demo", {c1, c9}};
  CHECK(s.all_pass());
  const auto j = to_json(s);
  CHECK(j["checks"].size() == 2);
  CHECK(format_table(s).find("PASS") != std::string::npos);
}
