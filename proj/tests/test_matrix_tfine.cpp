#include <doctest.h>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/matrix_tfine.hpp"

using namespace ringlab;

namespace {

/// Checks d against the realized matrix ring, which shares no arithmetic with MatrixAlgebra.
void check_against_realized(const FiniteRing& mring, const MatrixAlgebra& alg, const SquareMatrix& m,
                            const MatrixDecomposition& d) {
  const auto hm = static_cast<Handle>(alg.encode(m));
  const auto hu = static_cast<Handle>(alg.encode(d.unit));
  const auto hn = static_cast<Handle>(alg.encode(d.nilpotent));
  CHECK(mring.add(hu, hn) == hm);
  CHECK(is_nilpotent(mring, hn).witness == d.nilpotency_index);
  CHECK(is_torsion_unit(mring, hu).witness == d.unit_order);
}

}  // namespace

TEST_CASE("matrix algebra basics") {
  const auto f2 = realize("Z/2");
  const MatrixAlgebra alg(f2, 2);
  CHECK(alg.count() == 16);
  CHECK(alg.mul(alg.parse("E12"), alg.parse("E21")) == alg.parse("E11"));
  CHECK(alg.format(alg.parse("I+E12")) == "[[1,1],[0,1]]");
  CHECK(alg.nilpotency_index(alg.parse("E12")) == std::uint64_t{2});
  CHECK_FALSE(alg.nilpotency_index(alg.parse("E11")).has_value());
  CHECK(alg.unit_order(alg.parse("[[0,1],[1,1]]")) == std::uint64_t{3});
  CHECK_FALSE(alg.unit_order(alg.parse("E11")).has_value());
  for (std::uint64_t i = 0; i < alg.count(); ++i) CHECK(alg.encode(alg.decode(i)) == i);

  // Handles agree with the realized matrix ring.
  const auto m2 = realize("M(2,Z/2)");
  for (Handle a = 0; a < 16; ++a)
    for (Handle b = 0; b < 16; ++b) CHECK(alg.encode(alg.mul(alg.decode(a), alg.decode(b))) == m2.mul(a, b));

  const auto z5 = realize("Z/5");
  const MatrixAlgebra big(z5, 3);
  CHECK(big.count() == 1953125);
  const auto z9 = realize("Z/9");
  const MatrixAlgebra huge(z9, 30);
  CHECK(huge.count() == UINT64_MAX);
}

TEST_CASE("one as a sum of two units") {
  const auto z5 = realize("Z/5");
  const auto s = one_as_two_units(z5);
  CHECK(s.u == 2);
  CHECK(s.v == 4);
  const auto gf4 = realize("GF(2,2)");
  const auto g = one_as_two_units(gf4);
  CHECK(g.u == gf4.parse_element("a"));
  CHECK(g.v == gf4.parse_element("a+1"));
  CHECK_THROWS_AS(one_as_two_units(realize("Z/2")), NoSolution);
  CHECK_THROWS_AS(one_as_two_units(realize("Z/4")), NoSolution);
}

TEST_CASE("similarity normalization") {
  const auto f3 = realize("Z/3");
  const MatrixAlgebra alg(f3, 2);
  const auto id = similarity_normalize(alg, alg.parse("I"), 100);
  CHECK(id.description == "identity");
  CHECK(id.tried == 1);

  const auto e21 = similarity_normalize(alg, alg.parse("E21"), 100);
  CHECK(e21.description != "identity");

  for (const char* text : {"E12", "E22", "E11", "E21", "[[1,2],[0,0]]"}) {
    CAPTURE(text);
    const auto m = alg.parse(text);
    const auto s = similarity_normalize(alg, m, 1000);
    CHECK(alg.mul(s.P, s.P_inv) == alg.identity());
    CHECK(s.conjugated == alg.mul(alg.mul(s.P, m), s.P_inv));
    CHECK(s.conjugated.at(1, 1) != 0);
    CHECK(s.conjugated.at(0, 0) != 0);
  }
  CHECK_THROWS_AS(similarity_normalize(alg, alg.parse("E22"), 3), BudgetExhausted);
  CHECK_THROWS_AS(similarity_normalize(alg, alg.zero(), 10), ZeroMatrix);
}

TEST_CASE("recursive decomposition over F_2 and F_3") {
  const auto f2 = realize("Z/2");
  const MatrixAlgebra a2(f2, 2);
  const auto d = tfine_decompose_matrix(a2, a2.parse("E11"));
  CHECK(a2.format(d.unit) == "[[0,1],[1,1]]");
  CHECK(a2.format(d.nilpotent) == "[[1,1],[1,1]]");
  CHECK(d.trace.front().method == "exhaustive");

  const auto f3 = realize("Z/3");
  const MatrixAlgebra a3(f3, 2);
  const auto e = tfine_decompose_matrix(a3, a3.parse("E12"));
  CHECK(verify_matrix_decomposition(a3, a3.parse("E12"), e));
  REQUIRE(!e.trace.empty());
  CHECK(e.trace.front().method == "block");
  CHECK(e.trace.front().diagonal_exponent > 0);
  CHECK(e.trace.back().method == "scalar");

  CHECK_THROWS_AS(tfine_decompose_matrix(a3, a3.zero()), ZeroMatrix);
}

TEST_CASE("complete agreement with the generic decomposer") {
  for (const char* base : {"Z/3", "GF(2,2)", "Z/2"}) {
    CAPTURE(base);
    const auto r = realize(base);
    const MatrixAlgebra alg(r, 2);
    const auto mring = realize("M(2," + std::string(base) + ")");
    for (std::uint64_t i = 1; i < alg.count(); ++i) {
      const auto m = alg.decode(i);
      const auto generic = decompose(mring, static_cast<Handle>(i), DecompositionKind::TFine);
      REQUIRE(std::holds_alternative<Certificate>(generic));
      const auto d = tfine_decompose_matrix(alg, m);
      CHECK(verify_matrix_decomposition(alg, m, d));
      check_against_realized(mring, alg, m, d);
      for (const auto& step : d.trace) CHECK(step.method != "fallback");
    }
  }
}

TEST_CASE("3 x 3 matrices over F_2 and F_3") {
  const auto f2 = realize("Z/2");
  const MatrixAlgebra a2(f2, 3);
  const auto m3 = realize("M(3,Z/2)");
  for (std::uint64_t i = 1; i < a2.count(); i += 7) {
    const auto m = a2.decode(i);
    const auto d = tfine_decompose_matrix(a2, m);
    CHECK(verify_matrix_decomposition(a2, m, d));
    check_against_realized(m3, a2, m, d);
  }
  const auto f3 = realize("Z/3");
  const MatrixAlgebra a3(f3, 3);
  for (std::uint64_t i = 1; i < a3.count(); i += 997) {
    const auto m = a3.decode(i);
    CHECK(verify_matrix_decomposition(a3, m, tfine_decompose_matrix(a3, m)));
  }
}

TEST_CASE("fallback and budgets") {
  const auto f3 = realize("Z/3");
  const MatrixAlgebra alg(f3, 2);
  const auto m = alg.parse("E22");
  SearchBudget no_similarity{0, 10'000'000};
  const auto d = tfine_decompose_matrix(alg, m, no_similarity);
  CHECK(d.trace.front().method == "fallback");
  CHECK(verify_matrix_decomposition(alg, m, d));

  const auto direct = exhaustive_matrix_decomposition(alg, m, 1000);
  REQUIRE(direct.has_value());
  CHECK(direct->nilpotent == d.nilpotent);

  CHECK_THROWS_AS(tfine_decompose_matrix(alg, m, SearchBudget{0, 0}), BudgetExhausted);

  bool exhausted = true;
  CHECK_FALSE(exhaustive_matrix_decomposition(alg, m, 0, 1, &exhausted).has_value());
  CHECK_FALSE(exhausted);
}

TEST_CASE("exhaustive search is independent of the job count") {
  const auto f2 = realize("Z/2");
  const MatrixAlgebra alg(f2, 3);
  for (std::uint64_t i = 1; i < alg.count(); i += 37) {
    const auto m = alg.decode(i);
    const auto a = exhaustive_matrix_decomposition(alg, m, 1'000'000, 1);
    const auto b = exhaustive_matrix_decomposition(alg, m, 1'000'000, 4);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->nilpotent == b->nilpotent);
    CHECK(a->trace.front().probes == b->trace.front().probes);
  }
}

TEST_CASE("non t-fine base rings are reported") {
  const auto z4 = realize("Z/4");
  const MatrixAlgebra alg(z4, 2);
  CHECK_THROWS_AS(tfine_decompose_matrix(alg, alg.parse("2*I")), NotTFineBase);
  CHECK(verify_matrix_decomposition(alg, alg.parse("I"), tfine_decompose_matrix(alg, alg.parse("I"))));
}

TEST_CASE("tampered matrix decompositions fail verification") {
  const auto f3 = realize("Z/3");
  const MatrixAlgebra alg(f3, 2);
  const auto m = alg.parse("E12");
  auto d = tfine_decompose_matrix(alg, m);
  auto bad = d;
  bad.nilpotent = alg.parse("E11");
  CHECK_FALSE(verify_matrix_decomposition(alg, m, bad));
  bad = d;
  bad.unit = alg.add(bad.unit, alg.identity());
  CHECK_FALSE(verify_matrix_decomposition(alg, m, bad));
}
