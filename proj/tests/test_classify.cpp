#include <doctest.h>

#include <algorithm>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/harness/oracles.hpp"

using namespace ringlab;

namespace {

std::vector<Handle> v(std::initializer_list<Handle> xs) { return xs; }

}  // namespace

TEST_CASE("power profiles in Z/4") {
  const auto z4 = realize("Z/4");
  const auto p2 = power_profile(z4, 2);
  CHECK(p2.m == 2);
  CHECK(p2.n == 3);
  CHECK(p2.kind == PowerProfile::Class::Nilpotent);
  CHECK(p2.exponent == 2);
  const auto p3 = power_profile(z4, 3);
  CHECK(p3.m == 1);
  CHECK(p3.n == 3);
  CHECK(p3.kind == PowerProfile::Class::TorsionUnit);
  CHECK(p3.exponent == 2);
  const auto p0 = power_profile(z4, 0);
  CHECK(p0.m == 1);
  CHECK(p0.n == 2);
  CHECK(p0.kind == PowerProfile::Class::Nilpotent);
  CHECK(p0.exponent == 1);
}

TEST_CASE("power profiles satisfy their defining identity") {
  for (const char* spec : {"Z/12", "M(2,Z/2)", "UT(2,Z/4)", "GR(Z/2,C3)", "End(Ab[2,4])"}) {
    CAPTURE(spec);
    const auto r = realize(spec);
    for (Handle x = 0; x < r.order(); ++x) {
      const auto p = power_profile(r, x);
      REQUIRE(p.m < p.n);
      CHECK(r.pow(x, p.m) == r.pow(x, p.n));
      // Minimality: no earlier repeat.
      for (std::uint64_t j = 1; j < p.n; ++j)
        for (std::uint64_t i = 1; i < j; ++i)
          if (j < p.n - 1 || i < p.m) CHECK(r.pow(x, i) != r.pow(x, j));
    }
  }
}

TEST_CASE("idempotent powers") {
  const auto z6 = realize("Z/6");
  CHECK(idempotent_power(z6, 2) == 2);
  CHECK(idempotent_power(z6, 3) == 1);
  CHECK(idempotent_power(z6, 5) == 2);
  const auto z4 = realize("Z/4");
  CHECK(idempotent_power(z4, 2) == 2);
  CHECK(idempotent_power(z4, 1) == 1);
}

TEST_CASE("memberships") {
  const auto z4 = realize("Z/4");
  CHECK(is_nilpotent(z4, 2).member);
  CHECK(is_nilpotent(z4, 2).witness == 2);
  CHECK_FALSE(is_nilpotent(z4, 3));
  CHECK(is_unit(z4, 3).witness == 2);
  CHECK(is_torsion_unit(z4, 3));
  CHECK(is_idempotent(z4, 1));
  CHECK_FALSE(is_idempotent(z4, 2));
  CHECK(is_unipotent(z4, 3));
  CHECK(is_unipotent(z4, 3).witness == 2);
  CHECK_FALSE(is_potent(z4, 2));
  const auto z6 = realize("Z/6");
  CHECK(is_potent(z6, 2).witness == 3);
  CHECK(is_potent(z6, 5).witness == 3);
  CHECK(is_potent(z6, 3).witness == 2);
}

TEST_CASE("structural subsets") {
  const auto z4 = realize("Z/4");
  const auto s4 = structural_subsets(z4);
  CHECK(s4.units == v({1, 3}));
  CHECK(s4.nilpotents == v({0, 2}));
  CHECK(s4.idempotents == v({0, 1}));
  CHECK(s4.jacobson == v({0, 2}));
  CHECK(s4.unipotents == v({1, 3}));
  CHECK(s4.center.size() == 4);

  const auto m2 = realize("M(2,Z/2)");
  const auto sm = structural_subsets(m2);
  CHECK(sm.units.size() == 6);
  CHECK(sm.nilpotents.size() == 4);
  CHECK(sm.idempotents.size() == 8);
  CHECK(sm.jacobson == v({0}));
  CHECK(sm.center.size() == 2);
  CHECK(sm.torsion_units == sm.units);

  const auto z6 = realize("Z/6");
  const auto s6 = structural_subsets(z6);
  CHECK(s6.units == v({1, 5}));
  CHECK(s6.nilpotents == v({0}));
  CHECK(s6.idempotents == v({0, 1, 3, 4}));
  CHECK(s6.potents.size() == 6);
}

TEST_CASE("subsets agree with brute-force oracles") {
  for (const char* spec : {"Z/8", "Z/12", "GF(2,2)", "M(2,Z/2)", "UT(2,Z/3)", "GR(Z/2,C4)", "End(Ab[2,4])",
                           "Prod(Z/4,Z/3)", "M(2,Z/4)"}) {
    CAPTURE(spec);
    const auto r = realize(spec);
    CHECK(units(r) == oracle::units(r));
    CHECK(units(r) == units_by_inverse_search(r));
    CHECK(nilpotents(r) == oracle::nilpotents(r));
    CHECK(idempotents(r) == oracle::idempotents(r));
    CHECK(jacobson(r) == jacobson_right(r));
    if (r.order() <= 16) CHECK(jacobson(r) == oracle::jacobson_by_maximal_left_ideals(r));
  }
}

TEST_CASE("NI and weakly 2-primal") {
  CHECK(is_NI(realize("Z/8")));
  CHECK(is_NI(realize("UT(2,Z/2)")));
  CHECK_FALSE(is_NI(realize("M(2,Z/2)")));
  CHECK_FALSE(nil_additively_closed(realize("M(2,Z/2)")));
  CHECK_FALSE(is_weakly_2_primal(realize("M(2,Z/2)")));
  CHECK(is_weakly_2_primal(realize("UT(2,Z/2)")));
  CHECK(is_weakly_2_primal(realize("Z/8")));
  CHECK(nilpotence_index_bound(realize("Z/8")) == 3);
  CHECK(nilpotence_index_bound(realize("M(2,Z/2)")) == 2);
  CHECK(nilpotence_index_bound(realize("GF(2,2)")) == 1);
}

TEST_CASE("unit group nilpotency") {
  const auto m2 = unit_group_is_nilpotent(realize("M(2,Z/2)"));
  CHECK(m2.unit_group_order == 6);
  CHECK_FALSE(m2.nilpotent);
  const auto z8 = unit_group_is_nilpotent(realize("Z/8"));
  CHECK(z8.nilpotent);
  CHECK(z8.nilpotency_class == 1);
  CHECK(z8.unit_group_order == 4);
  const auto gf4 = unit_group_is_nilpotent(realize("GF(2,2)"));
  CHECK(gf4.nilpotent);
  CHECK(gf4.nilpotency_class == 1);
  // U(UT(3,Z/2)) is the dihedral group of order 8, class 2.
  const auto ut3 = unit_group_is_nilpotent(realize("UT(3,Z/2)"));
  CHECK(ut3.unit_group_order == 8);
  CHECK(ut3.nilpotent);
  CHECK(ut3.nilpotency_class == 2);
  CHECK_THROWS_AS(unit_group_is_nilpotent(realize("M(2,Z/3)"), 10), CapExceeded);
}

TEST_CASE("polynomial periodicity") {
  const auto z4 = realize("Z/4");
  {
    const auto verdict = poly_element_periodic(z4, {0, 2});
    REQUIRE(std::holds_alternative<Periodic>(verdict));
    CHECK(std::get<Periodic>(verdict).m == 2);
    CHECK(std::get<Periodic>(verdict).n == 3);
  }
  {
    const auto verdict = poly_element_periodic(z4, {1, 2});
    REQUIRE(std::holds_alternative<Periodic>(verdict));
    CHECK(std::get<Periodic>(verdict).m == 1);
    CHECK(std::get<Periodic>(verdict).n == 3);
  }
  CHECK(std::holds_alternative<NotPeriodic>(poly_element_periodic(z4, {0, 1})));
  CHECK(std::holds_alternative<NotPeriodic>(poly_element_periodic(z4, {2, 0, 3})));
  const auto z6 = realize("Z/6");
  const auto unknown = poly_element_periodic(z6, {0, 3}, 20);
  REQUIRE(std::holds_alternative<UnknownUpToBound>(unknown));
  CHECK(std::get<UnknownUpToBound>(unknown).bound == 20);
  CHECK_THROWS_AS(poly_element_periodic(realize("M(2,Z/2)"), {0, 1}), NotCommutative);
}

TEST_CASE("cached subsets are shared between copies") {
  const auto r = realize("Z/9");
  const auto copy = r;
  CHECK(&units(r) == &units(copy));
}
