#include <doctest.h>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/decompose.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/harness/oracles.hpp"

using namespace ringlab;

namespace {

Certificate certificate(const Decomposition& d) {
  REQUIRE(std::holds_alternative<Certificate>(d));
  return std::get<Certificate>(d);
}

}  // namespace

TEST_CASE("names round-trip with loose matching") {
  for (auto p : kAllRingPredicates) CHECK(ring_predicate_from_string(to_string(p)) == p);
  CHECK(decomposition_kind_from_string("tfine") == DecompositionKind::TFine);
  CHECK(decomposition_kind_from_string("weakly-periodic") == DecompositionKind::WeaklyPeriodic);
  CHECK(decomposition_kind_from_string("strongly_nil_clean") == DecompositionKind::StronglyNilClean);
  CHECK_FALSE(decomposition_kind_from_string("fancy").has_value());
  CHECK(role_a(DecompositionKind::TFine) == Role::TorsionUnit);
  CHECK(role_b(DecompositionKind::Clean) == Role::Idempotent);
  CHECK(requires_commuting(DecompositionKind::StronglySemiNilClean));
  CHECK_FALSE(requires_commuting(DecompositionKind::SemiNilClean));
}

TEST_CASE("decompositions in Z/4") {
  const auto z4 = realize("Z/4");
  const auto t1 = certificate(decompose(z4, 1, DecompositionKind::TFine));
  CHECK(t1.part_a == 1);
  CHECK(t1.part_b == 0);
  CHECK(t1.witness_a.first == 1);

  const auto t3 = certificate(decompose(z4, 3, DecompositionKind::TFine));
  CHECK(t3.part_a == 3);
  CHECK(t3.part_b == 0);
  CHECK(t3.witness_a.first == 2);

  const auto failure = decompose(z4, 2, DecompositionKind::TFine);
  REQUIRE(std::holds_alternative<ExhaustiveFailure>(failure));
  CHECK(std::get<ExhaustiveFailure>(failure).search_space_size == 2);
  CHECK(std::get<ExhaustiveFailure>(failure).enumerated == 2);
  CHECK(std::holds_alternative<ExhaustiveFailure>(decompose(z4, 2, DecompositionKind::Fine)));

  const auto nc = certificate(decompose(z4, 3, DecompositionKind::NilClean));
  CHECK(nc.part_a == 1);
  CHECK(nc.part_b == 2);
  CHECK(nc.witness_b.first == 2);

  const auto cl = certificate(decompose(z4, 0, DecompositionKind::Clean));
  CHECK(cl.part_a == 3);
  CHECK(cl.part_b == 1);

  CHECK_THROWS_AS(decompose(z4, 0, DecompositionKind::TFine), ZeroNotEligible);
  CHECK_THROWS_AS(decompose(z4, 0, DecompositionKind::Fine), ZeroNotEligible);
  CHECK_THROWS_AS(decompose(z4, 9, DecompositionKind::Clean), InvalidSpec);
}

TEST_CASE("strong kinds record commutation") {
  const auto m2 = realize("M(2,Z/2)");
  for (Handle x = 0; x < m2.order(); ++x) {
    const auto d = decompose(m2, x, DecompositionKind::StronglyNilClean);
    if (const auto* c = std::get_if<Certificate>(&d)) {
      CHECK(c->commuting);
      CHECK(m2.mul(c->part_a, c->part_b) == m2.mul(c->part_b, c->part_a));
    }
  }
  // I + E12 is unipotent, so the identity part commutes with the nilpotent part.
  const Handle x = m2.parse_element("I+E12");
  CHECK(std::holds_alternative<Certificate>(decompose(m2, x, DecompositionKind::StronglyNilClean)));
  const auto d = decompose(m2, m2.parse_element("E11+E12"), DecompositionKind::StronglyNilClean);
  if (const auto* c = std::get_if<Certificate>(&d)) CHECK(verify_certificate(m2, *c));
}

TEST_CASE("every certificate verifies, every failure is confirmed by search") {
  for (const char* spec : {"Z/6", "Z/8", "M(2,Z/2)", "UT(2,Z/3)", "GR(Z/2,C3)"}) {
    CAPTURE(spec);
    const auto r = realize(spec);
    const auto& nil = nilpotent_mask(r);
    const auto& unit = unit_mask(r);
    for (auto kind : {DecompositionKind::SemiNilClean, DecompositionKind::StronglySemiNilClean,
                      DecompositionKind::WeaklyPeriodic, DecompositionKind::Clean, DecompositionKind::NilClean,
                      DecompositionKind::StronglyNilClean, DecompositionKind::SemiClean, DecompositionKind::Fine,
                      DecompositionKind::TFine}) {
      for (Handle x = 0; x < r.order(); ++x) {
        if (x == 0 && (kind == DecompositionKind::Fine || kind == DecompositionKind::TFine)) continue;
        const auto d = decompose(r, x, kind);
        if (const auto* c = std::get_if<Certificate>(&d)) {
          CHECK(verify_certificate(r, *c));
          CHECK(r.add(c->part_a, c->part_b) == x);
        } else if (kind == DecompositionKind::Fine || kind == DecompositionKind::TFine) {
          // Independent confirmation: no nilpotent n leaves a unit x - n.
          for (Handle n = 0; n < r.order(); ++n)
            if (nil[n]) CHECK_FALSE(unit[r.sub(x, n)]);
        }
      }
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  const auto z4 = realize("Z/4");
  const auto good = certificate(decompose(z4, 3, DecompositionKind::NilClean));
  REQUIRE(verify_certificate(z4, good));

  auto bad_b = good;
  bad_b.part_b = 1;
  CHECK(verify_certificate(z4, bad_b).reason == VerifyReason::PartBNotNilpotent);

  auto bad_sum = good;
  bad_sum.target = 1;
  CHECK(verify_certificate(z4, bad_sum).reason == VerifyReason::SumMismatch);

  auto bad_a = good;
  bad_a.part_a = 3;
  bad_a.target = 1;
  CHECK(verify_certificate(z4, bad_a).reason == VerifyReason::PartANotIdempotent);

  auto bad_range = good;
  bad_range.part_a = 17;
  CHECK(verify_certificate(z4, bad_range).reason == VerifyReason::HandleOutOfRange);

  auto bad_role = good;
  bad_role.witness_a.role = Role::Unit;
  CHECK(verify_certificate(z4, bad_role).reason == VerifyReason::RoleMismatch);

  auto fine = certificate(decompose(z4, 1, DecompositionKind::TFine));
  fine.target = 0;
  fine.part_b = 3;
  CHECK(verify_certificate(z4, fine).reason == VerifyReason::ZeroTarget);
}

TEST_CASE("certificate JSON round trip") {
  const auto r = realize("M(2,Z/3)");
  for (Handle x : {Handle{1}, Handle{5}, Handle{40}, Handle{80}}) {
    for (auto kind : {DecompositionKind::TFine, DecompositionKind::SemiNilClean, DecompositionKind::Clean}) {
      const auto d = decompose(r, x, kind);
      if (const auto* c = std::get_if<Certificate>(&d)) {
        const auto back = certificate_from_json(nlohmann::json::parse(to_json(*c).dump()));
        CHECK(back == *c);
      } else {
        const auto& f = std::get<ExhaustiveFailure>(d);
        CHECK(failure_from_json(nlohmann::json::parse(to_json(f).dump())) == f);
      }
    }
  }
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"kind":"TFine"})")), ParseError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"kind":"Nope","target":1})")), ParseError);
}

TEST_CASE("ring predicates on small rings") {
  const auto z4 = realize("Z/4");
  const auto tfine = ring_predicate(z4, RingPredicate::TFine);
  CHECK_FALSE(tfine.holds);
  CHECK(tfine.counterexample == Handle{2});
  CHECK(tfine.checked == 2);
  REQUIRE(tfine.failure.has_value());
  CHECK(tfine.failure->target == 2);
  CHECK(ring_predicate(z4, RingPredicate::NilClean).holds);
  CHECK(ring_predicate(z4, RingPredicate::Clean).holds);
  CHECK(ring_predicate(z4, RingPredicate::Periodic).holds);
  CHECK(ring_predicate(z4, RingPredicate::UU).holds);
  CHECK(ring_predicate(z4, RingPredicate::UU).checked == 2);

  const auto z3 = realize("Z/3");
  const auto nc = ring_predicate(z3, RingPredicate::NilClean);
  CHECK_FALSE(nc.holds);
  CHECK(nc.counterexample == Handle{2});
  CHECK(ring_predicate(z3, RingPredicate::TFine).holds);
  CHECK(ring_predicate(z3, RingPredicate::Fine).holds);
  CHECK_FALSE(ring_predicate(z3, RingPredicate::UU).holds);

  // Cross-check against the brute-force oracles.
  for (const char* spec : {"Z/2", "Z/6", "Z/9", "GF(2,2)", "M(2,Z/2)", "UT(2,Z/2)", "GR(Z/3,C2)"}) {
    CAPTURE(spec);
    const auto r = realize(spec);
    const auto res = ring_predicate(r, RingPredicate::TFine);
    CHECK(res.holds == !oracle::tfine_counterexample(r).has_value());
    if (!res.holds) CHECK(res.counterexample == oracle::tfine_counterexample(r));
    const auto ncr = ring_predicate(r, RingPredicate::NilClean);
    CHECK(ncr.counterexample == oracle::nil_clean_counterexample(r));
  }
  CHECK(ring_predicate(realize("M(2,Z/2)"), RingPredicate::TFine).holds);
}

TEST_CASE("predicate results do not depend on the job count") {
  for (const char* spec : {"Z/12", "M(2,Z/3)", "UT(2,Z/4)", "GR(Z/4,C2)"}) {
    CAPTURE(spec);
    const auto r = realize(spec);
    for (auto p : kAllRingPredicates) {
      CAPTURE(to_string(p));
      const auto a = ring_predicate(r, p, 1);
      const auto b = ring_predicate(r, p, 4);
      CHECK(a.holds == b.holds);
      CHECK(a.checked == b.checked);
      CHECK(a.counterexample == b.counterexample);
      CHECK(a.failure == b.failure);
    }
  }
}
