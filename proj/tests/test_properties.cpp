#include <doctest.h>

#include <random>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/decompose.hpp"
#include "ringlab/harness/catalog.hpp"
#include "ringlab/matrix_tfine.hpp"

using namespace ringlab;

namespace {

Handle pick(std::mt19937_64& rng, const FiniteRing& r) {
  return static_cast<Handle>(std::uniform_int_distribution<std::size_t>(0, r.order() - 1)(rng));
}

}  // namespace

TEST_CASE("format and parse are inverse on the catalog") {
  std::mt19937_64 rng(7);
  for (const auto& spec : default_catalog()) {
    CAPTURE(spec);
    const auto r = realize(spec);
    for (int i = 0; i < 64; ++i) {
      const Handle x = pick(rng, r);
      CAPTURE(r.format(x));
      CHECK(r.parse_element(r.format(x)) == x);
      CHECK(r.parse_element("#" + std::to_string(x)) == x);
    }
  }
}

TEST_CASE("power laws on random elements") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> exp(0, 40);
  for (const auto& spec : default_catalog()) {
    CAPTURE(spec);
    const auto r = realize(spec);
    for (int i = 0; i < 32; ++i) {
      const Handle x = pick(rng, r);
      const auto a = exp(rng), b = exp(rng);
      CHECK(r.pow(x, a + b) == r.mul(r.pow(x, a), r.pow(x, b)));
      CHECK(r.pow(r.pow(x, a), b) == r.pow(x, a * b));
      const auto p = power_profile(r, x);
      // Beyond m the sequence is periodic with period n - m.
      CHECK(r.pow(x, p.m + a * (p.n - p.m)) == r.pow(x, p.m));
    }
  }
}

TEST_CASE("random certificates verify") {
  std::mt19937_64 rng(13);
  const DecompositionKind kinds[] = {DecompositionKind::SemiNilClean, DecompositionKind::WeaklyPeriodic,
                                     DecompositionKind::Clean,        DecompositionKind::NilClean,
                                     DecompositionKind::SemiClean,    DecompositionKind::TFine};
  for (const auto& spec : default_catalog()) {
    CAPTURE(spec);
    const auto r = realize(spec);
    for (int i = 0; i < 16; ++i) {
      const Handle x = static_cast<Handle>(1 + pick(rng, r) % (r.order() - 1));
      const auto kind = kinds[rng() % std::size(kinds)];
      const auto d = decompose(r, x, kind);
      if (const auto* c = std::get_if<Certificate>(&d)) {
        CHECK(verify_certificate(r, *c));
      } else {
        const auto& f = std::get<ExhaustiveFailure>(d);
        CHECK(f.enumerated == f.search_space_size);
      }
    }
  }
}

TEST_CASE("random matrices over t-fine bases decompose") {
  std::mt19937_64 rng(17);
  for (auto [base, n] : {std::pair{"GF(2,2)", 3}, std::pair{"Z/5", 3}, std::pair{"GF(3,2)", 2}, std::pair{"Z/7", 4},
                         std::pair{"Z/2", 4}}) {
    CAPTURE(base);
    CAPTURE(n);
    const auto r = realize(base);
    const MatrixAlgebra alg(r, static_cast<std::size_t>(n));
    for (int i = 0; i < 12; ++i) {
      SquareMatrix m{alg.size(), std::vector<Handle>(alg.size() * alg.size())};
      for (auto& e : m.entries) e = pick(rng, r);
      if (alg.is_zero(m)) continue;
      const auto d = tfine_decompose_matrix(alg, m);
      CHECK(verify_matrix_decomposition(alg, m, d));
      CHECK(alg.add(d.unit, d.nilpotent) == m);
      CHECK(alg.pow(d.unit, d.unit_order) == alg.identity());
      CHECK(alg.is_zero(alg.pow(d.nilpotent, d.nilpotency_index)));
    }
  }
}
