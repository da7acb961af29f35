#include <doctest.h>

#include <algorithm>

#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/group.hpp"
#include "ringlab/harness/oracles.hpp"

using namespace ringlab;

TEST_CASE("realize: orders and characteristics") {
  struct Case {
    const char* spec;
    std::size_t order;
    std::uint64_t characteristic;
  };
  for (auto c : {Case{"Z/4", 4, 4}, Case{"M(2,Z/2)", 16, 2}, Case{"GR(Z/4,C2)", 16, 4}, Case{"GF(2,2)", 4, 2},
                 Case{"GF(3,2)", 9, 3}, Case{"UT(2,Z/4)", 64, 4}, Case{"UT(3,Z/2)", 64, 2}, Case{"Prod(Z/2,Z/3)", 6, 6},
                 Case{"Prod(Z/2,Z/3,Z/5)", 30, 30}, Case{"GR(Z/2,C2xC2)", 16, 2}, Case{"GR(Z/3,D3)", 729, 3},
                 Case{"Quot(Z/8,[4])", 4, 4}, Case{"End(Ab[2,2])", 16, 2}, Case{"End(Ab[4])", 4, 4},
                 Case{"M(2,M(2,Z/2))", 65536, 2}}) {
    CAPTURE(c.spec);
    const auto r = realize(c.spec);
    CHECK(r.order() == c.order);
    CHECK(r.characteristic() == c.characteristic);
    CHECK(r.zero() == 0);
  }
}

TEST_CASE("realize: GF(q) shorthand and canonical spec strings") {
  CHECK(realize("GF(4)").spec().to_string() == "GF(2,2)");
  CHECK(realize("GF(7)").spec().to_string() == "GF(7)");
  CHECK(parse_ring_spec(" M( 2 , GF(2) ) ").to_string() == "M(2,GF(2))");
  CHECK(parse_ring_spec("GR(Z/2,C2xC2)").to_string() == "GR(Z/2,C2xC2)");
}

TEST_CASE("realize: errors") {
  CHECK_THROWS_AS(realize("Z/1"), InvalidSpec);
  CHECK_THROWS_AS(realize("GF(6,1)"), InvalidSpec);
  CHECK_THROWS_AS(realize("GF(2,0)"), InvalidSpec);
  CHECK_THROWS_AS(realize("End(Ab[6])"), InvalidSpec);
  CHECK_THROWS_AS(realize("UT(1,Z/2)"), InvalidSpec);
  CHECK_THROWS_AS(realize("Q/4"), ParseError);
  CHECK_THROWS_AS(realize("M(2,Z/4"), ParseError);
  CHECK_THROWS_AS(realize("M(3,Z/4)"), OrderCapExceeded);
  CHECK_THROWS_AS(realize("M(9,M(9,Z/9))"), OrderCapExceeded);
  CHECK_THROWS_AS(realize("GR(Z/2,C20)", 1000), OrderCapExceeded);
  CHECK_NOTHROW(realize("M(3,Z/4)", 1u << 18));
}

TEST_CASE("element operations") {
  const auto z4 = realize("Z/4");
  CHECK(z4.pow(3, 2) == 1);
  CHECK(z4.pow(2, 2) == 0);
  CHECK(z4.pow(3, 0) == 1);
  CHECK(z4.from_integer(-1) == 3);
  const auto m2 = realize("M(2,Z/2)");
  CHECK(m2.mul(m2.parse_element("E12"), m2.parse_element("E21")) == m2.parse_element("E11"));
  CHECK(m2.parse_element("[[1,0],[0,1]]") == m2.one());
  CHECK(m2.format(m2.parse_element("E12+E21")) == "[[0,1],[1,0]]");
  const auto gr = realize("GR(Z/4,C2)");
  const Handle x = gr.parse_element("1+3*g");
  CHECK(gr.format(x) == "1+3*g1");
  CHECK(gr.parse_element("(1+g)^2") == gr.parse_element("2+2*g"));
  const auto gf4 = realize("GF(2,2)");
  CHECK(gf4.mul(gf4.parse_element("a"), gf4.parse_element("a+1")) == gf4.one());
  CHECK_THROWS_AS(z4.parse_element("2 +"), ParseError);
  CHECK_THROWS_AS(z4.parse_element("#7"), ParseError);
}

namespace {

// Polynomials over Z/p as coefficient vectors, constant term first.
bool divides(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& g, std::uint64_t p) {
  // g is monic.
  while (f.size() >= g.size()) {
    const auto lead = f.back();
    const auto shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = (f[shift + i] + p * p - lead * g[i] % p) % p;
    f.pop_back();
  }
  for (auto c : f)
    if (c) return false;
  return true;
}

bool irreducible_by_trial_division(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> g(d + 1, 1);
      for (std::size_t i = 0, v = idx; i < d; ++i, v /= p) g[i] = v % p;
      if (divides(f, g, p)) return false;
    }
  }
  return true;
}

/// Smallest monic irreducible, comparing coefficients low degree first.
std::vector<std::uint64_t> brute_smallest_irreducible(std::uint64_t p, std::size_t k) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  std::vector<std::vector<std::uint64_t>> candidates;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> f(k + 1, 1);
    for (std::size_t i = 0, v = idx; i < k; ++i, v /= p) f[i] = v % p;
    candidates.push_back(f);
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& f : candidates)
    if (irreducible_by_trial_division(f, p)) return f;
  return {};
}

}  // namespace

TEST_CASE("smallest irreducible polynomials, low degree first") {
  CHECK(smallest_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(smallest_irreducible(2, 3) == std::vector<std::uint64_t>{1, 0, 1, 1});
  CHECK(smallest_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(smallest_irreducible(2, 4) == std::vector<std::uint64_t>{1, 0, 0, 1, 1});
  for (auto [p, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 2},
                      std::pair{3, 3}, std::pair{5, 2}, std::pair{7, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    CHECK(smallest_irreducible(p, k) == brute_smallest_irreducible(p, k));
  }
  // Every non-zero element of GF(8) is a unit.
  const auto gf8 = realize("GF(2,3)");
  CHECK(oracle::units(gf8).size() == 7);
}

TEST_CASE("ring axioms") {
  for (const char* spec : {"Z/6", "M(2,Z/3)", "UT(2,Z/4)", "GR(Z/2,D3)", "End(Ab[2,4])", "Quot(GR(Z/4,C2),[1-g])",
                           "Prod(GF(2,2),Z/3)", "M(2,GF(2,2))"}) {
    CAPTURE(spec);
    const auto r = realize(spec);
    const auto ax = check_ring_axioms(r);
    CHECK_MESSAGE(ax.ok, ax.failure);
    CHECK(ax.exhaustive == (r.order() <= 64));
    CHECK(r.order() % r.characteristic() == 0);
  }
}

TEST_CASE("realization is deterministic") {
  for (const char* spec : {"GR(Z/3,C3)", "End(Ab[3,3])", "Quot(Z/8,[4])", "GF(3,3)"}) {
    CAPTURE(spec);
    CHECK(realize(spec).same_tables(realize(spec)));
  }
}

TEST_CASE("quotients") {
  const auto z8 = realize("Z/8");
  const auto q = quotient(z8, {4});
  CHECK(q.order() == 4);
  CHECK(oracle::find_isomorphism(q, realize("Z/4")).has_value());
  const auto z4 = realize("Z/4");
  CHECK(quotient(z4, {0}).same_tables(z4));
  const auto aug = realize("Quot(GR(Z/4,C2),[1-g])");
  CHECK(aug.order() == 4);
  CHECK(oracle::find_isomorphism(aug, z4).has_value());
  CHECK(ideal_closure(z8, {2}).elements == std::vector<Handle>{0, 2, 4, 6});
  CHECK(is_two_sided_ideal(z8, {0, 4}));
  CHECK_FALSE(is_two_sided_ideal(z8, {0, 3}));
  const auto m2 = realize("M(2,Z/2)");
  CHECK(ideal_closure(m2, {m2.parse_element("E11")}).size() == 16);
}

TEST_CASE("endomorphism rings of finite abelian groups") {
  CHECK(oracle::find_isomorphism(end_abelian({2, 2}), realize("M(2,Z/2)")).has_value());
  CHECK(oracle::find_isomorphism(end_abelian({4}), realize("Z/4")).has_value());
  // Brute-force count of additive maps of Z2 + Z4.
  CHECK(oracle::count_additive_endomorphisms({2, 4}) == 32);
  CHECK(end_abelian({2, 4}).order() == 32);
  CHECK(end_abelian({3, 9}).order() == oracle::count_additive_endomorphisms({3, 9}));
  CHECK(end_abelian({2, 2, 2}).order() == 512);
  CHECK_FALSE(oracle::find_isomorphism(end_abelian({2, 4}), realize("UT(2,Z/4)")).has_value());
}

TEST_CASE("groups") {
  const auto c4 = realize_group(parse_group_spec("C4"));
  CHECK(c4.order() == 4);
  CHECK(c4.element_order(1) == 4);
  CHECK(c4.is_abelian());
  const auto d3 = realize_group(parse_group_spec("D3"));
  CHECK(d3.order() == 6);
  CHECK_FALSE(d3.is_abelian());
  CHECK_FALSE(lower_central_series(group_ops(d3)).nilpotent);
  const auto d4 = realize_group(parse_group_spec("D4"));
  const auto lcs = lower_central_series(group_ops(d4));
  CHECK(lcs.nilpotent);
  CHECK(lcs.nilpotency_class == 2);
  const auto v4 = realize_group(parse_group_spec("C2xC2"));
  CHECK(v4.order() == 4);
  for (std::uint32_t g = 1; g < 4; ++g) CHECK(v4.element_order(g) == 2);
  std::uint64_t p = 0;
  CHECK(is_p_group(8, &p));
  CHECK(p == 2);
  CHECK_FALSE(is_p_group(6));

  const auto shuffled = read_group_table(std::string(RINGLAB_TEST_DATA) + "/c3_shuffled.table");
  CHECK(shuffled.order() == 3);
  CHECK(shuffled.mul(0, 1) == 1);
  CHECK(shuffled.element_order(1) == 3);
  CHECK(realize("GR(Z/2,Table(" + std::string(RINGLAB_TEST_DATA) + "/c3_shuffled.table))").order() == 8);
  CHECK_THROWS_AS(GroupTable({0, 1, 1, 1}), InvalidSpec);
}
