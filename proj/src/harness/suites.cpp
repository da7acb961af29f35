#include "ringlab/harness/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/decompose.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/groupring.hpp"
#include "ringlab/harness/catalog.hpp"
#include "ringlab/harness/oracles.hpp"
#include "ringlab/harness/report.hpp"

namespace ringlab {

bool SuiteResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

using Details = std::ostringstream;

CheckResult timed(std::string id, std::string anchor, double limit, const std::function<bool(Details&)>& body) {
  CheckResult r{std::move(id), std::move(anchor), false, "", 0, limit};
  Details details;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.pass = body(details);
  } catch (const std::exception& e) {
    details << "exception: " << e.what();
    r.pass = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && r.seconds > limit) {
    r.pass = false;
    details << (details.tellp() > 0 ? "; " : "") << "took " << r.seconds << " s, limit " << limit << " s";
  }
  r.details = details.str();
  return r;
}

/// Records `what` as a failure when `ok` is false; returns ok.
bool expect(Details& d, bool ok, const std::string& what) {
  if (!ok) d << (d.tellp() > 0 ? "; " : "") << "FAILED " << what;
  return ok;
}

void note(Details& d, const std::string& what) { d << (d.tellp() > 0 ? "; " : "") << what; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------- acceptance criteria

CheckResult criterion1(const SuiteOptions&) {
  return timed("1", "Z/4 is neither t-fine nor fine", 0.1, [](Details& d) {
    const auto ring = realize("Z/4");
    bool ok = true;
    for (auto kind : {DecompositionKind::TFine, DecompositionKind::Fine}) {
      const auto result = decompose(ring, 2, kind);
      const auto* f = std::get_if<ExhaustiveFailure>(&result);
      ok &= expect(d, f != nullptr, std::string(to_string(kind)) + " decomposition of 2 should fail");
      if (f) {
        ok &= expect(d, f->enumerated == f->search_space_size && f->search_space_size == 2,
                     "search space of 2 nilpotents fully enumerated");
        note(d, to_json(*f).dump());
      }
    }
    for (auto p : {RingPredicate::TFine, RingPredicate::Fine}) {
      const auto res = ring_predicate(ring, p);
      ok &= expect(d, !res.holds && res.counterexample == Handle{2}, std::string(to_string(p)) + " counterexample 2");
    }
    ok &= expect(d, oracle::tfine_counterexample(ring) == Handle{2}, "brute-force oracle finds 2");
    return ok;
  });
}

CheckResult criterion2(const SuiteOptions& options) {
  return timed("2", "M_n(F_2) is t-fine for n = 2, 3", 10, [&](Details& d) {
    const auto f2 = realize("Z/2");
    bool ok = true;
    for (std::size_t n : {2, 3}) {
      const MatrixAlgebra alg(f2, n);
      const auto ring = realize(RingSpec::matrix(n, RingSpec::zmod(2)));
      const auto* mr = ring.structure<MatrixRing>();
      std::size_t certified = 0, total = 0;
      for (std::uint64_t i = 1; i < alg.count(); ++i) {
        ++total;
        const auto m = alg.decode(i);
        if (!expect(d, mr->entries(static_cast<Handle>(i)) == m.entries, "matrix numbering agrees with M(n,R) handles"))
          return false;
        const auto dec = tfine_decompose_matrix(alg, m, options.budget, options.jobs);
        const bool recursive_ok = verify_matrix_decomposition(alg, m, dec).ok;
        const auto generic = decompose(ring, static_cast<Handle>(i), DecompositionKind::TFine);
        const auto* c = std::get_if<Certificate>(&generic);
        const bool generic_ok = c && verify_certificate(ring, *c).ok;
        if (recursive_ok && generic_ok) ++certified;
        else ok &= expect(d, false, "matrix " + alg.format(m));
      }
      note(d, "n=" + std::to_string(n) + ": " + std::to_string(certified) + "/" + std::to_string(total) + " verified");
      ok &= expect(d, total == (n == 2 ? 15u : 511u) && certified == total, "all non-zero matrices certified");
    }
    return ok;
  });
}

CheckResult criterion3(const SuiteOptions&) {
  return timed("3", "M_2(Z/4) is not t-fine", 30, [](Details& d) {
    const auto ring = realize("M(2,Z/4)");
    const auto* mr = ring.structure<MatrixRing>();
    const Handle two_i = ring.parse_element("[[2,0],[0,2]]");
    const auto result = decompose(ring, two_i, DecompositionKind::TFine);
    const auto* f = std::get_if<ExhaustiveFailure>(&result);
    bool ok = expect(d, f != nullptr, "2I has no t-fine decomposition");
    if (f) {
      ok &= expect(d, f->enumerated == f->search_space_size, "search space fully enumerated");
      note(d, to_json(*f).dump());
    }
    // Reduction mod 2 is a ring map: units reduce to invertible matrices, while 2I - N reduces
    // to the nilpotent N mod 2, which is singular.
    auto det_mod2 = [&](Handle x) {
      const auto e = mr->entries(x);
      return (e[0] * e[3] + e[1] * e[2]) % 2;
    };
    const auto units = oracle::units(ring);
    const auto nils = oracle::nilpotents(ring);
    ok &= expect(d, std::all_of(units.begin(), units.end(), [&](Handle u) { return det_mod2(u) == 1; }),
                 "every unit reduces to an invertible matrix mod 2");
    ok &= expect(d, std::all_of(nils.begin(), nils.end(), [&](Handle n) { return det_mod2(ring.sub(two_i, n)) == 0; }),
                 "2I - N is singular mod 2 for every nilpotent N");
    note(d, std::to_string(units.size()) + " units, " + std::to_string(nils.size()) + " nilpotents");
    return ok;
  });
}

CheckResult criterion4(const SuiteOptions& options) {
  return timed("4", "for commutative R, M_2(R) is t-fine iff R is a field", 120, [&](Details& d) {
    bool ok = true;
    for (const char* spec : {"Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "GF(2,2)", "GF(2,3)", "GF(3,2)"}) {
      const auto base = realize(spec);
      const bool field = oracle::is_field(base);
      const auto m2 = realize(RingSpec::matrix(2, base.spec()));
      const bool tfine = ring_predicate(m2, RingPredicate::TFine, options.jobs).holds;
      note(d, std::string(spec) + (tfine ? " t-fine" : " not t-fine"));
      ok &= expect(d, tfine == field, std::string(spec) + ": t-fine should equal field = " + (field ? "true" : "false"));
    }
    return ok;
  });
}

CheckResult criterion5(const SuiteOptions&) {
  return timed("5", "End(G) is t-fine iff G is elementary abelian", 5, [](Details& d) {
    const auto e22 = end_abelian({2, 2});
    const auto e4 = end_abelian({4});
    bool ok = expect(d, e22.order() == 16 && e4.order() == 4, "orders 16 and 4");
    ok &= expect(d, ring_predicate(e22, RingPredicate::TFine).holds, "End(Z2+Z2) t-fine");
    ok &= expect(d, !oracle::tfine_counterexample(e22), "oracle: End(Z2+Z2) t-fine");
    const auto res4 = ring_predicate(e4, RingPredicate::TFine);
    ok &= expect(d, !res4.holds, "End(Z4) not t-fine");
    ok &= expect(d, oracle::tfine_counterexample(e4).has_value(), "oracle: End(Z4) not t-fine");
    ok &= expect(d, oracle::find_isomorphism(e22, realize("M(2,Z/2)")).has_value(), "End(Z2+Z2) isomorphic to M_2(F_2)");
    ok &= expect(d, oracle::find_isomorphism(e4, realize("Z/4")).has_value(), "End(Z4) isomorphic to Z/4");
    if (res4.counterexample) note(d, "End(Z4) counterexample " + e4.format(*res4.counterexample));
    return ok;
  });
}

CheckResult criterion6(const SuiteOptions& options) {
  return timed("6", "augmentation ideal is nil when p is nilpotent and G is a p-group", 5, [&](Details& d) {
    bool ok = true;
    auto check = [&](const char* coeff, const char* group) {
      const auto ring = realize(RingSpec::group_ring(parse_ring_spec(coeff), parse_group_spec(group)), options.max_order);
      const auto view = GroupRingView::from(ring);
      const auto report = delta_nil_check(view);
      const auto nil = oracle::nilpotents(ring);
      const bool oracle_nil = std::all_of(report.ideal.elements.begin(), report.ideal.elements.end(),
                                          [&](Handle x) { return std::binary_search(nil.begin(), nil.end(), x); });
      ok &= expect(d, oracle_nil == report.is_nil, std::string(coeff) + "," + group + ": oracle agrees on nilness");
      ok &= expect(d, report.ideal.size() * view.coeff_ring().order() == ring.order(), "|Delta| = |RG|/|R|");
      note(d, std::string(coeff) + "," + group + ": " + to_json(report, ring).dump());
      return std::pair{report, ring};
    };
    {
      auto [r, ring] = check("Z/4", "C2");
      ok &= expect(d, r.is_nil && r.max_index == 3, "(Z/4,C2) nil with max index 3");
    }
    {
      auto [r, ring] = check("Z/2", "C2xC2");
      ok &= expect(d, r.is_nil, "(F2,C2xC2) nil");
    }
    {
      auto [r, ring] = check("Z/2", "C3");
      ok &= expect(d, !r.is_nil && r.counterexample == ring.parse_element("1+g"),
                   "(F2,C3) not nil, counterexample 1+g");
      if (r.cycle) ok &= expect(d, r.cycle->kind != PowerProfile::Class::Nilpotent, "power cycle avoids 0");
    }
    return ok;
  });
}

CheckResult criterion7(const SuiteOptions&) {
  return timed("7", "nil clean group rings; nil clean is strictly inside semi-nil clean", 1, [](Details& d) {
    bool ok = true;
    for (auto [spec, expected] : {std::pair{"GR(Z/2,C2)", true}, std::pair{"GR(Z/2,C3)", false},
                                  std::pair{"Z/4", true}, std::pair{"GF(2,2)", false}}) {
      const auto ring = realize(spec);
      const auto res = ring_predicate(ring, RingPredicate::NilClean);
      const bool oracle_holds = !oracle::nil_clean_counterexample(ring).has_value();
      ok &= expect(d, res.holds == expected && oracle_holds == expected,
                   std::string(spec) + " nil clean should be " + (expected ? "true" : "false"));
      ok &= expect(d, ring_predicate(ring, RingPredicate::SemiNilClean).holds, std::string(spec) + " semi-nil clean");
      note(d, std::string(spec) + (res.holds ? " nil clean" : " not nil clean (" + ring.format(*res.counterexample) + ")"));
    }
    return ok;
  });
}

CheckResult criterion8(const SuiteOptions& options) {
  return timed("8", "finite-ring trivializations and radical invariants over the default catalog", 300, [&](Details& d) {
    bool ok = expect(d, default_catalog().size() >= 25, "catalog has at least 25 rings");
    std::size_t checked = 0;
    for (const auto& spec : default_catalog()) {
      const auto ring = realize(spec);
      ok &= expect(d, ring.order() <= 4096, spec + " order <= 4096");
      for (const auto& failure : trivialization_failures(ring, options.jobs)) ok &= expect(d, false, spec + ": " + failure);
      ++checked;
    }
    note(d, std::to_string(checked) + " rings checked");
    return ok;
  });
}

CheckResult criterion9(const SuiteOptions&) {
  return timed("9", "t is not periodic over Z/4, 2t is", 0.1, [](Details& d) {
    const auto z4 = realize("Z/4");
    bool ok = true;
    const auto t = poly_element_periodic(z4, {0, 1});
    ok &= expect(d, std::holds_alternative<NotPeriodic>(t), "t NotPeriodic");
    if (const auto* np = std::get_if<NotPeriodic>(&t)) note(d, "t: " + np->reason);
    const auto two_t = poly_element_periodic(z4, {0, 2});
    const auto* p = std::get_if<Periodic>(&two_t);
    ok &= expect(d, p && p->m == 2 && p->n == 3, "2t Periodic with witness (2,3)");
    return ok;
  });
}

CheckResult criterion10(const SuiteOptions&) {
  return timed("10", "classify and decompose output is deterministic", 0, [](Details& d) {
    bool ok = true;
    for (const char* spec : {"Z/4", "M(2,Z/2)", "GR(Z/2,C3)", "UT(2,Z/4)"}) {
      std::vector<std::string> runs;
      for (unsigned jobs : {1u, 1u, 8u, 8u}) {
        ReportOptions o;
        o.jobs = jobs;
        o.stable = true;
        runs.push_back(classification_report(realize(spec), o).dump(2));
      }
      ok &= expect(d, std::all_of(runs.begin(), runs.end(), [&](const std::string& r) { return r == runs[0]; }),
                   std::string("classify ") + spec + " identical across runs and jobs");
    }
    for (auto [spec, element] : {std::pair{"Z/4", "2"}, std::pair{"M(2,Z/2)", "[[1,0],[0,0]]"}}) {
      const auto a = realize(spec), b = realize(spec);
      ok &= expect(d,
                   decomposition_report(a, a.parse_element(element), DecompositionKind::TFine).dump(2) ==
                       decomposition_report(b, b.parse_element(element), DecompositionKind::TFine).dump(2),
                   std::string("decompose ") + spec + " identical");
    }
    if (ok) note(d, "in-process outputs byte-identical");
    return ok;
  });
}

// ---------------------------------------------------------------- invariants

struct Catalog {
  std::vector<FiniteRing> rings;
  std::vector<std::string> skipped;
};

Catalog load_catalog(std::size_t max_order) {
  Catalog c;
  for (const auto& spec : default_catalog()) {
    try {
      c.rings.push_back(realize(spec, max_order));
    } catch (const OrderCapExceeded&) {
      c.skipped.push_back(spec);
    }
  }
  return c;
}

CheckResult per_ring(const Catalog& cat, std::string id, std::string anchor,
                     const std::function<void(const FiniteRing&, Details&, bool&)>& body) {
  return timed(std::move(id), std::move(anchor), 0, [&](Details& d) {
    bool ok = true;
    for (const auto& ring : cat.rings) body(ring, d, ok);
    note(d, std::to_string(cat.rings.size()) + " rings");
    return ok;
  });
}

}  // namespace

std::vector<std::string> trivialization_failures(const FiniteRing& ring, unsigned jobs) {
  std::vector<std::string> out;
  for (auto p : {RingPredicate::Periodic, RingPredicate::WeaklyPeriodic, RingPredicate::SemiNilClean,
                 RingPredicate::StronglySemiNilClean, RingPredicate::SemiClean, RingPredicate::PiUU})
    if (!ring_predicate(ring, p, jobs).holds) out.push_back(std::string(to_string(p)) + " fails");

  if (ring_predicate(ring, RingPredicate::Fine, jobs).holds != ring_predicate(ring, RingPredicate::TFine, jobs).holds)
    out.push_back("Fine and TFine disagree");

  // u^(char^s) = 1 for some s <= log2|R|, and the order of u has only primes dividing char.
  const auto& prof = power_profiles(ring);
  const std::uint64_t c = ring.characteristic();
  for (Handle u : unipotents(ring)) {
    bool reached = false;
    Handle y = u;
    for (std::uint64_t s = 0; s <= std::bit_width(ring.order()) && !reached; ++s, y = ring.pow(y, c))
      reached = y == ring.one();
    bool primes_ok = prof[u].kind == PowerProfile::Class::TorsionUnit;
    if (primes_ok)
      for (auto p : prime_factors(prof[u].exponent)) primes_ok &= c % p == 0;
    if (!reached || !primes_ok) {
      out.push_back("unipotent " + ring.format(u) + " has order " + std::to_string(prof[u].exponent));
      break;
    }
  }

  const auto& nil = nilpotents(ring);
  const auto& jac = jacobson(ring);
  if (is_NI(ring) != (nil == jac)) out.push_back("is_NI disagrees with Nil = J");

  const auto& z = center(ring);
  const bool nil_central = std::all_of(nil.begin(), nil.end(), [&](Handle x) { return std::binary_search(z.begin(), z.end(), x); });
  if (nil_central && !ring.is_commutative()) out.push_back("Nil is central but the ring is not commutative");

  if (jac != jacobson_right(ring)) out.push_back("left and right Jacobson computations differ");
  const auto& nil_mask = nilpotent_mask(ring);
  if (!std::all_of(jac.begin(), jac.end(), [&](Handle x) { return nil_mask[x] != 0; })) out.push_back("J is not nil");
  if (ring.order() <= 16 && jac != oracle::jacobson_by_maximal_left_ideals(ring))
    out.push_back("J differs from the maximal left ideal intersection");
  return out;
}

CheckResult run_acceptance_check(int number, const SuiteOptions& options) {
  switch (number) {
    case 1: return criterion1(options);
    case 2: return criterion2(options);
    case 3: return criterion3(options);
    case 4: return criterion4(options);
    case 5: return criterion5(options);
    case 6: return criterion6(options);
    case 7: return criterion7(options);
    case 8: return criterion8(options);
    case 9: return criterion9(options);
    case 10: return criterion10(options);
    default: throw std::out_of_range("acceptance criteria are numbered 1..10");
  }
}

SuiteResult run_acceptance_suite(const SuiteOptions& options) {
  SuiteResult s{"acceptance", {}};
  for (int i = 1; i <= 10; ++i) s.checks.push_back(run_acceptance_check(i, options));
  return s;
}

SuiteResult run_invariant_suite(const SuiteOptions& options) {
  SuiteResult s{"invariants", {}};
  const Catalog cat = load_catalog(options.max_order);

  s.checks.push_back(per_ring(cat, "ring-axioms", "ring axioms; char(R) divides |R|", [](const FiniteRing& r, Details& d, bool& ok) {
    const auto ax = check_ring_axioms(r);
    ok &= expect(d, ax.ok, r.spec().to_string() + ": " + ax.failure);
    ok &= expect(d, r.order() % r.characteristic() == 0, r.spec().to_string() + ": char divides order");
  }));
  s.checks.push_back(per_ring(cat, "realize-deterministic", "realization is deterministic; R/0 = R",
                              [&](const FiniteRing& r, Details& d, bool& ok) {
                                ok &= expect(d, r.same_tables(realize(r.spec(), options.max_order)),
                                             r.spec().to_string() + ": re-realization identical");
                                ok &= expect(d, r.same_tables(quotient(r, {0})), r.spec().to_string() + ": quotient by 0");
                              }));
  s.checks.push_back(per_ring(cat, "power-profiles", "every element periodic with m < n <= |R| + 1; units = torsion units",
                              [](const FiniteRing& r, Details& d, bool& ok) {
                                for (const auto& p : power_profiles(r))
                                  if (!(p.m < p.n && p.n <= r.order() + 1 && r.pow(p.element, p.m) == r.pow(p.element, p.n))) {
                                    ok &= expect(d, false, r.spec().to_string() + ": profile of " + r.format(p.element));
                                    break;
                                  }
                                ok &= expect(d, units(r) == torsion_units(r), r.spec().to_string() + ": units = torsion units");
                                ok &= expect(d, units(r) == oracle::units(r), r.spec().to_string() + ": units match oracle");
                                ok &= expect(d, nilpotents(r) == oracle::nilpotents(r), r.spec().to_string() + ": nilpotents match oracle");
                              }));
  s.checks.push_back(per_ring(cat, "trivializations", "finite rings are periodic, semi-nil clean, ...; radical invariants",
                              [&](const FiniteRing& r, Details& d, bool& ok) {
                                for (const auto& f : trivialization_failures(r, options.jobs))
                                  ok &= expect(d, false, r.spec().to_string() + ": " + f);
                              }));
  s.checks.push_back(per_ring(cat, "jacobson-ideal", "J(R) is a nil two-sided ideal; t-fine implies J = 0",
                              [&](const FiniteRing& r, Details& d, bool& ok) {
                                ok &= expect(d, is_two_sided_ideal(r, jacobson(r)), r.spec().to_string() + ": J is an ideal");
                                if (ring_predicate(r, RingPredicate::TFine, options.jobs).holds)
                                  ok &= expect(d, jacobson(r).size() == 1, r.spec().to_string() + ": t-fine but J != 0");
                              }));
  s.checks.push_back(per_ring(cat, "nil-clean-inclusion", "nil clean implies semi-nil clean",
                              [&](const FiniteRing& r, Details& d, bool& ok) {
                                if (ring_predicate(r, RingPredicate::NilClean, options.jobs).holds)
                                  ok &= expect(d, ring_predicate(r, RingPredicate::SemiNilClean, options.jobs).holds,
                                               r.spec().to_string());
                              }));
  s.checks.push_back(per_ring(cat, "certificates", "every certificate verifies; failures are complete",
                              [](const FiniteRing& r, Details& d, bool& ok) {
                                const Handle limit = static_cast<Handle>(std::min<std::size_t>(r.order(), 256));
                                for (Handle x = 1; x < limit; ++x)
                                  for (auto kind : {DecompositionKind::SemiNilClean, DecompositionKind::StronglySemiNilClean,
                                                    DecompositionKind::WeaklyPeriodic, DecompositionKind::Clean,
                                                    DecompositionKind::NilClean, DecompositionKind::StronglyNilClean,
                                                    DecompositionKind::SemiClean, DecompositionKind::Fine, DecompositionKind::TFine}) {
                                    const auto res = decompose(r, x, kind);
                                    if (const auto* c = std::get_if<Certificate>(&res)) {
                                      const auto v = verify_certificate(r, *c);
                                      if (!v.ok || certificate_from_json(nlohmann::json::parse(to_json(*c).dump())) != *c)
                                        ok &= expect(d, false, r.spec().to_string() + ": certificate " + to_json(*c).dump());
                                    } else {
                                      const auto& f = std::get<ExhaustiveFailure>(res);
                                      if (f.enumerated != f.search_space_size)
                                        ok &= expect(d, false, r.spec().to_string() + ": incomplete failure");
                                    }
                                  }
                              }));
  s.checks.push_back(per_ring(cat, "commuting-periodic-sums", "sums of commuting periodic elements are periodic",
                              [](const FiniteRing& r, Details& d, bool& ok) {
                                if (r.order() > 64) return;
                                for (Handle x = 0; x < r.order(); ++x)
                                  for (Handle y = 0; y < r.order(); ++y) {
                                    if (r.mul(x, y) != r.mul(y, x)) continue;
                                    const auto w = witness_for(r, r.add(x, y), Role::Periodic);
                                    if (!w || r.pow(r.add(x, y), w->first) != r.pow(r.add(x, y), w->second)) {
                                      ok &= expect(d, false, r.spec().to_string());
                                      return;
                                    }
                                  }
                              }));

  s.checks.push_back(timed("group-rings", "augmentation is a surjective homomorphism; RG/Delta = R; group elements are torsion units; Delta nil for p-groups with p nilpotent", 0,
                           [&](Details& d) {
                             bool ok = true;
                             std::size_t checked = 0;
                             for (const auto& [coeff, group] : default_group_ring_pairs()) {
                               const auto spec = RingSpec::group_ring(parse_ring_spec(coeff), parse_group_spec(group));
                               std::optional<FiniteRing> ring;
                               try {
                                 ring = realize(spec, options.max_order);
                               } catch (const OrderCapExceeded&) {
                                 continue;
                               }
                               ++checked;
                               const auto v = GroupRingView::from(*ring);
                               const std::string name = spec.to_string();
                               const auto& r = v.coeff_ring();
                               const auto& rg = v.ring();
                               const Handle limit = static_cast<Handle>(std::min<std::size_t>(rg.order(), 128));
                               bool hom = true;
                               for (Handle a = 0; a < limit; ++a)
                                 for (Handle b = 0; b < limit; ++b)
                                   hom &= augmentation(v, rg.add(a, b)) == r.add(augmentation(v, a), augmentation(v, b)) &&
                                          augmentation(v, rg.mul(a, b)) == r.mul(augmentation(v, a), augmentation(v, b));
                               for (Handle c = 0; c < r.order(); ++c) hom &= augmentation(v, v.embed_scalar(c)) == c;
                               ok &= expect(d, hom && augmentation(v, rg.one()) == r.one(), name + ": augmentation homomorphism");
                               ok &= expect(d, augmentation_quotient_isomorphic(v), name + ": RG/Delta = R");
                               for (std::uint32_t g = 0; g < v.group().order(); ++g) {
                                 const auto t = is_torsion_unit(rg, v.embed_group_element(g));
                                 ok &= expect(d, t.member && v.group().order() % t.witness == 0, name + ": group element torsion");
                               }
                               const auto report = delta_nil_check(v);
                               ok &= expect(d, report.agrees, name + ": Delta nilness prediction");
                               std::uint64_t p = 0;
                               if (is_p_group(v.group().order(), &p)) {
                                 const auto lcs = lower_central_series(group_ops(v.group()));
                                 if (lcs.nilpotent && is_weakly_2_primal(r)) {
                                   ok &= expect(d, ring_predicate(rg, RingPredicate::Periodic).holds &&
                                                       ring_predicate(rg, RingPredicate::SemiNilClean).holds,
                                                name + ": periodic and semi-nil clean");
                                 }
                               }
                             }
                             note(d, std::to_string(checked) + " group rings");
                             return ok;
                           }));

  s.checks.push_back(timed("end-abelian", "End of a finite abelian group: orders and isomorphisms", 0, [](Details& d) {
    bool ok = true;
    for (const auto& inv : std::vector<std::vector<std::uint64_t>>{{2, 2}, {4}, {2, 4}, {3, 3}, {2, 8}, {3, 9}}) {
      const auto e = end_abelian(inv);
      const auto count = oracle::count_additive_endomorphisms(inv);
      ok &= expect(d, e.order() == count, "End order matches additive map count " + std::to_string(count));
    }
    ok &= expect(d, oracle::find_isomorphism(end_abelian({2, 2}), realize("M(2,Z/2)")).has_value(), "End(Z2+Z2) = M_2(F_2)");
    ok &= expect(d, oracle::find_isomorphism(end_abelian({4}), realize("Z/4")).has_value(), "End(Z4) = Z/4");
    ok &= expect(d, oracle::find_isomorphism(realize("Quot(Z/8,[4])"), realize("Z/4")).has_value(), "Z/8 / (4) = Z/4");
    return ok;
  }));

  if (!cat.skipped.empty()) {
    CheckResult skipped{"catalog-cap", "catalog rings above --max-order are skipped", true, "", 0, 0};
    for (const auto& spec : cat.skipped) skipped.details += (skipped.details.empty() ? "" : ", ") + spec;
    s.checks.push_back(skipped);
  }
  return s;
}

std::optional<SuiteResult> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "acceptance" || name == "paper") return run_acceptance_suite(options);
  if (name == "invariants") return run_invariant_suite(options);
  return std::nullopt;
}

nlohmann::ordered_json to_json(const SuiteResult& s) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = s.name;
  j["pass"] = s.all_pass();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : s.checks)
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"seconds", c.seconds}, {"details", c.details}});
  j["checks"] = checks;
  return j;
}

std::string format_table(const SuiteResult& s) {
  std::ostringstream out;
  out << "suite " << s.name << "\n";
  for (const auto& c : s.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.id << " " << c.anchor << " ("
        << std::fixed << std::setprecision(3) << c.seconds << " s)\n";
    if (!c.details.empty()) out << "     " << c.details << "\n";
  }
  out << (s.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

}  // namespace ringlab
