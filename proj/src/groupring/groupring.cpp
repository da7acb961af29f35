#include "ringlab/groupring.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ringlab/errors.hpp"

namespace ringlab {

GroupRingView GroupRingView::from(const FiniteRing& ring) {
  const auto* impl = ring.structure<GroupRingRing>();
  if (!impl) throw InvalidSpec(ring.spec().to_string() + " is not a group ring");
  return GroupRingView(ring, impl);
}

Handle augmentation(const GroupRingView& v, Handle x) {
  const auto& r = v.coeff_ring();
  Handle sum = r.zero();
  for (std::uint32_t g = 0; g < v.group().order(); ++g) sum = r.add(sum, v.coefficient(x, g));
  return sum;
}

Ideal augmentation_ideal(const GroupRingView& v) {
  Ideal ideal;
  for (Handle x = 0; x < v.ring().order(); ++x)
    if (augmentation(v, x) == v.coeff_ring().zero()) ideal.elements.push_back(x);
  return ideal;
}

bool augmentation_quotient_isomorphic(const GroupRingView& v) {
  const auto& r = v.coeff_ring();
  // Delta(G) is generated by the elements 1 - g.
  std::vector<Handle> gens;
  for (std::uint32_t g = 1; g < v.group().order(); ++g)
    gens.push_back(v.ring().sub(v.ring().one(), v.embed_group_element(g)));
  const FiniteRing q = quotient(v.ring(), gens);
  const auto* qi = q.structure<QuotientRing>();
  if (q.order() != r.order()) return false;

  std::vector<Handle> phi(r.order());
  std::vector<char> hit(q.order(), 0);
  for (Handle a = 0; a < r.order(); ++a) {
    phi[a] = qi->project(v.embed_scalar(a));
    if (hit[phi[a]]++) return false;
  }
  if (phi[r.one()] != q.one()) return false;
  for (Handle a = 0; a < r.order(); ++a)
    for (Handle b = 0; b < r.order(); ++b)
      if (phi[r.add(a, b)] != q.add(phi[a], phi[b]) || phi[r.mul(a, b)] != q.mul(phi[a], phi[b])) return false;
  return true;
}

NilIdealReport nil_ideal_check(const FiniteRing& ring, const Ideal& ideal) {
  NilIdealReport report;
  report.ideal = ideal;
  const auto& prof = power_profiles(ring);
  for (Handle x : ideal.elements) {
    const auto& p = prof[x];
    if (p.kind == PowerProfile::Class::Nilpotent) {
      report.max_index = std::max(report.max_index, p.exponent);
    } else {
      report.is_nil = false;
      report.max_index = 0;
      report.counterexample = x;
      report.cycle = p;
      break;
    }
  }
  return report;
}

NilIdealReport delta_nil_check(const GroupRingView& v) {
  auto report = nil_ideal_check(v.ring(), augmentation_ideal(v));
  std::uint64_t p = 0;
  if (is_p_group(v.group().order(), &p)) {
    const auto& r = v.coeff_ring();
    if (v.group().order() == 1) {
      report.prediction_applies = true;
    } else if (nilpotent_mask(r)[r.from_integer(static_cast<long long>(p))]) {
      report.prediction_applies = true;
      report.prime = p;
    }
  }
  report.agrees = !report.prediction_applies || report.is_nil;
  return report;
}

NilIdealReport delta_nil_check(const RingSpec& coeff, const GroupSpec& group, std::size_t max_order) {
  return delta_nil_check(GroupRingView::from(realize(RingSpec::group_ring(coeff, group), max_order)));
}

nlohmann::ordered_json to_json(const NilIdealReport& r, const FiniteRing& ring) {
  nlohmann::ordered_json j;
  j["ideal_size"] = r.ideal.size();
  j["is_nil"] = r.is_nil;
  if (r.is_nil) j["max_index"] = r.max_index;
  if (r.counterexample) {
    j["counterexample"] = {{"handle", *r.counterexample}, {"value", ring.format(*r.counterexample)}};
    j["cycle"] = {{"m", r.cycle->m}, {"n", r.cycle->n}};
  }
  j["prediction_applies"] = r.prediction_applies;
  if (r.prime) j["prime"] = r.prime;
  j["agrees"] = r.agrees;
  return j;
}

GroupRingScanRecord groupring_scan_pair(const RingSpec& coeff, const GroupSpec& group,
                                        const std::vector<RingPredicate>& predicates, std::size_t max_order) {
  GroupRingScanRecord rec;
  rec.coeff = coeff.to_string();
  rec.group = group.to_string();
  try {
    const FiniteRing ring = realize(RingSpec::group_ring(coeff, group), max_order);
    const auto view = GroupRingView::from(ring);
    rec.order = ring.order();
    for (auto p : predicates) rec.predicates.emplace_back(p, ring_predicate(ring, p));
    rec.delta = delta_nil_check(view);
    std::uint64_t prime = 0;
    const bool two_group = is_p_group(view.group().order(), &prime) && (prime == 2 || view.group().order() == 1);
    rec.nil_clean_predicted = two_group && ring_predicate(view.coeff_ring(), RingPredicate::NilClean).holds;
    rec.ring = ring;
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

std::vector<GroupRingScanRecord> groupring_scan(const std::vector<std::pair<RingSpec, GroupSpec>>& pairs,
                                                const std::vector<RingPredicate>& predicates, std::size_t max_order,
                                                unsigned jobs) {
  std::vector<GroupRingScanRecord> out(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();)
      out[i] = groupring_scan_pair(pairs[i].first, pairs[i].second, predicates, max_order);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work);
  }
  return out;
}

nlohmann::ordered_json to_json(const GroupRingScanRecord& r) {
  nlohmann::ordered_json j;
  j["coeff"] = r.coeff;
  j["group"] = r.group;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["order"] = r.order;
  nlohmann::ordered_json preds = nlohmann::ordered_json::object();
  for (const auto& [p, res] : r.predicates) preds[std::string(to_string(p))] = to_json(res, *r.ring);
  j["predicates"] = preds;
  j["delta"] = to_json(*r.delta, *r.ring);
  j["nil_clean_predicted"] = *r.nil_clean_predicted;
  for (const auto& [p, res] : r.predicates)
    if (p == RingPredicate::NilClean) j["nil_clean_agrees"] = res.holds == *r.nil_clean_predicted;
  return j;
}

}  // namespace ringlab
