#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>
#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/decompose.hpp"

namespace ringlab {

/// A realized group ring RG together with its coefficient ring and group.
class GroupRingView {
 public:
  /// Throws InvalidSpec when `ring` is not a group ring construction.
  static GroupRingView from(const FiniteRing& ring);

  const FiniteRing& ring() const { return ring_; }
  const FiniteRing& coeff_ring() const { return impl_->coefficients(); }
  const GroupTable& group() const { return impl_->group(); }
  Handle coefficient(Handle x, std::uint32_t g) const { return impl_->coefficient(x, g); }
  Handle embed_group_element(std::uint32_t g) const { return impl_->embed_group_element(g); }
  Handle embed_scalar(Handle c) const { return impl_->embed_scalar(c); }

 private:
  GroupRingView(FiniteRing ring, const GroupRingRing* impl) : ring_(std::move(ring)), impl_(impl) {}
  FiniteRing ring_;
  const GroupRingRing* impl_;
};

/// Sum of coefficients.
Handle augmentation(const GroupRingView& v, Handle x);

/// Kernel of the augmentation map.
Ideal augmentation_ideal(const GroupRingView& v);

/// True when r -> (r + Delta) is a ring isomorphism R -> RG / Delta(G), checked on all pairs.
bool augmentation_quotient_isomorphic(const GroupRingView& v);

struct NilIdealReport {
  Ideal ideal;
  bool is_nil = true;
  std::uint64_t max_index = 0;           // largest nilpotency index over the ideal when nil
  std::optional<Handle> counterexample;  // smallest non-nilpotent element otherwise
  std::optional<PowerProfile> cycle;     // its power cycle, which avoids 0

  // Prediction: Delta(G) is nil when p*1 is nilpotent in R and G is a p-group.
  bool prediction_applies = false;
  std::uint64_t prime = 0;
  bool agrees = true;  // is_nil whenever the prediction applies
};

/// Nilness of an arbitrary ideal of `ring`.
NilIdealReport nil_ideal_check(const FiniteRing& ring, const Ideal& ideal);

NilIdealReport delta_nil_check(const RingSpec& coeff, const GroupSpec& group, std::size_t max_order = kDefaultMaxOrder);
NilIdealReport delta_nil_check(const GroupRingView& v);

nlohmann::ordered_json to_json(const NilIdealReport& r, const FiniteRing& ring);

/// One (R, G) pair of a scan. On a per-pair error only `error` is set.
struct GroupRingScanRecord {
  std::string coeff, group;
  std::optional<std::string> error;
  std::size_t order = 0;
  std::vector<std::pair<RingPredicate, PredicateResult>> predicates;
  std::optional<NilIdealReport> delta;
  /// Cited criterion: RG is nil clean iff R is nil clean and G is a 2-group.
  std::optional<bool> nil_clean_predicted;
  std::optional<FiniteRing> ring;  // for formatting witnesses
};

GroupRingScanRecord groupring_scan_pair(const RingSpec& coeff, const GroupSpec& group,
                                        const std::vector<RingPredicate>& predicates,
                                        std::size_t max_order = kDefaultMaxOrder);

/// Pairs run concurrently over `jobs` workers; output order follows input order.
std::vector<GroupRingScanRecord> groupring_scan(const std::vector<std::pair<RingSpec, GroupSpec>>& pairs,
                                                const std::vector<RingPredicate>& predicates,
                                                std::size_t max_order = kDefaultMaxOrder, unsigned jobs = 1);

nlohmann::ordered_json to_json(const GroupRingScanRecord& r);

}  // namespace ringlab
