#include "ringlab/decompose.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <thread>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

constexpr std::array<std::pair<DecompositionKind, std::string_view>, 9> kKindNames{{
    {DecompositionKind::SemiNilClean, "SemiNilClean"},
    {DecompositionKind::StronglySemiNilClean, "StronglySemiNilClean"},
    {DecompositionKind::WeaklyPeriodic, "WeaklyPeriodic"},
    {DecompositionKind::Clean, "Clean"},
    {DecompositionKind::NilClean, "NilClean"},
    {DecompositionKind::StronglyNilClean, "StronglyNilClean"},
    {DecompositionKind::SemiClean, "SemiClean"},
    {DecompositionKind::Fine, "Fine"},
    {DecompositionKind::TFine, "TFine"},
}};

constexpr std::array<std::pair<Role, std::string_view>, 6> kRoleNames{{
    {Role::Periodic, "periodic"},
    {Role::Potent, "potent"},
    {Role::Nilpotent, "nilpotent"},
    {Role::Idempotent, "idempotent"},
    {Role::Unit, "unit"},
    {Role::TorsionUnit, "torsion_unit"},
}};

constexpr std::array<std::pair<RingPredicate, std::string_view>, 13> kPredicateNames{{
    {RingPredicate::Periodic, "Periodic"},
    {RingPredicate::WeaklyPeriodic, "WeaklyPeriodic"},
    {RingPredicate::SemiNilClean, "SemiNilClean"},
    {RingPredicate::StronglySemiNilClean, "StronglySemiNilClean"},
    {RingPredicate::SemiClean, "SemiClean"},
    {RingPredicate::Clean, "Clean"},
    {RingPredicate::NilClean, "NilClean"},
    {RingPredicate::Fine, "Fine"},
    {RingPredicate::TFine, "TFine"},
    {RingPredicate::UU, "UU"},
    {RingPredicate::PiUU, "PiUU"},
    {RingPredicate::UNC, "UNC"},
    {RingPredicate::UnitSemiNilClean, "UnitSemiNilClean"},
}};

/// Case-insensitive match ignoring '-' and '_' so `weakly-periodic` finds WeaklyPeriodic.
bool loose_equal(std::string_view a, std::string_view b) {
  auto norm = [](std::string_view s) {
    std::string out;
    for (char c : s)
      if (c != '-' && c != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  return norm(a) == norm(b);
}

template <class Table, class Key>
std::string_view name_of(const Table& table, Key key) {
  for (const auto& [k, name] : table)
    if (k == key) return name;
  return "?";
}

template <class Table>
auto lookup(const Table& table, std::string_view name) -> std::optional<typename Table::value_type::first_type> {
  for (const auto& [k, n] : table)
    if (loose_equal(n, name)) return k;
  return std::nullopt;
}

const std::vector<Handle>& candidates_for(const FiniteRing& ring, Role role) {
  switch (role) {
    case Role::Nilpotent:
      return nilpotents(ring);
    case Role::Idempotent:
      return idempotents(ring);
    case Role::Unit:
      return units(ring);
    case Role::TorsionUnit:
      return torsion_units(ring);
    case Role::Potent:
      return potents(ring);
    case Role::Periodic:
      break;
  }
  throw std::logic_error("no candidate list for periodic parts");
}

bool witness_holds(const FiniteRing& ring, Handle x, const Witness& w) {
  switch (w.role) {
    case Role::Periodic:
      return w.first >= 1 && w.first < w.second && ring.pow(x, w.first) == ring.pow(x, w.second);
    case Role::Potent:
      return w.first >= 2 && ring.pow(x, w.first) == x;
    case Role::Nilpotent:
      return w.first >= 1 && ring.pow(x, w.first) == ring.zero();
    case Role::Idempotent:
      return ring.mul(x, x) == x;
    case Role::Unit:
    case Role::TorsionUnit:
      return w.first >= 1 && ring.pow(x, w.first) == ring.one();
  }
  return false;
}

VerifyReason failure_reason(bool part_a, Role role) {
  if (part_a) {
    switch (role) {
      case Role::Periodic:
        return VerifyReason::PartANotPeriodic;
      case Role::Potent:
        return VerifyReason::PartANotPotent;
      case Role::Unit:
        return VerifyReason::PartANotUnit;
      case Role::TorsionUnit:
        return VerifyReason::PartANotTorsionUnit;
      case Role::Idempotent:
        return VerifyReason::PartANotIdempotent;
      case Role::Nilpotent:
        break;
    }
    return VerifyReason::RoleMismatch;
  }
  switch (role) {
    case Role::Nilpotent:
      return VerifyReason::PartBNotNilpotent;
    case Role::Idempotent:
      return VerifyReason::PartBNotIdempotent;
    case Role::Unit:
      return VerifyReason::PartBNotUnit;
    default:
      return VerifyReason::RoleMismatch;
  }
}

bool is_nonzero_kind(DecompositionKind kind) {
  return kind == DecompositionKind::Fine || kind == DecompositionKind::TFine;
}

}  // namespace

std::string_view to_string(DecompositionKind kind) { return name_of(kKindNames, kind); }
std::optional<DecompositionKind> decomposition_kind_from_string(std::string_view name) {
  return lookup(kKindNames, name);
}
std::string_view to_string(Role role) { return name_of(kRoleNames, role); }
std::optional<Role> role_from_string(std::string_view name) { return lookup(kRoleNames, name); }
std::string_view to_string(RingPredicate p) { return name_of(kPredicateNames, p); }
std::optional<RingPredicate> ring_predicate_from_string(std::string_view name) {
  return lookup(kPredicateNames, name);
}

std::string_view to_string(VerifyReason reason) {
  switch (reason) {
    case VerifyReason::Ok: return "Ok";
    case VerifyReason::HandleOutOfRange: return "HandleOutOfRange";
    case VerifyReason::ZeroTarget: return "ZeroTarget";
    case VerifyReason::RoleMismatch: return "RoleMismatch";
    case VerifyReason::PartANotPeriodic: return "PartANotPeriodic";
    case VerifyReason::PartANotPotent: return "PartANotPotent";
    case VerifyReason::PartANotUnit: return "PartANotUnit";
    case VerifyReason::PartANotTorsionUnit: return "PartANotTorsionUnit";
    case VerifyReason::PartANotIdempotent: return "PartANotIdempotent";
    case VerifyReason::PartBNotNilpotent: return "PartBNotNilpotent";
    case VerifyReason::PartBNotIdempotent: return "PartBNotIdempotent";
    case VerifyReason::PartBNotUnit: return "PartBNotUnit";
    case VerifyReason::SumMismatch: return "SumMismatch";
    case VerifyReason::NotCommuting: return "NotCommuting";
  }
  return "?";
}

Role role_a(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::SemiNilClean:
    case DecompositionKind::StronglySemiNilClean:
    case DecompositionKind::SemiClean:
      return Role::Periodic;
    case DecompositionKind::WeaklyPeriodic:
      return Role::Potent;
    case DecompositionKind::Clean:
    case DecompositionKind::Fine:
      return Role::Unit;
    case DecompositionKind::NilClean:
    case DecompositionKind::StronglyNilClean:
      return Role::Idempotent;
    case DecompositionKind::TFine:
      return Role::TorsionUnit;
  }
  return Role::Periodic;
}

Role role_b(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::Clean:
      return Role::Idempotent;
    case DecompositionKind::SemiClean:
      return Role::Unit;
    default:
      return Role::Nilpotent;
  }
}

bool requires_commuting(DecompositionKind kind) {
  return kind == DecompositionKind::StronglySemiNilClean || kind == DecompositionKind::StronglyNilClean;
}

std::optional<Witness> witness_for(const FiniteRing& ring, Handle x, Role role) {
  const auto& p = power_profiles(ring)[x];
  switch (role) {
    case Role::Periodic:
      return Witness{role, p.m, p.n};
    case Role::Potent:
      if (p.m == 1) return Witness{role, p.n, 0};
      return std::nullopt;
    case Role::Nilpotent:
      if (p.kind == PowerProfile::Class::Nilpotent) return Witness{role, p.exponent, 0};
      return std::nullopt;
    case Role::Idempotent:
      if (ring.mul(x, x) == x) return Witness{role, 0, 0};
      return std::nullopt;
    case Role::Unit:
    case Role::TorsionUnit:
      if (p.kind == PowerProfile::Class::TorsionUnit) return Witness{role, p.exponent, 0};
      return std::nullopt;
  }
  return std::nullopt;
}

Decomposition decompose(const FiniteRing& ring, Handle x, DecompositionKind kind) {
  if (!ring.contains(x)) throw InvalidSpec("element handle out of range");
  if (is_nonzero_kind(kind) && x == ring.zero())
    throw ZeroNotEligible(std::string(to_string(kind)) + " is defined for non-zero elements only");

  const Role ra = role_a(kind), rb = role_b(kind);
  const auto& space = candidates_for(ring, rb);
  std::uint64_t enumerated = 0;
  for (Handle b : space) {
    ++enumerated;
    const Handle a = ring.sub(x, b);
    auto wa = witness_for(ring, a, ra);
    if (!wa) continue;
    const bool commute = ring.mul(a, b) == ring.mul(b, a);
    if (requires_commuting(kind) && !commute) continue;
    return Certificate{kind, x, a, b, *wa, *witness_for(ring, b, rb), commute};
  }
  return ExhaustiveFailure{kind, x, space.size(), enumerated};
}

VerifyResult verify_certificate(const FiniteRing& ring, const Certificate& c) {
  auto fail = [](VerifyReason r) { return VerifyResult{false, r}; };
  if (!ring.contains(c.target) || !ring.contains(c.part_a) || !ring.contains(c.part_b))
    return fail(VerifyReason::HandleOutOfRange);
  if (c.witness_a.role != role_a(c.kind) || c.witness_b.role != role_b(c.kind)) return fail(VerifyReason::RoleMismatch);
  if (is_nonzero_kind(c.kind) && c.target == ring.zero()) return fail(VerifyReason::ZeroTarget);
  if (!witness_holds(ring, c.part_b, c.witness_b)) return fail(failure_reason(false, c.witness_b.role));
  if (!witness_holds(ring, c.part_a, c.witness_a)) return fail(failure_reason(true, c.witness_a.role));
  if (ring.add(c.part_a, c.part_b) != c.target) return fail(VerifyReason::SumMismatch);
  if ((c.commuting || requires_commuting(c.kind)) &&
      (!c.commuting || ring.mul(c.part_a, c.part_b) != ring.mul(c.part_b, c.part_a)))
    return fail(VerifyReason::NotCommuting);
  return VerifyResult{true, VerifyReason::Ok};
}

namespace {

std::optional<DecompositionKind> decomposition_for(RingPredicate p) {
  switch (p) {
    case RingPredicate::WeaklyPeriodic: return DecompositionKind::WeaklyPeriodic;
    case RingPredicate::SemiNilClean: return DecompositionKind::SemiNilClean;
    case RingPredicate::StronglySemiNilClean: return DecompositionKind::StronglySemiNilClean;
    case RingPredicate::SemiClean: return DecompositionKind::SemiClean;
    case RingPredicate::Clean: return DecompositionKind::Clean;
    case RingPredicate::NilClean: return DecompositionKind::NilClean;
    case RingPredicate::Fine: return DecompositionKind::Fine;
    case RingPredicate::TFine: return DecompositionKind::TFine;
    case RingPredicate::UNC: return DecompositionKind::NilClean;
    case RingPredicate::UnitSemiNilClean: return DecompositionKind::SemiNilClean;
    default: return std::nullopt;
  }
}

std::vector<Handle> domain_of(const FiniteRing& ring, RingPredicate p) {
  switch (p) {
    case RingPredicate::UU:
    case RingPredicate::PiUU:
    case RingPredicate::UNC:
    case RingPredicate::UnitSemiNilClean:
      return units(ring);
    case RingPredicate::Fine:
    case RingPredicate::TFine: {
      std::vector<Handle> all(ring.order() - 1);
      for (Handle x = 1; x < ring.order(); ++x) all[x - 1] = x;
      return all;
    }
    default: {
      std::vector<Handle> all(ring.order());
      for (Handle x = 0; x < ring.order(); ++x) all[x] = x;
      return all;
    }
  }
}

/// Fills every cache the per-element checks read, so worker threads only read.
void warm_caches(const FiniteRing& ring) {
  power_profiles(ring);
  nilpotents(ring);
  nilpotent_mask(ring);
  idempotents(ring);
  units(ring);
  torsion_units(ring);
  potents(ring);
}

}  // namespace

PredicateResult ring_predicate(const FiniteRing& ring, RingPredicate predicate, unsigned jobs) {
  warm_caches(ring);
  const auto domain = domain_of(ring, predicate);
  const auto kind = decomposition_for(predicate);
  const auto& nil = nilpotent_mask(ring);
  const auto& prof = power_profiles(ring);

  auto holds_at = [&](Handle x) -> bool {
    switch (predicate) {
      case RingPredicate::Periodic:
        return prof[x].m < prof[x].n && ring.pow(x, prof[x].m) == ring.pow(x, prof[x].n);
      case RingPredicate::UU:
        return nil[ring.sub(x, ring.one())] != 0;
      case RingPredicate::PiUU: {
        Handle y = x;
        for (std::uint64_t k = 1; k <= ring.order(); ++k, y = ring.mul(y, x))
          if (nil[ring.sub(y, ring.one())]) return true;
        return false;
      }
      default:
        return std::holds_alternative<Certificate>(decompose(ring, x, *kind));
    }
  };

  // Smallest failing position in `domain`; domain.size() when none.
  std::atomic<std::size_t> first_failure{domain.size()};
  auto scan = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && i < first_failure.load(std::memory_order_relaxed); ++i)
      if (!holds_at(domain[i])) {
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
        return;
      }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, domain.size() / 64))));
  if (jobs == 1) {
    scan(0, domain.size());
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (domain.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back(scan, std::min(domain.size(), w * chunk), std::min(domain.size(), (w + 1) * chunk));
  }

  PredicateResult result;
  result.predicate = predicate;
  const std::size_t pos = first_failure.load();
  if (pos == domain.size()) {
    result.holds = true;
    result.checked = domain.size();
    return result;
  }
  result.holds = false;
  result.checked = pos + 1;
  result.counterexample = domain[pos];
  if (kind) {
    const auto d = decompose(ring, domain[pos], *kind);
    if (const auto* f = std::get_if<ExhaustiveFailure>(&d)) result.failure = *f;
  }
  return result;
}

}  // namespace ringlab
