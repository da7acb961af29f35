#include "ringlab/classify.hpp"

#include <algorithm>

#include "ringlab/errors.hpp"
#include "ringlab/group.hpp"

namespace ringlab {

PowerProfile power_profile(const FiniteRing& ring, Handle x) {
  // Brent's cycle detection on s_1 = x, s_{i+1} = s_i * x.
  auto next = [&](Handle s) { return ring.mul(s, x); };
  std::uint64_t power = 1, period = 1;
  Handle tortoise = x, hare = next(x);
  while (tortoise != hare) {
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = next(hare);
    ++period;
  }
  tortoise = hare = x;
  for (std::uint64_t i = 0; i < period; ++i) hare = next(hare);
  std::uint64_t offset = 0;
  while (tortoise != hare) {
    tortoise = next(tortoise);
    hare = next(hare);
    ++offset;
  }

  PowerProfile p;
  p.element = x;
  p.m = offset + 1;
  p.n = p.m + period;
  if (tortoise == ring.zero()) {
    p.kind = PowerProfile::Class::Nilpotent;
    p.exponent = p.m;
  } else if (p.m == 1 && ring.pow(x, period) == ring.one()) {
    p.kind = PowerProfile::Class::TorsionUnit;
    p.exponent = period;
  }
  return p;
}

std::uint64_t idempotent_power(const FiniteRing& ring, Handle x) {
  Handle y = x;
  for (std::uint64_t k = 1;; ++k, y = ring.mul(y, x))
    if (ring.mul(y, y) == y) return k;
}

Membership is_nilpotent(const FiniteRing& ring, Handle x) {
  auto p = power_profile(ring, x);
  if (p.kind == PowerProfile::Class::Nilpotent) return {true, p.exponent};
  return {};
}

Membership is_torsion_unit(const FiniteRing& ring, Handle x) {
  auto p = power_profile(ring, x);
  if (p.kind == PowerProfile::Class::TorsionUnit) return {true, p.exponent};
  return {};
}

Membership is_unit(const FiniteRing& ring, Handle x) { return is_torsion_unit(ring, x); }

Membership is_idempotent(const FiniteRing& ring, Handle x) {
  if (ring.mul(x, x) == x) return {true, 2};
  return {};
}

Membership is_potent(const FiniteRing& ring, Handle x) {
  auto p = power_profile(ring, x);
  if (p.m == 1) return {true, p.n};
  return {};
}

Membership is_unipotent(const FiniteRing& ring, Handle x) { return is_nilpotent(ring, ring.sub(x, ring.one())); }

namespace {

struct ProfilesTag {
  using value_type = std::vector<PowerProfile>;
};
struct UnitsTag {
  using value_type = std::vector<Handle>;
};
struct UnitMaskTag {
  using value_type = std::vector<char>;
};
struct NilTag {
  using value_type = std::vector<Handle>;
};
struct NilMaskTag {
  using value_type = std::vector<char>;
};
struct IdemTag {
  using value_type = std::vector<Handle>;
};
struct PotentTag {
  using value_type = std::vector<Handle>;
};
struct TorsionTag {
  using value_type = std::vector<Handle>;
};
struct UnipotentTag {
  using value_type = std::vector<Handle>;
};
struct CenterTag {
  using value_type = std::vector<Handle>;
};
struct JacobsonLeftTag {
  using value_type = std::vector<Handle>;
};
struct JacobsonRightTag {
  using value_type = std::vector<Handle>;
};

template <class Pred>
std::vector<Handle> select(const FiniteRing& ring, Pred pred) {
  std::vector<Handle> out;
  for (Handle x = 0; x < ring.order(); ++x)
    if (pred(x)) out.push_back(x);
  return out;
}

std::vector<char> mask_of(const FiniteRing& ring, const std::vector<Handle>& set) {
  std::vector<char> m(ring.order(), 0);
  for (auto x : set) m[x] = 1;
  return m;
}

}  // namespace

const std::vector<PowerProfile>& power_profiles(const FiniteRing& ring) {
  return ring.cache().get<ProfilesTag>([&] {
    std::vector<PowerProfile> out;
    out.reserve(ring.order());
    for (Handle x = 0; x < ring.order(); ++x) out.push_back(power_profile(ring, x));
    return out;
  });
}

std::vector<Handle> units_by_inverse_search(const FiniteRing& ring) {
  return select(ring, [&](Handle x) {
    for (Handle y = 0; y < ring.order(); ++y)
      if (ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one()) return true;
    return false;
  });
}

const std::vector<Handle>& units(const FiniteRing& ring) {
  return ring.cache().get<UnitsTag>([&] {
    // With materialized tables the direct inverse search is affordable; otherwise a unit is an
    // element some positive power of which is one.
    if (ring.tabulated()) return units_by_inverse_search(ring);
    return torsion_units(ring);
  });
}

const std::vector<char>& unit_mask(const FiniteRing& ring) {
  return ring.cache().get<UnitMaskTag>([&] { return mask_of(ring, units(ring)); });
}

const std::vector<Handle>& torsion_units(const FiniteRing& ring) {
  return ring.cache().get<TorsionTag>([&] {
    const auto& prof = power_profiles(ring);
    return select(ring, [&](Handle x) { return prof[x].kind == PowerProfile::Class::TorsionUnit; });
  });
}

const std::vector<Handle>& nilpotents(const FiniteRing& ring) {
  return ring.cache().get<NilTag>([&] {
    const auto& prof = power_profiles(ring);
    return select(ring, [&](Handle x) { return prof[x].kind == PowerProfile::Class::Nilpotent; });
  });
}

const std::vector<char>& nilpotent_mask(const FiniteRing& ring) {
  return ring.cache().get<NilMaskTag>([&] { return mask_of(ring, nilpotents(ring)); });
}

const std::vector<Handle>& idempotents(const FiniteRing& ring) {
  return ring.cache().get<IdemTag>([&] { return select(ring, [&](Handle x) { return ring.mul(x, x) == x; }); });
}

const std::vector<Handle>& potents(const FiniteRing& ring) {
  return ring.cache().get<PotentTag>([&] {
    const auto& prof = power_profiles(ring);
    return select(ring, [&](Handle x) { return prof[x].m == 1; });
  });
}

const std::vector<Handle>& unipotents(const FiniteRing& ring) {
  return ring.cache().get<UnipotentTag>([&] {
    const auto& nil = nilpotent_mask(ring);
    return select(ring, [&](Handle x) { return nil[ring.sub(x, ring.one())] != 0; });
  });
}

const std::vector<Handle>& center(const FiniteRing& ring) {
  return ring.cache().get<CenterTag>([&] {
    return select(ring, [&](Handle x) {
      for (Handle r = 0; r < ring.order(); ++r)
        if (ring.mul(x, r) != ring.mul(r, x)) return false;
      return true;
    });
  });
}

const std::vector<Handle>& jacobson(const FiniteRing& ring) {
  return ring.cache().get<JacobsonLeftTag>([&] {
    const auto& unit = unit_mask(ring);
    return select(ring, [&](Handle x) {
      for (Handle r = 0; r < ring.order(); ++r)
        if (!unit[ring.sub(ring.one(), ring.mul(r, x))]) return false;
      return true;
    });
  });
}

const std::vector<Handle>& jacobson_right(const FiniteRing& ring) {
  return ring.cache().get<JacobsonRightTag>([&] {
    const auto& unit = unit_mask(ring);
    return select(ring, [&](Handle x) {
      for (Handle r = 0; r < ring.order(); ++r)
        if (!unit[ring.sub(ring.one(), ring.mul(x, r))]) return false;
      return true;
    });
  });
}

StructuralSubsets structural_subsets(const FiniteRing& ring) {
  return StructuralSubsets{units(ring),         nilpotents(ring), idempotents(ring), potents(ring),
                           torsion_units(ring), unipotents(ring), center(ring),      jacobson(ring)};
}

bool nil_additively_closed(const FiniteRing& ring) {
  const auto& nil = nilpotents(ring);
  const auto& mask = nilpotent_mask(ring);
  for (auto a : nil)
    for (auto b : nil)
      if (!mask[ring.add(a, b)]) return false;
  return true;
}

bool is_NI(const FiniteRing& ring) {
  if (!nil_additively_closed(ring)) return false;
  const auto& mask = nilpotent_mask(ring);
  for (auto a : nilpotents(ring))
    for (Handle r = 0; r < ring.order(); ++r)
      if (!mask[ring.mul(r, a)] || !mask[ring.mul(a, r)]) return false;
  return true;
}

std::uint64_t nilpotence_index_bound(const FiniteRing& ring) {
  std::uint64_t d = 0;
  const auto& prof = power_profiles(ring);
  for (auto x : nilpotents(ring)) d = std::max(d, prof[x].exponent);
  return d;
}

bool is_weakly_2_primal(const FiniteRing& ring) { return nilpotents(ring) == jacobson(ring); }

UnitGroupNilpotency unit_group_is_nilpotent(const FiniteRing& ring, std::size_t cap) {
  const auto& u = units(ring);
  if (u.size() > cap)
    throw CapExceeded("unit group of order " + std::to_string(u.size()) + " exceeds cap " + std::to_string(cap));
  std::vector<std::uint32_t> local(ring.order(), 0);
  for (std::uint32_t i = 0; i < u.size(); ++i) local[u[i]] = i;
  const auto& prof = power_profiles(ring);

  GroupOps ops;
  ops.size = u.size();
  ops.identity = local[ring.one()];
  ops.mul = [&](std::uint32_t a, std::uint32_t b) { return local[ring.mul(u[a], u[b])]; };
  ops.inverse = [&](std::uint32_t a) { return local[ring.pow(u[a], prof[u[a]].exponent - 1)]; };

  auto series = lower_central_series(ops);
  return UnitGroupNilpotency{series.nilpotent, series.nilpotency_class, u.size(), series.sizes};
}

}  // namespace ringlab
