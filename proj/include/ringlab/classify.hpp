#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Lexicographically minimal witness x^m = x^n (m < n) plus the element's power class.
struct PowerProfile {
  enum class Class { Nilpotent, TorsionUnit, Mixed };

  Handle element = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  Class kind = Class::Mixed;
  /// Nilpotency index for Nilpotent, multiplicative order for TorsionUnit, 0 otherwise.
  std::uint64_t exponent = 0;

  friend bool operator==(const PowerProfile&, const PowerProfile&) = default;
};

/// The power sequence x, x^2, ... is eventually periodic; m is its first repeating index and
/// n - m its period.
PowerProfile power_profile(const FiniteRing& ring, Handle x);

/// Smallest k >= 1 with x^k idempotent.
std::uint64_t idempotent_power(const FiniteRing& ring, Handle x);

/// A yes/no answer with the exponent that proves a yes.
struct Membership {
  bool member = false;
  std::uint64_t witness = 0;
  explicit operator bool() const { return member; }
};

Membership is_nilpotent(const FiniteRing& ring, Handle x);      // witness: nilpotency index
Membership is_unit(const FiniteRing& ring, Handle x);           // witness: multiplicative order
Membership is_torsion_unit(const FiniteRing& ring, Handle x);   // witness: multiplicative order
Membership is_idempotent(const FiniteRing& ring, Handle x);     // witness: 2
Membership is_potent(const FiniteRing& ring, Handle x);         // witness: smallest n >= 2, x^n = x
Membership is_unipotent(const FiniteRing& ring, Handle x);      // witness: index of x - 1

/// Sorted handle lists, computed lazily and cached on the ring.
struct StructuralSubsets {
  std::vector<Handle> units, nilpotents, idempotents, potents, torsion_units, unipotents, center, jacobson;
};

/// Power profiles of every element, cached.
const std::vector<PowerProfile>& power_profiles(const FiniteRing& ring);

const std::vector<Handle>& units(const FiniteRing& ring);
const std::vector<Handle>& nilpotents(const FiniteRing& ring);
const std::vector<Handle>& idempotents(const FiniteRing& ring);
const std::vector<Handle>& potents(const FiniteRing& ring);
const std::vector<Handle>& torsion_units(const FiniteRing& ring);
const std::vector<Handle>& unipotents(const FiniteRing& ring);
const std::vector<Handle>& center(const FiniteRing& ring);
/// {x : 1 - r x is a unit for every r}.
const std::vector<Handle>& jacobson(const FiniteRing& ring);
/// {x : 1 - x r is a unit for every r}; equal to jacobson() for every ring.
const std::vector<Handle>& jacobson_right(const FiniteRing& ring);

/// Membership masks indexed by handle.
const std::vector<char>& unit_mask(const FiniteRing& ring);
const std::vector<char>& nilpotent_mask(const FiniteRing& ring);

StructuralSubsets structural_subsets(const FiniteRing& ring);

/// Units found by searching for a two-sided inverse (independent of power profiles).
std::vector<Handle> units_by_inverse_search(const FiniteRing& ring);

/// Nil(R) is additively closed and absorbs multiplication on both sides.
bool is_NI(const FiniteRing& ring);
bool nil_additively_closed(const FiniteRing& ring);
/// Largest nilpotency index over Nil(R).
std::uint64_t nilpotence_index_bound(const FiniteRing& ring);

/// For finite rings the Levitzki radical equals J(R), so this decides Nil(R) == J(R).
bool is_weakly_2_primal(const FiniteRing& ring);

struct UnitGroupNilpotency {
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;
  std::size_t unit_group_order = 0;
  std::vector<std::size_t> series;  // lower central series orders
};

/// Lower central series of U(R). Throws CapExceeded when |U(R)| > cap.
UnitGroupNilpotency unit_group_is_nilpotent(const FiniteRing& ring, std::size_t cap = 100000);

/// Verdict on whether a polynomial over a finite commutative ring is periodic in R[t].
struct Periodic {
  std::uint64_t m = 0, n = 0;
};
struct NotPeriodic {
  std::string reason;
};
struct UnknownUpToBound {
  std::uint64_t bound = 0;
};
using PolyVerdict = std::variant<Periodic, NotPeriodic, UnknownUpToBound>;

/// `coefficients` are handles of R, constant term first. Throws NotCommutative.
PolyVerdict poly_element_periodic(const FiniteRing& ring, const std::vector<Handle>& coefficients,
                                  std::uint64_t exponent_bound = 64);

}  // namespace ringlab
