#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/finite_ring.hpp"

// Brute-force reference computations. They share no code with the classifiers beyond ring
// arithmetic, so agreement between the two is evidence rather than tautology.
namespace ringlab::oracle {

/// x with x^k = 0 for some k <= order, by repeated multiplication.
std::vector<Handle> nilpotents(const FiniteRing& ring);
/// x with a two-sided inverse.
std::vector<Handle> units(const FiniteRing& ring);
std::vector<Handle> idempotents(const FiniteRing& ring);

/// Smallest non-zero x that is not unit + nilpotent, or nullopt when the ring is t-fine.
std::optional<Handle> tfine_counterexample(const FiniteRing& ring);
/// Smallest x that is not idempotent + nilpotent.
std::optional<Handle> nil_clean_counterexample(const FiniteRing& ring);

bool is_field(const FiniteRing& ring);

/// Intersection of all maximal left ideals, by enumerating every subset. Order <= 16 only.
std::vector<Handle> jacobson_by_maximal_left_ideals(const FiniteRing& ring);

/// Number of additive endomorphisms of Z_{q1} + ... + Z_{qk}: every choice of generator images
/// is extended and kept when the extension is additive.
std::uint64_t count_additive_endomorphisms(const std::vector<std::uint64_t>& invariants);

/// A ring isomorphism a -> b as an image table, by backtracking with closure propagation.
std::optional<std::vector<Handle>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

}  // namespace ringlab::oracle
