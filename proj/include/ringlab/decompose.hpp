#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>
#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Additive decomposition notions x = part_a + part_b.
///
/// | kind                 | part_a       | part_b     | commuting |
/// |----------------------|--------------|------------|-----------|
/// | SemiNilClean         | periodic     | nilpotent  |           |
/// | StronglySemiNilClean | periodic     | nilpotent  | required  |
/// | WeaklyPeriodic       | potent       | nilpotent  |           |
/// | Clean                | unit         | idempotent |           |
/// | NilClean             | idempotent   | nilpotent  |           |
/// | StronglyNilClean     | idempotent   | nilpotent  | required  |
/// | SemiClean            | periodic     | unit       |           |
/// | Fine                 | unit         | nilpotent  | x != 0    |
/// | TFine                | torsion unit | nilpotent  | x != 0    |
enum class DecompositionKind {
  SemiNilClean,
  StronglySemiNilClean,
  WeaklyPeriodic,
  Clean,
  NilClean,
  StronglyNilClean,
  SemiClean,
  Fine,
  TFine,
};

enum class Role { Periodic, Potent, Nilpotent, Idempotent, Unit, TorsionUnit };

/// Exponent data proving a part's role: periodic (m, n) with x^m = x^n; potent n with x^n = x;
/// nilpotent index k with x^k = 0; unit order t with x^t = 1; idempotent has no data.
struct Witness {
  Role role = Role::Nilpotent;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Certificate {
  DecompositionKind kind = DecompositionKind::SemiNilClean;
  Handle target = 0;
  Handle part_a = 0;
  Handle part_b = 0;
  Witness witness_a;
  Witness witness_b;
  bool commuting = false;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Proof of absence: every candidate in the search space was examined.
struct ExhaustiveFailure {
  DecompositionKind kind = DecompositionKind::SemiNilClean;
  Handle target = 0;
  std::uint64_t search_space_size = 0;
  std::uint64_t enumerated = 0;
  friend bool operator==(const ExhaustiveFailure&, const ExhaustiveFailure&) = default;
};

using Decomposition = std::variant<Certificate, ExhaustiveFailure>;

std::string_view to_string(DecompositionKind kind);
std::optional<DecompositionKind> decomposition_kind_from_string(std::string_view name);
std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view name);

Role role_a(DecompositionKind kind);
Role role_b(DecompositionKind kind);
bool requires_commuting(DecompositionKind kind);

/// Searches part_b over the role_b subset in increasing handle order and returns the first
/// valid certificate, or an ExhaustiveFailure. Throws ZeroNotEligible for Fine/TFine at 0.
Decomposition decompose(const FiniteRing& ring, Handle x, DecompositionKind kind);

/// Witness for `x` in `role`, if x has that role.
std::optional<Witness> witness_for(const FiniteRing& ring, Handle x, Role role);

enum class VerifyReason {
  Ok,
  HandleOutOfRange,
  ZeroTarget,
  RoleMismatch,
  PartANotPeriodic,
  PartANotPotent,
  PartANotUnit,
  PartANotTorsionUnit,
  PartANotIdempotent,
  PartBNotNilpotent,
  PartBNotIdempotent,
  PartBNotUnit,
  SumMismatch,
  NotCommuting,
};

struct VerifyResult {
  bool ok = false;
  VerifyReason reason = VerifyReason::Ok;
  explicit operator bool() const { return ok; }
};

std::string_view to_string(VerifyReason reason);

/// Re-checks the certificate from its recorded witnesses only.
VerifyResult verify_certificate(const FiniteRing& ring, const Certificate& c);

/// Ring-level predicates.
enum class RingPredicate {
  Periodic,
  WeaklyPeriodic,
  SemiNilClean,
  StronglySemiNilClean,
  SemiClean,
  Clean,
  NilClean,
  Fine,
  TFine,
  UU,
  PiUU,
  UNC,
  UnitSemiNilClean,
};

inline constexpr RingPredicate kAllRingPredicates[] = {
    RingPredicate::Periodic, RingPredicate::WeaklyPeriodic, RingPredicate::SemiNilClean,
    RingPredicate::StronglySemiNilClean, RingPredicate::SemiClean, RingPredicate::Clean,
    RingPredicate::NilClean, RingPredicate::Fine, RingPredicate::TFine, RingPredicate::UU,
    RingPredicate::PiUU, RingPredicate::UNC, RingPredicate::UnitSemiNilClean,
};

std::string_view to_string(RingPredicate p);
std::optional<RingPredicate> ring_predicate_from_string(std::string_view name);

struct PredicateResult {
  RingPredicate predicate = RingPredicate::Periodic;
  bool holds = true;
  std::uint64_t checked = 0;                    // elements quantified over
  std::optional<Handle> counterexample;         // smallest failing element
  std::optional<ExhaustiveFailure> failure;     // for decomposition-based predicates
};

/// Quantifies over all elements (non-zero ones for Fine/TFine, units for UU/PiUU/UNC/
/// UnitSemiNilClean). `jobs` > 1 splits the scan across threads; the reported counterexample is
/// always the smallest failing handle.
PredicateResult ring_predicate(const FiniteRing& ring, RingPredicate predicate, unsigned jobs = 1);

// JSON forms: {kind, target, part_a, part_b, witnesses, commuting} and
// {kind, target, search_space_size, enumerated}.
nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const ExhaustiveFailure& f);
Certificate certificate_from_json(const nlohmann::json& j);
ExhaustiveFailure failure_from_json(const nlohmann::json& j);
/// {holds, checked[, counterexample: {handle, value}][, failure]}.
nlohmann::ordered_json to_json(const PredicateResult& r, const FiniteRing& ring);

}  // namespace ringlab
