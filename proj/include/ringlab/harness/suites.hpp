#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>
#include "ringlab/finite_ring.hpp"
#include "ringlab/matrix_tfine.hpp"

namespace ringlab {

struct CheckResult {
  std::string id;
  std::string anchor;  // the statement the check exercises
  bool pass = false;
  std::string details;
  double seconds = 0;
  double time_limit = 0;  // 0: none
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct SuiteOptions {
  unsigned jobs = 1;
  std::size_t max_order = 4096;
  SearchBudget budget;
};

/// The ten acceptance criteria, in order.
SuiteResult run_acceptance_suite(const SuiteOptions& options = {});
/// Invariants over the default catalog and group-ring pairs up to options.max_order.
SuiteResult run_invariant_suite(const SuiteOptions& options = {});
/// "acceptance" (alias "paper") or "invariants"; nullopt for unknown names.
std::optional<SuiteResult> run_suite(std::string_view name, const SuiteOptions& options = {});

/// Acceptance criterion `number` (1..10) alone.
CheckResult run_acceptance_check(int number, const SuiteOptions& options = {});

/// Violations of the finite-ring trivializations and radical invariants on one ring; empty
/// when all hold.
std::vector<std::string> trivialization_failures(const FiniteRing& ring, unsigned jobs = 1);

nlohmann::ordered_json to_json(const SuiteResult& s);
std::string format_table(const SuiteResult& s);

}  // namespace ringlab
