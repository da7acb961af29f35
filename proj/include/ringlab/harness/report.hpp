#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>
#include "ringlab/decompose.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kRinglabVersion = "1.0.0";

struct ReportOptions {
  unsigned jobs = 1;
  /// Omit the timing sidecar so identical runs are byte-identical.
  bool stable = false;
  std::size_t unit_group_cap = 100000;
};

/// Full classification: order, characteristic, subset sizes, every ring predicate with its
/// counterexample, NI / weakly 2-primal / unit group nilpotency.
nlohmann::ordered_json classification_report(const FiniteRing& ring, const ReportOptions& options = {});

std::string report_markdown(const nlohmann::ordered_json& report);

/// Decomposition of one element, with pretty-printed parts and the verifier's verdict.
nlohmann::ordered_json decomposition_report(const FiniteRing& ring, Handle x, DecompositionKind kind);

}  // namespace ringlab
