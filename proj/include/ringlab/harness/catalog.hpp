#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ringlab {

/// Spec strings of the default catalog: at least 25 rings of order at most 4096 spanning every
/// construction.
const std::vector<std::string>& default_catalog();

/// (coefficient ring, group) pairs for group-ring checks.
const std::vector<std::pair<std::string, std::string>>& default_group_ring_pairs();

}  // namespace ringlab
