#pragma once

#include <string>
#include <vector>

#include "baassim/metrics.hpp"

namespace baassim {

/// Bar chart of average waiting time per policy, one <rect class="bar"> per
/// report, in the order given. Heights are proportional to the average wait;
/// every bar carries the policy name and the value label. Pure function of
/// the reports, byte-deterministic.
std::string comparison_svg(const std::vector<MetricsReport>& reports);

}  // namespace baassim
