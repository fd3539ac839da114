#pragma once

#include <string>

#include "wavecauchy/harness/config.hpp"
#include "wavecauchy/harness/report.hpp"

namespace wavecauchy::harness {

/// Validates the config and dispatches on its command. Deterministic for a
/// fixed config and seed. Solver guard violations (DomainSizeError,
/// StencilError) propagate to the caller.
Report run(const RunConfig& config);

/// The converge command: runs the target check at each ladder level and fits
/// the observed order. UsageError for fewer than 3 levels.
Report converge(const RunConfig& config);

/// Column layout of each command's CSV, for --help.
std::string csv_columns_help();

}  // namespace wavecauchy::harness
