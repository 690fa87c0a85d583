// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "voxtopo/boundary.hpp"
#include "voxtopo/homology.hpp"
#include "voxtopo/oracle.hpp"

namespace voxtopo {

/// Stable JSON rendering of a report. Values are integers and strings
/// only; output is deterministic across runs.
nlohmann::json report_to_json(const TopologyReport& report);

/// Human-readable rendering; per_component adds the per-component block.
std::string report_to_text(const TopologyReport& report, bool per_component);

nlohmann::json violations_to_json(const std::vector<ManifoldViolation>& violations);
std::string violation_to_text(const ManifoldViolation& v);

nlohmann::json compare_to_json(const CompareResult& r);

}  // namespace voxtopo
