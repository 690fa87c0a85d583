// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "voxtopo/invariants.hpp"
#include "voxtopo/voxel_volume.hpp"

namespace voxtopo {

/// Betti numbers and free-group presentations of H0..H3. For solids in a
/// finite grid every group is free and b3 is always 0.
struct HomologyGroups {
  std::uint64_t b0 = 0, b1 = 0, b2 = 0, b3 = 0;
  std::array<std::string, 4> presentation = {"0", "0", "0", "0"};

  friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;
};

/// "0", "Z", or "Z^k".
std::string rank_presentation(std::uint64_t rank);

/// Homology of one connected solid from the genera of its boundary
/// surfaces: b0 = 1, b1 = sum of genera, b2 = surfaces - 1, b3 = 0.
/// Throws std::invalid_argument on an empty genus list (a compact solid
/// has at least one boundary surface).
HomologyGroups component_homology(const std::vector<std::uint64_t>& genera);

/// Exact check of b0 - b1 + b2 - b3 == sum(2 - 2g) / 2.
bool euler_consistency(const std::vector<std::uint64_t>& genera, const HomologyGroups& h);

struct ComponentReport {
  std::int32_t component_id = 0;
  std::uint64_t voxel_count = 0;
  std::uint32_t boundary_surface_count = 0;
  std::vector<std::uint64_t> genera;            // one per boundary surface, by surface id
  std::vector<SurfaceClassification> surfaces;  // classification per boundary surface
  std::uint64_t b1_boundary = 0;                // sum of 2*g
  HomologyGroups homology;
  std::int64_t euler_solid = 0;
  std::int64_t euler_boundary = 0;
};

struct TopologyReport {
  std::int32_t component_count = 0;
  std::vector<ComponentReport> components;
  HomologyGroups total;  // componentwise direct sum
  std::int64_t total_euler_solid = 0;
  std::int64_t total_euler_boundary = 0;
};

/// Full pipeline: validate, label components, track boundary surfaces,
/// classify and compute genus per surface, then assemble homology per
/// component and for the whole object. Throws ManifoldError when
/// validation fails.
TopologyReport assemble_report(const VoxelVolume& v);

}  // namespace voxtopo
