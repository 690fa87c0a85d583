// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/homology.hpp"

#include <stdexcept>

#include "voxtopo/boundary.hpp"
#include "voxtopo/errors.hpp"

namespace voxtopo {

std::string rank_presentation(std::uint64_t rank) {
  if (rank == 0) return "0";
  if (rank == 1) return "Z";
  return "Z^" + std::to_string(rank);
}

HomologyGroups component_homology(const std::vector<std::uint64_t>& genera) {
  if (genera.empty()) {
    throw std::invalid_argument("a compact solid has at least one boundary surface");
  }
  HomologyGroups h;
  h.b0 = 1;
  for (const std::uint64_t g : genera) h.b1 += g;
  h.b2 = genera.size() - 1;
  h.b3 = 0;
  for (int i = 0; i < 4; ++i) {
    const std::uint64_t rank = i == 0 ? h.b0 : i == 1 ? h.b1 : i == 2 ? h.b2 : h.b3;
    h.presentation[static_cast<std::size_t>(i)] = rank_presentation(rank);
  }
  return h;
}

bool euler_consistency(const std::vector<std::uint64_t>& genera, const HomologyGroups& h) {
  std::int64_t boundary_euler = 0;
  for (const std::uint64_t g : genera) {
    boundary_euler += 2 - 2 * static_cast<std::int64_t>(g);
  }
  const std::int64_t chi = static_cast<std::int64_t>(h.b0) - static_cast<std::int64_t>(h.b1) +
                           static_cast<std::int64_t>(h.b2) - static_cast<std::int64_t>(h.b3);
  return 2 * chi == boundary_euler;
}

TopologyReport assemble_report(const VoxelVolume& v) {
  auto violations = validate_manifold(v);
  if (!violations.empty()) {
    throw ManifoldError(std::move(violations));
  }

  const ComponentLabeling labeling = foreground_components(v);
  const std::vector<BoundarySurface> surfaces = extract_boundary(v, labeling);

  TopologyReport report;
  report.component_count = labeling.component_count;
  report.components.resize(static_cast<std::size_t>(labeling.component_count));
  for (std::int32_t id = 0; id < labeling.component_count; ++id) {
    ComponentReport& c = report.components[static_cast<std::size_t>(id)];
    c.component_id = id;
    c.voxel_count = labeling.sizes[static_cast<std::size_t>(id)];
  }

  for (const BoundarySurface& s : surfaces) {
    ComponentReport& c = report.components.at(static_cast<std::size_t>(s.owner_component));
    const SurfaceClassification cls = classify(s);
    const std::uint64_t g = genus(cls);
    if (!gauss_bonnet_check(s, g)) {
      throw SurfaceError("surface " + std::to_string(s.id) +
                         " fails the total-curvature check");
    }
    c.surfaces.push_back(cls);
    c.genera.push_back(g);
    c.boundary_surface_count += 1;
    c.b1_boundary += 2 * g;
    c.euler_boundary += 2 - 2 * static_cast<std::int64_t>(g);
  }

  report.total.presentation = {"0", "0", "0", "0"};
  for (ComponentReport& c : report.components) {
    c.homology = component_homology(c.genera);
    c.euler_solid = static_cast<std::int64_t>(c.homology.b0) -
                    static_cast<std::int64_t>(c.homology.b1) +
                    static_cast<std::int64_t>(c.homology.b2) -
                    static_cast<std::int64_t>(c.homology.b3);
    if (!euler_consistency(c.genera, c.homology)) {
      throw SurfaceError("component " + std::to_string(c.component_id) +
                         " fails the Euler consistency check");
    }
    report.total.b0 += c.homology.b0;
    report.total.b1 += c.homology.b1;
    report.total.b2 += c.homology.b2;
    report.total.b3 += c.homology.b3;
    report.total_euler_solid += c.euler_solid;
    report.total_euler_boundary += c.euler_boundary;
  }
  report.total.presentation = {rank_presentation(report.total.b0),
                               rank_presentation(report.total.b1),
                               rank_presentation(report.total.b2),
                               rank_presentation(report.total.b3)};
  return report;
}

}  // namespace voxtopo
