// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "voxtopo/boundary.hpp"

namespace voxtopo {

/// Counts of surface corners by quad incidence. On a closed surface
/// m3 + m4 + m5 + m6 == V and m3 - m5 - 2*m6 is a multiple of 8.
struct SurfaceClassification {
  std::uint64_t m3 = 0, m4 = 0, m5 = 0, m6 = 0;

  std::uint64_t total() const { return m3 + m4 + m5 + m6; }
  friend bool operator==(const SurfaceClassification&, const SurfaceClassification&) = default;
};

SurfaceClassification classify(const BoundarySurface& s);

/// Discrete Gaussian curvature of a corner with incidence m, in exact
/// quarter-turn units (multiples of pi/2): 4 - m.
int vertex_curvature(int m);

/// Genus of the closed surface from its classification,
/// g = 1 + (m5 + 2*m6 - m3) / 8, in exact integer arithmetic.
/// Throws SurfaceError when the counts are not divisible by 8 or give a
/// negative genus; both only arise from invalid input.
std::uint64_t genus(const SurfaceClassification& c);

/// Exact integer checks: total curvature == 8 - 8g quarter-turns and
/// V - E + F == 2 - 2g.
bool gauss_bonnet_check(const BoundarySurface& s, std::uint64_t g);

/// Indexed triangle mesh with real coordinates, for the simplicial
/// extension of the genus computation.
struct TriMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::int32_t, 3>> triangles;
};

/// OFF subset: `OFF`, `V F E`, V coordinate lines, F lines of `3 i j k`.
TriMesh load_off(const std::filesystem::path& path);

struct MeshComponentGenus {
  int component_id = 0;
  std::uint64_t genus = 0;
  std::uint64_t V = 0, E = 0, F = 0;
  std::int64_t euler = 0;
  /// Total angle defect sum(2*pi - sum of incident angles) over the
  /// component's vertices; must match 2*pi*euler.
  double angle_defect = 0.0;
};

/// Per-component genus of a closed triangle mesh, from the combinatorial
/// Euler characteristic, with the angle-defect total as a mandatory
/// floating-point cross-check (1e-6 relative tolerance).
/// Components are split by edge-connectivity of triangles. Throws
/// SurfaceError on open meshes, degenerate triangles, odd Euler
/// characteristic, or an angle-defect mismatch.
std::vector<MeshComponentGenus> mesh_genus(const TriMesh& mesh);

}  // namespace voxtopo
