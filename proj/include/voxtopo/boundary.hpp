// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "voxtopo/errors.hpp"
#include "voxtopo/voxel_volume.hpp"

namespace voxtopo {

/// Axis-aligned face directions, +x -x +y -y +z -z. opposite(d) == d^1.
enum class FaceDir : std::uint8_t { xp = 0, xm = 1, yp = 2, ym = 3, zp = 4, zm = 5 };

inline FaceDir opposite(FaceDir d) {
  return static_cast<FaceDir>(static_cast<std::uint8_t>(d) ^ 1u);
}

std::array<int, 3> dir_step(FaceDir d);

/// One unit quad of the boundary: the face between a foreground voxel and
/// the adjacent background cell in `dir`.
struct SurfaceFace {
  VoxelCoord cell;
  FaceDir dir;

  friend bool operator==(const SurfaceFace&, const SurfaceFace&) = default;
};

struct ManifoldViolation {
  enum class Kind { nonmanifold_edge, nonmanifold_vertex, bad_incidence };

  Kind kind;
  /// Lattice location: a corner point for vertex violations (axis == -1),
  /// or the base point plus direction axis (0=x,1=y,2=z) of a lattice edge.
  std::int64_t x = 0, y = 0, z = 0;
  int axis = -1;
  std::string detail;
};

/// Raised when boundary tracking runs into a non-manifold configuration.
class ManifoldError : public std::runtime_error {
 public:
  explicit ManifoldError(std::vector<ManifoldViolation> violations);
  const std::vector<ManifoldViolation>& violations() const { return violations_; }

 private:
  std::vector<ManifoldViolation> violations_;
};

/// One face-connected closed quad surface component of the boundary.
/// vertex_incidence maps each lattice corner (keyed by lattice_point_key)
/// to the number m of incident surface quads; on a valid manifold
/// m is one of 3,4,5,6.
struct BoundarySurface {
  std::int32_t id = 0;
  std::int32_t owner_component = 0;
  std::vector<SurfaceFace> faces;
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_incidence;
  std::uint64_t V = 0, E = 0, F = 0;
  std::array<std::uint32_t, 3> grid_dims{};  // for decoding lattice keys
};

/// Lattice corner points live on the (nx+1) x (ny+1) x (nz+1) grid.
inline std::uint64_t lattice_point_key(const std::array<std::uint32_t, 3>& dims, std::int64_t x,
                                       std::int64_t y, std::int64_t z) {
  const std::uint64_t sx = dims[0] + std::uint64_t{1};
  const std::uint64_t sy = dims[1] + std::uint64_t{1};
  return static_cast<std::uint64_t>(x) + sx * (static_cast<std::uint64_t>(y) + sy * z);
}

inline std::array<std::int64_t, 3> lattice_point_of_key(const std::array<std::uint32_t, 3>& dims,
                                                        std::uint64_t key) {
  const std::uint64_t sx = dims[0] + std::uint64_t{1};
  const std::uint64_t sy = dims[1] + std::uint64_t{1};
  return {static_cast<std::int64_t>(key % sx), static_cast<std::int64_t>((key / sx) % sy),
          static_cast<std::int64_t>(key / (sx * sy))};
}

/// Local manifold validity: every lattice edge touched by the boundary
/// bounds exactly 2 quads, and the quads around every boundary corner form
/// a single edge-connected fan with incidence in {3,4,5,6}. Empty result
/// means the volume is a valid digital manifold.
std::vector<ManifoldViolation> validate_manifold(const VoxelVolume& v);

/// Tracks the boundary and splits it into closed surfaces by
/// edge-connectivity of faces. Each surface is tagged with the foreground
/// component it bounds. Throws ManifoldError if tracking crosses an edge
/// with a face count other than 2.
std::vector<BoundarySurface> extract_boundary(const VoxelVolume& v,
                                              const ComponentLabeling& labeling);

/// Per-corner quad incidence of a surface (computed during extraction).
inline const std::unordered_map<std::uint64_t, std::uint32_t>& vertex_incidence(
    const BoundarySurface& s) {
  return s.vertex_incidence;
}

}  // namespace voxtopo
