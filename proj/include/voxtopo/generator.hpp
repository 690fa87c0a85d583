// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voxtopo/oracle.hpp"
#include "voxtopo/voxel_volume.hpp"

namespace voxtopo {

/// Curvature-relevant corner counts (m4 carries zero curvature and is
/// size-dependent, so fixtures do not pin it).
struct CurvatureCounts {
  std::uint64_t m3 = 0, m5 = 0, m6 = 0;

  friend bool operator==(const CurvatureCounts&, const CurvatureCounts&) = default;
};

struct FixtureExpected {
  std::int32_t component_count = 0;
  /// Genera of the boundary surfaces of each foreground component, in
  /// component label order.
  std::vector<std::vector<std::uint64_t>> genera;
  BettiTriple betti;
  /// Totals over all boundary surfaces of the fixture.
  CurvatureCounts classification;
};

/// A generated volume together with its ground-truth invariants.
struct Fixture {
  std::string name;
  VoxelVolume volume;
  FixtureExpected expected;
};

/// Solid cuboid; genus 0, Betti (1,0,0).
Fixture box(std::uint32_t w, std::uint32_t h, std::uint32_t d);

/// One-voxel-thick (2g+1) x 3 x 1 plate with g unit holes at
/// x = 1,3,...,2g-1, y = 1. Genus g, classification m3=8, m5=8g.
Fixture plate_with_holes(std::uint32_t g);

/// U-shaped solid with 0-2 square handles attached to the outer arm
/// walls. Each handle adds 4 m3 corners, 12 m5 corners, and one to the
/// genus.
Fixture u_shape(std::uint32_t handles);

/// outer^3 solid minus a centered cavity^3; two boundary surfaces,
/// Betti (1,0,1). Requires 1 <= cavity <= outer - 2.
Fixture hollow_box(std::uint32_t outer, std::uint32_t cavity);

/// Deterministic composition of `budget` primitives placed disjointly
/// along the x axis with at least one voxel of gap. Ground truth follows
/// from disjoint-union additivity.
Fixture random_manifold(std::uint64_t seed, std::uint32_t budget);

}  // namespace voxtopo
