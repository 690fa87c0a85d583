// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace voxtopo {

namespace {

VoxelVolume volume_from_cells(const std::vector<VoxelCoord>& cells) {
  std::int64_t max_x = 0, max_y = 0, max_z = 0;
  for (const VoxelCoord& c : cells) {
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
    max_z = std::max(max_z, c.z);
  }
  VoxelVolume v(static_cast<std::uint32_t>(max_x + 1), static_cast<std::uint32_t>(max_y + 1),
                static_cast<std::uint32_t>(max_z + 1));
  for (const VoxelCoord& c : cells) v.set(c.x, c.y, c.z, true);
  return v;
}

// Cells of the U solid and its handles, before translation. The U is an
// extruded U-polyomino (arms along y, thickness 3 in z) sitting at
// x in [2,4]; handles are square arches on the outer arm walls at
// x < 2 and x > 4.
std::vector<VoxelCoord> u_shape_cells(std::uint32_t handles) {
  std::vector<VoxelCoord> cells;
  for (std::int64_t z = 0; z < 3; ++z) {
    for (std::int64_t x = 2; x <= 4; ++x) cells.push_back({x, 0, z});  // base bar
    for (std::int64_t y = 1; y <= 4; ++y) {
      cells.push_back({2, y, z});  // left arm
      cells.push_back({4, y, z});  // right arm
    }
  }
  if (handles >= 1) {
    cells.push_back({1, 1, 1});  // posts
    cells.push_back({1, 3, 1});
    for (std::int64_t y = 1; y <= 3; ++y) cells.push_back({0, y, 1});  // crossbar
  }
  if (handles >= 2) {
    cells.push_back({5, 1, 1});
    cells.push_back({5, 3, 1});
    for (std::int64_t y = 1; y <= 3; ++y) cells.push_back({6, y, 1});
  }
  // Normalize so the volume starts at x = 0.
  std::int64_t min_x = cells.front().x;
  for (const VoxelCoord& c : cells) min_x = std::min(min_x, c.x);
  for (VoxelCoord& c : cells) c.x -= min_x;
  return cells;
}

std::vector<VoxelCoord> plate_cells(std::uint32_t g) {
  const std::int64_t width = 2 * static_cast<std::int64_t>(g) + 1;
  std::vector<VoxelCoord> cells;
  for (std::int64_t y = 0; y < 3; ++y) {
    for (std::int64_t x = 0; x < width; ++x) {
      const bool hole = y == 1 && x % 2 == 1;
      if (!hole) cells.push_back({x, y, 0});
    }
  }
  return cells;
}

std::vector<VoxelCoord> hollow_box_cells(std::uint32_t outer, std::uint32_t cavity) {
  const std::int64_t o = outer, c = cavity;
  const std::int64_t lo = (o - c) / 2;
  std::vector<VoxelCoord> cells;
  for (std::int64_t z = 0; z < o; ++z) {
    for (std::int64_t y = 0; y < o; ++y) {
      for (std::int64_t x = 0; x < o; ++x) {
        const bool inside = x >= lo && x < lo + c && y >= lo && y < lo + c && z >= lo &&
                            z < lo + c;
        if (!inside) cells.push_back({x, y, z});
      }
    }
  }
  return cells;
}

}  // namespace

Fixture box(std::uint32_t w, std::uint32_t h, std::uint32_t d) {
  if (w < 1 || h < 1 || d < 1) {
    throw std::invalid_argument("box dimensions must be positive");
  }
  VoxelVolume v(w, h, d);
  for (std::int64_t z = 0; z < d; ++z) {
    for (std::int64_t y = 0; y < h; ++y) {
      for (std::int64_t x = 0; x < w; ++x) v.set(x, y, z, true);
    }
  }
  Fixture f{"box(" + std::to_string(w) + "," + std::to_string(h) + "," + std::to_string(d) + ")",
            std::move(v),
            FixtureExpected{1, {{0}}, BettiTriple{1, 0, 0}, CurvatureCounts{8, 0, 0}}};
  return f;
}

Fixture plate_with_holes(std::uint32_t g) {
  Fixture f{"plate_with_holes(" + std::to_string(g) + ")", volume_from_cells(plate_cells(g)),
            FixtureExpected{1, {{g}}, BettiTriple{1, g, 0}, CurvatureCounts{8, 8ull * g, 0}}};
  return f;
}

Fixture u_shape(std::uint32_t handles) {
  if (handles > 2) {
    throw std::invalid_argument("u_shape supports 0, 1, or 2 handles");
  }
  Fixture f{"u_shape(" + std::to_string(handles) + ")",
            volume_from_cells(u_shape_cells(handles)),
            FixtureExpected{1,
                            {{handles}},
                            BettiTriple{1, handles, 0},
                            CurvatureCounts{12 + 4ull * handles, 4 + 12ull * handles, 0}}};
  return f;
}

Fixture hollow_box(std::uint32_t outer, std::uint32_t cavity) {
  if (outer < 3 || cavity < 1 || cavity > outer - 2) {
    throw std::invalid_argument("hollow_box requires outer >= 3 and 1 <= cavity <= outer - 2");
  }
  Fixture f{"hollow_box(" + std::to_string(outer) + "," + std::to_string(cavity) + ")",
            volume_from_cells(hollow_box_cells(outer, cavity)),
            FixtureExpected{1, {{0, 0}}, BettiTriple{1, 0, 1}, CurvatureCounts{16, 0, 0}}};
  return f;
}

Fixture random_manifold(std::uint64_t seed, std::uint32_t budget) {
  if (budget < 1) {
    throw std::invalid_argument("random_manifold budget must be >= 1");
  }
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  // Modulo draws keep the stream identical across standard libraries.
  const auto draw = [&rng](std::uint32_t bound) { return rng() % bound; };

  std::vector<VoxelCoord> cells;
  FixtureExpected expected;
  expected.component_count = static_cast<std::int32_t>(budget);
  std::int64_t offset = 0;
  for (std::uint32_t k = 0; k < budget; ++k) {
    Fixture part = [&]() {
      switch (draw(4)) {
        case 0:
          return box(1 + draw(4), 1 + draw(4), 1 + draw(4));
        case 1:
          return plate_with_holes(draw(3));
        case 2:
          return u_shape(draw(3));
        default: {
          const std::uint32_t outer = 3 + draw(3);
          return hollow_box(outer, 1 + draw(outer - 2));
        }
      }
    }();
    const VoxelVolume& pv = part.volume;
    for (std::uint64_t i = 0; i < pv.size(); ++i) {
      if (!pv.test(i)) continue;
      VoxelCoord c = pv.coord_of(i);
      cells.push_back({c.x + offset, c.y, c.z});
    }
    offset += pv.nx() + 1 + draw(2);

    // Disjoint placement: invariants add componentwise. Components are
    // labeled in scan order, which matches placement order because every
    // primitive has a voxel in the y = 0, z = 0 row.
    expected.genera.push_back(part.expected.genera.front());
    expected.betti.b0 += part.expected.betti.b0;
    expected.betti.b1 += part.expected.betti.b1;
    expected.betti.b2 += part.expected.betti.b2;
    expected.classification.m3 += part.expected.classification.m3;
    expected.classification.m5 += part.expected.classification.m5;
    expected.classification.m6 += part.expected.classification.m6;
  }
  Fixture f{"random_manifold(" + std::to_string(seed) + "," + std::to_string(budget) + ")",
            volume_from_cells(cells), std::move(expected)};
  return f;
}

}  // namespace voxtopo
