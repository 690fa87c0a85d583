// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "voxtopo/boundary.hpp"
#include "voxtopo/voxel_volume.hpp"

namespace voxtopo {

/// Cell counts of the closed-cube cubical complex of the foreground:
/// lattice vertices, edges, squares incident to at least one foreground
/// cube, and the cubes themselves.
struct CellCounts {
  std::uint64_t V = 0, E = 0, F = 0, C = 0;

  std::int64_t euler() const {
    return static_cast<std::int64_t>(V) - static_cast<std::int64_t>(E) +
           static_cast<std::int64_t>(F) - static_cast<std::int64_t>(C);
  }
  friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

CellCounts cell_counts(const VoxelVolume& v);

struct BettiTriple {
  std::uint64_t b0 = 0, b1 = 0, b2 = 0;

  friend bool operator==(const BettiTriple&, const BettiTriple&) = default;
};

/// Brute-force Betti numbers, independent of the genus route: b0 from
/// foreground components, b2 from cavities, b1 from the Euler relation
/// b1 = b0 + b2 - chi. Works on non-manifold input too.
BettiTriple oracle_betti(const VoxelVolume& v);

/// Verdict of running both the fast path and the oracle on one volume.
/// On non-manifold input the fast path refuses and the result is marked
/// incomparable; disagreement is data, not an exception.
struct CompareResult {
  bool comparable = false;
  BettiTriple oracle;
  std::optional<BettiTriple> fast;
  std::vector<ManifoldViolation> violations;

  bool agree() const { return comparable && fast.has_value() && *fast == oracle; }
};

CompareResult compare(const VoxelVolume& v);

}  // namespace voxtopo
