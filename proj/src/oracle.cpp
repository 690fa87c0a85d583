// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/oracle.hpp"

#include "voxtopo/homology.hpp"

namespace voxtopo {

CellCounts cell_counts(const VoxelVolume& v) {
  CellCounts out;
  const std::int64_t nx = v.nx(), ny = v.ny(), nz = v.nz();

  // Lattice vertices: incident cubes span (x-1..x, y-1..y, z-1..z).
  for (std::int64_t z = 0; z <= nz; ++z) {
    for (std::int64_t y = 0; y <= ny; ++y) {
      for (std::int64_t x = 0; x <= nx; ++x) {
        bool touched = false;
        for (int k = -1; k < 1 && !touched; ++k) {
          for (int j = -1; j < 1 && !touched; ++j) {
            for (int i = -1; i < 1 && !touched; ++i) {
              touched = v.is_foreground(x + i, y + j, z + k);
            }
          }
        }
        if (touched) ++out.V;
      }
    }
  }

  // Lattice edges along each axis: four incident cubes each.
  for (int axis = 0; axis < 3; ++axis) {
    const std::int64_t ex = nx + (axis == 0 ? -1 : 0);
    const std::int64_t ey = ny + (axis == 1 ? -1 : 0);
    const std::int64_t ez = nz + (axis == 2 ? -1 : 0);
    for (std::int64_t z = 0; z <= ez; ++z) {
      for (std::int64_t y = 0; y <= ey; ++y) {
        for (std::int64_t x = 0; x <= ex; ++x) {
          bool touched = false;
          for (int a = -1; a < 1 && !touched; ++a) {
            for (int b = -1; b < 1 && !touched; ++b) {
              if (axis == 0) {
                touched = v.is_foreground(x, y + a, z + b);
              } else if (axis == 1) {
                touched = v.is_foreground(x + a, y, z + b);
              } else {
                touched = v.is_foreground(x + a, y + b, z);
              }
            }
          }
          if (touched) ++out.E;
        }
      }
    }
  }

  // Lattice squares normal to each axis: two incident cubes each.
  for (int axis = 0; axis < 3; ++axis) {
    const std::int64_t fx = nx + (axis == 0 ? 0 : -1);
    const std::int64_t fy = ny + (axis == 1 ? 0 : -1);
    const std::int64_t fz = nz + (axis == 2 ? 0 : -1);
    for (std::int64_t z = 0; z <= fz; ++z) {
      for (std::int64_t y = 0; y <= fy; ++y) {
        for (std::int64_t x = 0; x <= fx; ++x) {
          bool touched = false;
          if (axis == 0) {
            touched = v.is_foreground(x - 1, y, z) || v.is_foreground(x, y, z);
          } else if (axis == 1) {
            touched = v.is_foreground(x, y - 1, z) || v.is_foreground(x, y, z);
          } else {
            touched = v.is_foreground(x, y, z - 1) || v.is_foreground(x, y, z);
          }
          if (touched) ++out.F;
        }
      }
    }
  }

  out.C = v.foreground_count();
  return out;
}

BettiTriple oracle_betti(const VoxelVolume& v) {
  BettiTriple b;
  b.b0 = static_cast<std::uint64_t>(foreground_components(v).component_count);
  b.b2 = static_cast<std::uint64_t>(background_components(v).cavity_count());
  const std::int64_t chi = cell_counts(v).euler();
  // chi = b0 - b1 + b2 for a solid in R^3 (b3 = 0, H1 free).
  b.b1 = static_cast<std::uint64_t>(static_cast<std::int64_t>(b.b0) +
                                    static_cast<std::int64_t>(b.b2) - chi);
  return b;
}

CompareResult compare(const VoxelVolume& v) {
  CompareResult r;
  r.oracle = oracle_betti(v);
  r.violations = validate_manifold(v);
  if (!r.violations.empty()) {
    r.comparable = false;
    return r;
  }
  r.comparable = true;
  const TopologyReport report = assemble_report(v);
  r.fast = BettiTriple{report.total.b0, report.total.b1, report.total.b2};
  return r;
}

}  // namespace voxtopo
