// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/boundary.hpp"

#include <algorithm>
#include <cstddef>

namespace voxtopo {

ManifoldError::ManifoldError(std::vector<ManifoldViolation> violations)
    : std::runtime_error(violations.empty()
                             ? "manifold violation"
                             : "manifold violation: " + violations.front().detail),
      violations_(std::move(violations)) {}

std::array<int, 3> dir_step(FaceDir d) {
  static constexpr std::array<std::array<int, 3>, 6> kSteps = {{
      {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
  }};
  return kSteps[static_cast<std::size_t>(d)];
}

namespace {

int dir_axis(FaceDir d) { return static_cast<int>(d) / 2; }
bool dir_positive(FaceDir d) { return (static_cast<int>(d) & 1) == 0; }

std::array<std::int64_t, 3> axis_step(int axis) {
  std::array<std::int64_t, 3> s{0, 0, 0};
  s[static_cast<std::size_t>(axis)] = 1;
  return s;
}

// Lattice square of a boundary face: origin corner plus the two axes that
// span it (u < v). Corners are origin + {0,1}*u + {0,1}*v.
struct FaceSquare {
  std::array<std::int64_t, 3> origin;
  int u, v;
};

FaceSquare face_square(const VoxelCoord& c, FaceDir d) {
  FaceSquare sq;
  sq.origin = {c.x, c.y, c.z};
  const int a = dir_axis(d);
  if (dir_positive(d)) sq.origin[static_cast<std::size_t>(a)] += 1;
  sq.u = a == 0 ? 1 : 0;
  sq.v = a == 2 ? 1 : 2;
  return sq;
}

struct LatticeEdge {
  std::array<std::int64_t, 3> base;
  int axis;
};

// The edge of face (c,d) on its `side` (a direction perpendicular to d).
LatticeEdge face_edge_on_side(const VoxelCoord& c, FaceDir d, FaceDir side) {
  const FaceSquare sq = face_square(c, d);
  const int sa = dir_axis(side);
  LatticeEdge e;
  e.base = sq.origin;
  if (sa == sq.u) {
    e.axis = sq.v;
    if (dir_positive(side)) e.base[static_cast<std::size_t>(sq.u)] += 1;
  } else {
    e.axis = sq.u;
    if (dir_positive(side)) e.base[static_cast<std::size_t>(sq.v)] += 1;
  }
  return e;
}

std::uint64_t edge_key(const std::array<std::uint32_t, 3>& dims, const LatticeEdge& e) {
  return 3 * lattice_point_key(dims, e.base[0], e.base[1], e.base[2]) +
         static_cast<std::uint64_t>(e.axis);
}

// Per-corner local configuration tables, indexed by the 8-bit occupancy of
// the cells around a lattice corner (bit i + 2j + 4k for the cell at offset
// (i-1, j-1, k-1)). face_count is the number of boundary quads incident to
// the corner; fan_count the number of edge-connected groups they form.
struct LocalTables {
  std::array<std::uint8_t, 256> face_count{};
  std::array<std::uint8_t, 256> fan_count{};
};

LocalTables build_local_tables() {
  LocalTables t;
  for (unsigned mask = 0; mask < 256; ++mask) {
    // Faces are fg/bg pairs of cells differing in one axis. A face between
    // cells differing in axis a, with common coordinates (pb, pc) in the
    // other two axes b < c, meets the corner's edge slots (b, pb) and
    // (c, pc); slots are numbered axis*2 + position.
    struct LocalFace {
      int slot1, slot2;
    };
    std::vector<LocalFace> faces;
    for (int cell = 0; cell < 8; ++cell) {
      for (int a = 0; a < 3; ++a) {
        const int other = cell ^ (1 << a);
        if (other < cell) continue;  // each pair once
        const bool fg1 = (mask >> cell) & 1u;
        const bool fg2 = (mask >> other) & 1u;
        if (fg1 == fg2) continue;
        const int b = a == 0 ? 1 : 0;
        const int c = a == 2 ? 1 : 2;
        const int pb = (cell >> b) & 1;
        const int pc = (cell >> c) & 1;
        faces.push_back({b * 2 + pb, c * 2 + pc});
      }
    }
    t.face_count[mask] = static_cast<std::uint8_t>(faces.size());

    // Count edge-connected groups among the faces.
    std::vector<int> group(faces.size(), -1);
    int groups = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (group[i] != -1) continue;
      group[i] = groups;
      std::vector<std::size_t> stack{i};
      while (!stack.empty()) {
        const std::size_t f = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < faces.size(); ++j) {
          if (group[j] != -1) continue;
          const bool shares = faces[f].slot1 == faces[j].slot1 ||
                              faces[f].slot1 == faces[j].slot2 ||
                              faces[f].slot2 == faces[j].slot1 ||
                              faces[f].slot2 == faces[j].slot2;
          if (shares) {
            group[j] = groups;
            stack.push_back(j);
          }
        }
      }
      ++groups;
    }
    t.fan_count[mask] = static_cast<std::uint8_t>(groups);
  }
  return t;
}

const LocalTables& local_tables() {
  static const LocalTables tables = build_local_tables();
  return tables;
}

// True iff the four cells around a lattice edge hold the diagonal pattern
// (two opposite foreground, two opposite background): four quads meet there.
bool edge_is_nonmanifold(const VoxelVolume& vol, const LatticeEdge& e) {
  const auto cell = [&](int da, int db) {
    std::array<std::int64_t, 3> p = e.base;
    const int a = e.axis == 0 ? 1 : 0;
    const int b = e.axis == 2 ? 1 : 2;
    p[static_cast<std::size_t>(a)] += da - 1;
    p[static_cast<std::size_t>(b)] += db - 1;
    return vol.is_foreground(p[0], p[1], p[2]);
  };
  const bool c00 = cell(0, 0), c10 = cell(1, 0), c01 = cell(0, 1), c11 = cell(1, 1);
  return (c00 && c11 && !c10 && !c01) || (!c00 && !c11 && c10 && c01);
}

}  // namespace

std::vector<ManifoldViolation> validate_manifold(const VoxelVolume& v) {
  std::vector<ManifoldViolation> out;
  const std::int64_t nx = v.nx(), ny = v.ny(), nz = v.nz();

  // Edge pass: the diagonal pattern puts four quads around one edge.
  for (int axis = 0; axis < 3; ++axis) {
    const std::int64_t ex = nx + (axis == 0 ? 0 : 1);
    const std::int64_t ey = ny + (axis == 1 ? 0 : 1);
    const std::int64_t ez = nz + (axis == 2 ? 0 : 1);
    for (std::int64_t z = 0; z < ez; ++z) {
      for (std::int64_t y = 0; y < ey; ++y) {
        for (std::int64_t x = 0; x < ex; ++x) {
          const LatticeEdge e{{x, y, z}, axis};
          if (edge_is_nonmanifold(v, e)) {
            out.push_back({ManifoldViolation::Kind::nonmanifold_edge, x, y, z, axis,
                           "4 boundary quads share one lattice edge"});
          }
        }
      }
    }
  }

  // Corner pass: quads around a corner must form one fan of size 3..6.
  const LocalTables& t = local_tables();
  for (std::int64_t z = 0; z <= nz; ++z) {
    for (std::int64_t y = 0; y <= ny; ++y) {
      for (std::int64_t x = 0; x <= nx; ++x) {
        unsigned mask = 0;
        for (int k = 0; k < 2; ++k) {
          for (int j = 0; j < 2; ++j) {
            for (int i = 0; i < 2; ++i) {
              if (v.is_foreground(x - 1 + i, y - 1 + j, z - 1 + k)) {
                mask |= 1u << (i + 2 * j + 4 * k);
              }
            }
          }
        }
        if (mask == 0 || mask == 255) continue;
        const int fans = t.fan_count[mask];
        const int m = t.face_count[mask];
        if (fans > 1) {
          out.push_back({ManifoldViolation::Kind::nonmanifold_vertex, x, y, z, -1,
                         std::to_string(fans) + " face fans meet at one corner"});
        } else if (m < 3 || m > 6) {
          out.push_back({ManifoldViolation::Kind::bad_incidence, x, y, z, -1,
                         "corner incidence m=" + std::to_string(m)});
        }
      }
    }
  }
  return out;
}

namespace {

std::uint64_t face_key(const VoxelVolume& v, const VoxelCoord& c, FaceDir d) {
  return v.linear_index(c.x, c.y, c.z) * 6 + static_cast<std::uint64_t>(d);
}

// The four directions perpendicular to a face normal.
std::array<FaceDir, 4> face_sides(FaceDir d) {
  const int a = dir_axis(d);
  const int u = a == 0 ? 1 : 0;
  const int v = a == 2 ? 1 : 2;
  return {static_cast<FaceDir>(2 * u), static_cast<FaceDir>(2 * u + 1),
          static_cast<FaceDir>(2 * v), static_cast<FaceDir>(2 * v + 1)};
}

// Neighbor of face (c,d) across its edge on `side`, by rolling over the
// edge: prefer the diagonal cell, then the side cell, then c itself.
// Reports the four-quad diagonal configuration instead of guessing.
SurfaceFace roll_to_neighbor(const VoxelVolume& v, const VoxelCoord& c, FaceDir d, FaceDir side) {
  const auto sd = dir_step(d);
  const auto ss = dir_step(side);
  const VoxelCoord side_cell{c.x + ss[0], c.y + ss[1], c.z + ss[2]};
  const VoxelCoord diag{side_cell.x + sd[0], side_cell.y + sd[1], side_cell.z + sd[2]};
  const bool side_fg = v.is_foreground(side_cell.x, side_cell.y, side_cell.z);
  const bool diag_fg = v.is_foreground(diag.x, diag.y, diag.z);
  if (diag_fg && !side_fg) {
    const LatticeEdge e = face_edge_on_side(c, d, side);
    throw ManifoldError({{ManifoldViolation::Kind::nonmanifold_edge, e.base[0], e.base[1],
                          e.base[2], e.axis, "4 boundary quads share one lattice edge"}});
  }
  if (diag_fg) return {diag, opposite(side)};
  if (side_fg) return {side_cell, d};
  return {c, side};
}

}  // namespace

std::vector<BoundarySurface> extract_boundary(const VoxelVolume& v,
                                              const ComponentLabeling& labeling) {
  if (labeling.label_of.size() != v.size()) {
    throw std::invalid_argument("labeling does not match volume");
  }
  const std::array<std::uint32_t, 3> dims{v.nx(), v.ny(), v.nz()};

  // Collect all boundary faces in scan order.
  std::vector<SurfaceFace> all_faces;
  std::unordered_map<std::uint64_t, std::uint32_t> index_of;
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (!v.test(i)) continue;
    const VoxelCoord c = v.coord_of(i);
    for (int d = 0; d < 6; ++d) {
      const auto s = dir_step(static_cast<FaceDir>(d));
      if (v.is_foreground(c.x + s[0], c.y + s[1], c.z + s[2])) continue;
      index_of.emplace(i * 6 + static_cast<std::uint64_t>(d),
                       static_cast<std::uint32_t>(all_faces.size()));
      all_faces.push_back({c, static_cast<FaceDir>(d)});
    }
  }

  std::vector<std::int32_t> surface_of(all_faces.size(), -1);
  std::vector<BoundarySurface> surfaces;

  for (std::uint32_t seed = 0; seed < all_faces.size(); ++seed) {
    if (surface_of[seed] != -1) continue;
    BoundarySurface s;
    s.id = static_cast<std::int32_t>(surfaces.size());
    s.grid_dims = dims;
    const VoxelCoord seed_cell = all_faces[seed].cell;
    s.owner_component = labeling.label_of[v.linear_index(seed_cell.x, seed_cell.y, seed_cell.z)];

    std::unordered_map<std::uint64_t, std::uint32_t> edge_uses;
    std::vector<std::uint32_t> queue{seed};
    surface_of[seed] = s.id;
    std::size_t head = 0;
    while (head < queue.size()) {
      const SurfaceFace f = all_faces[queue[head++]];
      s.faces.push_back(f);

      const FaceSquare sq = face_square(f.cell, f.dir);
      const auto su = axis_step(sq.u);
      const auto sv = axis_step(sq.v);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const std::int64_t px = sq.origin[0] + a * su[0] + b * sv[0];
          const std::int64_t py = sq.origin[1] + a * su[1] + b * sv[1];
          const std::int64_t pz = sq.origin[2] + a * su[2] + b * sv[2];
          ++s.vertex_incidence[lattice_point_key(dims, px, py, pz)];
        }
      }

      for (const FaceDir side : face_sides(f.dir)) {
        ++edge_uses[edge_key(dims, face_edge_on_side(f.cell, f.dir, side))];
        const SurfaceFace n = roll_to_neighbor(v, f.cell, f.dir, side);
        const auto it = index_of.find(face_key(v, n.cell, n.dir));
        if (it == index_of.end()) {
          throw SurfaceError("boundary tracking produced a non-boundary face");
        }
        std::int32_t& mark = surface_of[it->second];
        if (mark == -1) {
          mark = s.id;
          queue.push_back(it->second);
        } else if (mark != s.id) {
          throw SurfaceError("boundary tracking crossed into another surface");
        }
      }
    }

    s.F = s.faces.size();
    s.V = s.vertex_incidence.size();
    s.E = edge_uses.size();
    for (const auto& [key, uses] : edge_uses) {
      if (uses != 2) {
        const auto p = lattice_point_of_key(dims, key / 3);
        throw ManifoldError({{ManifoldViolation::Kind::nonmanifold_edge, p[0], p[1], p[2],
                              static_cast<int>(key % 3),
                              "lattice edge bounds " + std::to_string(uses) + " quads"}});
      }
    }
    surfaces.push_back(std::move(s));
  }
  return surfaces;
}

}  // namespace voxtopo
