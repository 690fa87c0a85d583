// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "voxtopo/errors.hpp"

namespace voxtopo {

SurfaceClassification classify(const BoundarySurface& s) {
  SurfaceClassification c;
  for (const auto& [key, m] : s.vertex_incidence) {
    switch (m) {
      case 3: ++c.m3; break;
      case 4: ++c.m4; break;
      case 5: ++c.m5; break;
      case 6: ++c.m6; break;
      default: {
        const auto p = lattice_point_of_key(s.grid_dims, key);
        throw SurfaceError("corner (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                           std::to_string(p[2]) + ") has incidence " + std::to_string(m));
      }
    }
  }
  return c;
}

int vertex_curvature(int m) {
  if (m < 3 || m > 6) {
    throw SurfaceError("incidence " + std::to_string(m) + " outside 3..6");
  }
  return 4 - m;
}

std::uint64_t genus(const SurfaceClassification& c) {
  const std::int64_t defect = static_cast<std::int64_t>(c.m5) +
                              2 * static_cast<std::int64_t>(c.m6) -
                              static_cast<std::int64_t>(c.m3);
  if (defect % 8 != 0) {
    throw SurfaceError("corrupt surface: m5 + 2*m6 - m3 = " + std::to_string(defect) +
                       " is not divisible by 8");
  }
  const std::int64_t g = 1 + defect / 8;
  if (g < 0) {
    throw SurfaceError("corrupt surface: negative genus " + std::to_string(g));
  }
  return static_cast<std::uint64_t>(g);
}

bool gauss_bonnet_check(const BoundarySurface& s, std::uint64_t g) {
  std::int64_t quarter_turns = 0;
  for (const auto& [key, m] : s.vertex_incidence) {
    quarter_turns += vertex_curvature(static_cast<int>(m));
  }
  const std::int64_t expected = 8 - 8 * static_cast<std::int64_t>(g);
  const std::int64_t euler = static_cast<std::int64_t>(s.V) - static_cast<std::int64_t>(s.E) +
                             static_cast<std::int64_t>(s.F);
  return quarter_turns == expected && euler == 2 - 2 * static_cast<std::int64_t>(g);
}

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (!line.empty() && line[0] != '#') return true;
  }
  return false;
}

}  // namespace

TriMesh load_off(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::string line;
  if (!next_content_line(in, line) || line != "OFF") {
    throw FormatError("mesh file: first line must be OFF");
  }
  if (!next_content_line(in, line)) {
    throw FormatError("mesh file: missing count line");
  }
  std::istringstream counts(line);
  std::int64_t nv = 0, nf = 0, ne = 0;  // edge count is ignored
  if (!(counts >> nv >> nf >> ne) || nv < 0 || nf < 0) {
    throw FormatError("mesh file: malformed count line");
  }
  TriMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(nv));
  for (std::int64_t i = 0; i < nv; ++i) {
    if (!next_content_line(in, line)) {
      throw FormatError("mesh file: truncated vertex list");
    }
    std::istringstream row(line);
    std::array<double, 3> p{};
    if (!(row >> p[0] >> p[1] >> p[2])) {
      throw FormatError("mesh file: malformed vertex at index " + std::to_string(i));
    }
    mesh.vertices.push_back(p);
  }
  mesh.triangles.reserve(static_cast<std::size_t>(nf));
  for (std::int64_t i = 0; i < nf; ++i) {
    if (!next_content_line(in, line)) {
      throw FormatError("mesh file: truncated face list");
    }
    std::istringstream row(line);
    std::int64_t arity = 0;
    if (!(row >> arity)) {
      throw FormatError("mesh file: malformed face at index " + std::to_string(i));
    }
    if (arity != 3) {
      throw FormatError("mesh file: face " + std::to_string(i) + " has " +
                        std::to_string(arity) + " vertices, only triangles are supported");
    }
    std::array<std::int32_t, 3> tri{};
    if (!(row >> tri[0] >> tri[1] >> tri[2])) {
      throw FormatError("mesh file: malformed face at index " + std::to_string(i));
    }
    for (const std::int32_t v : tri) {
      if (v < 0 || v >= nv) {
        throw FormatError("mesh file: face " + std::to_string(i) + " references vertex " +
                          std::to_string(v) + " out of range");
      }
    }
    mesh.triangles.push_back(tri);
  }
  return mesh;
}

namespace {

double corner_angle(const std::array<double, 3>& at, const std::array<double, 3>& b,
                    const std::array<double, 3>& c) {
  const double ux = b[0] - at[0], uy = b[1] - at[1], uz = b[2] - at[2];
  const double vx = c[0] - at[0], vy = c[1] - at[1], vz = c[2] - at[2];
  const double nu = std::sqrt(ux * ux + uy * uy + uz * uz);
  const double nv = std::sqrt(vx * vx + vy * vy + vz * vz);
  const double dot = ux * vx + uy * vy + uz * vz;
  const double cosine = std::clamp(dot / (nu * nv), -1.0, 1.0);
  return std::acos(cosine);
}

bool triangle_degenerate(const std::array<double, 3>& a, const std::array<double, 3>& b,
                         const std::array<double, 3>& c) {
  const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  const double cx = uy * vz - uz * vy;
  const double cy = uz * vx - ux * vz;
  const double cz = ux * vy - uy * vx;
  return cx == 0.0 && cy == 0.0 && cz == 0.0;
}

}  // namespace

std::vector<MeshComponentGenus> mesh_genus(const TriMesh& mesh) {
  const std::size_t nf = mesh.triangles.size();
  for (std::size_t i = 0; i < nf; ++i) {
    const auto& t = mesh.triangles[i];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] ||
        triangle_degenerate(mesh.vertices[static_cast<std::size_t>(t[0])],
                            mesh.vertices[static_cast<std::size_t>(t[1])],
                            mesh.vertices[static_cast<std::size_t>(t[2])])) {
      throw SurfaceError("degenerate triangle at index " + std::to_string(i));
    }
  }

  // Edge table: unordered vertex pair -> incident triangles.
  std::map<std::pair<std::int32_t, std::int32_t>, std::vector<std::uint32_t>> edges;
  for (std::size_t i = 0; i < nf; ++i) {
    const auto& t = mesh.triangles[i];
    for (int e = 0; e < 3; ++e) {
      const std::int32_t a = t[static_cast<std::size_t>(e)];
      const std::int32_t b = t[static_cast<std::size_t>((e + 1) % 3)];
      edges[{std::min(a, b), std::max(a, b)}].push_back(static_cast<std::uint32_t>(i));
    }
  }
  for (const auto& [key, tris] : edges) {
    if (tris.size() != 2) {
      throw SurfaceError("open mesh: edge (" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + ") bounds " +
                         std::to_string(tris.size()) + " triangles");
    }
  }

  // Split triangles into components by edge-connectivity.
  std::vector<std::int32_t> component(nf, -1);
  std::int32_t component_count = 0;
  for (std::size_t seed = 0; seed < nf; ++seed) {
    if (component[seed] != -1) continue;
    const std::int32_t id = component_count++;
    std::vector<std::size_t> stack{seed};
    component[seed] = id;
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      const auto& t = mesh.triangles[f];
      for (int e = 0; e < 3; ++e) {
        const std::int32_t a = t[static_cast<std::size_t>(e)];
        const std::int32_t b = t[static_cast<std::size_t>((e + 1) % 3)];
        for (const std::uint32_t other : edges.at({std::min(a, b), std::max(a, b)})) {
          if (component[other] == -1) {
            component[other] = id;
            stack.push_back(other);
          }
        }
      }
    }
  }

  std::vector<MeshComponentGenus> out(static_cast<std::size_t>(component_count));
  std::vector<std::vector<std::uint32_t>> tris_of(static_cast<std::size_t>(component_count));
  for (std::size_t i = 0; i < nf; ++i) {
    tris_of[static_cast<std::size_t>(component[i])].push_back(static_cast<std::uint32_t>(i));
  }
  for (const auto& [key, tris] : edges) {
    out[static_cast<std::size_t>(component[tris[0]])].E += 1;
  }

  // Per component: distinct vertices and the angle-defect total. A vertex
  // pinching two components counts once in each, with only its own
  // component's angles.
  std::vector<std::int32_t> stamp(mesh.vertices.size(), -1);
  std::vector<double> angle_acc(mesh.vertices.size(), 0.0);
  for (std::int32_t id = 0; id < component_count; ++id) {
    MeshComponentGenus& g = out[static_cast<std::size_t>(id)];
    std::vector<std::int32_t> local_vertices;
    for (const std::uint32_t ti : tris_of[static_cast<std::size_t>(id)]) {
      const auto& t = mesh.triangles[ti];
      const auto& a = mesh.vertices[static_cast<std::size_t>(t[0])];
      const auto& b = mesh.vertices[static_cast<std::size_t>(t[1])];
      const auto& c = mesh.vertices[static_cast<std::size_t>(t[2])];
      const std::array<double, 3> angles = {corner_angle(a, b, c), corner_angle(b, c, a),
                                            corner_angle(c, a, b)};
      for (int k = 0; k < 3; ++k) {
        const auto vi = static_cast<std::size_t>(t[static_cast<std::size_t>(k)]);
        if (stamp[vi] != id) {
          stamp[vi] = id;
          angle_acc[vi] = 0.0;
          local_vertices.push_back(t[static_cast<std::size_t>(k)]);
        }
        angle_acc[vi] += angles[static_cast<std::size_t>(k)];
      }
    }
    g.V = local_vertices.size();
    g.F = tris_of[static_cast<std::size_t>(id)].size();
    for (const std::int32_t vi : local_vertices) {
      g.angle_defect += 2.0 * std::numbers::pi - angle_acc[static_cast<std::size_t>(vi)];
    }
  }

  for (std::int32_t id = 0; id < component_count; ++id) {
    MeshComponentGenus& g = out[static_cast<std::size_t>(id)];
    g.component_id = id;
    g.euler = static_cast<std::int64_t>(g.V) - static_cast<std::int64_t>(g.E) +
              static_cast<std::int64_t>(g.F);
    if (g.euler % 2 != 0) {
      throw SurfaceError("component " + std::to_string(id) + " has odd Euler characteristic " +
                         std::to_string(g.euler));
    }
    const std::int64_t genus2 = 2 - g.euler;
    if (genus2 < 0) {
      throw SurfaceError("component " + std::to_string(id) + " has negative genus");
    }
    g.genus = static_cast<std::uint64_t>(genus2 / 2);

    const double expected = 2.0 * std::numbers::pi * static_cast<double>(g.euler);
    if (std::abs(g.angle_defect - expected) > 1e-6 * (1.0 + std::abs(expected))) {
      throw SurfaceError("component " + std::to_string(id) +
                         ": angle-defect total disagrees with 2*pi*euler");
    }
  }
  return out;
}

}  // namespace voxtopo
