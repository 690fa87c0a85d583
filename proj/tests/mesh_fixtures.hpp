// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>

#include "voxtopo/invariants.hpp"

namespace voxtopo::test {

inline TriMesh make_tetrahedron() {
  TriMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  m.triangles = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  return m;
}

/// nu x nv grid triangulation of a torus of radii (R, r), embedded in 3D.
inline TriMesh make_torus(int nu = 8, int nv = 8, double R = 2.0, double r = 1.0) {
  TriMesh m;
  for (int i = 0; i < nu; ++i) {
    const double u = 2.0 * std::numbers::pi * i / nu;
    for (int j = 0; j < nv; ++j) {
      const double v = 2.0 * std::numbers::pi * j / nv;
      const double ring = R + r * std::cos(v);
      m.vertices.push_back({ring * std::cos(u), ring * std::sin(u), r * std::sin(v)});
    }
  }
  const auto idx = [nu, nv](int i, int j) {
    return static_cast<std::int32_t>(((i + nu) % nu) * nv + (j + nv) % nv);
  };
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      m.triangles.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
      m.triangles.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
    }
  }
  return m;
}

}  // namespace voxtopo::test
