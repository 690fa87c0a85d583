// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "voxtopo/boundary.hpp"
#include "voxtopo/generator.hpp"

using namespace voxtopo;

namespace {

std::vector<BoundarySurface> surfaces_of(const VoxelVolume& v) {
  return extract_boundary(v, foreground_components(v));
}

std::map<std::uint32_t, std::uint64_t> incidence_histogram(const BoundarySurface& s) {
  std::map<std::uint32_t, std::uint64_t> h;
  for (const auto& [key, m] : s.vertex_incidence) ++h[m];
  return h;
}

}  // namespace

TEST_CASE("unit cube boundary is a single closed quad surface") {
  const auto surfaces = surfaces_of(box(1, 1, 1).volume);
  REQUIRE(surfaces.size() == 1);
  CHECK(surfaces[0].F == 6);
  CHECK(surfaces[0].V == 8);
  CHECK(surfaces[0].E == 12);
  CHECK(surfaces[0].owner_component == 0);

  const auto h = incidence_histogram(surfaces[0]);
  CHECK(h.size() == 1);
  CHECK(h.at(3) == 8);
}

TEST_CASE("square ring boundary has 32 quads") {
  const auto surfaces = surfaces_of(plate_with_holes(1).volume);
  REQUIRE(surfaces.size() == 1);
  CHECK(surfaces[0].F == 32);

  const auto h = incidence_histogram(surfaces[0]);
  CHECK(h.at(3) == 8);
  CHECK(h.at(5) == 8);
  CHECK(h.at(4) == surfaces[0].V - 16);
}

TEST_CASE("hollow box splits into outer and cavity surfaces") {
  const auto surfaces = surfaces_of(hollow_box(5, 1).volume);
  REQUIRE(surfaces.size() == 2);
  std::vector<std::uint64_t> faces{surfaces[0].F, surfaces[1].F};
  std::sort(faces.begin(), faces.end());
  CHECK(faces[0] == 6);
  CHECK(faces[1] == 150);
  CHECK(surfaces[0].owner_component == 0);
  CHECK(surfaces[1].owner_component == 0);
}

TEST_CASE("box(2,1,1) has 8 corners of incidence 3 and 4 of incidence 4") {
  const auto surfaces = surfaces_of(box(2, 1, 1).volume);
  REQUIRE(surfaces.size() == 1);
  const auto h = incidence_histogram(surfaces[0]);
  CHECK(h.at(3) == 8);
  CHECK(h.at(4) == 4);
  std::uint64_t total = 0;
  for (const auto& [m, count] : h) total += m * count;
  CHECK(total == 4 * surfaces[0].F);
  CHECK(total == 40);
}

TEST_CASE("validate_manifold flags the two canonical bad configurations") {
  SUBCASE("edge-diagonal pair: one nonmanifold edge at the shared edge") {
    VoxelVolume v(2, 2, 1);
    v.set(0, 0, 0, true);
    v.set(1, 1, 0, true);
    const auto violations = validate_manifold(v);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ManifoldViolation::Kind::nonmanifold_edge);
    CHECK(violations[0].x == 1);
    CHECK(violations[0].y == 1);
    CHECK(violations[0].z == 0);
    CHECK(violations[0].axis == 2);  // the shared edge runs along z
  }

  SUBCASE("corner-diagonal pair: one nonmanifold vertex at the shared corner") {
    VoxelVolume v(2, 2, 2);
    v.set(0, 0, 0, true);
    v.set(1, 1, 1, true);
    const auto violations = validate_manifold(v);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ManifoldViolation::Kind::nonmanifold_vertex);
    CHECK(violations[0].x == 1);
    CHECK(violations[0].y == 1);
    CHECK(violations[0].z == 1);
  }

  SUBCASE("solid box is valid") {
    CHECK(validate_manifold(box(3, 3, 3).volume).empty());
  }
}

TEST_CASE("extraction refuses nonmanifold edges") {
  VoxelVolume v(2, 2, 1);
  v.set(0, 0, 0, true);
  v.set(1, 1, 0, true);
  CHECK_THROWS_AS(extract_boundary(v, foreground_components(v)), ManifoldError);
}

TEST_CASE("surface structure invariants hold on generated fixtures") {
  std::vector<Fixture> fixtures;
  fixtures.push_back(box(1, 1, 1));
  fixtures.push_back(box(4, 3, 2));
  fixtures.push_back(plate_with_holes(0));
  fixtures.push_back(plate_with_holes(2));
  fixtures.push_back(u_shape(0));
  fixtures.push_back(u_shape(1));
  fixtures.push_back(u_shape(2));
  fixtures.push_back(hollow_box(4, 2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    fixtures.push_back(random_manifold(seed, 1 + static_cast<std::uint32_t>(seed % 3)));
  }

  for (const Fixture& f : fixtures) {
    CAPTURE(f.name);
    CHECK(validate_manifold(f.volume).empty());
    const ComponentLabeling labeling = foreground_components(f.volume);
    const auto surfaces = extract_boundary(f.volume, labeling);
    CHECK(surfaces.size() >= static_cast<std::size_t>(labeling.component_count));

    std::vector<bool> component_has_surface(static_cast<std::size_t>(labeling.component_count));
    std::uint64_t total_faces = 0;
    for (const BoundarySurface& s : surfaces) {
      component_has_surface.at(static_cast<std::size_t>(s.owner_component)) = true;
      total_faces += s.F;
      CHECK(2 * s.E == 4 * s.F);
      CHECK((s.V + s.F) % 2 == 0);  // V - E + F is even
      std::uint64_t incidence_total = 0;
      for (const auto& [key, m] : s.vertex_incidence) {
        CHECK(m >= 3);
        CHECK(m <= 6);
        incidence_total += m;
      }
      CHECK(incidence_total == 4 * s.F);
      CHECK(s.faces.size() == s.F);
    }
    for (const bool has : component_has_surface) CHECK(has);

    // Every foreground/background face pair appears in exactly one surface.
    std::uint64_t expected_faces = 0;
    for (std::uint64_t i = 0; i < f.volume.size(); ++i) {
      if (!f.volume.test(i)) continue;
      const VoxelCoord c = f.volume.coord_of(i);
      for (int d = 0; d < 6; ++d) {
        const auto s = dir_step(static_cast<FaceDir>(d));
        if (!f.volume.is_foreground(c.x + s[0], c.y + s[1], c.z + s[2])) ++expected_faces;
      }
    }
    CHECK(total_faces == expected_faces);
  }
}

TEST_CASE("translation leaves surface structure unchanged") {
  const Fixture f = u_shape(1);
  VoxelVolume moved(f.volume.nx() + 3, f.volume.ny() + 2, f.volume.nz() + 4);
  for (std::uint64_t i = 0; i < f.volume.size(); ++i) {
    if (!f.volume.test(i)) continue;
    const VoxelCoord c = f.volume.coord_of(i);
    moved.set(c.x + 2, c.y + 1, c.z + 3, true);
  }
  const auto a = surfaces_of(f.volume);
  const auto b = surfaces_of(moved);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].V == b[i].V);
    CHECK(a[i].E == b[i].E);
    CHECK(a[i].F == b[i].F);
    CHECK(incidence_histogram(a[i]) == incidence_histogram(b[i]));
  }
}
