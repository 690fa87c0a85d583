// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "voxtopo/errors.hpp"
#include "voxtopo/generator.hpp"
#include "voxtopo/voxel_volume.hpp"

using namespace voxtopo;
using voxtopo::test::TempDir;

namespace {

VoxelVolume random_volume(std::mt19937& rng, std::uint32_t max_dim = 6) {
  const std::uint32_t nx = 1 + rng() % max_dim;
  const std::uint32_t ny = 1 + rng() % max_dim;
  const std::uint32_t nz = 1 + rng() % max_dim;
  VoxelVolume v(nx, ny, nz);
  for (std::int64_t z = 0; z < nz; ++z) {
    for (std::int64_t y = 0; y < ny; ++y) {
      for (std::int64_t x = 0; x < nx; ++x) {
        if (rng() % 3 == 0) v.set(x, y, z, true);
      }
    }
  }
  return v;
}

VoxelVolume translated(const VoxelVolume& v, std::int64_t dx, std::int64_t dy, std::int64_t dz,
                       std::uint32_t pad) {
  VoxelVolume out(v.nx() + pad, v.ny() + pad, v.nz() + pad);
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (!v.test(i)) continue;
    const VoxelCoord c = v.coord_of(i);
    out.set(c.x + dx, c.y + dy, c.z + dz, true);
  }
  return out;
}

}  // namespace

TEST_CASE("text format round trips the smallest volume") {
  TempDir dir;
  test::write_file(dir.file("one.p3d"), "P3D\n1 1 1\n0 0 0\n");
  const VoxelVolume v = load_volume(dir.file("one.p3d"), VolumeFormat::text);
  CHECK(v.foreground_count() == 1);
  CHECK(v.is_foreground(0, 0, 0));
}

TEST_CASE("text format accepts empty volumes, comments, and duplicates") {
  TempDir dir;
  test::write_file(dir.file("empty.p3d"), "P3D\n3 3 3\n");
  CHECK(load_volume(dir.file("empty.p3d"), VolumeFormat::text).foreground_count() == 0);

  test::write_file(dir.file("dup.p3d"), "P3D\n2 2 2\n# a comment\n1 1 1\n\n1 1 1\n");
  CHECK(load_volume(dir.file("dup.p3d"), VolumeFormat::text).foreground_count() == 1);
}

TEST_CASE("text format rejects malformed input") {
  TempDir dir;
  test::write_file(dir.file("a.p3d"), "P3d\n1 1 1\n");
  CHECK_THROWS_AS(load_volume(dir.file("a.p3d"), VolumeFormat::text), FormatError);

  test::write_file(dir.file("b.p3d"), "P3D\n0 1 1\n");
  CHECK_THROWS_AS(load_volume(dir.file("b.p3d"), VolumeFormat::text), FormatError);

  test::write_file(dir.file("c.p3d"), "P3D\n2 2 2\n2 0 0\n");
  CHECK_THROWS_AS(load_volume(dir.file("c.p3d"), VolumeFormat::text), FormatError);

  test::write_file(dir.file("d.p3d"), "P3D\n2 2 2\n0 0\n");
  CHECK_THROWS_AS(load_volume(dir.file("d.p3d"), VolumeFormat::text), FormatError);

  CHECK_THROWS_AS(load_volume(dir.file("missing.p3d"), VolumeFormat::text), IoError);
}

TEST_CASE("binary format is bit-exact") {
  TempDir dir;

  SUBCASE("empty 1x1x1 is 18 bytes with a zero bitmap byte") {
    const VoxelVolume v(1, 1, 1);
    save_volume(v, dir.file("e.vox3"), VolumeFormat::binary);
    const std::string bytes = test::read_file(dir.file("e.vox3"));
    REQUIRE(bytes.size() == 18);
    CHECK(bytes.substr(0, 4) == "VOX3");
    CHECK(bytes[4] == 0x01);
    CHECK(bytes[17] == 0x00);
  }

  SUBCASE("single voxel sets bit 0 of the bitmap, LSB first") {
    VoxelVolume v(1, 1, 1);
    v.set(0, 0, 0, true);
    save_volume(v, dir.file("s.vox3"), VolumeFormat::binary);
    const std::string bytes = test::read_file(dir.file("s.vox3"));
    REQUIRE(bytes.size() == 18);
    CHECK(static_cast<unsigned char>(bytes[17]) == 0x01);
  }

  SUBCASE("box(2,1,1) loads back to the same voxels") {
    const Fixture f = box(2, 1, 1);
    save_volume(f.volume, dir.file("b.vox3"), VolumeFormat::binary);
    const VoxelVolume v = load_volume(dir.file("b.vox3"), VolumeFormat::binary);
    CHECK(v == f.volume);
    CHECK(v.is_foreground(0, 0, 0));
    CHECK(v.is_foreground(1, 0, 0));
    CHECK(v.foreground_count() == 2);
  }
}

TEST_CASE("binary format rejects corrupted files") {
  TempDir dir;
  const Fixture f = box(3, 2, 1);
  save_volume(f.volume, dir.file("ok.vox3"), VolumeFormat::binary);
  const std::string good = test::read_file(dir.file("ok.vox3"));

  test::write_file(dir.file("magic.vox3"), "XOV3" + good.substr(4));
  CHECK_THROWS_AS(load_volume(dir.file("magic.vox3"), VolumeFormat::binary), FormatError);

  std::string version = good;
  version[4] = 0x02;
  test::write_file(dir.file("version.vox3"), version);
  CHECK_THROWS_AS(load_volume(dir.file("version.vox3"), VolumeFormat::binary), FormatError);

  test::write_file(dir.file("trunc.vox3"), good.substr(0, good.size() - 1));
  CHECK_THROWS_AS(load_volume(dir.file("trunc.vox3"), VolumeFormat::binary), FormatError);

  test::write_file(dir.file("trail.vox3"), good + "x");
  CHECK_THROWS_AS(load_volume(dir.file("trail.vox3"), VolumeFormat::binary), FormatError);

  std::string padding = good;
  padding.back() = static_cast<char>(0xC0);  // bits 6..7 are past 3*2*1 = 6 voxels
  test::write_file(dir.file("pad.vox3"), padding);
  CHECK_THROWS_AS(load_volume(dir.file("pad.vox3"), VolumeFormat::binary), FormatError);
}

TEST_CASE("box(2,1,1) text output has exactly two coordinate lines") {
  TempDir dir;
  save_volume(box(2, 1, 1).volume, dir.file("b.p3d"), VolumeFormat::text);
  CHECK(test::read_file(dir.file("b.p3d")) == "P3D\n2 1 1\n0 0 0\n1 0 0\n");
}

TEST_CASE("format sniffing picks text or binary from content") {
  TempDir dir;
  const Fixture f = box(2, 2, 2);
  save_volume(f.volume, dir.file("as_text.dat"), VolumeFormat::text);
  save_volume(f.volume, dir.file("as_binary.dat"), VolumeFormat::binary);
  CHECK(load_volume(dir.file("as_text.dat")) == f.volume);
  CHECK(load_volume(dir.file("as_binary.dat")) == f.volume);

  test::write_file(dir.file("junk.dat"), "not a volume\n");
  CHECK_THROWS_AS(load_volume(dir.file("junk.dat")), FormatError);
}

TEST_CASE("round trip is the identity for random volumes in both formats") {
  TempDir dir;
  std::mt19937 rng(20260810);
  for (int iter = 0; iter < 50; ++iter) {
    const VoxelVolume v = random_volume(rng);
    for (const VolumeFormat fmt : {VolumeFormat::text, VolumeFormat::binary}) {
      const auto path = dir.file("rt" + std::to_string(iter));
      save_volume(v, path, fmt);
      CHECK(load_volume(path, fmt) == v);
    }
    // Saving twice yields identical bytes.
    save_volume(v, dir.file("x1"), VolumeFormat::binary);
    save_volume(v, dir.file("x2"), VolumeFormat::binary);
    CHECK(test::read_file(dir.file("x1")) == test::read_file(dir.file("x2")));
  }
}

TEST_CASE("foreground components follow 6-adjacency") {
  SUBCASE("empty volume has no components") {
    const VoxelVolume v(4, 4, 4);
    CHECK(foreground_components(v).component_count == 0);
  }

  SUBCASE("edge-diagonal voxels are not adjacent") {
    VoxelVolume v(2, 2, 1);
    v.set(0, 0, 0, true);
    v.set(1, 1, 0, true);
    CHECK(foreground_components(v).component_count == 2);
  }

  SUBCASE("solid box is one component") {
    const ComponentLabeling l = foreground_components(box(3, 3, 3).volume);
    CHECK(l.component_count == 1);
    REQUIRE(l.sizes.size() == 1);
    CHECK(l.sizes[0] == 27);
  }
}

TEST_CASE("component labeling is a dense partition") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    const VoxelVolume v = random_volume(rng);
    const ComponentLabeling l = foreground_components(v);
    std::uint64_t total = 0;
    for (const std::uint64_t s : l.sizes) total += s;
    CHECK(total == v.foreground_count());
    for (std::uint64_t i = 0; i < v.size(); ++i) {
      if (v.test(i)) {
        CHECK(l.label_of[i] >= 0);
        CHECK(l.label_of[i] < l.component_count);
      } else {
        CHECK(l.label_of[i] == -1);
      }
    }
  }
}

TEST_CASE("component structure is translation invariant") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    const VoxelVolume v = random_volume(rng);
    const VoxelVolume moved = translated(v, 2, 1, 3, 5);
    const ComponentLabeling a = foreground_components(v);
    const ComponentLabeling b = foreground_components(moved);
    CHECK(a.component_count == b.component_count);
    auto sa = a.sizes, sb = b.sizes;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    CHECK(sa == sb);
  }
}

TEST_CASE("background components separate exterior and cavities") {
  SUBCASE("full grid keeps the virtual exterior, no cavities") {
    const BackgroundRegions bg = background_components(box(3, 3, 3).volume);
    CHECK(bg.labeling.component_count == 1);
    CHECK(bg.cavity_count() == 0);
    CHECK(bg.labeling.sizes[0] == 0);
  }

  SUBCASE("hollow box has one cavity") {
    const BackgroundRegions bg = background_components(hollow_box(5, 1).volume);
    CHECK(bg.labeling.component_count == 2);
    CHECK(bg.cavity_count() == 1);
    CHECK(bg.labeling.sizes[1] == 1);
  }

  SUBCASE("empty volume is all exterior") {
    const BackgroundRegions bg = background_components(VoxelVolume(2, 2, 2));
    CHECK(bg.labeling.component_count == 1);
    CHECK(bg.labeling.sizes[0] == 8);
  }
}

TEST_CASE("cavity count is invariant under padding") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    const VoxelVolume v = random_volume(rng);
    const VoxelVolume padded = translated(v, 1, 1, 1, 2);
    CHECK(background_components(v).cavity_count() ==
          background_components(padded).cavity_count());
  }
}
