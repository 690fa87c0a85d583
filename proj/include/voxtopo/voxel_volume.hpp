// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace voxtopo {

struct VoxelCoord {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend bool operator==(const VoxelCoord&, const VoxelCoord&) = default;
};

/// Dense 3D binary occupancy grid. Voxel (x,y,z) maps to linear index
/// x + nx*(y + ny*z); storage is one bit per voxel. Everything outside
/// the grid bounds is background. Immutable once published: mutation is
/// only intended while building a volume (loaders, generators).
class VoxelVolume {
 public:
  VoxelVolume(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz);

  std::uint32_t nx() const { return nx_; }
  std::uint32_t ny() const { return ny_; }
  std::uint32_t nz() const { return nz_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(nx_) * ny_ * nz_; }
  std::uint64_t foreground_count() const { return count_; }

  bool in_bounds(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return x >= 0 && y >= 0 && z >= 0 && x < nx_ && y < ny_ && z < nz_;
  }

  std::uint64_t linear_index(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return static_cast<std::uint64_t>(x) +
           static_cast<std::uint64_t>(nx_) *
               (static_cast<std::uint64_t>(y) + static_cast<std::uint64_t>(ny_) * z);
  }

  VoxelCoord coord_of(std::uint64_t linear) const {
    const std::uint64_t x = linear % nx_;
    const std::uint64_t t = linear / nx_;
    return VoxelCoord{static_cast<std::int64_t>(x), static_cast<std::int64_t>(t % ny_),
                      static_cast<std::int64_t>(t / ny_)};
  }

  /// Out-of-bounds coordinates are background by definition.
  bool is_foreground(std::int64_t x, std::int64_t y, std::int64_t z) const {
    if (!in_bounds(x, y, z)) return false;
    return test(linear_index(x, y, z));
  }

  bool test(std::uint64_t linear) const {
    return (words_[linear >> 6] >> (linear & 63)) & 1u;
  }

  void set(std::int64_t x, std::int64_t y, std::int64_t z, bool value = true);

  friend bool operator==(const VoxelVolume& a, const VoxelVolume& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.nz_ == b.nz_ && a.words_ == b.words_;
  }

 private:
  std::uint32_t nx_, ny_, nz_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Partition of the foreground (or background) voxels into 6-connected
/// components. Labels are dense 0..component_count-1 in scan order of the
/// first voxel of each component; unlabeled cells hold -1.
struct ComponentLabeling {
  std::vector<std::int32_t> label_of;
  std::int32_t component_count = 0;
  std::vector<std::uint64_t> sizes;
};

/// Labels foreground voxels by 6-adjacency (direct adjacency) using an
/// explicit-queue breadth-first search.
ComponentLabeling foreground_components(const VoxelVolume& v);

/// Background partition with one virtual exterior region connected to every
/// background voxel on a grid face. Bounded components are cavities. The
/// exterior component always exists, possibly with zero in-grid voxels.
struct BackgroundRegions {
  std::int32_t exterior_id = 0;
  ComponentLabeling labeling;

  std::int32_t cavity_count() const { return labeling.component_count - 1; }
};

BackgroundRegions background_components(const VoxelVolume& v);

enum class VolumeFormat { text, binary };

VoxelVolume load_volume(const std::filesystem::path& path, VolumeFormat format);
void save_volume(const VoxelVolume& v, const std::filesystem::path& path, VolumeFormat format);

/// Sniffs the format from the file content (magic "VOX3" vs header "P3D").
VoxelVolume load_volume(const std::filesystem::path& path);

}  // namespace voxtopo
