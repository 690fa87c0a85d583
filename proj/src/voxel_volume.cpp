// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/voxel_volume.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>

#include "voxtopo/errors.hpp"

namespace voxtopo {

namespace {

// Practical cap so dims from hostile files cannot overflow size math.
constexpr std::uint64_t kMaxVoxels = std::uint64_t{1} << 40;

constexpr std::array<std::array<int, 3>, 6> kNeighborSteps = {{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
}};

void check_dims(std::uint64_t nx, std::uint64_t ny, std::uint64_t nz) {
  if (nx == 0 || ny == 0 || nz == 0) {
    throw FormatError("volume dimensions must be positive");
  }
  constexpr std::uint64_t kMaxAxis = 0xFFFFFFFFull;
  if (nx > kMaxAxis || ny > kMaxAxis || nz > kMaxAxis) {
    throw FormatError("volume dimensions too large");
  }
  // nx, ny < 2^32, so nx*ny cannot wrap; the division guards the rest.
  const std::uint64_t layer = nx * ny;
  if (layer > kMaxVoxels || nz > kMaxVoxels / layer) {
    throw FormatError("volume dimensions too large");
  }
}

}  // namespace

VoxelVolume::VoxelVolume(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz)
    : nx_(nx), ny_(ny), nz_(nz) {
  check_dims(nx, ny, nz);
  words_.assign((size() + 63) / 64, 0);
}

void VoxelVolume::set(std::int64_t x, std::int64_t y, std::int64_t z, bool value) {
  if (!in_bounds(x, y, z)) {
    throw std::out_of_range("voxel coordinate outside grid");
  }
  const std::uint64_t i = linear_index(x, y, z);
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  std::uint64_t& word = words_[i >> 6];
  const bool old = word & mask;
  if (old == value) return;
  if (value) {
    word |= mask;
    ++count_;
  } else {
    word &= ~mask;
    --count_;
  }
}

namespace {

// Breadth-first flood fill from `queue` (pre-labeled seeds) over all cells
// whose occupancy matches `want_foreground`.
void flood(const VoxelVolume& v, bool want_foreground, std::vector<std::int32_t>& labels,
           std::vector<std::uint64_t>& queue, std::int32_t label, std::uint64_t& size_out) {
  std::size_t head = 0;
  while (head < queue.size()) {
    const std::uint64_t cur = queue[head++];
    ++size_out;
    const VoxelCoord c = v.coord_of(cur);
    for (const auto& step : kNeighborSteps) {
      const std::int64_t x = c.x + step[0];
      const std::int64_t y = c.y + step[1];
      const std::int64_t z = c.z + step[2];
      if (!v.in_bounds(x, y, z)) continue;
      const std::uint64_t n = v.linear_index(x, y, z);
      if (labels[n] != -1 || v.test(n) != want_foreground) continue;
      labels[n] = label;
      queue.push_back(n);
    }
  }
}

}  // namespace

ComponentLabeling foreground_components(const VoxelVolume& v) {
  ComponentLabeling out;
  out.label_of.assign(v.size(), -1);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (!v.test(i) || out.label_of[i] != -1) continue;
    const std::int32_t label = out.component_count++;
    out.label_of[i] = label;
    queue.clear();
    queue.push_back(i);
    std::uint64_t size = 0;
    flood(v, true, out.label_of, queue, label, size);
    out.sizes.push_back(size);
  }
  return out;
}

BackgroundRegions background_components(const VoxelVolume& v) {
  BackgroundRegions out;
  out.labeling.label_of.assign(v.size(), -1);

  // The virtual exterior is seeded with every background voxel on a grid
  // face; it exists even when the grid is completely full.
  std::vector<std::uint64_t> queue;
  const std::int64_t nx = v.nx(), ny = v.ny(), nz = v.nz();
  auto seed = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    const std::uint64_t i = v.linear_index(x, y, z);
    if (v.test(i) || out.labeling.label_of[i] != -1) return;
    out.labeling.label_of[i] = 0;
    queue.push_back(i);
  };
  for (std::int64_t z = 0; z < nz; ++z) {
    for (std::int64_t y = 0; y < ny; ++y) {
      seed(0, y, z);
      seed(nx - 1, y, z);
    }
  }
  for (std::int64_t z = 0; z < nz; ++z) {
    for (std::int64_t x = 0; x < nx; ++x) {
      seed(x, 0, z);
      seed(x, ny - 1, z);
    }
  }
  for (std::int64_t y = 0; y < ny; ++y) {
    for (std::int64_t x = 0; x < nx; ++x) {
      seed(x, y, 0);
      seed(x, y, nz - 1);
    }
  }
  out.exterior_id = 0;
  out.labeling.component_count = 1;
  std::uint64_t exterior_size = 0;
  flood(v, false, out.labeling.label_of, queue, 0, exterior_size);
  out.labeling.sizes.push_back(exterior_size);

  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (v.test(i) || out.labeling.label_of[i] != -1) continue;
    const std::int32_t label = out.labeling.component_count++;
    out.labeling.label_of[i] = label;
    queue.clear();
    queue.push_back(i);
    std::uint64_t size = 0;
    flood(v, false, out.labeling.label_of, queue, label, size);
    out.labeling.sizes.push_back(size);
  }
  return out;
}

namespace {

constexpr char kTextMagic[] = "P3D";
constexpr char kBinaryMagic[] = "VOX3";
constexpr std::uint8_t kBinaryVersion = 0x01;

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

VoxelVolume load_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kTextMagic) {
    throw FormatError("text volume: first line must be P3D");
  }
  if (!std::getline(in, line)) {
    throw FormatError("text volume: missing dimension line");
  }
  std::istringstream dims(strip_cr(line));
  std::int64_t nx = 0, ny = 0, nz = 0;
  std::string extra;
  if (!(dims >> nx >> ny >> nz) || (dims >> extra) || nx <= 0 || ny <= 0 || nz <= 0) {
    throw FormatError("text volume: malformed dimension line");
  }
  check_dims(nx, ny, nz);
  VoxelVolume v(static_cast<std::uint32_t>(nx), static_cast<std::uint32_t>(ny),
                static_cast<std::uint32_t>(nz));
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::int64_t x = 0, y = 0, z = 0;
    if (!(row >> x >> y >> z) || (row >> extra)) {
      throw FormatError("text volume: malformed coordinate at line " + std::to_string(lineno));
    }
    if (!v.in_bounds(x, y, z)) {
      throw FormatError("text volume: coordinate out of declared dims at line " +
                        std::to_string(lineno));
    }
    v.set(x, y, z, true);  // duplicates are permitted and idempotent
  }
  return v;
}

std::uint32_t read_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

VoxelVolume load_binary(std::istream& in) {
  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
  if (bytes.size() < 17 || std::memcmp(bytes.data(), kBinaryMagic, 4) != 0) {
    throw FormatError("binary volume: bad magic");
  }
  if (bytes[4] != kBinaryVersion) {
    throw FormatError("binary volume: unsupported version");
  }
  const std::uint32_t nx = read_u32_le(&bytes[5]);
  const std::uint32_t ny = read_u32_le(&bytes[9]);
  const std::uint32_t nz = read_u32_le(&bytes[13]);
  check_dims(nx, ny, nz);
  const std::uint64_t n = std::uint64_t{nx} * ny * nz;
  const std::uint64_t bitmap_bytes = (n + 7) / 8;
  if (bytes.size() < 17 + bitmap_bytes) {
    throw FormatError("binary volume: truncated bitmap");
  }
  if (bytes.size() > 17 + bitmap_bytes) {
    throw FormatError("binary volume: trailing bytes");
  }
  VoxelVolume v(nx, ny, nz);
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((bytes[17 + i / 8] >> (i % 8)) & 1u) {
      const VoxelCoord c = v.coord_of(i);
      v.set(c.x, c.y, c.z, true);
    }
  }
  // Unused bits in the final byte must be zero.
  if (n % 8 != 0) {
    const unsigned char last = bytes[17 + bitmap_bytes - 1];
    if (last >> (n % 8) != 0) {
      throw FormatError("binary volume: nonzero padding bits");
    }
  }
  return v;
}

}  // namespace

VoxelVolume load_volume(const std::filesystem::path& path, VolumeFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return format == VolumeFormat::text ? load_text(in) : load_binary(in);
}

VoxelVolume load_volume(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  char magic[4] = {};
  in.read(magic, 4);
  in.clear();
  in.seekg(0);
  if (std::memcmp(magic, kBinaryMagic, 4) == 0) return load_binary(in);
  if (std::memcmp(magic, kTextMagic, 3) == 0 && (magic[3] == '\n' || magic[3] == '\r')) {
    return load_text(in);
  }
  throw FormatError(path.string() + ": not a recognized volume format");
}

void save_volume(const VoxelVolume& v, const std::filesystem::path& path, VolumeFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  if (format == VolumeFormat::text) {
    out << kTextMagic << '\n' << v.nx() << ' ' << v.ny() << ' ' << v.nz() << '\n';
    for (std::uint64_t i = 0; i < v.size(); ++i) {
      if (!v.test(i)) continue;
      const VoxelCoord c = v.coord_of(i);
      out << c.x << ' ' << c.y << ' ' << c.z << '\n';
    }
  } else {
    out.write(kBinaryMagic, 4);
    out.put(static_cast<char>(kBinaryVersion));
    for (const std::uint32_t d : {v.nx(), v.ny(), v.nz()}) {
      const char raw[4] = {static_cast<char>(d & 0xFF), static_cast<char>((d >> 8) & 0xFF),
                           static_cast<char>((d >> 16) & 0xFF),
                           static_cast<char>((d >> 24) & 0xFF)};
      out.write(raw, 4);
    }
    const std::uint64_t n = v.size();
    unsigned char byte = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (v.test(i)) byte |= static_cast<unsigned char>(1u << (i % 8));
      if (i % 8 == 7 || i + 1 == n) {
        out.put(static_cast<char>(byte));
        byte = 0;
      }
    }
  }
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

}  // namespace voxtopo
