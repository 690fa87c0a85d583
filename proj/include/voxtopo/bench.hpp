// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace voxtopo {

struct BenchSample {
  std::uint64_t voxels = 0;
  double seconds = 0.0;
};

/// Times the analyze pipeline on solid k x k x k boxes. Each size runs
/// `repeats` times and keeps the fastest run; volume construction is not
/// timed.
std::vector<BenchSample> bench_boxes(const std::vector<std::uint32_t>& sizes, int repeats = 3);

}  // namespace voxtopo
