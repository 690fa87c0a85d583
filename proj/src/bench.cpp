// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/bench.hpp"

#include <algorithm>
#include <chrono>

#include "voxtopo/generator.hpp"
#include "voxtopo/homology.hpp"

namespace voxtopo {

std::vector<BenchSample> bench_boxes(const std::vector<std::uint32_t>& sizes, int repeats) {
  std::vector<BenchSample> out;
  out.reserve(sizes.size());
  for (const std::uint32_t k : sizes) {
    const Fixture f = box(k, k, k);
    double best = -1.0;
    for (int r = 0; r < std::max(repeats, 1); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const TopologyReport report = assemble_report(f.volume);
      const auto stop = std::chrono::steady_clock::now();
      if (report.component_count != 1) {
        throw SurfaceError("benchmark box produced an unexpected report");
      }
      const double seconds = std::chrono::duration<double>(stop - start).count();
      best = best < 0.0 ? seconds : std::min(best, seconds);
    }
    out.push_back({f.volume.size(), best});
  }
  return out;
}

}  // namespace voxtopo
