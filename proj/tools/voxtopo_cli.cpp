// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "voxtopo/bench.hpp"
#include "voxtopo/errors.hpp"
#include "voxtopo/generator.hpp"
#include "voxtopo/homology.hpp"
#include "voxtopo/invariants.hpp"
#include "voxtopo/oracle.hpp"
#include "voxtopo/report_io.hpp"

namespace {

using namespace voxtopo;

// Exit status: 0 success/agreement, 1 usage error, 2 invalid or
// non-manifold input, 3 oracle disagreement.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDisagreement = 3;

int run_analyze(const std::string& input, const std::string& format, bool per_component) {
  const VoxelVolume v = load_volume(input);
  TopologyReport report;
  try {
    report = assemble_report(v);
  } catch (const ManifoldError& e) {
    std::cerr << "input is not a valid digital manifold:\n";
    for (const ManifoldViolation& violation : e.violations()) {
      std::cerr << "  " << violation_to_text(violation) << "\n";
    }
    return kExitInvalidInput;
  }
  if (format == "json") {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << report_to_text(report, per_component);
  }
  return kExitOk;
}

int run_validate(const std::string& input) {
  const VoxelVolume v = load_volume(input);
  const auto violations = validate_manifold(v);
  std::cout << violations_to_json(violations).dump(2) << "\n";
  for (const ManifoldViolation& violation : violations) {
    std::cerr << violation_to_text(violation) << "\n";
  }
  return violations.empty() ? kExitOk : kExitInvalidInput;
}

int run_oracle(const std::string& input, const std::string& format) {
  const BettiTriple b = oracle_betti(load_volume(input));
  if (format == "json") {
    std::cout << nlohmann::json{{"betti", {b.b0, b.b1, b.b2}}}.dump() << "\n";
  } else {
    std::cout << b.b0 << " " << b.b1 << " " << b.b2 << "\n";
  }
  return kExitOk;
}

int run_compare(const std::string& input) {
  const CompareResult r = compare(load_volume(input));
  std::cout << compare_to_json(r).dump(2) << "\n";
  if (!r.comparable) return kExitInvalidInput;
  return r.agree() ? kExitOk : kExitDisagreement;
}

int run_generate(const std::string& shape, const std::vector<std::uint64_t>& params,
                 const std::string& output, std::string format) {
  const auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw CLI::ValidationError("generate",
                                 shape + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  Fixture fixture = [&]() {
    if (shape == "box") {
      need(3);
      return box(static_cast<std::uint32_t>(params[0]), static_cast<std::uint32_t>(params[1]),
                 static_cast<std::uint32_t>(params[2]));
    }
    if (shape == "plate-with-holes") {
      need(1);
      return plate_with_holes(static_cast<std::uint32_t>(params[0]));
    }
    if (shape == "u-shape") {
      need(1);
      return u_shape(static_cast<std::uint32_t>(params[0]));
    }
    if (shape == "hollow-box") {
      need(2);
      return hollow_box(static_cast<std::uint32_t>(params[0]),
                        static_cast<std::uint32_t>(params[1]));
    }
    if (shape == "random") {
      need(2);
      return random_manifold(params[0], static_cast<std::uint32_t>(params[1]));
    }
    throw CLI::ValidationError("generate", "unknown shape '" + shape + "'");
  }();

  if (format.empty()) {
    const auto dot = output.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : output.substr(dot);
    if (ext == ".p3d") {
      format = "text";
    } else if (ext == ".vox3") {
      format = "binary";
    } else {
      throw CLI::ValidationError("generate",
                                 "cannot infer format from '" + output + "', pass --format");
    }
  }
  save_volume(fixture.volume, output,
              format == "text" ? VolumeFormat::text : VolumeFormat::binary);
  std::cerr << "wrote " << fixture.name << " to " << output << "\n";
  return kExitOk;
}

int run_mesh_genus(const std::string& input) {
  const TriMesh mesh = load_off(input);
  for (const MeshComponentGenus& g : mesh_genus(mesh)) {
    std::cout << "component " << g.component_id << ": genus " << g.genus << "\n";
  }
  return kExitOk;
}

int run_bench(const std::vector<std::uint32_t>& sizes, int repeats) {
  for (const BenchSample& sample : bench_boxes(sizes, repeats)) {
    std::printf("%llu %.6f\n", static_cast<unsigned long long>(sample.voxels), sample.seconds);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological invariants of 3D binary voxel images: genus of the boundary\n"
               "surfaces and homology groups H0..H3 of the solid, in linear time."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "voxtopo 0.1.0");

  std::string input, output, shape;
  std::string format = "json";
  std::string gen_format;
  bool per_component = false;
  std::vector<std::uint64_t> params;
  std::vector<std::uint32_t> sizes = {64, 128, 256};
  int repeats = 3;

  CLI::App* analyze = app.add_subcommand("analyze", "Report genus and homology of a volume");
  analyze->add_option("input", input, "volume file (.p3d or .vox3, sniffed by content)")
      ->required();
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--per-component", per_component, "include the per-component block");

  CLI::App* validate = app.add_subcommand("validate", "Check digital-manifold validity");
  validate->add_option("input", input)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force Betti numbers (b0, b1, b2)");
  oracle->add_option("input", input)->required();
  oracle->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CLI::App* cmp = app.add_subcommand("compare", "Run fast path and oracle, report any diff");
  cmp->add_option("input", input)->required();

  CLI::App* generate = app.add_subcommand("generate", "Write a fixture volume");
  generate
      ->add_option("shape", shape,
                   "box W H D | plate-with-holes G | u-shape H | hollow-box OUTER CAVITY | "
                   "random SEED BUDGET")
      ->required();
  generate->add_option("params", params, "shape parameters");
  generate->add_option("-o,--output", output, "output path")->required();
  generate->add_option("--format", gen_format, "text or binary (default: by extension)")
      ->check(CLI::IsMember({"text", "binary"}));

  CLI::App* mesh = app.add_subcommand("mesh-genus", "Genus of a closed triangle mesh (OFF)");
  mesh->add_option("input", input)->required();

  CLI::App* bench = app.add_subcommand("bench", "Time analyze on k x k x k boxes");
  bench->add_option("--sizes", sizes, "box edge lengths")->delimiter(',');
  bench->add_option("--repeats", repeats, "runs per size, fastest kept")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(input, format, per_component);
    if (validate->parsed()) return run_validate(input);
    if (oracle->parsed()) return run_oracle(input, format);
    if (cmp->parsed()) return run_compare(input);
    if (generate->parsed()) return run_generate(shape, params, output, gen_format);
    if (mesh->parsed()) return run_mesh_genus(input);
    if (bench->parsed()) return run_bench(sizes, repeats);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ManifoldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const ManifoldViolation& violation : e.violations()) {
      std::cerr << "  " << violation_to_text(violation) << "\n";
    }
    return kExitInvalidInput;
  } catch (const SurfaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}
