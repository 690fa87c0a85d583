// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "voxtopo/bench.hpp"
#include "voxtopo/errors.hpp"
#include "voxtopo/generator.hpp"
#include "voxtopo/homology.hpp"
#include "voxtopo/invariants.hpp"
#include "voxtopo/oracle.hpp"
#include "voxtopo/report_io.hpp"

namespace py = pybind11;
using namespace voxtopo;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
      return d;
    }
    case nlohmann::json::value_t::array: {
      py::list l;
      for (const auto& value : j) l.append(json_to_py(value));
      return l;
    }
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

VoxelVolume volume_from_numpy(const py::array& array) {
  const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> a(array);
  if (a.ndim() != 3) {
    throw py::value_error("occupancy array must have shape (nx, ny, nz)");
  }
  VoxelVolume v(static_cast<std::uint32_t>(a.shape(0)), static_cast<std::uint32_t>(a.shape(1)),
                static_cast<std::uint32_t>(a.shape(2)));
  const auto r = a.unchecked<3>();
  for (py::ssize_t x = 0; x < a.shape(0); ++x) {
    for (py::ssize_t y = 0; y < a.shape(1); ++y) {
      for (py::ssize_t z = 0; z < a.shape(2); ++z) {
        if (r(x, y, z) != 0) v.set(x, y, z, true);
      }
    }
  }
  return v;
}

py::array_t<bool> volume_to_numpy(const VoxelVolume& v) {
  py::array_t<bool> out({static_cast<py::ssize_t>(v.nx()), static_cast<py::ssize_t>(v.ny()),
                         static_cast<py::ssize_t>(v.nz())});
  auto w = out.mutable_unchecked<3>();
  for (std::int64_t x = 0; x < v.nx(); ++x) {
    for (std::int64_t y = 0; y < v.ny(); ++y) {
      for (std::int64_t z = 0; z < v.nz(); ++z) {
        w(x, y, z) = v.is_foreground(x, y, z);
      }
    }
  }
  return out;
}

VolumeFormat parse_format(const std::string& name) {
  if (name == "text") return VolumeFormat::text;
  if (name == "binary") return VolumeFormat::binary;
  throw py::value_error("format must be 'text' or 'binary'");
}

TriMesh mesh_from_arrays(const py::array& vertices, const py::array& triangles) {
  const py::array_t<double, py::array::c_style | py::array::forcecast> v(vertices);
  const py::array_t<std::int64_t, py::array::c_style | py::array::forcecast> t(triangles);
  if (v.ndim() != 2 || v.shape(1) != 3) {
    throw py::value_error("vertices must have shape (N, 3)");
  }
  if (t.ndim() != 2 || t.shape(1) != 3) {
    throw py::value_error("triangles must have shape (M, 3)");
  }
  TriMesh mesh;
  const auto rv = v.unchecked<2>();
  for (py::ssize_t i = 0; i < v.shape(0); ++i) {
    mesh.vertices.push_back({rv(i, 0), rv(i, 1), rv(i, 2)});
  }
  const auto rt = t.unchecked<2>();
  for (py::ssize_t i = 0; i < t.shape(0); ++i) {
    for (int k = 0; k < 3; ++k) {
      if (rt(i, k) < 0 || rt(i, k) >= v.shape(0)) {
        throw py::value_error("triangle index out of range");
      }
    }
    mesh.triangles.push_back({static_cast<std::int32_t>(rt(i, 0)),
                              static_cast<std::int32_t>(rt(i, 1)),
                              static_cast<std::int32_t>(rt(i, 2))});
  }
  return mesh;
}

py::list mesh_genus_to_py(const std::vector<MeshComponentGenus>& result) {
  py::list out;
  for (const MeshComponentGenus& g : result) {
    out.append(py::make_tuple(g.component_id, g.genus));
  }
  return out;
}

py::dict expected_to_py(const FixtureExpected& e) {
  py::dict d;
  d["component_count"] = e.component_count;
  d["genera"] = e.genera;
  d["betti"] = py::make_tuple(e.betti.b0, e.betti.b1, e.betti.b2);
  d["m3"] = e.classification.m3;
  d["m5"] = e.classification.m5;
  d["m6"] = e.classification.m6;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Topological invariants of 3D binary voxel images: genus of boundary "
            "surfaces and homology groups of the solid, in linear time.";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<SurfaceError>(m, "SurfaceError", PyExc_ValueError);
  py::register_exception<ManifoldError>(m, "ManifoldError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<VoxelVolume>(m, "Volume", "Dense 3D binary occupancy grid")
      .def(py::init<std::uint32_t, std::uint32_t, std::uint32_t>(), py::arg("nx"),
           py::arg("ny"), py::arg("nz"))
      .def_property_readonly(
          "dims", [](const VoxelVolume& v) { return py::make_tuple(v.nx(), v.ny(), v.nz()); })
      .def_property_readonly("foreground_count", &VoxelVolume::foreground_count)
      .def("get", &VoxelVolume::is_foreground, py::arg("x"), py::arg("y"), py::arg("z"))
      .def("set", &VoxelVolume::set, py::arg("x"), py::arg("y"), py::arg("z"),
           py::arg("value") = true)
      .def("to_numpy", &volume_to_numpy, "Occupancy as a bool array of shape (nx, ny, nz)")
      .def_static("from_numpy", &volume_from_numpy, py::arg("array"),
                  "Build a volume from a (nx, ny, nz) array; nonzero means foreground")
      .def_static(
          "load",
          [](const std::string& path) { return load_volume(path); }, py::arg("path"),
          "Load a .p3d or .vox3 volume; the format is sniffed from the content")
      .def(
          "save",
          [](const VoxelVolume& v, const std::string& path, const std::string& format) {
            save_volume(v, path, parse_format(format));
          },
          py::arg("path"), py::arg("format") = "binary")
      .def("__eq__", [](const VoxelVolume& a, const VoxelVolume& b) { return a == b; })
      .def("__repr__", [](const VoxelVolume& v) {
        return "Volume(" + std::to_string(v.nx()) + "x" + std::to_string(v.ny()) + "x" +
               std::to_string(v.nz()) + ", " + std::to_string(v.foreground_count()) +
               " foreground)";
      });

  py::class_<Fixture>(m, "Fixture", "Generated volume with its ground-truth invariants")
      .def_readonly("name", &Fixture::name)
      .def_readonly("volume", &Fixture::volume)
      .def_property_readonly("expected",
                             [](const Fixture& f) { return expected_to_py(f.expected); })
      .def("__repr__", [](const Fixture& f) { return "Fixture(" + f.name + ")"; });

  m.def("box", &box, py::arg("w"), py::arg("h"), py::arg("d"));
  m.def("plate_with_holes", &plate_with_holes, py::arg("g"));
  m.def("u_shape", &u_shape, py::arg("handles"));
  m.def("hollow_box", &hollow_box, py::arg("outer"), py::arg("cavity"));
  m.def("random_manifold", &random_manifold, py::arg("seed"), py::arg("budget"));

  m.def(
      "analyze", [](const VoxelVolume& v) { return json_to_py(report_to_json(assemble_report(v))); },
      py::arg("volume"),
      "Genus and homology report as a dict; raises ManifoldError on invalid input");
  m.def(
      "validate",
      [](const VoxelVolume& v) { return json_to_py(violations_to_json(validate_manifold(v))); },
      py::arg("volume"), "List of manifold violations; empty means valid");
  m.def(
      "oracle_betti",
      [](const VoxelVolume& v) {
        const BettiTriple b = oracle_betti(v);
        return py::make_tuple(b.b0, b.b1, b.b2);
      },
      py::arg("volume"), "Brute-force (b0, b1, b2) from cell counts and cavities");
  m.def(
      "cell_counts",
      [](const VoxelVolume& v) {
        const CellCounts c = cell_counts(v);
        py::dict d;
        d["V"] = c.V;
        d["E"] = c.E;
        d["F"] = c.F;
        d["C"] = c.C;
        d["euler"] = c.euler();
        return d;
      },
      py::arg("volume"));
  m.def(
      "compare", [](const VoxelVolume& v) { return json_to_py(compare_to_json(compare(v))); },
      py::arg("volume"), "Fast path vs oracle; 'diff' is empty when they agree");

  m.def(
      "mesh_genus",
      [](const py::array& vertices, const py::array& triangles) {
        return mesh_genus_to_py(mesh_genus(mesh_from_arrays(vertices, triangles)));
      },
      py::arg("vertices"), py::arg("triangles"),
      "Per-component (component_id, genus) of a closed triangle mesh");
  m.def(
      "mesh_genus_off",
      [](const std::string& path) { return mesh_genus_to_py(mesh_genus(load_off(path))); },
      py::arg("path"));

  m.def(
      "bench",
      [](const std::vector<std::uint32_t>& sizes, int repeats) {
        py::list out;
        for (const BenchSample& s : bench_boxes(sizes, repeats)) {
          out.append(py::make_tuple(s.voxels, s.seconds));
        }
        return out;
      },
      py::arg("sizes"), py::arg("repeats") = 3,
      "(voxels, seconds) pairs for analyze on k x k x k boxes");

  m.attr("__version__") = "0.1.0";
}
