// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#include "voxtopo/report_io.hpp"

#include <sstream>

namespace voxtopo {

using nlohmann::json;

namespace {

json homology_to_json(const HomologyGroups& h) {
  return json{{"betti", {h.b0, h.b1, h.b2, h.b3}},
              {"homology", {h.presentation[0], h.presentation[1], h.presentation[2],
                            h.presentation[3]}}};
}

json classification_to_json(const SurfaceClassification& c) {
  return json{{"m3", c.m3}, {"m4", c.m4}, {"m5", c.m5}, {"m6", c.m6}};
}

}  // namespace

json report_to_json(const TopologyReport& report) {
  json components = json::array();
  json genera = json::array();
  for (const ComponentReport& c : report.components) {
    json entry = homology_to_json(c.homology);
    entry["id"] = c.component_id;
    entry["voxel_count"] = c.voxel_count;
    entry["boundary_surface_count"] = c.boundary_surface_count;
    entry["genera"] = c.genera;
    entry["b1_boundary"] = c.b1_boundary;
    entry["euler_solid"] = c.euler_solid;
    entry["euler_boundary"] = c.euler_boundary;
    json cls = json::array();
    for (const SurfaceClassification& s : c.surfaces) cls.push_back(classification_to_json(s));
    entry["surfaces"] = cls;
    components.push_back(std::move(entry));
    genera.push_back(c.genera);
  }
  json out = homology_to_json(report.total);
  out["component_count"] = report.component_count;
  out["components"] = std::move(components);
  out["genera"] = std::move(genera);
  out["euler_solid"] = report.total_euler_solid;
  out["euler_boundary"] = report.total_euler_boundary;
  return out;
}

std::string report_to_text(const TopologyReport& report, bool per_component) {
  std::ostringstream out;
  out << "components: " << report.component_count << "\n";
  out << "betti: [" << report.total.b0 << ", " << report.total.b1 << ", " << report.total.b2
      << ", " << report.total.b3 << "]\n";
  out << "homology: H0=" << report.total.presentation[0]
      << " H1=" << report.total.presentation[1] << " H2=" << report.total.presentation[2]
      << " H3=" << report.total.presentation[3] << "\n";
  out << "euler_solid: " << report.total_euler_solid << "\n";
  out << "euler_boundary: " << report.total_euler_boundary << "\n";
  if (per_component) {
    for (const ComponentReport& c : report.components) {
      out << "component " << c.component_id << ": voxels=" << c.voxel_count
          << " surfaces=" << c.boundary_surface_count << " genera=[";
      for (std::size_t i = 0; i < c.genera.size(); ++i) {
        out << (i ? ", " : "") << c.genera[i];
      }
      out << "] H1=" << c.homology.presentation[1] << " H2=" << c.homology.presentation[2]
          << " euler_solid=" << c.euler_solid << " euler_boundary=" << c.euler_boundary << "\n";
    }
  }
  return out.str();
}

json violations_to_json(const std::vector<ManifoldViolation>& violations) {
  json out = json::array();
  for (const ManifoldViolation& v : violations) {
    const char* kind = v.kind == ManifoldViolation::Kind::nonmanifold_edge     ? "nonmanifold_edge"
                       : v.kind == ManifoldViolation::Kind::nonmanifold_vertex ? "nonmanifold_vertex"
                                                                               : "bad_incidence";
    json entry{{"kind", kind}, {"location", {v.x, v.y, v.z}}, {"detail", v.detail}};
    if (v.axis >= 0) entry["axis"] = v.axis;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string violation_to_text(const ManifoldViolation& v) {
  std::ostringstream out;
  switch (v.kind) {
    case ManifoldViolation::Kind::nonmanifold_edge: out << "nonmanifold_edge"; break;
    case ManifoldViolation::Kind::nonmanifold_vertex: out << "nonmanifold_vertex"; break;
    case ManifoldViolation::Kind::bad_incidence: out << "bad_incidence"; break;
  }
  out << " at (" << v.x << ", " << v.y << ", " << v.z << ")";
  if (v.axis >= 0) {
    out << " along " << "xyz"[v.axis];
  }
  out << ": " << v.detail;
  return out.str();
}

json compare_to_json(const CompareResult& r) {
  json out;
  out["comparable"] = r.comparable;
  out["oracle"] = {r.oracle.b0, r.oracle.b1, r.oracle.b2};
  if (r.fast.has_value()) {
    out["computed"] = {r.fast->b0, r.fast->b1, r.fast->b2};
    json diff = json::array();
    const std::uint64_t lhs[3] = {r.fast->b0, r.fast->b1, r.fast->b2};
    const std::uint64_t rhs[3] = {r.oracle.b0, r.oracle.b1, r.oracle.b2};
    for (int i = 0; i < 3; ++i) {
      if (lhs[i] != rhs[i]) {
        diff.push_back({{"betti", i}, {"computed", lhs[i]}, {"oracle", rhs[i]}});
      }
    }
    out["diff"] = std::move(diff);
    out["agree"] = r.agree();
  } else {
    out["status"] = "incomparable";
    out["violations"] = violations_to_json(r.violations);
  }
  return out;
}

}  // namespace voxtopo
