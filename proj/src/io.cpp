// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/io.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <system_error>

namespace biham::io {
namespace {

using nlohmann::json;

json state_json(const State& s) { return json::array({s.x, s.y, s.z}); }

json run_summary(const fibers::HeteroclinicRun& r) {
  return {{"start", state_json(r.start)},
          {"forward_end", state_json(r.forward_end)},
          {"backward_end", state_json(r.backward_end)},
          {"forward_target", state_json(r.forward_target)},
          {"backward_target", state_json(r.backward_target)},
          {"forward_distance", r.forward_distance},
          {"backward_distance", r.backward_distance},
          {"dt", r.dt},
          {"steps", r.steps},
          {"max_c_deviation", r.max_c_deviation},
          {"max_h_deviation", r.max_h_deviation},
          // Numerical evidence only, hence the quotes.
          {"connection", "\"heteroclinic\""}};
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc()) return "nan";
  return {buf, res.ptr};
}

std::string trajectory_csv(const integrator::Trajectory& t) {
  std::string out = "step,t,x,y,z,h_drift,c_drift\n";
  for (const auto& r : t.samples) {
    out += std::to_string(r.step);
    for (double v : {r.t, r.state.x, r.state.y, r.state.z, r.h_drift, r.c_drift}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_json(const integrator::Trajectory& t) {
  json arr = json::array();
  for (const auto& r : t.samples) {
    arr.push_back({{"step", r.step},
                   {"t", r.t},
                   {"x", r.state.x},
                   {"y", r.state.y},
                   {"z", r.state.z},
                   {"h_drift", r.h_drift},
                   {"c_drift", r.c_drift}});
  }
  return arr.dump() + "\n";
}

std::string trajectory_to_string(const integrator::Trajectory& t, Format f) {
  return f == Format::Csv ? trajectory_csv(t) : trajectory_json(t);
}

std::string scan_csv(const std::vector<ecmap::ScanCell>& cells) {
  std::string out = "h,c,label\n";
  for (const auto& cell : cells) {
    out += format_double(cell.h);
    out += ',';
    out += format_double(cell.c);
    out += ',';
    out += ecmap::label_name(cell.label);
    out += '\n';
  }
  return out;
}

std::string fiber_json(const fibers::FiberDescription& d, const EcPoint& target) {
  json pts = json::array();
  for (const auto& p : d.points) pts.push_back(state_json(p));
  json wit = json::array();
  for (const auto& p : d.witness_points) wit.push_back(state_json(p));
  json j = {{"h", target.h},
            {"c", target.c},
            {"label", ecmap::label_name(d.label)},
            {"kind", fibers::fiber_kind_name(d.kind)},
            {"count_hint", d.count_hint},
            {"points", pts},
            {"witness_points", wit}};
  return j.dump() + "\n";
}

std::string run_json(const fibers::HeteroclinicRun& r) { return run_summary(r).dump() + "\n"; }

std::string web_json(const fibers::HeteroclinicWeb& w) {
  json runs = json::array();
  for (const auto& r : w.runs) runs.push_back(run_summary(r));
  json cycles = json::array();
  for (const auto& c : w.cycles) {
    json verts = json::array();
    for (const auto& v : c.vertices) verts.push_back(state_json(v));
    cycles.push_back({{"vertices", verts}, {"edge_runs", c.edge_runs}, {"closed", c.closed}});
  }
  json j = {{"h", w.h}, {"c", w.c}, {"runs", runs}, {"cycles", cycles}};
  return j.dump() + "\n";
}

std::string verdict_json(const stability::StabilityVerdict& v) {
  json spec = json::array();
  for (const auto& e : v.spectrum) spec.push_back({{"re", e.real()}, {"im", e.imag()}});
  json j = {{"family", ecmap::family_name(v.family.family)},
            {"M", v.family.m},
            {"verdict", stability::verdict_name(v.verdict)},
            {"certificate", stability::certificate_name(v.certificate)},
            {"spectrum", spec},
            {"max_real_eigenvalue", v.spectrum.back().real()}};
  if (v.certificate == stability::Certificate::ArnoldDefinite || v.multiplier != 0.0) {
    j["multiplier"] = v.multiplier;
    j["restricted_hessian_eigenvalues"] = {v.restricted_eigenvalues[0], v.restricted_eigenvalues[1]};
  }
  return j.dump() + "\n";
}

}  // namespace biham::io
