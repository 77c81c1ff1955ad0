// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "biham/ecmap.hpp"
#include "biham/fibers.hpp"
#include "biham/integrator.hpp"
#include "biham/stability.hpp"

namespace biham::io {

enum class Format { Csv, Json };

// Shortest representation that round-trips, '.' as decimal separator.
std::string format_double(double v);

// Columns step,t,x,y,z,h_drift,c_drift; header row; LF line endings.
std::string trajectory_csv(const integrator::Trajectory& t);
// Array of records with the CSV column names as keys.
std::string trajectory_json(const integrator::Trajectory& t);
std::string trajectory_to_string(const integrator::Trajectory& t, Format f);

// Columns h,c,label.
std::string scan_csv(const std::vector<ecmap::ScanCell>& cells);

std::string fiber_json(const fibers::FiberDescription& d, const EcPoint& target);
std::string run_json(const fibers::HeteroclinicRun& r);
// Runs (without trajectories) plus cycles.
std::string web_json(const fibers::HeteroclinicWeb& w);
std::string verdict_json(const stability::StabilityVerdict& v);

}  // namespace biham::io
