// SPDX-License-Identifier: Apache-2.0
//
// hmimo - electromagnetic-domain LOS channel models for holographic MIMO surfaces
// Copyright (C) 2026 The hmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HMIMO_TOOLS_CONFIG_HPP
#define HMIMO_TOOLS_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include <hmimo/analysis.hpp>

namespace hmimo::tools
{

// Raised for anything wrong with the user's configuration (exit code 2).
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct AnglesDeg
{
    double polar_h = 90.0;
    double polar_v = 90.0;
    double azimuth_h = 0.0;
    double azimuth_v = 90.0;

    Angles radians() const { return Angles::from_degrees(polar_h, polar_v, azimuth_h, azimuth_v); }
};

// Angles are kept in degrees so a manifest echo replays bit-identically.
struct SurfaceConfig
{
    Vec3 center = Vec3::Zero();
    AnglesDeg angles;
    int count_h = 1;
    int count_v = 1;
    double pitch_h = 0.0; // meters
    double pitch_v = 0.0;

    SurfaceSpec spec() const;
};

struct PairConfig
{
    std::size_t m = 0; // receive element
    std::size_t n = 0; // transmit element
    bool angle_form_sinc = false;
};

struct SweepConfig
{
    SweepKind kind = SweepKind::Spacing;
    std::vector<double> values; // meters; spacing or distance sweeps
    std::vector<std::pair<int, int>> tx_counts;
    std::vector<double> distances; // meters; elements sweep
    std::vector<double> tilts_deg;
};

struct EigenConfig
{
    double threshold_ratio = default_threshold_ratio;
    std::vector<EigenCase> cases;
};

struct ExportConfig
{
    ChannelModel model = ChannelModel::CA1;
    Ordering ordering = Ordering::ElementMajor;
    bool binary = true;
    bool json = false;
};

struct ExperimentConfig
{
    double frequency = 30e9;
    SurfaceConfig tx;
    SurfaceConfig rx;
    std::vector<ChannelModel> models{ChannelModel::Exact, ChannelModel::CA1, ChannelModel::CA2};
    QuadratureSpec quadrature;
    unsigned jobs = 0;
    PairConfig pair;
    std::optional<SweepConfig> sweep;
    std::optional<EigenConfig> eigen;
    ExportConfig export_options;

    ExperimentSetup setup() const;
};

// The reference geometry: 30 GHz, 9x9 transmit, 3x3 receive, pitch 0.05 lambda,
// receiver one wavelength along the transmit normal.
ExperimentConfig default_config();

// Lengths: a number (meters) or a string "<x>lam" (multiples of the wavelength).
double parse_length(const nlohmann::json &value, double wavelength, const std::string &where);

// Accepts a plain config object or a manifest (uses its "config" member).
ExperimentConfig parse_config(const nlohmann::json &j);
ExperimentConfig load_config(const std::string &path);

// Canonical form: all lengths in meters, angles in degrees.
nlohmann::json to_json(const ExperimentConfig &c);

void validate(const ExperimentConfig &c);

} // namespace hmimo::tools

#endif
