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

#ifndef HMIMO_ANALYSIS_HPP
#define HMIMO_ANALYSIS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hmimo/assembly.hpp"

namespace hmimo
{

// ||h_hat - h||_F^2 / ||h||_F^2. Throws ZeroReference if ||h||_F = 0.
double normalized_mse(const SystemChannel &h_hat, const SystemChannel &h);

// Singular values (descending) of the system matrix and the number of them
// at or above threshold_ratio * sigma_max. The matrix is not square, so
// singular values stand in for "eigenvalues of the channel".
struct SpectrumResult
{
    ChannelModel model = ChannelModel::Exact;
    std::vector<double> singular_values;
    int eigenmode_count = 0;
    double threshold_ratio = 0.01;
};

inline constexpr double default_threshold_ratio = 0.01;

SpectrumResult singular_spectrum(const SystemChannel &ch, double threshold_ratio = default_threshold_ratio);
int count_eigenmodes(std::span<const double> descending_singular_values, double threshold_ratio);

// Everything needed to rebuild one experiment point.
struct ExperimentSetup
{
    EmConstants em;
    SurfaceSpec tx;
    SurfaceSpec rx;
    QuadratureSpec quadrature;
    unsigned jobs = 0;
};

// 30 GHz, TE 9x9 at the origin, RE 3x3 facing it at distance lambda, element
// size 0.05 lambda, both surfaces parallel to the xy-plane.
ExperimentSetup reference_setup();

// Moves the receive surface center to tx.center + distance * tx.normal().
void place_receiver(ExperimentSetup &setup, double distance);
double receiver_distance(const ExperimentSetup &setup);

enum class SweepKind
{
    Spacing,
    Distance,
    Elements
};

std::string_view to_string(SweepKind kind);

struct SweepPoint
{
    std::string sweep_var;
    double value = 0.0; // meters, or total transmit element count
    double theta_v_deg = 90.0;
    double mse_ca1 = 0.0;
    double mse_ca2 = 0.0;
    int oracle_nodes = 0;
    bool converged = true;
    std::string error; // empty unless the point failed
};

struct SweepResult
{
    SweepKind kind = SweepKind::Spacing;
    ExperimentSetup base;
    std::vector<SweepPoint> points;
};

// Points are ordered tilt-major, then by sweep value, independent of the
// worker schedule. A failing point is recorded with converged = false and
// NaN MSEs rather than aborting the sweep.
SweepResult sweep_spacing(const ExperimentSetup &base, std::span<const double> spacings,
                          std::span<const double> tilts_deg);
SweepResult sweep_distance(const ExperimentSetup &base, std::span<const double> distances,
                           std::span<const double> tilts_deg);
SweepResult sweep_elements(const ExperimentSetup &base, std::span<const std::pair<int, int>> tx_counts,
                           std::span<const double> distances, std::span<const double> tilts_deg);

// One point: Exact (oracle), CA1 and CA2 on the setup's geometry.
SweepPoint evaluate_point(const ExperimentSetup &setup);

struct EigenCase
{
    std::string id;
    int tx_h = 9, tx_v = 9;
    int rx_h = 3, rx_v = 3;
    double distance = 0.0;
};

struct EigenStudyEntry
{
    EigenCase eigen_case;
    std::vector<SpectrumResult> spectra; // Exact, CA1, CA2
};

// Spectra of all three models per case; spacing and tilt come from base.
std::vector<EigenStudyEntry> eigen_study(const ExperimentSetup &base, std::span<const EigenCase> cases,
                                         double threshold_ratio = default_threshold_ratio);

// Default grids, in units of the wavelength where applicable.
std::vector<double> default_spacings(double wavelength);
std::vector<double> default_distances(double wavelength);
std::vector<double> default_tilts_deg();
std::vector<std::pair<int, int>> default_tx_counts();
std::vector<EigenCase> default_eigen_cases(double wavelength);

} // namespace hmimo

#endif
