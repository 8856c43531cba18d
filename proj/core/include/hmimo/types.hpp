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

#ifndef HMIMO_TYPES_HPP
#define HMIMO_TYPES_HPP

#include <complex>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

namespace hmimo
{

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3c = Eigen::Matrix3cd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Which per-pair channel model produced a matrix.
enum class ChannelModel
{
    Exact, // 4-D surface quadrature of the dyadic Green's function
    CA1,   // closed form with the four sinc factors
    CA2    // closed form with the sinc product replaced by 1
};

/// Block layout of a system-level matrix or vector.
///   ElementMajor:    [x_0, y_0, z_0, x_1, y_1, z_1, ...]
///   CoordinateMajor: [x_0, x_1, ..., y_0, y_1, ..., z_0, z_1, ...]
enum class Ordering
{
    ElementMajor,
    CoordinateMajor
};

std::string_view to_string(ChannelModel model);
std::string_view to_string(Ordering ordering);

// Accepts the names produced by to_string (case-sensitive) plus the aliases
// "CA-I"/"CA-II" and "zeta"/"varsigma".
std::optional<ChannelModel> parse_model(std::string_view name);
std::optional<Ordering> parse_ordering(std::string_view name);

inline constexpr double pi = 3.14159265358979323846;

} // namespace hmimo

#endif
