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

#ifndef HMIMO_CHANNEL_HPP
#define HMIMO_CHANNEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hmimo/em_core.hpp"
#include "hmimo/geometry.hpp"
#include "hmimo/types.hpp"

namespace hmimo
{

// Tensor Gauss-Legendre settings for the exact channel. The rule starts at
// nodes_per_axis on each of the four axes and doubles up to refinement_limit
// times until two successive estimates differ by less than rel_tol
// (relative Frobenius norm).
struct QuadratureSpec
{
    int nodes_per_axis = 8;
    int refinement_limit = 3;
    double rel_tol = 1e-9;
};

void validate(const QuadratureSpec &q);

struct QuadratureLevel
{
    int nodes = 0;
    double rel_change = 0.0; // vs the previous level; NaN for the first level
};

// 3x3 channel between receive element m and transmit element n; entry (u, v)
// maps the v-component of the transmit current to the u-component of the
// received field.
struct PairChannel
{
    Mat3c matrix = Mat3c::Zero();
    ChannelModel model = ChannelModel::CA2;
    std::size_t rx_index = 0;
    std::size_t tx_index = 0;

    // Exact model only: nodes per axis of the accepted estimate and the
    // refinement history.
    int quadrature_nodes = 0;
    std::vector<QuadratureLevel> trace;
};

// -i eps mu times the 4-D integral of G(r_m, r_n) over both element areas,
// evaluated with a fixed n-point rule on every axis. No refinement.
Mat3c integrate_pair(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k, int nodes_per_axis);

// Refined quadrature of the exact channel. Throws QuadratureNotConverged
// (with the last two estimates) or CoincidentPoints.
PairChannel exact_pair_channel(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k,
                               const QuadratureSpec &q);

struct SincArguments
{
    double h = 0.0;
    double v = 0.0;
};

// sin(x)/x with sinc(0) = 1.
double sinc(double x);

// Arguments in the cotangent form obtained through the dz substitution:
//   h = (k0 len_h / 2) (x_mn + z_mn c_x) / r_mn
//   v = (k0 len_v / 2) (y_mn + z_mn c_y) / r_mn
// Throws AzimuthDegenerate when the substitution is singular. Agrees with
// sinc_arguments_frame only for surfaces parallel to the xy-plane with
// axis-aligned edges; see the README.
SincArguments sinc_arguments_angle_form(const Angles &angles, double len_h, double len_v, const Vec3 &r_bar_mn,
                                        double k0);

// Coordinate-free arguments (k0 len/2)(u . dir) with u = r_bar_mn / |r_bar_mn|,
// valid for every orientation.
SincArguments sinc_arguments_frame(const ElementFrame &frame, const Vec3 &r_bar_mn, double k0);

// -i eps mu s_T s_R A_mn e^{i k0 r_mn} sinc(tx.h) sinc(tx.v) sinc(rx.h) sinc(rx.v)
PairChannel ca1_from_arguments(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k,
                               const SincArguments &tx_args, const SincArguments &rx_args);

PairChannel ca1_pair_channel(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k);
PairChannel ca2_pair_channel(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k);

// Dispatch on model; q must be present for Exact.
PairChannel pair_channel(ChannelModel model, const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k,
                         const std::optional<QuadratureSpec> &q = std::nullopt);

} // namespace hmimo

#endif
