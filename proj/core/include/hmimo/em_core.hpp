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

#ifndef HMIMO_EM_CORE_HPP
#define HMIMO_EM_CORE_HPP

#include "hmimo/types.hpp"

namespace hmimo
{

inline constexpr double speed_of_light = 299792458.0;      // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m (CODATA 2018)
inline constexpr double vacuum_permeability = 1.25663706212e-6; // H/m (CODATA 2018)

// Separations below this radius (meters) are treated as coincident points.
inline constexpr double singularity_radius = 1e-12;

struct EmConstants
{
    double frequency = 0.0;  // Hz
    double wavelength = 0.0; // m
    double wavenumber = 0.0; // rad/m
    double permittivity = vacuum_permittivity;
    double permeability = vacuum_permeability;

    static EmConstants at_frequency(double frequency_hz);

    // The channel prefactor -i eps mu applied to every model.
    Complex channel_prefactor() const { return {0.0, -permittivity * permeability}; }
};

// e^{i k0 r} / (4 pi r), r = |r_m - r_n|. Throws CoincidentPoints if r < 1e-12 m.
Complex scalar_green(const Vec3 &r_m, const Vec3 &r_n, double k0);

// Explicit free-space dyadic Green's function (I + grad grad^T / k0^2) g:
//   G = e^{i k0 r} / (4 pi r) [ (1 + i/(k0 r) - 1/(k0 r)^2) I
//                              + (3/(k0 r)^2 - 3i/(k0 r) - 1) r^ r^T ]
Mat3c dyadic_green(const Vec3 &r_m, const Vec3 &r_n, double k0);

// Same as dyadic_green, taking the separation vector r_m - r_n directly.
Mat3c dyadic_green_separation(const Vec3 &separation, double k0);

// The bracketed amplitude of dyadic_green evaluated at the center distance,
// without the e^{i k0 r} phase: dyadic_green(c_m, c_n) == A * e^{i k0 |c_m - c_n|}.
Mat3c amplitude_matrix(const Vec3 &r_bar_m, const Vec3 &r_bar_n, double k0);

// First-order expansion of |r_bar_mn + delta_m - delta_n| about r_bar_mn.
double first_order_distance(const Vec3 &r_bar_mn, const Vec3 &delta_m, const Vec3 &delta_n);

} // namespace hmimo

#endif
