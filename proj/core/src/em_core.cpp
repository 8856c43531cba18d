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

#include "hmimo/em_core.hpp"

#include <cmath>

#include "hmimo/errors.hpp"

namespace hmimo
{

namespace
{

double checked_distance(const Vec3 &separation)
{
    const double r = separation.norm();
    if (!(r >= singularity_radius))
        throw CoincidentPoints("points closer than 1e-12 m (r = " + std::to_string(r) + ")");
    return r;
}

Mat3c amplitude_from_separation(const Vec3 &separation, double r, double k0)
{
    const double kr = k0 * r;
    const double inv_kr = 1.0 / kr;
    const double inv_kr2 = inv_kr * inv_kr;
    const double scale = 1.0 / (4.0 * pi * r);

    const Complex alpha(1.0 - inv_kr2, inv_kr);
    const Complex beta(3.0 * inv_kr2 - 1.0, -3.0 * inv_kr);
    const Vec3 u = separation / r;

    Mat3c a = (beta * scale) * (u * u.transpose()).cast<Complex>();
    a.diagonal().array() += alpha * scale;
    return a;
}

Complex phase(double k0, double r)
{
    const double arg = k0 * r;
    return {std::cos(arg), std::sin(arg)};
}

} // namespace

EmConstants EmConstants::at_frequency(double frequency_hz)
{
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw InvalidArgument("frequency must be positive and finite");
    EmConstants k;
    k.frequency = frequency_hz;
    k.wavelength = speed_of_light / frequency_hz;
    k.wavenumber = 2.0 * pi / k.wavelength;
    return k;
}

Complex scalar_green(const Vec3 &r_m, const Vec3 &r_n, double k0)
{
    const double r = checked_distance(r_m - r_n);
    return phase(k0, r) / (4.0 * pi * r);
}

Mat3c dyadic_green_separation(const Vec3 &separation, double k0)
{
    const double r = checked_distance(separation);
    return amplitude_from_separation(separation, r, k0) * phase(k0, r);
}

Mat3c dyadic_green(const Vec3 &r_m, const Vec3 &r_n, double k0)
{
    return dyadic_green_separation(r_m - r_n, k0);
}

Mat3c amplitude_matrix(const Vec3 &r_bar_m, const Vec3 &r_bar_n, double k0)
{
    const Vec3 separation = r_bar_m - r_bar_n;
    return amplitude_from_separation(separation, checked_distance(separation), k0);
}

double first_order_distance(const Vec3 &r_bar_mn, const Vec3 &delta_m, const Vec3 &delta_n)
{
    const double r = checked_distance(r_bar_mn);
    return r + r_bar_mn.dot(delta_m - delta_n) / r;
}

} // namespace hmimo
