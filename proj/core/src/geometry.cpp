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

#include "hmimo/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hmimo/errors.hpp"

namespace hmimo
{

namespace
{

constexpr double orthogonality_tol = 1e-9;
constexpr double azimuth_tol = 1e-9;

// Quarter-turn index of x if x is (numerically) a multiple of pi/2, else -1.
int quarter_turn(double radians)
{
    const double quarters = std::nearbyint(radians / (pi / 2));
    const double residual = radians - quarters * (pi / 2);
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(radians));
    if (std::abs(residual) > slack)
        return -1;
    const long q = static_cast<long>(quarters) % 4;
    return static_cast<int>(q < 0 ? q + 4 : q);
}

double cot(double radians)
{
    return snapped_cos(radians) / snapped_sin(radians);
}

} // namespace

double snapped_sin(double radians)
{
    switch (quarter_turn(radians))
    {
    case 0:
    case 2:
        return 0.0;
    case 1:
        return 1.0;
    case 3:
        return -1.0;
    default:
        return std::sin(radians);
    }
}

double snapped_cos(double radians)
{
    switch (quarter_turn(radians))
    {
    case 0:
        return 1.0;
    case 2:
        return -1.0;
    case 1:
    case 3:
        return 0.0;
    default:
        return std::cos(radians);
    }
}

Angles Angles::from_degrees(double polar_h_deg, double polar_v_deg, double azimuth_h_deg, double azimuth_v_deg)
{
    constexpr double to_rad = pi / 180.0;
    return {polar_h_deg * to_rad, polar_v_deg * to_rad, azimuth_h_deg * to_rad, azimuth_v_deg * to_rad};
}

void validate(const Angles &a)
{
    for (double x : {a.polar_h, a.polar_v, a.azimuth_h, a.azimuth_v})
        if (!std::isfinite(x))
            throw InvalidArgument("orientation angles must be finite");
    if (!(a.polar_h > 0.0 && a.polar_h < pi) || !(a.polar_v > 0.0 && a.polar_v < pi))
        throw InvalidArgument("polar angles must lie in (0, pi)");
    if (!(a.azimuth_h >= 0.0 && a.azimuth_h < 2 * pi) || !(a.azimuth_v >= 0.0 && a.azimuth_v < 2 * pi))
        throw InvalidArgument("azimuth angles must lie in [0, 2 pi)");
    direction_vectors(a);
}

DirectionPair direction_vectors(const Angles &a)
{
    const auto axis = [](double polar, double azimuth) {
        const double s = snapped_sin(polar);
        return Vec3(s * snapped_cos(azimuth), s * snapped_sin(azimuth), snapped_cos(polar));
    };
    DirectionPair dirs{axis(a.polar_h, a.azimuth_h), axis(a.polar_v, a.azimuth_v)};
    const double overlap = dirs.h.dot(dirs.v);
    if (!(std::abs(overlap) < orthogonality_tol))
        throw DegenerateOrientation("horizontal and vertical directions are not orthogonal (|dir_h . dir_v| = " +
                                    std::to_string(std::abs(overlap)) + ")");
    return dirs;
}

Vec3 SurfaceSpec::normal() const
{
    const auto dirs = direction_vectors(angles);
    return dirs.h.cross(dirs.v).normalized();
}

void validate(const SurfaceSpec &spec)
{
    if (!spec.center.allFinite())
        throw InvalidArgument("surface center must be finite");
    if (spec.count_h < 1 || spec.count_v < 1)
        throw InvalidArgument("element counts must be >= 1");
    if (!(spec.pitch_h > 0.0) || !(spec.pitch_v > 0.0) || !std::isfinite(spec.pitch_h) || !std::isfinite(spec.pitch_v))
        throw InvalidArgument("element pitch must be positive and finite");
    validate(spec.angles);
}

void validate(const ElementFrame &f)
{
    if (!f.center.allFinite())
        throw InvalidArgument("element center must be finite");
    if (std::abs(f.dir_h.norm() - 1.0) > 1e-12 || std::abs(f.dir_v.norm() - 1.0) > 1e-12)
        throw InvalidArgument("element directions must be unit vectors");
    if (!(std::abs(f.dir_h.dot(f.dir_v)) < orthogonality_tol))
        throw DegenerateOrientation("element directions are not orthogonal");
    if (!(f.len_h > 0.0) || !(f.len_v > 0.0))
        throw InvalidArgument("element lengths must be positive");
}

std::vector<ElementFrame> element_frames(const SurfaceSpec &spec)
{
    validate(spec);
    const auto dirs = direction_vectors(spec.angles);
    const double mid_h = 0.5 * (spec.count_h - 1);
    const double mid_v = 0.5 * (spec.count_v - 1);

    std::vector<ElementFrame> frames(static_cast<std::size_t>(spec.element_count()));
    for (int i = 0; i < spec.count_h; ++i)
        for (int j = 0; j < spec.count_v; ++j)
        {
            auto &f = frames[element_index(i, j, spec.count_v)];
            f.center = spec.center + ((i - mid_h) * spec.pitch_h) * dirs.h + ((j - mid_v) * spec.pitch_v) * dirs.v;
            f.dir_h = dirs.h;
            f.dir_v = dirs.v;
            f.len_h = spec.pitch_h;
            f.len_v = spec.pitch_v;
        }
    return frames;
}

DeltaZCoefficients delta_z_coefficients(const Angles &a)
{
    const double s = snapped_sin(a.azimuth_h - a.azimuth_v);
    if (!(std::abs(s) > azimuth_tol))
        throw AzimuthDegenerate("|sin(azimuth_h - azimuth_v)| <= 1e-9; the dz substitution is singular");

    const double cot_h = cot(a.polar_h);
    const double cot_v = cot(a.polar_v);
    const double sin_ph = snapped_sin(a.azimuth_h), cos_ph = snapped_cos(a.azimuth_h);
    const double sin_pv = snapped_sin(a.azimuth_v), cos_pv = snapped_cos(a.azimuth_v);

    // Solving dx, dy for the in-plane coordinates and substituting into dz.
    return {(sin_ph * cot_v - sin_pv * cot_h) / s, (cos_pv * cot_h - cos_ph * cot_v) / s};
}

} // namespace hmimo
