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

#ifndef HMIMO_GEOMETRY_HPP
#define HMIMO_GEOMETRY_HPP

#include <vector>

#include "hmimo/types.hpp"

namespace hmimo
{

// Orientation of one surface. Polar angles are measured from the z-axis,
// azimuths in the xy-plane from the x-axis; all in radians.
struct Angles
{
    double polar_h = pi / 2;
    double polar_v = pi / 2;
    double azimuth_h = 0.0;
    double azimuth_v = pi / 2;

    static Angles from_degrees(double polar_h_deg, double polar_v_deg, double azimuth_h_deg, double azimuth_v_deg);
};

// Throws InvalidArgument for out-of-range angles and DegenerateOrientation
// when the implied direction pair is not orthogonal.
void validate(const Angles &angles);

struct DirectionPair
{
    Vec3 h;
    Vec3 v;
};

// dir = (sin(polar) cos(azimuth), sin(polar) sin(azimuth), cos(polar)) for
// each of the horizontal and vertical axes. Throws DegenerateOrientation if
// |dir_h . dir_v| >= 1e-9.
DirectionPair direction_vectors(const Angles &angles);

// sin/cos that return exact 0 and +-1 when the argument is a multiple of
// pi/2 to within a few ulps, so that 90-degree placements produce exact axes.
double snapped_sin(double radians);
double snapped_cos(double radians);

struct SurfaceSpec
{
    Vec3 center = Vec3::Zero();
    Angles angles;
    int count_h = 1;
    int count_v = 1;
    double pitch_h = 0.0; // element size along dir_h, meters
    double pitch_v = 0.0;

    int element_count() const { return count_h * count_v; }
    double aperture_h() const { return pitch_h * count_h; }
    double aperture_v() const { return pitch_v * count_v; }
    double element_area() const { return pitch_h * pitch_v; }
    // Unit vector dir_h x dir_v.
    Vec3 normal() const;
};

void validate(const SurfaceSpec &spec);

struct ElementFrame
{
    Vec3 center = Vec3::Zero();
    Vec3 dir_h = Vec3::UnitX();
    Vec3 dir_v = Vec3::UnitY();
    double len_h = 0.0;
    double len_v = 0.0;

    double area() const { return len_h * len_v; }
    // In-plane displacement a*dir_h + b*dir_v.
    Vec3 offset(double a, double b) const { return a * dir_h + b * dir_v; }
};

void validate(const ElementFrame &frame);

// Centered rectangular lattice. Element (i, j) with i along dir_h and j along
// dir_v sits at center + (i - (count_h-1)/2) pitch_h dir_h + (j - (count_v-1)/2)
// pitch_v dir_v and has canonical index n = i * count_v + j.
std::vector<ElementFrame> element_frames(const SurfaceSpec &spec);

inline std::size_t element_index(int i, int j, int count_v)
{
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(count_v) + static_cast<std::size_t>(j);
}

// Coefficients (c_x, c_y) such that every in-plane displacement satisfies
// dz = c_x dx + c_y dy. Requires |sin(azimuth_h - azimuth_v)| > 1e-9, else
// throws AzimuthDegenerate.
struct DeltaZCoefficients
{
    double c_x;
    double c_y;
};

DeltaZCoefficients delta_z_coefficients(const Angles &angles);

} // namespace hmimo

#endif
