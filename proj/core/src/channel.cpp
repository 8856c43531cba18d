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

#include "hmimo/channel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hmimo/errors.hpp"
#include "hmimo/quadrature.hpp"

namespace hmimo
{

namespace
{

struct SurfaceNodes
{
    std::vector<Vec3> offsets;
    std::vector<double> weights;
};

// Tensor rule over [-len_h/2, len_h/2] x [-len_v/2, len_v/2] in the element plane.
SurfaceNodes surface_nodes(const ElementFrame &f, int n)
{
    const auto &rule = gauss_legendre(n);
    SurfaceNodes out;
    out.offsets.reserve(static_cast<std::size_t>(n * n));
    out.weights.reserve(static_cast<std::size_t>(n * n));
    const double half_h = 0.5 * f.len_h;
    const double half_v = 0.5 * f.len_v;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
        {
            const auto ip = static_cast<std::size_t>(p), iq = static_cast<std::size_t>(q);
            out.offsets.push_back(f.offset(half_h * rule.nodes[ip], half_v * rule.nodes[iq]));
            out.weights.push_back(half_h * rule.weights[ip] * half_v * rule.weights[iq]);
        }
    return out;
}

double relative_change(const Mat3c &previous, const Mat3c &current)
{
    const double ref = current.norm();
    if (ref == 0.0)
        return previous.norm() == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return (current - previous).norm() / ref;
}

} // namespace

void validate(const QuadratureSpec &q)
{
    if (q.nodes_per_axis < 2)
        throw InvalidArgument("quadrature nodes_per_axis must be >= 2");
    if (q.refinement_limit < 1)
        throw InvalidArgument("quadrature refinement_limit must be >= 1");
    if (!(q.rel_tol > 0.0 && q.rel_tol < 1.0))
        throw InvalidArgument("quadrature rel_tol must lie in (0, 1)");
}

Mat3c integrate_pair(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k, int nodes_per_axis)
{
    const SurfaceNodes rx_nodes = surface_nodes(rx, nodes_per_axis);
    const SurfaceNodes tx_nodes = surface_nodes(tx, nodes_per_axis);
    const Vec3 r_bar = rx.center - tx.center;
    const double k0 = k.wavenumber;

    // G = f (alpha I + beta u u^T) with f = e^{i k r} / (4 pi r); accumulate the
    // identity part and the six distinct entries of the symmetric dyad.
    Complex diag(0.0, 0.0);
    Complex xx(0.0, 0.0), yy(0.0, 0.0), zz(0.0, 0.0), xy(0.0, 0.0), xz(0.0, 0.0), yz(0.0, 0.0);

    for (std::size_t m = 0; m < rx_nodes.offsets.size(); ++m)
    {
        const Vec3 base = r_bar + rx_nodes.offsets[m];
        const double w_m = rx_nodes.weights[m];
        for (std::size_t n = 0; n < tx_nodes.offsets.size(); ++n)
        {
            const double dx = base.x() - tx_nodes.offsets[n].x();
            const double dy = base.y() - tx_nodes.offsets[n].y();
            const double dz = base.z() - tx_nodes.offsets[n].z();
            const double r2 = dx * dx + dy * dy + dz * dz;
            const double r = std::sqrt(r2);
            if (!(r >= singularity_radius))
                throw CoincidentPoints("quadrature node pair closer than 1e-12 m");

            const double inv_r = 1.0 / r;
            const double inv_kr = inv_r / k0;
            const double inv_kr2 = inv_kr * inv_kr;
            const double amp = w_m * tx_nodes.weights[n] * inv_r / (4.0 * pi);
            const Complex f = amp * Complex(std::cos(k0 * r), std::sin(k0 * r));

            diag += f * Complex(1.0 - inv_kr2, inv_kr);
            const Complex fb = f * Complex(3.0 * inv_kr2 - 1.0, -3.0 * inv_kr) * (inv_r * inv_r);
            xx += fb * (dx * dx);
            yy += fb * (dy * dy);
            zz += fb * (dz * dz);
            xy += fb * (dx * dy);
            xz += fb * (dx * dz);
            yz += fb * (dy * dz);
        }
    }

    Mat3c g;
    g << diag + xx, xy, xz, //
        xy, diag + yy, yz,  //
        xz, yz, diag + zz;
    return k.channel_prefactor() * g;
}

PairChannel exact_pair_channel(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k,
                               const QuadratureSpec &q)
{
    validate(q);
    PairChannel out;
    out.model = ChannelModel::Exact;

    int nodes = q.nodes_per_axis;
    Mat3c previous = integrate_pair(tx, rx, k, nodes);
    out.trace.push_back({nodes, std::numeric_limits<double>::quiet_NaN()});

    Mat3c current = previous;
    for (int level = 0; level < q.refinement_limit; ++level)
    {
        nodes *= 2;
        current = integrate_pair(tx, rx, k, nodes);
        const double change = relative_change(previous, current);
        out.trace.push_back({nodes, change});
        if (change < q.rel_tol)
        {
            out.matrix = current;
            out.quadrature_nodes = nodes;
            return out;
        }
        if (level + 1 < q.refinement_limit)
            previous = current;
    }
    throw QuadratureNotConverged("exact channel did not converge to rel_tol " + std::to_string(q.rel_tol) +
                                     " after " + std::to_string(q.refinement_limit) + " refinements (last change " +
                                     std::to_string(out.trace.back().rel_change) + ")",
                                 previous, current, nodes);
}

double sinc(double x)
{
    if (std::abs(x) < 1e-6)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

SincArguments sinc_arguments_angle_form(const Angles &angles, double len_h, double len_v, const Vec3 &r_bar_mn,
                                        double k0)
{
    const DeltaZCoefficients c = delta_z_coefficients(angles);
    const double r = r_bar_mn.norm();
    if (!(r >= singularity_radius))
        throw CoincidentPoints("element centers closer than 1e-12 m");
    const double half_h = 0.5 * k0 * len_h;
    const double half_v = 0.5 * k0 * len_v;
    return {half_h * ((r_bar_mn.x() + r_bar_mn.z() * c.c_x) / r), half_v * ((r_bar_mn.y() + r_bar_mn.z() * c.c_y) / r)};
}

SincArguments sinc_arguments_frame(const ElementFrame &frame, const Vec3 &r_bar_mn, double k0)
{
    const double r = r_bar_mn.norm();
    if (!(r >= singularity_radius))
        throw CoincidentPoints("element centers closer than 1e-12 m");
    const double half_h = 0.5 * k0 * frame.len_h;
    const double half_v = 0.5 * k0 * frame.len_v;
    return {half_h * (r_bar_mn.dot(frame.dir_h) / r), half_v * (r_bar_mn.dot(frame.dir_v) / r)};
}

PairChannel ca1_from_arguments(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k,
                               const SincArguments &tx_args, const SincArguments &rx_args)
{
    const double product = sinc(tx_args.h) * sinc(tx_args.v) * sinc(rx_args.h) * sinc(rx_args.v);
    PairChannel out;
    out.model = ChannelModel::CA1;
    const Complex scale = k.channel_prefactor() * (tx.area() * rx.area());
    out.matrix = (scale * product) * dyadic_green(rx.center, tx.center, k.wavenumber);
    return out;
}

PairChannel ca1_pair_channel(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k)
{
    const Vec3 r_bar = rx.center - tx.center;
    return ca1_from_arguments(tx, rx, k, sinc_arguments_frame(tx, r_bar, k.wavenumber),
                              sinc_arguments_frame(rx, r_bar, k.wavenumber));
}

PairChannel ca2_pair_channel(const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k)
{
    PairChannel out;
    out.model = ChannelModel::CA2;
    const Complex scale = k.channel_prefactor() * (tx.area() * rx.area());
    out.matrix = scale * dyadic_green(rx.center, tx.center, k.wavenumber);
    return out;
}

PairChannel pair_channel(ChannelModel model, const ElementFrame &tx, const ElementFrame &rx, const EmConstants &k,
                         const std::optional<QuadratureSpec> &q)
{
    switch (model)
    {
    case ChannelModel::Exact:
        if (!q)
            throw InvalidArgument("the exact model needs a QuadratureSpec");
        return exact_pair_channel(tx, rx, k, *q);
    case ChannelModel::CA1:
        return ca1_pair_channel(tx, rx, k);
    case ChannelModel::CA2:
        return ca2_pair_channel(tx, rx, k);
    }
    throw InvalidArgument("unknown channel model");
}

} // namespace hmimo
