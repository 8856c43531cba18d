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

#include "hmimo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "hmimo/errors.hpp"
#include "hmimo/format.hpp"
#include "hmimo/parallel.hpp"

namespace hmimo
{

double normalized_mse(const SystemChannel &h_hat, const SystemChannel &h)
{
    if (h_hat.ordering != h.ordering)
        throw OrderingMismatch("normalized_mse inputs use different orderings");
    if (h_hat.matrix.rows() != h.matrix.rows() || h_hat.matrix.cols() != h.matrix.cols())
        throw DimensionMismatch("normalized_mse inputs have different dimensions");
    const double ref = h.matrix.squaredNorm();
    if (!(ref > 0.0))
        throw ZeroReference("reference channel has zero Frobenius norm");
    return (h_hat.matrix - h.matrix).squaredNorm() / ref;
}

int count_eigenmodes(std::span<const double> sv, double threshold_ratio)
{
    if (sv.empty() || !(sv.front() > 0.0))
        return 0;
    const double threshold = threshold_ratio * sv.front();
    return static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s >= threshold; }));
}

SpectrumResult singular_spectrum(const SystemChannel &ch, double threshold_ratio)
{
    if (!(threshold_ratio > 0.0 && threshold_ratio <= 1.0))
        throw InvalidArgument("threshold_ratio must lie in (0, 1]");

    SpectrumResult out;
    out.model = ch.model;
    out.threshold_ratio = threshold_ratio;

    // Channel entries are O(1e-30); rescale before the decomposition.
    const double scale = ch.matrix.cwiseAbs().maxCoeff();
    const auto count = static_cast<std::size_t>(std::min(ch.matrix.rows(), ch.matrix.cols()));
    if (!(scale > 0.0))
    {
        out.singular_values.assign(count, 0.0);
        return out;
    }
    const MatrixXc normalized = ch.matrix / scale;
    Eigen::BDCSVD<MatrixXc> svd(normalized);
    const Eigen::VectorXd &s = svd.singularValues();
    out.singular_values.resize(static_cast<std::size_t>(s.size()));
    for (Eigen::Index i = 0; i < s.size(); ++i)
        out.singular_values[static_cast<std::size_t>(i)] = s(i) * scale;
    std::sort(out.singular_values.begin(), out.singular_values.end(), std::greater<>());
    out.eigenmode_count = count_eigenmodes(out.singular_values, threshold_ratio);
    return out;
}

ExperimentSetup reference_setup()
{
    ExperimentSetup s;
    s.em = EmConstants::at_frequency(30e9);
    const double lambda = s.em.wavelength;
    s.tx.count_h = s.tx.count_v = 9;
    s.rx.count_h = s.rx.count_v = 3;
    s.tx.pitch_h = s.tx.pitch_v = 0.05 * lambda;
    s.rx.pitch_h = s.rx.pitch_v = 0.05 * lambda;
    place_receiver(s, lambda);
    return s;
}

void place_receiver(ExperimentSetup &setup, double distance)
{
    setup.rx.center = setup.tx.center + distance * setup.tx.normal();
}

double receiver_distance(const ExperimentSetup &setup)
{
    return (setup.rx.center - setup.tx.center).norm();
}

std::string_view to_string(SweepKind kind)
{
    switch (kind)
    {
    case SweepKind::Spacing:
        return "spacing";
    case SweepKind::Distance:
        return "distance";
    case SweepKind::Elements:
        return "elements";
    }
    return "unknown";
}

SweepPoint evaluate_point(const ExperimentSetup &setup)
{
    SweepPoint p;
    p.theta_v_deg = setup.rx.angles.polar_v * 180.0 / pi;
    try
    {
        const auto tx = element_frames(setup.tx);
        const auto rx = element_frames(setup.rx);
        const SystemChannel exact = assemble(tx, rx, setup.em, ChannelModel::Exact, setup.quadrature, setup.jobs);
        const SystemChannel ca1 = assemble(tx, rx, setup.em, ChannelModel::CA1, std::nullopt, setup.jobs);
        const SystemChannel ca2 = assemble(tx, rx, setup.em, ChannelModel::CA2, std::nullopt, setup.jobs);
        p.mse_ca1 = normalized_mse(ca1, exact);
        p.mse_ca2 = normalized_mse(ca2, exact);
        p.oracle_nodes = exact.oracle_nodes;
        p.converged = true;
    }
    catch (const QuadratureNotConverged &e)
    {
        p.mse_ca1 = p.mse_ca2 = std::numeric_limits<double>::quiet_NaN();
        p.oracle_nodes = e.last_nodes();
        p.converged = false;
        p.error = std::string(e.kind()) + ": " + e.what();
    }
    catch (const Error &e)
    {
        p.mse_ca1 = p.mse_ca2 = std::numeric_limits<double>::quiet_NaN();
        p.converged = false;
        p.error = std::string(e.kind()) + ": " + e.what();
    }
    return p;
}

namespace
{

struct PendingPoint
{
    ExperimentSetup setup;
    std::string sweep_var;
    double value;
    double tilt_deg;
};

void run_points(std::vector<PendingPoint> &pending, SweepResult &result)
{
    const unsigned jobs = resolve_jobs(result.base.jobs);
    result.points.resize(pending.size());
    // Parallelism goes to the outer loop; each point runs its pairs serially.
    for (auto &p : pending)
        p.setup.jobs = pending.size() > 1 ? 1 : jobs;
    parallel_for(pending.size(), jobs, [&](std::size_t i) {
        SweepPoint point = evaluate_point(pending[i].setup);
        point.sweep_var = pending[i].sweep_var;
        point.value = pending[i].value;
        point.theta_v_deg = pending[i].tilt_deg;
        result.points[i] = std::move(point);
    });
}

void check_positive_ascending(std::span<const double> values, const char *what)
{
    if (values.empty())
        throw InvalidArgument(std::string(what) + " list is empty");
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (!(values[i] > 0.0) || !std::isfinite(values[i]))
            throw InvalidArgument(std::string(what) + " values must be positive");
        if (i > 0 && !(values[i] > values[i - 1]))
            throw InvalidArgument(std::string(what) + " values must be strictly ascending");
    }
}

ExperimentSetup with_tilt(ExperimentSetup s, double tilt_deg)
{
    s.rx.angles.polar_v = tilt_deg * (pi / 180.0);
    validate(s.rx.angles);
    return s;
}

} // namespace

SweepResult sweep_spacing(const ExperimentSetup &base, std::span<const double> spacings,
                          std::span<const double> tilts_deg)
{
    check_positive_ascending(spacings, "spacing");
    SweepResult result{SweepKind::Spacing, base, {}};
    std::vector<PendingPoint> pending;
    for (double tilt : tilts_deg)
        for (double s : spacings)
        {
            ExperimentSetup setup = with_tilt(base, tilt);
            setup.tx.pitch_h = setup.tx.pitch_v = s;
            setup.rx.pitch_h = setup.rx.pitch_v = s;
            pending.push_back({std::move(setup), "spacing", s, tilt});
        }
    run_points(pending, result);
    return result;
}

SweepResult sweep_distance(const ExperimentSetup &base, std::span<const double> distances,
                           std::span<const double> tilts_deg)
{
    check_positive_ascending(distances, "distance");
    SweepResult result{SweepKind::Distance, base, {}};
    std::vector<PendingPoint> pending;
    for (double tilt : tilts_deg)
        for (double d : distances)
        {
            ExperimentSetup setup = with_tilt(base, tilt);
            place_receiver(setup, d);
            pending.push_back({std::move(setup), "distance", d, tilt});
        }
    run_points(pending, result);
    return result;
}

SweepResult sweep_elements(const ExperimentSetup &base, std::span<const std::pair<int, int>> tx_counts,
                           std::span<const double> distances, std::span<const double> tilts_deg)
{
    if (tx_counts.empty())
        throw InvalidArgument("transmit element count list is empty");
    check_positive_ascending(distances, "distance");
    SweepResult result{SweepKind::Elements, base, {}};
    std::vector<PendingPoint> pending;
    for (double d : distances)
        for (double tilt : tilts_deg)
            for (const auto &[h, v] : tx_counts)
            {
                if (h < 1 || v < 1)
                    throw InvalidArgument("element counts must be >= 1");
                ExperimentSetup setup = with_tilt(base, tilt);
                setup.tx.count_h = h;
                setup.tx.count_v = v;
                place_receiver(setup, d);
                pending.push_back({std::move(setup), "tx_elements@d=" + format_double(d) + "m",
                                   static_cast<double>(h * v), tilt});
            }
    run_points(pending, result);
    return result;
}

std::vector<EigenStudyEntry> eigen_study(const ExperimentSetup &base, std::span<const EigenCase> cases,
                                         double threshold_ratio)
{
    std::vector<EigenStudyEntry> out;
    out.reserve(cases.size());
    for (const auto &c : cases)
    {
        ExperimentSetup s = base;
        s.tx.count_h = c.tx_h;
        s.tx.count_v = c.tx_v;
        s.rx.count_h = c.rx_h;
        s.rx.count_v = c.rx_v;
        place_receiver(s, c.distance);
        const auto tx = element_frames(s.tx);
        const auto rx = element_frames(s.rx);

        EigenStudyEntry entry{c, {}};
        for (ChannelModel model : {ChannelModel::Exact, ChannelModel::CA1, ChannelModel::CA2})
        {
            const std::optional<QuadratureSpec> q =
                model == ChannelModel::Exact ? std::optional<QuadratureSpec>(s.quadrature) : std::nullopt;
            try
            {
                entry.spectra.push_back(singular_spectrum(assemble(tx, rx, s.em, model, q, s.jobs), threshold_ratio));
            }
            catch (Error &e)
            {
                e.prepend_context("eigen case " + c.id + ", model " + std::string(to_string(model)));
                throw;
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<double> default_spacings(double wavelength)
{
    std::vector<double> out;
    for (double f : {0.01, 0.02, 0.05, 0.1, 0.2, 0.5})
        out.push_back(f * wavelength);
    return out;
}

std::vector<double> default_distances(double wavelength)
{
    std::vector<double> out;
    for (double f : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 10.0, 12.0, 15.0, 20.0})
        out.push_back(f * wavelength);
    return out;
}

std::vector<double> default_tilts_deg()
{
    return {60.0, 75.0, 90.0};
}

std::vector<std::pair<int, int>> default_tx_counts()
{
    std::vector<std::pair<int, int>> out;
    for (int n = 9; n <= 41; n += 4)
        out.emplace_back(n, n);
    return out;
}

std::vector<EigenCase> default_eigen_cases(double wavelength)
{
    std::vector<EigenCase> out;
    const std::pair<double, const char *> distances[] = {{0.1, "0.1lam"}, {0.5, "0.5lam"}, {5.0, "5lam"}};
    for (const auto &[tx, rx] : {std::pair{9, 3}, std::pair{21, 7}})
        for (const auto &[d, label] : distances)
            out.push_back({"N" + std::to_string(tx) + "x" + std::to_string(tx) + "_M" + std::to_string(rx) + "x" +
                               std::to_string(rx) + "_d" + label,
                           tx, tx, rx, rx, d * wavelength});
    return out;
}

} // namespace hmimo
