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

// Acceptance suite: one PASS/FAIL line per criterion.
//   hmimo_acceptance            run all criteria
//   hmimo_acceptance --only N   run criterion N (exit status reflects it)

#include <chrono>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include <hmimo/analysis.hpp>
#include <hmimo/errors.hpp>
#include <hmimo/format.hpp>

#include "commands.hpp"
#include "test_support.hpp"

namespace
{

using namespace hmimo;
using testing_support::frame_at;
using testing_support::random_angles;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

const EmConstants &em()
{
    static const EmConstants k = EmConstants::at_frequency(30e9);
    return k;
}

double lam()
{
    return em().wavelength;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExperimentSetup oracle6_setup()
{
    ExperimentSetup s = reference_setup();
    s.quadrature = QuadratureSpec{6, 3, 1e-9};
    return s;
}

// ---------------------------------------------------------------------------

Outcome oracle_self_consistency()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> log_spacing(std::log(0.01), std::log(0.5));
    std::uniform_real_distribution<double> distance(0.5, 20.0);
    const double tilts[] = {60.0, 75.0, 90.0};
    double worst = 0.0;
    int worst_nodes = 0;
    for (int trial = 0; trial < 20; ++trial)
    {
        const double l = std::exp(log_spacing(rng)) * lam();
        const double d = distance(rng) * lam();
        const double tilt = tilts[rng() % 3];
        const ElementFrame tx = frame_at(Vec3::Zero(), Angles{}, l);
        const ElementFrame rx = frame_at(Vec3(0, 0, d), Angles::from_degrees(90, tilt, 0, 90), l);
        const PairChannel p = exact_pair_channel(tx, rx, em(), QuadratureSpec{8, 4, 1e-9});
        const Mat3c doubled = integrate_pair(tx, rx, em(), 2 * p.quadrature_nodes);
        const double change = (doubled - p.matrix).norm() / p.matrix.norm();
        if (change > worst)
        {
            worst = change;
            worst_nodes = p.quadrature_nodes;
        }
    }
    const double t = seconds_since(t0);
    return {worst < 1e-8 && t < 60.0, "max relative change on doubling " + sci(worst) + " (at " +
                                          std::to_string(worst_nodes) + " nodes), 20 configs, " + sci(t) + " s"};
}

const SweepResult &spacing_grid(double *elapsed = nullptr)
{
    static double t = 0.0;
    static const SweepResult r = [] {
        const auto t0 = std::chrono::steady_clock::now();
        const ExperimentSetup base = oracle6_setup();
        const auto spacings = default_spacings(base.em.wavelength);
        const auto tilts = default_tilts_deg();
        SweepResult out = sweep_spacing(base, spacings, tilts);
        t = seconds_since(t0);
        return out;
    }();
    if (elapsed)
        *elapsed = t;
    return r;
}

Outcome ca1_dominance()
{
    double t = 0.0;
    const SweepResult &r = spacing_grid(&t);
    int violations = 0, failed = 0;
    double worst_ratio = 0.0;
    for (const auto &p : r.points)
    {
        if (!p.converged)
            ++failed;
        else if (p.mse_ca1 > p.mse_ca2)
            ++violations;
        if (p.converged)
            worst_ratio = std::max(worst_ratio, p.mse_ca1 / p.mse_ca2);
    }
    return {violations == 0 && failed == 0 && t < 600.0,
            std::to_string(r.points.size()) + " points, " + std::to_string(violations) + " violations, " +
                std::to_string(failed) + " failed, max MSE(CA-I)/MSE(CA-II) " + sci(worst_ratio) + ", " + sci(t) +
                " s"};
}

Outcome spacing_trend()
{
    const SweepResult &r = spacing_grid();
    bool ok = true;
    std::string detail;
    for (double tilt : default_tilts_deg())
    {
        const SweepPoint *small = nullptr, *large = nullptr;
        for (const auto &p : r.points)
            if (p.theta_v_deg == tilt)
            {
                if (!small || p.value < small->value)
                    small = &p;
                if (!large || p.value > large->value)
                    large = &p;
            }
        const double f1 = large->mse_ca1 / small->mse_ca1;
        const double f2 = large->mse_ca2 / small->mse_ca2;
        ok = ok && small->converged && large->converged && f1 >= 10.0 && f2 >= 10.0;
        detail += (detail.empty() ? "" : "; ") + std::string("tilt ") + format_double(tilt) + ": CA-I x" + sci(f1) +
                  ", CA-II x" + sci(f2);
    }
    return {ok, "MSE(0.5 lam)/MSE(0.01 lam) " + detail};
}

Outcome distance_flattening()
{
    const ExperimentSetup base = oracle6_setup();
    const std::vector<double> distances{1.0 * lam(), 2.0 * lam(), 15.0 * lam(), 20.0 * lam()};
    const auto tilts = default_tilts_deg();
    const SweepResult r = sweep_distance(base, distances, tilts);
    bool ok = true;
    std::string detail;
    for (std::size_t t = 0; t < tilts.size(); ++t)
    {
        const auto &p = std::span(r.points).subspan(t * distances.size(), distances.size());
        const double near = std::abs(p[1].mse_ca1 - p[0].mse_ca1) / p[0].mse_ca1;
        const double far = std::abs(p[3].mse_ca1 - p[2].mse_ca1) / p[2].mse_ca1;
        const bool converged = p[0].converged && p[1].converged && p[2].converged && p[3].converged;
        ok = ok && converged && far < 0.1 * near;
        const double abs_ratio = std::abs(p[3].mse_ca1 - p[2].mse_ca1) / std::abs(p[1].mse_ca1 - p[0].mse_ca1);
        detail += (detail.empty() ? "" : "; ") + std::string("tilt ") + format_double(tilts[t]) + ": " + sci(far) +
                  " vs " + sci(near) + " (MSE " + sci(p[0].mse_ca1) + ", " + sci(p[1].mse_ca1) + ", " +
                  sci(p[2].mse_ca1) + ", " + sci(p[3].mse_ca1) + "; absolute-change ratio " + sci(abs_ratio) + ")";
    }
    return {ok, "relative CA-I change 15->20 lam vs 1->2 lam: " + detail};
}

Outcome parallel_placement()
{
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> coord(-3.0, 3.0), size(0.01, 0.5), unit(0.0, 1.0);
    double worst_arg = 0.0;
    int mismatched = 0, frame_mismatched = 0;
    const double k0 = em().wavenumber;
    for (int trial = 0; trial < 1000; ++trial)
    {
        // Both surfaces in planes parallel to xy; the first half use the
        // axis-aligned placement, the rest arbitrary in-plane rotations.
        const double az_t = trial < 500 ? 0.0 : 2 * pi * unit(rng);
        const double az_r = trial < 500 ? 0.0 : 2 * pi * unit(rng);
        const auto in_plane = [](double az) {
            const double az_v = std::fmod(az + pi / 2, 2 * pi);
            return Angles{pi / 2, pi / 2, az, az_v};
        };
        const Angles at = in_plane(az_t), ar = in_plane(az_r);
        const double lt = size(rng) * lam(), lr = size(rng) * lam();
        const ElementFrame tx = frame_at(Vec3(coord(rng), coord(rng), coord(rng)) * lam(), at, lt);
        const ElementFrame rx = frame_at(Vec3(coord(rng), coord(rng), 4.0 + coord(rng)) * lam(), ar, lr);
        const Vec3 r_bar = rx.center - tx.center;
        const double r = r_bar.norm();

        const SincArguments pt = sinc_arguments_angle_form(at, lt, lt, r_bar, k0);
        const SincArguments pr = sinc_arguments_angle_form(ar, lr, lr, r_bar, k0);
        const SincArguments zt{0.5 * k0 * lt * (r_bar.x() / r), 0.5 * k0 * lt * (r_bar.y() / r)};
        const SincArguments zr{0.5 * k0 * lr * (r_bar.x() / r), 0.5 * k0 * lr * (r_bar.y() / r)};
        worst_arg = std::max({worst_arg, std::abs(pt.h - zt.h), std::abs(pt.v - zt.v), std::abs(pr.h - zr.h),
                              std::abs(pr.v - zr.v)});
        const Mat3c via_angle_form = ca1_from_arguments(tx, rx, em(), pt, pr).matrix;
        if (via_angle_form != ca1_from_arguments(tx, rx, em(), zt, zr).matrix)
            ++mismatched;
        if (trial < 500 && via_angle_form != ca1_pair_channel(tx, rx, em()).matrix)
            ++frame_mismatched;
    }
    return {worst_arg <= 1e-12 && mismatched == 0 && frame_mismatched == 0,
            "max |angle-form - z-free| argument " + sci(worst_arg) + "; CA-I not bit-identical in " +
                std::to_string(mismatched) + "/1000 (angle form vs z-free), " + std::to_string(frame_mismatched) +
                "/500 (angle form vs coordinate-free, axis-aligned)"};
}

Outcome sinc_form_equivalence()
{
    std::mt19937_64 rng(66);
    std::uniform_real_distribution<double> coord(-3.0, 3.0), size(0.01, 0.5);
    const double k0 = em().wavenumber;
    double worst = 0.0;
    int within = 0, checked = 0;
    while (checked < 1000)
    {
        const Angles a = random_angles(rng);
        try
        {
            delta_z_coefficients(a);
        }
        catch (const AzimuthDegenerate &)
        {
            continue;
        }
        const double l = size(rng) * lam();
        const Vec3 r_bar = Vec3(coord(rng), coord(rng), coord(rng)) * lam() + Vec3(0, 0, 4 * lam());
        const SincArguments p = sinc_arguments_angle_form(a, l, l, r_bar, k0);
        const SincArguments f = sinc_arguments_frame(frame_at(Vec3::Zero(), a, l), r_bar, k0);
        const double diff = std::max(std::abs(p.h - f.h), std::abs(p.v - f.v));
        worst = std::max(worst, diff);
        within += diff <= 1e-12;
        ++checked;
    }
    return {within == checked, std::to_string(within) + "/1000 orientations agree to 1e-12, max difference " +
                                   sci(worst) + " rad"};
}

struct EigenData
{
    std::map<std::string, std::array<int, 3>> counts; // id -> Exact, CA1, CA2
    double large_seconds = 0.0;
};

const EigenData &eigen_data()
{
    static const EigenData d = [] {
        EigenData out;
        const ExperimentSetup base = oracle6_setup();
        for (const auto &c : default_eigen_cases(base.em.wavelength))
        {
            const auto t0 = std::chrono::steady_clock::now();
            const auto entry = eigen_study(base, std::span(&c, 1)).front();
            if (c.tx_h == 21)
                out.large_seconds += seconds_since(t0);
            out.counts[c.id] = {entry.spectra[0].eigenmode_count, entry.spectra[1].eigenmode_count,
                                entry.spectra[2].eigenmode_count};
        }
        return out;
    }();
    return d;
}

std::string counts_text(const std::array<int, 3> &c)
{
    return std::to_string(c[0]) + "/" + std::to_string(c[1]) + "/" + std::to_string(c[2]);
}

Outcome eigenmode_agreement()
{
    const EigenData &d = eigen_data();
    bool ok = d.large_seconds < 1200.0;
    std::string detail;
    for (const auto &[id, c] : d.counts)
    {
        const bool near = id.ends_with("_d0.1lam");
        ok = ok && (near ? std::abs(c[1] - c[0]) <= 1 : c[0] == c[1] && c[0] == c[2]);
        detail += (detail.empty() ? "" : ", ") + id + " " + counts_text(c);
    }
    return {ok, "Exact/CA-I/CA-II counts: " + detail + "; large case " + sci(d.large_seconds) + " s"};
}

Outcome eigenmode_monotonicity()
{
    const auto &c = eigen_data().counts;
    const auto n = [&](const char *id) { return c.at(id)[0]; };
    bool ok = n("N9x9_M3x3_d0.1lam") >= n("N9x9_M3x3_d0.5lam") && n("N9x9_M3x3_d0.5lam") >= n("N9x9_M3x3_d5lam");
    for (const char *d : {"0.1lam", "0.5lam", "5lam"})
        ok = ok && n(("N21x21_M7x7_d" + std::string(d)).c_str()) >= n(("N9x9_M3x3_d" + std::string(d)).c_str());
    std::string detail = "Exact counts 9x9/3x3: ";
    for (const char *d : {"0.1lam", "0.5lam", "5lam"})
        detail += std::to_string(n(("N9x9_M3x3_d" + std::string(d)).c_str())) + " ";
    detail += "| 21x21/7x7: ";
    for (const char *d : {"0.1lam", "0.5lam", "5lam"})
        detail += std::to_string(n(("N21x21_M7x7_d" + std::string(d)).c_str())) + " ";
    detail += "(distances 0.1, 0.5, 5 lam)";
    return {ok, detail};
}

VectorXc random_vector(std::mt19937_64 &rng, Eigen::Index n)
{
    std::normal_distribution<double> g;
    VectorXc v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = Complex(g(rng), g(rng));
    return v;
}

Outcome structural_identities()
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    bool involution = true;
    double spectrum_gap = 0.0, downlink_gap = 0.0;
    for (int trial = 0; trial < 10; ++trial)
    {
        ExperimentSetup s = reference_setup();
        s.tx.count_h = 3 + trial % 4;
        s.tx.count_v = 2 + trial % 3;
        s.rx.count_h = 1 + trial % 3;
        s.rx.count_v = 2;
        s.rx.angles = random_angles(rng);
        const auto tx = element_frames(s.tx);

        // Multiuser: K = 3 receivers sharing the transmitter.
        std::vector<SystemChannel> chans;
        for (int k = 0; k < 3; ++k)
        {
            SurfaceSpec r = s.rx;
            r.center = Vec3(coord(rng), coord(rng), 2.0 + coord(rng)) * lam();
            chans.push_back(assemble(tx, element_frames(r), s.em, ChannelModel::CA1));
        }
        const SystemChannel &zeta = chans[0];
        const SystemChannel varsigma = reorder(zeta);
        involution = involution && reorder(varsigma).matrix == zeta.matrix;
        const auto a = singular_spectrum(zeta).singular_values;
        const auto b = singular_spectrum(varsigma).singular_values;
        for (std::size_t i = 0; i < a.size(); ++i)
            spectrum_gap = std::max(spectrum_gap, std::abs(a[i] - b[i]) / a[0]);

        std::vector<CurrentVector> currents;
        VectorXc total = VectorXc::Zero(zeta.matrix.cols());
        for (int k = 0; k < 3; ++k)
        {
            currents.push_back({random_vector(rng, zeta.matrix.cols()), Ordering::ElementMajor});
            total += currents.back().values;
        }
        const auto out = multiuser_downlink(chans, currents);
        for (std::size_t k = 0; k < 3; ++k)
        {
            const VectorXc expected = chans[k].matrix * total;
            downlink_gap = std::max(downlink_gap, (out[k].signal.values + out[k].interference.values - expected).norm() /
                                                      expected.norm());
        }
    }
    return {involution && spectrum_gap <= 1e-12 && downlink_gap <= 1e-12,
            std::string("reorder involution ") + (involution ? "bit-exact" : "NOT bit-exact") +
                ", max spectrum gap " + sci(spectrum_gap) + " sigma_1, max downlink gap " + sci(downlink_gap)};
}

// (I + grad grad^T / k0^2) g by central differences, in long double.
Mat3c finite_difference_dyadic(const Vec3 &sep, double k, double h)
{
    using ld = long double;
    using cld = std::complex<ld>;
    const auto at = [&](int i, ld di, int j, ld dj) {
        ld p[3] = {sep.x(), sep.y(), sep.z()};
        p[i] += di;
        p[j] += dj;
        const ld r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        return std::polar(1.0L / (4.0L * static_cast<ld>(pi) * r), static_cast<ld>(k) * r);
    };
    const ld hh = h, kk = static_cast<ld>(k) * k;
    Mat3c out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
        {
            const cld d2 = i == j ? (at(i, hh, j, 0) - 2.0L * at(i, 0, j, 0) + at(i, -hh, j, 0)) / (hh * hh)
                                  : (at(i, hh, j, hh) - at(i, hh, j, -hh) - at(i, -hh, j, hh) + at(i, -hh, j, -hh)) /
                                        (4 * hh * hh);
            const cld v = d2 / kk + (i == j ? at(i, 0, j, 0) : cld(0));
            out(i, j) = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
        }
    return out;
}

Outcome kernel_checks()
{
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), frac(0.0, 1.0), radius(0.5, 10.0);
    double fd_worst = 0.0;
    for (int trial = 0; trial < 200; ++trial)
    {
        const Vec3 sep = Vec3(unit(rng), unit(rng), unit(rng)).normalized() * radius(rng) * lam();
        const Mat3c g = dyadic_green(sep, Vec3::Zero(), em().wavenumber);
        fd_worst = std::max(fd_worst, (finite_difference_dyadic(sep, em().wavenumber, 1e-6 * lam()) - g).norm() /
                                          g.norm());
    }

    // Aggregate error of the first-order distance over successive halvings.
    constexpr int levels = 4;
    double sums[levels] = {};
    for (int trial = 0; trial < 1000; ++trial)
    {
        const Vec3 r_bar = Vec3(unit(rng), unit(rng), unit(rng)).normalized() * (0.5 + 4.0 * frac(rng)) * lam();
        const double rb = r_bar.norm();
        const Vec3 dm = Vec3(unit(rng), unit(rng), unit(rng)).normalized() * (rb / 20) * frac(rng);
        const Vec3 dn = Vec3(unit(rng), unit(rng), unit(rng)).normalized() * (rb / 20) * frac(rng);
        for (int l = 0; l < levels; ++l)
        {
            const double s = std::ldexp(1.0, -l);
            sums[l] += std::abs((r_bar + s * dm - s * dn).norm() - first_order_distance(r_bar, s * dm, s * dn));
        }
    }
    double min_order = std::numeric_limits<double>::infinity();
    for (int l = 0; l + 1 < levels; ++l)
        min_order = std::min(min_order, std::log2(sums[l] / sums[l + 1]));
    return {fd_worst <= 1e-5 && min_order >= 1.9, "dyadic vs finite difference max rel " + sci(fd_worst) +
                                                      " (200 separations, r >= lam/2); first-order distance min order " +
                                                      sci(min_order) + " over 3 halvings"};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_tool(std::vector<std::string> args)
{
    args.insert(args.begin(), "hmimo");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::streambuf *saved = std::cout.rdbuf();
    std::ostringstream sink;
    std::cout.rdbuf(sink.rdbuf());
    const int code = tools::run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(saved);
    return code;
}

Outcome determinism()
{
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "hmimo_acceptance_determinism";
    fs::remove_all(root);
    fs::create_directories(root);
    const std::pair<const char *, const char *> sweeps[] = {
        {"spacing", R"({"quadrature": {"nodes": 6},
            "sweep": {"kind": "spacing", "values": ["0.01lam", "0.05lam", "0.2lam"]}})"},
        {"distance", R"({"tx": {"elements": [5, 5]}, "quadrature": {"nodes": 6},
            "sweep": {"kind": "distance", "values": ["1lam", "4lam", "20lam"], "tilts_deg": [60, 90]}})"},
        {"elements", R"({"rx": {"elements": [2, 2]}, "quadrature": {"nodes": 6},
            "sweep": {"kind": "elements", "tx_counts": [[3, 3], [5, 5]], "distances": ["5lam", "50lam"]}})"},
    };
    int identical = 0;
    std::string detail;
    for (const auto &[name, text] : sweeps)
    {
        const fs::path dir = root / name;
        fs::create_directories(dir);
        std::ofstream(dir / "config.json") << text;
        const int first = run_tool({"sweep", "--config", (dir / "config.json").string(), "--out", (dir / "a").string()});
        const int replay = run_tool(
            {"sweep", "--config", (dir / "a" / "manifest.json").string(), "--out", (dir / "b").string(), "--jobs", "3"});
        const bool same = first == 0 && replay == 0 && fs::exists(dir / "a" / "sweep.csv") &&
                          slurp(dir / "a" / "sweep.csv") == slurp(dir / "b" / "sweep.csv");
        identical += same;
        detail += std::string(detail.empty() ? "" : ", ") + name + (same ? " identical" : " DIFFERS");
    }
    fs::remove_all(root);
    return {identical == 3, "replay from manifest.json (different --jobs): " + detail};
}

struct Criterion
{
    int id;
    const char *name;
    std::function<Outcome()> run;
};

const std::vector<Criterion> &criteria()
{
    static const std::vector<Criterion> all{
        {1, "oracle self-consistency", oracle_self_consistency},
        {2, "CA-I dominance on the spacing grid", ca1_dominance},
        {3, "spacing trend", spacing_trend},
        {4, "distance flattening", distance_flattening},
        {5, "parallel-placement reduction", parallel_placement},
        {6, "sinc-form equivalence", sinc_form_equivalence},
        {7, "eigenmode agreement", eigenmode_agreement},
        {8, "eigenmode monotonicity", eigenmode_monotonicity},
        {9, "structural identities", structural_identities},
        {10, "numerical kernel checks", kernel_checks},
        {11, "determinism", determinism},
    };
    return all;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"hmimo acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    for (const auto &c : criteria())
    {
        if (only != 0 && c.id != only)
            continue;
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
