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

#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <hmimo/errors.hpp>
#include <hmimo/format.hpp>
#include <hmimo/serialization.hpp>
#include <hmimo/version.hpp>

#include "svg.hpp"

namespace hmimo::tools
{

namespace
{

using json = nlohmann::json;
namespace fs = std::filesystem;

class Run
{
public:
    Run(std::string command, const ExperimentConfig &c, fs::path out_dir)
        : command_(std::move(command)), config_(c), dir_(std::move(out_dir)),
          start_(std::chrono::steady_clock::now()), started_utc_(utc_now())
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec || !fs::is_directory(dir_))
            throw ConfigError("cannot create output directory '" + dir_.string() + "'");
    }

    void write(const std::string &name, const std::string &content)
    {
        const fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out.flush())
            throw ConfigError("cannot write '" + path.string() + "'");
        files_.push_back(name);
    }

    std::vector<std::string> finish()
    {
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        const json manifest = {{"tool", "hmimo"},
                               {"version", hmimo::version},
                               {"command", command_},
                               {"config", to_json(config_)},
                               {"outputs", files_},
                               {"started_utc", started_utc_},
                               {"wall_clock_seconds", seconds}};
        write("manifest.json", manifest.dump(2) + "\n");
        return files_;
    }

private:
    static std::string utc_now()
    {
        const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::string command_;
    const ExperimentConfig &config_;
    fs::path dir_;
    std::chrono::steady_clock::time_point start_;
    std::string started_utc_;
    std::vector<std::string> files_;
};

json sinc_json(const SincArguments &a)
{
    return {{"h", a.h}, {"v", a.v}};
}

json trace_json(const std::vector<QuadratureLevel> &trace)
{
    json out = json::array();
    for (const auto &level : trace)
        out.push_back({{"nodes", level.nodes},
                       {"rel_change", std::isnan(level.rel_change) ? json(nullptr) : json(level.rel_change)}});
    return out;
}

std::string sweep_x_label(SweepKind kind)
{
    switch (kind)
    {
    case SweepKind::Spacing:
        return "element spacing [wavelengths]";
    case SweepKind::Distance:
        return "TE-RE distance [wavelengths]";
    case SweepKind::Elements:
        return "number of transmit elements";
    }
    return "";
}

std::string sweep_svg(const SweepResult &r, double wavelength)
{
    // One curve per (sweep_var, tilt) and model, in first-appearance order.
    std::vector<std::pair<std::string, double>> groups;
    std::map<std::pair<std::string, double>, std::size_t> index;
    for (const auto &p : r.points)
    {
        const auto key = std::make_pair(p.sweep_var, p.theta_v_deg);
        if (!index.contains(key))
        {
            index[key] = groups.size();
            groups.push_back(key);
        }
    }
    std::vector<PlotSeries> series;
    for (std::size_t g = 0; g < groups.size(); ++g)
    {
        PlotSeries ca1, ca2;
        std::string suffix = ", theta_v=" + format_double(groups[g].second) + " deg";
        if (r.kind == SweepKind::Elements)
            suffix = ", " + groups[g].first.substr(groups[g].first.find('@') + 1) + suffix;
        ca1.label = "CA-I" + suffix;
        ca2.label = "CA-II" + suffix;
        ca1.color = ca2.color = static_cast<int>(g);
        ca2.dash = 1;
        for (const auto &p : r.points)
        {
            if (p.sweep_var != groups[g].first || p.theta_v_deg != groups[g].second)
                continue;
            const double x = r.kind == SweepKind::Elements ? p.value : p.value / wavelength;
            ca1.x.push_back(x);
            ca1.y.push_back(p.mse_ca1);
            ca2.x.push_back(x);
            ca2.y.push_back(p.mse_ca2);
        }
        series.push_back(std::move(ca1));
        series.push_back(std::move(ca2));
    }
    PlotSpec spec{"Normalized MSE vs " + std::string(to_string(r.kind)), sweep_x_label(r.kind), "normalized MSE",
                  r.kind == SweepKind::Spacing, true};
    return line_plot_svg(spec, series);
}

std::string spectrum_svg(const std::vector<EigenStudyEntry> &entries)
{
    std::vector<PlotSeries> series;
    for (std::size_t e = 0; e < entries.size(); ++e)
        for (std::size_t m = 0; m < entries[e].spectra.size(); ++m)
        {
            const SpectrumResult &s = entries[e].spectra[m];
            PlotSeries ps;
            ps.label = std::string(to_string(s.model)) + " " + entries[e].eigen_case.id;
            ps.color = static_cast<int>(e);
            ps.dash = static_cast<int>(m);
            const double top = s.singular_values.empty() ? 0.0 : s.singular_values.front();
            for (std::size_t k = 0; k < s.singular_values.size(); ++k)
            {
                ps.x.push_back(static_cast<double>(k + 1));
                ps.y.push_back(top > 0.0 ? s.singular_values[k] / top : 0.0);
            }
            series.push_back(std::move(ps));
        }
    return line_plot_svg({"Singular value spectra (normalized)", "index k", "sigma_k / sigma_1", false, true}, series);
}

} // namespace

void apply(ExperimentConfig &c, const Overrides &o)
{
    if (o.jobs)
        c.jobs = *o.jobs;
    if (o.quad_nodes)
        c.quadrature.nodes_per_axis = *o.quad_nodes;
    if (o.threshold_ratio)
    {
        if (!c.eigen)
            throw ConfigError("--threshold needs an eigen section in the config");
        c.eigen->threshold_ratio = *o.threshold_ratio;
    }
    validate(c);
}

std::vector<std::string> cmd_pair(const ExperimentConfig &c, const fs::path &out_dir)
{
    const ExperimentSetup setup = c.setup();
    const auto tx_frames = element_frames(setup.tx);
    const auto rx_frames = element_frames(setup.rx);
    const ElementFrame &tx = tx_frames.at(c.pair.n);
    const ElementFrame &rx = rx_frames.at(c.pair.m);
    const Vec3 r_bar = rx.center - tx.center;
    const double k0 = setup.em.wavenumber;

    json models = json::object();
    for (ChannelModel model : c.models)
    {
        const PairChannel p =
            pair_channel(model, tx, rx, setup.em,
                         model == ChannelModel::Exact ? std::optional<QuadratureSpec>(c.quadrature) : std::nullopt);
        json entry = {{"matrix", hmimo::to_json(p.matrix)}};
        if (model == ChannelModel::Exact)
        {
            entry["quadrature_nodes"] = p.quadrature_nodes;
            entry["quadrature_trace"] = trace_json(p.trace);
        }
        models[std::string(to_string(model))] = entry;
    }

    json sinc = {{"frame",
                  {{"tx", sinc_json(sinc_arguments_frame(tx, r_bar, k0))},
                   {"rx", sinc_json(sinc_arguments_frame(rx, r_bar, k0))}}}};
    if (c.pair.angle_form_sinc)
    {
        const SincArguments tx_args = sinc_arguments_angle_form(setup.tx.angles, tx.len_h, tx.len_v, r_bar, k0);
        const SincArguments rx_args = sinc_arguments_angle_form(setup.rx.angles, rx.len_h, rx.len_v, r_bar, k0);
        sinc["angle_form"] = {{"tx", sinc_json(tx_args)}, {"rx", sinc_json(rx_args)}};
        models["CA1_angle_form"] = {{"matrix", hmimo::to_json(ca1_from_arguments(tx, rx, setup.em, tx_args, rx_args).matrix)}};
    }

    const json doc = {{"frequency_hz", c.frequency},
                      {"wavelength_m", setup.em.wavelength},
                      {"rx_index", c.pair.m},
                      {"tx_index", c.pair.n},
                      {"rx_center", {rx.center.x(), rx.center.y(), rx.center.z()}},
                      {"tx_center", {tx.center.x(), tx.center.y(), tx.center.z()}},
                      {"models", models},
                      {"sinc_arguments", sinc}};
    Run run("pair", c, out_dir);
    run.write("pair.json", doc.dump(2) + "\n");
    return run.finish();
}

std::vector<std::string> cmd_sweep(const ExperimentConfig &c, const fs::path &out_dir)
{
    if (!c.sweep)
        throw ConfigError("the sweep command needs a sweep section in the config");
    const ExperimentSetup setup = c.setup();
    const SweepConfig &s = *c.sweep;
    SweepResult r;
    switch (s.kind)
    {
    case SweepKind::Spacing:
        r = sweep_spacing(setup, s.values, s.tilts_deg);
        break;
    case SweepKind::Distance:
        r = sweep_distance(setup, s.values, s.tilts_deg);
        break;
    case SweepKind::Elements:
        r = sweep_elements(setup, s.tx_counts, s.distances, s.tilts_deg);
        break;
    }
    for (const auto &p : r.points)
        if (!p.converged)
            std::cerr << "warning: " << p.sweep_var << "=" << format_double(p.value)
                      << " theta_v=" << format_double(p.theta_v_deg) << ": " << p.error << "\n";

    std::ostringstream csv;
    write_sweep_csv(r.points, csv);
    Run run("sweep", c, out_dir);
    run.write("sweep.csv", csv.str());
    run.write("sweep.svg", sweep_svg(r, setup.em.wavelength));
    return run.finish();
}

std::vector<std::string> cmd_eigen(const ExperimentConfig &c, const fs::path &out_dir)
{
    if (!c.eigen)
        throw ConfigError("the eigen command needs an eigen section in the config");
    const auto entries = eigen_study(c.setup(), c.eigen->cases, c.eigen->threshold_ratio);
    std::ostringstream spectrum, modes;
    write_spectrum_csv(entries, spectrum);
    write_modes_csv(entries, modes);
    Run run("eigen", c, out_dir);
    run.write("spectrum.csv", spectrum.str());
    run.write("modes.csv", modes.str());
    run.write("spectrum.svg", spectrum_svg(entries));
    return run.finish();
}

std::vector<std::string> cmd_export(const ExperimentConfig &c, const fs::path &out_dir)
{
    const ExperimentSetup setup = c.setup();
    const ChannelModel model = c.export_options.model;
    SystemChannel ch = assemble(element_frames(setup.tx), element_frames(setup.rx), setup.em, model,
                                model == ChannelModel::Exact ? std::optional<QuadratureSpec>(c.quadrature)
                                                             : std::nullopt,
                                c.jobs);
    if (c.export_options.ordering != ch.ordering)
        ch = reorder(ch);

    Run run("export", c, out_dir);
    if (c.export_options.binary)
    {
        std::ostringstream bin(std::ios::binary);
        write_binary(ch, bin);
        run.write("channel.bin", bin.str());
    }
    if (c.export_options.json)
        run.write("channel.json", to_json(ch).dump() + "\n");
    return run.finish();
}

int run_cli(int argc, const char *const *argv)
{
    CLI::App app{"hmimo - line-of-sight channel models for holographic MIMO surfaces"};
    app.set_version_flag("--version", std::string(hmimo::version));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    Overrides overrides;
    unsigned jobs = 0;
    double threshold = 0.0;
    int quad_nodes = 0;

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "experiment config (JSON) or a previous manifest.json");
        sub->add_option("--out", out_dir, "output directory (created if missing)");
        sub->add_option("--jobs", jobs, "worker threads (0 = available parallelism)");
        sub->add_option("--quad-nodes", quad_nodes, "initial Gauss-Legendre nodes per axis for the exact channel");
    };
    CLI::App *pair = app.add_subcommand("pair", "one element pair: all requested models, sinc arguments, trace");
    CLI::App *sweep = app.add_subcommand("sweep", "normalized MSE sweep over spacing, distance or element count");
    CLI::App *eigen = app.add_subcommand("eigen", "singular spectra and eigenmode counts");
    CLI::App *exp = app.add_subcommand("export", "assembled system channel in binary and/or JSON form");
    for (CLI::App *sub : {pair, sweep, eigen, exp})
        add_common(sub);
    eigen->add_option("--threshold", threshold, "eigenmode threshold as a fraction of the largest singular value");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config_error;
    }

    CLI::App *chosen = app.get_subcommands().front();
    if (chosen->count("--jobs"))
        overrides.jobs = jobs;
    if (chosen->count("--quad-nodes"))
        overrides.quad_nodes = quad_nodes;
    if (chosen == eigen && eigen->count("--threshold"))
        overrides.threshold_ratio = threshold;

    try
    {
        ExperimentConfig config = config_path.empty() ? default_config() : load_config(config_path);
        apply(config, overrides);
        std::vector<std::string> files;
        if (chosen == pair)
            files = cmd_pair(config, out_dir);
        else if (chosen == sweep)
            files = cmd_sweep(config, out_dir);
        else if (chosen == eigen)
            files = cmd_eigen(config, out_dir);
        else
            files = cmd_export(config, out_dir);
        for (const auto &f : files)
            std::cout << (fs::path(out_dir) / f).string() << "\n";
        return exit_ok;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
    catch (const Error &e)
    {
        std::cerr << "numerical error: " << e.kind() << ": " << e.what() << "\n";
        return exit_numerical_error;
    }
}

} // namespace hmimo::tools
