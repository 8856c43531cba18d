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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <hmimo/errors.hpp>
#include <hmimo/format.hpp>

namespace hmimo::tools
{

namespace
{

using json = nlohmann::json;

const json &require_object(const json &j, const std::string &where)
{
    if (!j.is_object())
        throw ConfigError(where + " must be an object");
    return j;
}

void check_keys(const json &j, std::initializer_list<const char *> allowed, const std::string &where)
{
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &item : j.items())
        if (!ok.contains(item.key()))
            throw ConfigError("unknown key '" + item.key() + "' in " + where);
}

double get_number(const json &j, const std::string &where)
{
    if (!j.is_number())
        throw ConfigError(where + " must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x))
        throw ConfigError(where + " must be finite");
    return x;
}

int get_int(const json &j, const std::string &where)
{
    if (!j.is_number_integer())
        throw ConfigError(where + " must be an integer");
    return j.get<int>();
}

std::pair<int, int> get_counts(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(where + " must be [horizontal, vertical]");
    return {get_int(j[0], where + "[0]"), get_int(j[1], where + "[1]")};
}

std::vector<double> get_lengths(const json &j, double wavelength, const std::string &where)
{
    if (!j.is_array())
        throw ConfigError(where + " must be a list");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_length(j[i], wavelength, where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<double> get_numbers(const json &j, const std::string &where)
{
    if (!j.is_array())
        throw ConfigError(where + " must be a list");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

void parse_surface(const json &j, SurfaceConfig &s, double wavelength, const std::string &where,
                   const SurfaceConfig *tx)
{
    require_object(j, where);
    check_keys(j, {"center", "distance", "angles_deg", "elements", "pitch"}, where);
    if (j.contains("elements"))
        std::tie(s.count_h, s.count_v) = get_counts(j["elements"], where + ".elements");
    if (j.contains("pitch"))
    {
        const json &p = j["pitch"];
        if (p.is_array())
        {
            if (p.size() != 2)
                throw ConfigError(where + ".pitch must be a length or [horizontal, vertical]");
            s.pitch_h = parse_length(p[0], wavelength, where + ".pitch[0]");
            s.pitch_v = parse_length(p[1], wavelength, where + ".pitch[1]");
        }
        else
            s.pitch_h = s.pitch_v = parse_length(p, wavelength, where + ".pitch");
    }
    if (j.contains("angles_deg"))
    {
        const json &a = require_object(j["angles_deg"], where + ".angles_deg");
        check_keys(a, {"polar_h", "polar_v", "azimuth_h", "azimuth_v"}, where + ".angles_deg");
        if (a.contains("polar_h"))
            s.angles.polar_h = get_number(a["polar_h"], where + ".angles_deg.polar_h");
        if (a.contains("polar_v"))
            s.angles.polar_v = get_number(a["polar_v"], where + ".angles_deg.polar_v");
        if (a.contains("azimuth_h"))
            s.angles.azimuth_h = get_number(a["azimuth_h"], where + ".angles_deg.azimuth_h");
        if (a.contains("azimuth_v"))
            s.angles.azimuth_v = get_number(a["azimuth_v"], where + ".angles_deg.azimuth_v");
    }
    if (j.contains("center") && j.contains("distance"))
        throw ConfigError(where + " may give either center or distance, not both");
    if (j.contains("center"))
    {
        const auto c = get_lengths(j["center"], wavelength, where + ".center");
        if (c.size() != 3)
            throw ConfigError(where + ".center must have three components");
        s.center = Vec3(c[0], c[1], c[2]);
    }
    if (j.contains("distance"))
    {
        if (tx == nullptr)
            throw ConfigError(where + ".distance is only valid for the receiver");
        const double d = parse_length(j["distance"], wavelength, where + ".distance");
        try
        {
            s.center = tx->center + d * tx->spec().normal();
        }
        catch (const Error &e)
        {
            throw ConfigError(std::string("tx: ") + e.what());
        }
    }
}

ChannelModel get_model(const json &j, const std::string &where)
{
    if (!j.is_string())
        throw ConfigError(where + " must be a model name");
    const auto m = parse_model(j.get<std::string>());
    if (!m)
        throw ConfigError(where + ": unknown model '" + j.get<std::string>() + "'");
    return *m;
}

std::optional<SweepKind> parse_sweep_kind(const std::string &s)
{
    for (SweepKind k : {SweepKind::Spacing, SweepKind::Distance, SweepKind::Elements})
        if (s == to_string(k))
            return k;
    return std::nullopt;
}

SweepConfig parse_sweep(const json &j, double wavelength)
{
    require_object(j, "sweep");
    check_keys(j, {"kind", "values", "tilts_deg", "tx_counts", "distances"}, "sweep");
    SweepConfig s;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ConfigError("sweep.kind must be one of spacing, distance, elements");
    const auto kind = parse_sweep_kind(j["kind"].get<std::string>());
    if (!kind)
        throw ConfigError("sweep.kind must be one of spacing, distance, elements");
    s.kind = *kind;

    s.tilts_deg = j.contains("tilts_deg") ? get_numbers(j["tilts_deg"], "sweep.tilts_deg") : default_tilts_deg();
    if (s.kind == SweepKind::Elements)
    {
        if (j.contains("values"))
            throw ConfigError("sweep.values is not used by an elements sweep; give tx_counts and distances");
        if (j.contains("tx_counts"))
        {
            if (!j["tx_counts"].is_array())
                throw ConfigError("sweep.tx_counts must be a list");
            for (std::size_t i = 0; i < j["tx_counts"].size(); ++i)
                s.tx_counts.push_back(get_counts(j["tx_counts"][i], "sweep.tx_counts[" + std::to_string(i) + "]"));
        }
        else
            s.tx_counts = default_tx_counts();
        s.distances = j.contains("distances") ? get_lengths(j["distances"], wavelength, "sweep.distances")
                                              : std::vector<double>{5.0 * wavelength, 50.0 * wavelength};
    }
    else
    {
        if (j.contains("tx_counts") || j.contains("distances"))
            throw ConfigError("sweep.tx_counts and sweep.distances are only used by an elements sweep");
        if (j.contains("values"))
            s.values = get_lengths(j["values"], wavelength, "sweep.values");
        else
            s.values = s.kind == SweepKind::Spacing ? default_spacings(wavelength) : default_distances(wavelength);
    }
    return s;
}

EigenConfig parse_eigen(const json &j, double wavelength)
{
    require_object(j, "eigen");
    check_keys(j, {"threshold_ratio", "cases"}, "eigen");
    EigenConfig e;
    if (j.contains("threshold_ratio"))
        e.threshold_ratio = get_number(j["threshold_ratio"], "eigen.threshold_ratio");
    if (!j.contains("cases"))
    {
        e.cases = default_eigen_cases(wavelength);
        return e;
    }
    if (!j["cases"].is_array())
        throw ConfigError("eigen.cases must be a list");
    for (std::size_t i = 0; i < j["cases"].size(); ++i)
    {
        const std::string where = "eigen.cases[" + std::to_string(i) + "]";
        const json &c = require_object(j["cases"][i], where);
        check_keys(c, {"id", "tx_elements", "rx_elements", "distance"}, where);
        if (!c.contains("id") || !c["id"].is_string() || !c.contains("tx_elements") || !c.contains("rx_elements") ||
            !c.contains("distance"))
            throw ConfigError(where + " needs id, tx_elements, rx_elements and distance");
        EigenCase ec;
        ec.id = c["id"].get<std::string>();
        std::tie(ec.tx_h, ec.tx_v) = get_counts(c["tx_elements"], where + ".tx_elements");
        std::tie(ec.rx_h, ec.rx_v) = get_counts(c["rx_elements"], where + ".rx_elements");
        ec.distance = parse_length(c["distance"], wavelength, where + ".distance");
        e.cases.push_back(std::move(ec));
    }
    return e;
}

json surface_json(const SurfaceConfig &s)
{
    return {{"center", {s.center.x(), s.center.y(), s.center.z()}},
            {"angles_deg",
             {{"polar_h", s.angles.polar_h},
              {"polar_v", s.angles.polar_v},
              {"azimuth_h", s.angles.azimuth_h},
              {"azimuth_v", s.angles.azimuth_v}}},
            {"elements", {s.count_h, s.count_v}},
            {"pitch", {s.pitch_h, s.pitch_v}}};
}

void validate_surface(const SurfaceConfig &s, const std::string &where)
{
    if (s.count_h < 1 || s.count_v < 1)
        throw ConfigError(where + ".elements must be >= 1");
    if (!(s.pitch_h > 0.0) || !(s.pitch_v > 0.0))
        throw ConfigError(where + ".pitch must be positive");
    try
    {
        validate(s.spec());
    }
    catch (const Error &e)
    {
        throw ConfigError(where + ": " + e.kind() + ": " + e.what());
    }
}

} // namespace

SurfaceSpec SurfaceConfig::spec() const
{
    SurfaceSpec s;
    s.center = center;
    s.angles = angles.radians();
    s.count_h = count_h;
    s.count_v = count_v;
    s.pitch_h = pitch_h;
    s.pitch_v = pitch_v;
    return s;
}

ExperimentSetup ExperimentConfig::setup() const
{
    ExperimentSetup s;
    s.em = EmConstants::at_frequency(frequency);
    s.tx = tx.spec();
    s.rx = rx.spec();
    s.quadrature = quadrature;
    s.jobs = jobs;
    return s;
}

ExperimentConfig default_config()
{
    ExperimentConfig c;
    const double lam = EmConstants::at_frequency(c.frequency).wavelength;
    c.tx.count_h = c.tx.count_v = 9;
    c.rx.count_h = c.rx.count_v = 3;
    c.tx.pitch_h = c.tx.pitch_v = c.rx.pitch_h = c.rx.pitch_v = 0.05 * lam;
    c.rx.center = c.tx.center + lam * c.tx.spec().normal();
    return c;
}

double parse_length(const json &value, double wavelength, const std::string &where)
{
    if (value.is_number())
        return get_number(value, where);
    if (value.is_string())
    {
        const std::string text = value.get<std::string>();
        constexpr std::string_view suffix = "lam";
        double x = 0.0;
        if (text.size() > suffix.size() && text.ends_with(suffix) &&
            parse_double(std::string_view(text).substr(0, text.size() - suffix.size()), x) && std::isfinite(x))
            return x * wavelength;
        throw ConfigError(where + ": cannot parse length '" + text + "' (use meters or '<x>lam')");
    }
    throw ConfigError(where + " must be a length in meters or a string '<x>lam'");
}

ExperimentConfig parse_config(const json &input)
{
    const json &j = input.is_object() && input.contains("config") && input.contains("tool") ? input["config"] : input;
    require_object(j, "config");
    check_keys(j,
               {"frequency_hz", "tx", "rx", "models", "quadrature", "jobs", "pair", "sweep", "eigen", "export"},
               "config");
    ExperimentConfig c = default_config();
    if (j.contains("frequency_hz"))
    {
        c.frequency = get_number(j["frequency_hz"], "frequency_hz");
        if (!(c.frequency > 0.0))
            throw ConfigError("frequency_hz must be positive");
        // Frequency-dependent defaults follow the configured carrier.
        const double lam = EmConstants::at_frequency(c.frequency).wavelength;
        c.tx.pitch_h = c.tx.pitch_v = c.rx.pitch_h = c.rx.pitch_v = 0.05 * lam;
        c.rx.center = c.tx.center + lam * c.tx.spec().normal();
    }
    const double lam = EmConstants::at_frequency(c.frequency).wavelength;
    if (j.contains("tx"))
    {
        const double offset = (c.rx.center - c.tx.center).norm();
        parse_surface(j["tx"], c.tx, lam, "tx", nullptr);
        validate_surface(c.tx, "tx");
        c.rx.center = c.tx.center + offset * c.tx.spec().normal();
    }
    if (j.contains("rx"))
        parse_surface(j["rx"], c.rx, lam, "rx", &c.tx);

    if (j.contains("models"))
    {
        if (!j["models"].is_array())
            throw ConfigError("models must be a list");
        c.models.clear();
        for (std::size_t i = 0; i < j["models"].size(); ++i)
            c.models.push_back(get_model(j["models"][i], "models[" + std::to_string(i) + "]"));
    }
    if (j.contains("quadrature"))
    {
        const json &q = require_object(j["quadrature"], "quadrature");
        check_keys(q, {"nodes", "refinements", "rel_tol"}, "quadrature");
        if (q.contains("nodes"))
            c.quadrature.nodes_per_axis = get_int(q["nodes"], "quadrature.nodes");
        if (q.contains("refinements"))
            c.quadrature.refinement_limit = get_int(q["refinements"], "quadrature.refinements");
        if (q.contains("rel_tol"))
            c.quadrature.rel_tol = get_number(q["rel_tol"], "quadrature.rel_tol");
    }
    if (j.contains("jobs"))
    {
        const int jobs = get_int(j["jobs"], "jobs");
        if (jobs < 0)
            throw ConfigError("jobs must be >= 0");
        c.jobs = static_cast<unsigned>(jobs);
    }
    if (j.contains("pair"))
    {
        const json &p = require_object(j["pair"], "pair");
        check_keys(p, {"rx_index", "tx_index", "angle_form_sinc"}, "pair");
        if (p.contains("rx_index"))
            c.pair.m = static_cast<std::size_t>(std::max(0, get_int(p["rx_index"], "pair.rx_index")));
        if (p.contains("tx_index"))
            c.pair.n = static_cast<std::size_t>(std::max(0, get_int(p["tx_index"], "pair.tx_index")));
        if (p.contains("angle_form_sinc"))
        {
            if (!p["angle_form_sinc"].is_boolean())
                throw ConfigError("pair.angle_form_sinc must be true or false");
            c.pair.angle_form_sinc = p["angle_form_sinc"].get<bool>();
        }
    }
    if (j.contains("sweep"))
        c.sweep = parse_sweep(j["sweep"], lam);
    if (j.contains("eigen"))
        c.eigen = parse_eigen(j["eigen"], lam);
    if (j.contains("export"))
    {
        const json &e = require_object(j["export"], "export");
        check_keys(e, {"model", "ordering", "formats"}, "export");
        if (e.contains("model"))
            c.export_options.model = get_model(e["model"], "export.model");
        if (e.contains("ordering"))
        {
            const auto o = e["ordering"].is_string() ? parse_ordering(e["ordering"].get<std::string>()) : std::nullopt;
            if (!o)
                throw ConfigError("export.ordering must be element_major or coordinate_major");
            c.export_options.ordering = *o;
        }
        if (e.contains("formats"))
        {
            if (!e["formats"].is_array() || e["formats"].empty())
                throw ConfigError("export.formats must be a non-empty list of binary/json");
            c.export_options.binary = c.export_options.json = false;
            for (const auto &f : e["formats"])
            {
                if (f == "binary")
                    c.export_options.binary = true;
                else if (f == "json")
                    c.export_options.json = true;
                else
                    throw ConfigError("export.formats entries must be binary or json");
            }
        }
    }
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try
    {
        j = json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

json to_json(const ExperimentConfig &c)
{
    json models = json::array();
    for (ChannelModel m : c.models)
        models.push_back(to_string(m));
    json out = {{"frequency_hz", c.frequency},
                {"tx", surface_json(c.tx)},
                {"rx", surface_json(c.rx)},
                {"models", models},
                {"quadrature",
                 {{"nodes", c.quadrature.nodes_per_axis},
                  {"refinements", c.quadrature.refinement_limit},
                  {"rel_tol", c.quadrature.rel_tol}}},
                {"jobs", c.jobs},
                {"pair", {{"rx_index", c.pair.m}, {"tx_index", c.pair.n}, {"angle_form_sinc", c.pair.angle_form_sinc}}}};
    json formats = json::array();
    if (c.export_options.binary)
        formats.push_back("binary");
    if (c.export_options.json)
        formats.push_back("json");
    out["export"] = {{"model", to_string(c.export_options.model)},
                     {"ordering", to_string(c.export_options.ordering)},
                     {"formats", formats}};
    if (c.sweep)
    {
        json s = {{"kind", to_string(c.sweep->kind)}, {"tilts_deg", c.sweep->tilts_deg}};
        if (c.sweep->kind == SweepKind::Elements)
        {
            json counts = json::array();
            for (const auto &[h, v] : c.sweep->tx_counts)
                counts.push_back({h, v});
            s["tx_counts"] = counts;
            s["distances"] = c.sweep->distances;
        }
        else
            s["values"] = c.sweep->values;
        out["sweep"] = s;
    }
    if (c.eigen)
    {
        json cases = json::array();
        for (const auto &ec : c.eigen->cases)
            cases.push_back({{"id", ec.id},
                             {"tx_elements", {ec.tx_h, ec.tx_v}},
                             {"rx_elements", {ec.rx_h, ec.rx_v}},
                             {"distance", ec.distance}});
        out["eigen"] = {{"threshold_ratio", c.eigen->threshold_ratio}, {"cases", cases}};
    }
    return out;
}

void validate(const ExperimentConfig &c)
{
    if (!(c.frequency > 0.0) || !std::isfinite(c.frequency))
        throw ConfigError("frequency_hz must be positive");
    validate_surface(c.tx, "tx");
    validate_surface(c.rx, "rx");
    if (c.models.empty())
        throw ConfigError("models must select at least one of Exact, CA1, CA2");
    for (std::size_t i = 0; i < c.models.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (c.models[i] == c.models[k])
                throw ConfigError("models lists " + std::string(to_string(c.models[i])) + " twice");
    try
    {
        validate(c.quadrature);
    }
    catch (const Error &e)
    {
        throw ConfigError(std::string("quadrature: ") + e.what());
    }
    if (c.pair.m >= static_cast<std::size_t>(c.rx.count_h) * static_cast<std::size_t>(c.rx.count_v))
        throw ConfigError("pair.rx_index is out of range for the receive surface");
    if (c.pair.n >= static_cast<std::size_t>(c.tx.count_h) * static_cast<std::size_t>(c.tx.count_v))
        throw ConfigError("pair.tx_index is out of range for the transmit surface");

    if (c.sweep)
    {
        const SweepConfig &s = *c.sweep;
        const auto ascending = [](const std::vector<double> &v, const std::string &what) {
            if (v.empty())
                throw ConfigError(what + " list is empty");
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!(v[i] > 0.0) || (i > 0 && !(v[i] > v[i - 1])))
                    throw ConfigError(what + " values must be positive and strictly ascending");
        };
        if (s.kind == SweepKind::Elements)
        {
            if (s.tx_counts.empty())
                throw ConfigError("sweep.tx_counts list is empty");
            for (const auto &[h, v] : s.tx_counts)
                if (h < 1 || v < 1)
                    throw ConfigError("sweep.tx_counts entries must be >= 1");
            ascending(s.distances, "sweep.distances");
        }
        else
            ascending(s.values, "sweep.values");
        if (s.tilts_deg.empty())
            throw ConfigError("sweep.tilts_deg list is empty");
        for (double t : s.tilts_deg)
        {
            AnglesDeg a = c.rx.angles;
            a.polar_v = t;
            try
            {
                validate(a.radians());
            }
            catch (const Error &e)
            {
                throw ConfigError("sweep.tilts_deg " + format_double(t) + ": " + e.kind() + ": " + e.what());
            }
        }
    }
    if (c.eigen)
    {
        if (!(c.eigen->threshold_ratio > 0.0 && c.eigen->threshold_ratio <= 1.0))
            throw ConfigError("eigen.threshold_ratio must be in (0, 1]");
        if (c.eigen->cases.empty())
            throw ConfigError("eigen.cases list is empty");
        std::set<std::string> ids;
        for (const auto &ec : c.eigen->cases)
        {
            if (ec.id.empty() || ec.id.find_first_of(",\n\"") != std::string::npos)
                throw ConfigError("eigen case ids must be non-empty and free of commas, quotes and newlines");
            if (!ids.insert(ec.id).second)
                throw ConfigError("eigen case id '" + ec.id + "' is used twice");
            if (ec.tx_h < 1 || ec.tx_v < 1 || ec.rx_h < 1 || ec.rx_v < 1)
                throw ConfigError("eigen case '" + ec.id + "' needs element counts >= 1");
            if (!(ec.distance > 0.0))
                throw ConfigError("eigen case '" + ec.id + "' needs a positive distance");
        }
    }
}

} // namespace hmimo::tools
