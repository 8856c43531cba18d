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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <hmimo/serialization.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace hmimo;
using namespace hmimo::tools;

namespace
{

struct Result
{
    int code = 0;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hmimo");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    testing::internal::CaptureStderr();
    testing::internal::CaptureStdout();
    const int code = run_cli(static_cast<int>(argv.size()), argv.data());
    testing::internal::GetCapturedStdout();
    return {code, testing::internal::GetCapturedStderr()};
}

fs::path scratch(const std::string &name)
{
    const fs::path p = fs::temp_directory_path() / ("hmimo_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

fs::path write_config(const fs::path &dir, const std::string &text)
{
    const fs::path p = dir / "config.json";
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Mat3c matrix_from(const json &j)
{
    Mat3c m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m(r, c) = Complex(j["re"][r][c].get<double>(), j["im"][r][c].get<double>());
    return m;
}

const fs::path data_dir = HMIMO_TEST_DATA_DIR;

} // namespace

TEST(ParseLength, MetersAndWavelengths)
{
    EXPECT_EQ(parse_length(json(0.25), 0.01, "x"), 0.25);
    EXPECT_EQ(parse_length(json("2lam"), 0.01, "x"), 2.0 * 0.01);
    EXPECT_EQ(parse_length(json("0.05lam"), 0.01, "x"), 0.05 * 0.01);
    EXPECT_THROW(parse_length(json("lam"), 0.01, "x"), ConfigError);
    EXPECT_THROW(parse_length(json("2 m"), 0.01, "x"), ConfigError);
    EXPECT_THROW(parse_length(json(true), 0.01, "x"), ConfigError);
}

TEST(Config, DefaultsMatchReferenceSetup)
{
    const ExperimentSetup a = default_config().setup();
    const ExperimentSetup b = reference_setup();
    EXPECT_EQ(a.tx.count_h, b.tx.count_h);
    EXPECT_EQ(a.rx.count_v, b.rx.count_v);
    EXPECT_EQ(a.tx.pitch_h, b.tx.pitch_h);
    EXPECT_EQ(a.rx.center, b.rx.center);
    EXPECT_EQ(a.em.frequency, b.em.frequency);
}

TEST(Config, CanonicalFormRoundTripsInMeters)
{
    const ExperimentConfig c = parse_config(json::parse(R"({
        "tx": {"elements": [5, 3], "pitch": ["0.05lam", "0.1lam"]},
        "rx": {"elements": [2, 2], "distance": "3lam", "angles_deg": {"polar_v": 60}},
        "sweep": {"kind": "distance", "values": ["1lam", "2lam"]},
        "eigen": {"threshold_ratio": 0.05}
    })"));
    const json canonical = to_json(c);
    EXPECT_TRUE(canonical["tx"]["pitch"][0].is_number());
    EXPECT_TRUE(canonical["sweep"]["values"][1].is_number());
    const ExperimentConfig back = parse_config(canonical);
    EXPECT_EQ(to_json(back), canonical);
    EXPECT_EQ(back.rx.angles.polar_v, 60.0);
    EXPECT_EQ(back.eigen->cases.size(), 6u);
}

TEST(Config, Rejections)
{
    const char *bad[] = {
        R"({"frequency_hz": -1})",
        R"({"tx": {"elements": [0, 3]}})",
        R"({"rx": {"angles_deg": {"polar_h": 90, "polar_v": 90, "azimuth_h": 0, "azimuth_v": 0}}})",
        R"({"models": []})",
        R"({"models": ["CA1", "CA1"]})",
        R"({"models": ["CA3"]})",
        R"({"quadrature": {"nodes": 1}})",
        R"({"pair": {"rx_index": 9}})",
        R"({"sweep": {"kind": "angle"}})",
        R"({"sweep": {"kind": "distance", "values": ["2lam", "1lam"]}})",
        R"({"sweep": {"kind": "spacing", "tilts_deg": [0]}})",
        R"({"eigen": {"threshold_ratio": 0}})",
        R"({"eigen": {"cases": [{"id": "a,b", "tx_elements": [1, 1], "rx_elements": [1, 1], "distance": 1}]}})",
        R"({"export": {"formats": ["hdf5"]}})",
        R"({"rx": {"center": [0, 0, 1], "distance": 1}})",
        R"([1, 2])",
    };
    for (const char *text : bad)
        EXPECT_THROW(parse_config(json::parse(text)), ConfigError) << text;
}

TEST(Cli, PairDefaultWritesAllModels)
{
    const fs::path dir = scratch("pair");
    ASSERT_EQ(run({"pair", "--out", dir.string()}).code, exit_ok);
    const json doc = json::parse(slurp(dir / "pair.json"));
    for (const char *m : {"Exact", "CA1", "CA2"})
        EXPECT_TRUE(doc["models"].contains(m)) << m;
    EXPECT_FALSE(doc["models"]["Exact"]["quadrature_trace"].empty());
    EXPECT_TRUE(doc["models"]["Exact"]["quadrature_trace"][0]["rel_change"].is_null());
    EXPECT_TRUE(doc["sinc_arguments"].contains("frame"));
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
}

TEST(Cli, PairMatchesRegressionFile)
{
    const fs::path dir = scratch("pair_golden");
    const fs::path cfg = write_config(dir, R"({"tx": {"elements": [1, 1], "pitch": "0.05lam"},
                                              "rx": {"elements": [1, 1], "pitch": "0.05lam", "distance": "5lam"}})");
    ASSERT_EQ(run({"pair", "--config", cfg.string(), "--out", dir.string()}).code, exit_ok);
    const json got = json::parse(slurp(dir / "pair.json"))["models"];
    const json ref = json::parse(slurp(data_dir / "pair_005lam_5lam.json"));
    const auto rel = [](const Mat3c &a, const Mat3c &b) { return (a - b).norm() / b.norm(); };
    EXPECT_LE(rel(matrix_from(got["Exact"]["matrix"]), matrix_from(ref["Exact"])), 1e-6);
    EXPECT_LE(rel(matrix_from(got["CA1"]["matrix"]), matrix_from(ref["CA1"])), 1e-12);
    EXPECT_LE(rel(matrix_from(got["CA2"]["matrix"]), matrix_from(ref["CA2"])), 1e-12);
}

TEST(Cli, AngleFormWithDegenerateAzimuthsIsNumericalError)
{
    const fs::path dir = scratch("degenerate");
    const fs::path cfg = write_config(dir, R"({
        "tx": {"elements": [1, 1], "angles_deg": {"polar_h": 135, "polar_v": 45, "azimuth_h": 0, "azimuth_v": 0}},
        "rx": {"elements": [1, 1], "distance": "5lam"},
        "pair": {"angle_form_sinc": true}})");
    const Result r = run({"pair", "--config", cfg.string(), "--out", dir.string()});
    EXPECT_EQ(r.code, exit_numerical_error);
    EXPECT_NE(r.err.find("AzimuthDegenerate"), std::string::npos) << r.err;
}

TEST(Cli, AngleFormReportedWhenRequested)
{
    const fs::path dir = scratch("angle_form");
    const fs::path cfg = write_config(dir, R"({"tx": {"elements": [2, 2]}, "rx": {"elements": [1, 1]},
                                              "models": ["CA1"], "pair": {"tx_index": 3, "angle_form_sinc": true}})");
    ASSERT_EQ(run({"pair", "--config", cfg.string(), "--out", dir.string()}).code, exit_ok);
    const json doc = json::parse(slurp(dir / "pair.json"));
    // Parallel placement: both forms coincide bit-for-bit.
    EXPECT_EQ(doc["sinc_arguments"]["angle_form"], doc["sinc_arguments"]["frame"]);
    EXPECT_EQ(doc["models"]["CA1_angle_form"]["matrix"], doc["models"]["CA1"]["matrix"]);
    EXPECT_FALSE(doc["models"].contains("Exact"));
}

TEST(Cli, ConfigErrorsExitTwo)
{
    const fs::path dir = scratch("config_errors");
    EXPECT_EQ(run({"sweep", "--config", write_config(dir, R"({"sweep": {"kind": "spacing", "values": []}})").string(),
                   "--out", dir.string()})
                  .code,
              exit_config_error);
    EXPECT_EQ(run({"sweep", "--out", dir.string()}).code, exit_config_error);
    EXPECT_EQ(run({"eigen", "--out", dir.string()}).code, exit_config_error);
    EXPECT_EQ(run({"pair", "--config", (dir / "missing.json").string()}).code, exit_config_error);
    EXPECT_EQ(run({"pair", "--config", write_config(dir, "{not json").string()}).code, exit_config_error);
    EXPECT_EQ(run({"pair", "--quad-nodes", "1", "--out", dir.string()}).code, exit_config_error);
    EXPECT_EQ(run({"frobnicate"}).code, exit_config_error);
    EXPECT_EQ(run({}).code, exit_config_error);
    const Result r = run({"pair", "--config", write_config(dir, R"({"frequncy_hz": 1})").string()});
    EXPECT_EQ(r.code, exit_config_error);
    EXPECT_NE(r.err.find("frequncy_hz"), std::string::npos);
}

TEST(Cli, SweepCsvMatchesInMemoryResultAndReplays)
{
    const fs::path dir = scratch("sweep");
    const fs::path cfg = write_config(dir, R"({
        "tx": {"elements": [3, 3]}, "rx": {"elements": [2, 2]}, "quadrature": {"nodes": 6},
        "sweep": {"kind": "spacing", "values": ["0.02lam", "0.1lam"], "tilts_deg": [60, 90]}})");
    ASSERT_EQ(run({"sweep", "--config", cfg.string(), "--out", (dir / "a").string()}).code, exit_ok);
    for (const char *f : {"sweep.csv", "sweep.svg", "manifest.json"})
        EXPECT_TRUE(fs::exists(dir / "a" / f)) << f;

    const ExperimentConfig c = load_config(cfg.string());
    const SweepResult mem = sweep_spacing(c.setup(), c.sweep->values, c.sweep->tilts_deg);
    std::ifstream in(dir / "a" / "sweep.csv");
    const auto parsed = parse_sweep_csv(in);
    ASSERT_EQ(parsed.size(), mem.points.size());
    for (std::size_t i = 0; i < parsed.size(); ++i)
    {
        EXPECT_EQ(parsed[i].sweep_var, mem.points[i].sweep_var);
        EXPECT_EQ(parsed[i].value, mem.points[i].value);
        EXPECT_EQ(parsed[i].theta_v_deg, mem.points[i].theta_v_deg);
        EXPECT_EQ(parsed[i].mse_ca1, mem.points[i].mse_ca1);
        EXPECT_EQ(parsed[i].mse_ca2, mem.points[i].mse_ca2);
        EXPECT_EQ(parsed[i].oracle_nodes, mem.points[i].oracle_nodes);
        EXPECT_EQ(parsed[i].converged, mem.points[i].converged);
    }

    const json manifest = json::parse(slurp(dir / "a" / "manifest.json"));
    EXPECT_EQ(manifest["command"], "sweep");
    EXPECT_TRUE(manifest["config"]["sweep"]["values"][0].is_number());
    EXPECT_TRUE(manifest.contains("wall_clock_seconds"));
    ASSERT_EQ(run({"sweep", "--config", (dir / "a" / "manifest.json").string(), "--out", (dir / "b").string(),
                   "--jobs", "2"})
                  .code,
              exit_ok);
    EXPECT_EQ(slurp(dir / "a" / "sweep.csv"), slurp(dir / "b" / "sweep.csv"));
    EXPECT_EQ(slurp(dir / "a" / "sweep.svg"), slurp(dir / "b" / "sweep.svg"));
}

TEST(Cli, EigenSpectrumMatchesRegressionFile)
{
    const fs::path dir = scratch("eigen");
    const fs::path cfg = write_config(dir, R"({"eigen": {"cases": [
        {"id": "N9x9_M3x3_d0.1lam", "tx_elements": [9, 9], "rx_elements": [3, 3], "distance": "0.1lam"},
        {"id": "far", "tx_elements": [9, 9], "rx_elements": [3, 3], "distance": "5lam"}]}})");
    ASSERT_EQ(run({"eigen", "--config", cfg.string(), "--out", dir.string(), "--threshold", "0.01"}).code, exit_ok);
    for (const char *f : {"spectrum.csv", "modes.csv", "spectrum.svg", "manifest.json"})
        EXPECT_TRUE(fs::exists(dir / f)) << f;

    std::map<std::string, std::vector<double>> got, ref;
    const auto load = [](const fs::path &p, std::map<std::string, std::vector<double>> &out) {
        std::ifstream in(p);
        std::string line;
        std::getline(in, line);
        EXPECT_EQ(line, "model,config_id,k,sigma_k");
        while (std::getline(in, line))
        {
            std::stringstream ss(line);
            std::string model, id, k, sigma;
            std::getline(ss, model, ',');
            std::getline(ss, id, ',');
            std::getline(ss, k, ',');
            std::getline(ss, sigma, ',');
            EXPECT_EQ(std::stoul(k), out[model + "/" + id].size() + 1);
            out[model + "/" + id].push_back(std::stod(sigma));
        }
    };
    load(dir / "spectrum.csv", got);
    load(data_dir / "spectrum_N9x9_M3x3_d0.1lam.csv", ref);
    for (const char *m : {"Exact", "CA1", "CA2"})
    {
        EXPECT_EQ(got[std::string(m) + "/far"].size(), 27u);
        const auto &g = got[std::string(m) + "/N9x9_M3x3_d0.1lam"];
        const auto &r = ref[std::string(m) + "/N9x9_M3x3_d0.1lam"];
        ASSERT_EQ(g.size(), r.size()) << m;
        for (std::size_t k = 0; k < r.size(); ++k)
            EXPECT_LE(std::abs(g[k] - r[k]), 1e-9 * r[0]) << m << " k=" << k + 1;
    }
}

TEST(Cli, ExportRoundTripsAndOrderingsAgree)
{
    const fs::path dir = scratch("export");
    const std::string base = R"({"tx": {"elements": [4, 3]}, "rx": {"elements": [2, 2]},
                                 "export": {"model": "CA1", "formats": ["binary", "json"], "ordering": ")";
    ASSERT_EQ(run({"export", "--config", write_config(dir, base + R"(element_major"}})").string(), "--out",
                   (dir / "zeta").string()})
                  .code,
              exit_ok);
    ASSERT_EQ(run({"export", "--config", write_config(dir, base + R"(coordinate_major"}})").string(), "--out",
                   (dir / "varsigma").string()})
                  .code,
              exit_ok);

    const std::string zeta_bytes = slurp(dir / "zeta" / "channel.bin");
    EXPECT_EQ(zeta_bytes.size(), binary_header_size + 16u * 12u * 36u);
    std::istringstream zs(zeta_bytes), vs(slurp(dir / "varsigma" / "channel.bin"));
    const SystemChannel zeta = read_binary(zs);
    const SystemChannel varsigma = read_binary(vs);
    EXPECT_EQ(varsigma.ordering, Ordering::CoordinateMajor);
    EXPECT_EQ(reorder(zeta).matrix, varsigma.matrix);

    const ExperimentConfig c = load_config((dir / "config.json").string());
    const ExperimentSetup s = c.setup();
    const SystemChannel direct = assemble(element_frames(s.tx), element_frames(s.rx), s.em, ChannelModel::CA1);
    EXPECT_EQ(zeta.matrix, direct.matrix);
    EXPECT_EQ(system_channel_from_json(json::parse(slurp(dir / "zeta" / "channel.json"))).matrix, direct.matrix);
}
