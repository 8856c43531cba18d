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

#include "hmimo/serialization.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "hmimo/errors.hpp"
#include "hmimo/format.hpp"

namespace hmimo
{

namespace
{

void put_le_double(std::ostream &out, double x)
{
    std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i)
        bytes[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xffu);
    out.write(reinterpret_cast<const char *>(bytes), 8);
}

double get_le_double(std::istream &in)
{
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char *>(bytes), 8))
        throw InvalidArgument("binary channel file is truncated");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

SystemChannel empty_channel(std::size_t rows, std::size_t cols, Ordering ordering, ChannelModel model,
                            double frequency)
{
    if (rows == 0 || cols == 0 || rows % 3 != 0 || cols % 3 != 0)
        throw DimensionMismatch("channel dimensions must be positive multiples of 3");
    SystemChannel ch;
    ch.matrix.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    ch.ordering = ordering;
    ch.m_elements = rows / 3;
    ch.n_elements = cols / 3;
    ch.model = model;
    ch.frequency = frequency;
    return ch;
}

std::vector<std::string> split_csv_line(const std::string &line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

} // namespace

void write_binary(const SystemChannel &ch, std::ostream &out)
{
    std::string header = std::string(binary_magic) + " " + (ch.ordering == Ordering::ElementMajor ? "Z" : "S") + " " +
                         std::to_string(ch.matrix.rows()) + " " + std::to_string(ch.matrix.cols()) + " " +
                         std::string(to_string(ch.model)) + " " + format_double(ch.frequency);
    if (header.size() > binary_header_size - 1)
        throw InvalidArgument("binary header does not fit in 64 bytes");
    header.resize(binary_header_size - 1, ' ');
    header.push_back('\n');
    out.write(header.data(), static_cast<std::streamsize>(header.size()));

    for (Eigen::Index r = 0; r < ch.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < ch.matrix.cols(); ++c)
        {
            put_le_double(out, ch.matrix(r, c).real());
            put_le_double(out, ch.matrix(r, c).imag());
        }
}

SystemChannel read_binary(std::istream &in)
{
    std::string header(binary_header_size, '\0');
    if (!in.read(header.data(), static_cast<std::streamsize>(binary_header_size)))
        throw InvalidArgument("binary channel file is shorter than its header");

    std::istringstream hs(header);
    std::string magic, ordering, model, frequency;
    std::size_t rows = 0, cols = 0;
    if (!(hs >> magic >> ordering >> rows >> cols >> model >> frequency) || magic != binary_magic)
        throw InvalidArgument("not an HMIMO1 binary channel file");
    if (ordering != "Z" && ordering != "S")
        throw InvalidArgument("unknown ordering flag '" + ordering + "'");
    const auto parsed_model = parse_model(model);
    double freq = 0.0;
    if (!parsed_model || !parse_double(frequency, freq))
        throw InvalidArgument("malformed HMIMO1 header");

    SystemChannel ch = empty_channel(rows, cols, ordering == "Z" ? Ordering::ElementMajor : Ordering::CoordinateMajor,
                                     *parsed_model, freq);
    for (Eigen::Index r = 0; r < ch.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < ch.matrix.cols(); ++c)
        {
            const double re = get_le_double(in);
            const double im = get_le_double(in);
            ch.matrix(r, c) = Complex(re, im);
        }
    return ch;
}

nlohmann::json to_json(const SystemChannel &ch)
{
    nlohmann::json data = nlohmann::json::array();
    data.get_ref<nlohmann::json::array_t &>().reserve(static_cast<std::size_t>(2 * ch.matrix.size()));
    for (Eigen::Index r = 0; r < ch.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < ch.matrix.cols(); ++c)
        {
            data.push_back(ch.matrix(r, c).real());
            data.push_back(ch.matrix(r, c).imag());
        }
    return {{"format", binary_magic},
            {"ordering", to_string(ch.ordering)},
            {"rows", ch.matrix.rows()},
            {"cols", ch.matrix.cols()},
            {"m_elements", ch.m_elements},
            {"n_elements", ch.n_elements},
            {"model", to_string(ch.model)},
            {"frequency_hz", ch.frequency},
            {"data", std::move(data)}};
}

SystemChannel system_channel_from_json(const nlohmann::json &j)
{
    try
    {
        if (j.at("format").get<std::string>() != binary_magic)
            throw InvalidArgument("JSON channel has an unknown format tag");
        const auto ordering = parse_ordering(j.at("ordering").get<std::string>());
        const auto model = parse_model(j.at("model").get<std::string>());
        if (!ordering || !model)
            throw InvalidArgument("JSON channel has an unknown ordering or model");
        SystemChannel ch = empty_channel(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), *ordering,
                                         *model, j.at("frequency_hz").get<double>());
        const auto &data = j.at("data");
        if (data.size() != static_cast<std::size_t>(2 * ch.matrix.size()))
            throw DimensionMismatch("JSON channel data length does not match rows*cols");
        std::size_t i = 0;
        for (Eigen::Index r = 0; r < ch.matrix.rows(); ++r)
            for (Eigen::Index c = 0; c < ch.matrix.cols(); ++c, i += 2)
                ch.matrix(r, c) = Complex(data[i].get<double>(), data[i + 1].get<double>());
        return ch;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw InvalidArgument(std::string("malformed JSON channel: ") + e.what());
    }
}

nlohmann::json to_json(const Mat3c &m)
{
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < 3; ++r)
    {
        re.push_back({m(r, 0).real(), m(r, 1).real(), m(r, 2).real()});
        im.push_back({m(r, 0).imag(), m(r, 1).imag(), m(r, 2).imag()});
    }
    return {{"re", re}, {"im", im}};
}

void write_sweep_csv(std::span<const SweepPoint> points, std::ostream &out)
{
    out << sweep_csv_header << '\n';
    for (const auto &p : points)
        out << p.sweep_var << ',' << format_double(p.value) << ',' << format_double(p.theta_v_deg) << ','
            << format_double(p.mse_ca1) << ',' << format_double(p.mse_ca2) << ',' << p.oracle_nodes << ','
            << (p.converged ? "true" : "false") << '\n';
}

std::vector<SweepPoint> parse_sweep_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line) || line != sweep_csv_header)
        throw InvalidArgument("sweep.csv header mismatch");
    std::vector<SweepPoint> points;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        const auto f = split_csv_line(line);
        SweepPoint p;
        if (f.size() != 7 || !parse_double(f[1], p.value) || !parse_double(f[2], p.theta_v_deg) ||
            !parse_double(f[3], p.mse_ca1) || !parse_double(f[4], p.mse_ca2) || (f[6] != "true" && f[6] != "false"))
            throw InvalidArgument("malformed sweep.csv row: " + line);
        p.sweep_var = f[0];
        try
        {
            p.oracle_nodes = std::stoi(f[5]);
        }
        catch (const std::exception &)
        {
            throw InvalidArgument("malformed oracle_nodes in sweep.csv row: " + line);
        }
        p.converged = f[6] == "true";
        points.push_back(std::move(p));
    }
    return points;
}

void write_spectrum_csv(std::span<const EigenStudyEntry> entries, std::ostream &out)
{
    out << "model,config_id,k,sigma_k\n";
    for (const auto &e : entries)
        for (const auto &s : e.spectra)
            for (std::size_t k = 0; k < s.singular_values.size(); ++k)
                out << to_string(s.model) << ',' << e.eigen_case.id << ',' << (k + 1) << ','
                    << format_double(s.singular_values[k]) << '\n';
}

void write_modes_csv(std::span<const EigenStudyEntry> entries, std::ostream &out)
{
    out << "model,config_id,eigenmode_count\n";
    for (const auto &e : entries)
        for (const auto &s : e.spectra)
            out << to_string(s.model) << ',' << e.eigen_case.id << ',' << s.eigenmode_count << '\n';
}

} // namespace hmimo
