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

#ifndef HMIMO_SERIALIZATION_HPP
#define HMIMO_SERIALIZATION_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hmimo/analysis.hpp"
#include "hmimo/assembly.hpp"

namespace hmimo
{

// Binary system-channel format:
//   64-byte ASCII header "HMIMO1 <Z|S> <rows> <cols> <model> <frequency_hz>",
//   space padded, byte 63 = '\n'. Z = element-major, S = coordinate-major.
//   Then rows*cols complex entries, row-major, each as little-endian IEEE-754
//   float64 real part followed by imaginary part.
inline constexpr std::size_t binary_header_size = 64;
inline constexpr const char *binary_magic = "HMIMO1";

void write_binary(const SystemChannel &ch, std::ostream &out);
SystemChannel read_binary(std::istream &in);

// JSON system-channel format with the same header fields and a flat "data"
// array of interleaved (re, im) doubles in row-major order.
nlohmann::json to_json(const SystemChannel &ch);
SystemChannel system_channel_from_json(const nlohmann::json &j);

nlohmann::json to_json(const Mat3c &m); // {"re": [[...]x3], "im": [[...]x3]}

// sweep.csv: sweep_var,value,theta_v_deg,mse_ca1,mse_ca2,oracle_nodes,converged
inline constexpr const char *sweep_csv_header = "sweep_var,value,theta_v_deg,mse_ca1,mse_ca2,oracle_nodes,converged";
void write_sweep_csv(std::span<const SweepPoint> points, std::ostream &out);
std::vector<SweepPoint> parse_sweep_csv(std::istream &in);

// spectrum.csv: model,config_id,k,sigma_k (k is 1-based)
// modes.csv:    model,config_id,eigenmode_count
void write_spectrum_csv(std::span<const EigenStudyEntry> entries, std::ostream &out);
void write_modes_csv(std::span<const EigenStudyEntry> entries, std::ostream &out);

} // namespace hmimo

#endif
