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

#ifndef HMIMO_ASSEMBLY_HPP
#define HMIMO_ASSEMBLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hmimo/channel.hpp"

namespace hmimo
{

// 3M x 3N matrix mapping transmit currents to received fields.
struct SystemChannel
{
    MatrixXc matrix;
    Ordering ordering = Ordering::ElementMajor;
    std::size_t m_elements = 0; // receive elements
    std::size_t n_elements = 0; // transmit elements
    ChannelModel model = ChannelModel::CA2;
    double frequency = 0.0;
    int oracle_nodes = 0; // Exact: largest accepted nodes-per-axis over all pairs

    // 3x3 block for receive element m, transmit element n, in either ordering.
    Mat3c block(std::size_t m, std::size_t n) const;
};

struct CurrentVector
{
    VectorXc values;
    Ordering ordering = Ordering::ElementMajor;
};

struct FieldVector
{
    VectorXc values;
    Ordering ordering = Ordering::ElementMajor;
};

// Position of element-major index (3 e + c) in coordinate-major layout: c * count + e.
std::size_t coordinate_major_index(std::size_t element_major_index, std::size_t count);
// Inverse mapping.
std::size_t element_major_index(std::size_t coordinate_major_index, std::size_t count);

// Element-major system channel. Pairs are evaluated on `jobs` worker threads
// (0 = hardware concurrency); failures carry the (m, n) pair in the message.
SystemChannel assemble(std::span<const ElementFrame> tx_frames, std::span<const ElementFrame> rx_frames,
                       const EmConstants &k, ChannelModel model,
                       const std::optional<QuadratureSpec> &q = std::nullopt, unsigned jobs = 0);

// Switches between element-major and coordinate-major layouts. An involution.
SystemChannel reorder(const SystemChannel &ch);
CurrentVector reorder(const CurrentVector &j);
FieldVector reorder(const FieldVector &e);

FieldVector apply(const SystemChannel &ch, const CurrentVector &j);

struct DownlinkField
{
    FieldVector signal;
    FieldVector interference;
};

// One channel and one current vector per served user k:
//   signal_k = H_k j_k, interference_k = sum_{i != k} H_k j_i.
std::vector<DownlinkField> multiuser_downlink(std::span<const SystemChannel> channels,
                                              std::span<const CurrentVector> currents);

} // namespace hmimo

#endif
