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

#include "hmimo/assembly.hpp"

#include <algorithm>
#include <string>

#include "hmimo/errors.hpp"
#include "hmimo/parallel.hpp"

namespace hmimo
{

namespace
{

std::size_t flat_index(std::size_t element, std::size_t component, std::size_t count, Ordering ordering)
{
    return ordering == Ordering::ElementMajor ? 3 * element + component : component * count + element;
}

Ordering other(Ordering o)
{
    return o == Ordering::ElementMajor ? Ordering::CoordinateMajor : Ordering::ElementMajor;
}

// Moves entries of an element-major/coordinate-major vector into the other layout.
VectorXc permute_vector(const VectorXc &values, Ordering from)
{
    const auto size = static_cast<std::size_t>(values.size());
    if (size % 3 != 0)
        throw DimensionMismatch("vector length " + std::to_string(size) + " is not a multiple of 3");
    const std::size_t count = size / 3;
    VectorXc out(values.size());
    for (std::size_t e = 0; e < count; ++e)
        for (std::size_t c = 0; c < 3; ++c)
            out(static_cast<Eigen::Index>(flat_index(e, c, count, other(from)))) =
                values(static_cast<Eigen::Index>(flat_index(e, c, count, from)));
    return out;
}

} // namespace

Mat3c SystemChannel::block(std::size_t m, std::size_t n) const
{
    if (m >= m_elements || n >= n_elements)
        throw DimensionMismatch("block index out of range");
    Mat3c b;
    for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 0; v < 3; ++v)
            b(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) =
                matrix(static_cast<Eigen::Index>(flat_index(m, u, m_elements, ordering)),
                       static_cast<Eigen::Index>(flat_index(n, v, n_elements, ordering)));
    return b;
}

std::size_t coordinate_major_index(std::size_t element_major_index, std::size_t count)
{
    return (element_major_index % 3) * count + element_major_index / 3;
}

std::size_t element_major_index(std::size_t coordinate_major_index, std::size_t count)
{
    return 3 * (coordinate_major_index % count) + coordinate_major_index / count;
}

SystemChannel assemble(std::span<const ElementFrame> tx_frames, std::span<const ElementFrame> rx_frames,
                       const EmConstants &k, ChannelModel model, const std::optional<QuadratureSpec> &q, unsigned jobs)
{
    if (tx_frames.empty() || rx_frames.empty())
        throw InvalidArgument("assemble needs at least one transmit and one receive element");
    if ((model == ChannelModel::Exact) != q.has_value())
        throw InvalidArgument("a QuadratureSpec is required for, and only for, the exact model");
    if (q)
        validate(*q);

    const std::size_t M = rx_frames.size();
    const std::size_t N = tx_frames.size();

    SystemChannel ch;
    ch.matrix = MatrixXc::Zero(static_cast<Eigen::Index>(3 * M), static_cast<Eigen::Index>(3 * N));
    ch.ordering = Ordering::ElementMajor;
    ch.m_elements = M;
    ch.n_elements = N;
    ch.model = model;
    ch.frequency = k.frequency;

    std::vector<int> nodes(M * N, 0);
    parallel_for(M * N, jobs, [&](std::size_t idx) {
        const std::size_t m = idx / N;
        const std::size_t n = idx % N;
        try
        {
            PairChannel pair = pair_channel(model, tx_frames[n], rx_frames[m], k, q);
            ch.matrix.block<3, 3>(static_cast<Eigen::Index>(3 * m), static_cast<Eigen::Index>(3 * n)) = pair.matrix;
            nodes[idx] = pair.quadrature_nodes;
        }
        catch (Error &e)
        {
            e.prepend_context("pair (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
            throw;
        }
    });
    ch.oracle_nodes = *std::max_element(nodes.begin(), nodes.end());
    return ch;
}

SystemChannel reorder(const SystemChannel &ch)
{
    const std::size_t M = ch.m_elements;
    const std::size_t N = ch.n_elements;
    if (ch.matrix.rows() != static_cast<Eigen::Index>(3 * M) || ch.matrix.cols() != static_cast<Eigen::Index>(3 * N))
        throw DimensionMismatch("system channel dimensions do not match its element counts");

    SystemChannel out = ch;
    out.ordering = other(ch.ordering);
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t u = 0; u < 3; ++u)
        {
            const auto row_from = static_cast<Eigen::Index>(flat_index(m, u, M, ch.ordering));
            const auto row_to = static_cast<Eigen::Index>(flat_index(m, u, M, out.ordering));
            for (std::size_t n = 0; n < N; ++n)
                for (std::size_t v = 0; v < 3; ++v)
                    out.matrix(row_to, static_cast<Eigen::Index>(flat_index(n, v, N, out.ordering))) =
                        ch.matrix(row_from, static_cast<Eigen::Index>(flat_index(n, v, N, ch.ordering)));
        }
    return out;
}

CurrentVector reorder(const CurrentVector &j)
{
    return {permute_vector(j.values, j.ordering), other(j.ordering)};
}

FieldVector reorder(const FieldVector &e)
{
    return {permute_vector(e.values, e.ordering), other(e.ordering)};
}

FieldVector apply(const SystemChannel &ch, const CurrentVector &j)
{
    if (ch.ordering != j.ordering)
        throw OrderingMismatch("channel is " + std::string(to_string(ch.ordering)) + " but current is " +
                               std::string(to_string(j.ordering)));
    if (j.values.size() != ch.matrix.cols())
        throw DimensionMismatch("current length " + std::to_string(j.values.size()) + " does not match " +
                                std::to_string(ch.matrix.cols()) + " channel columns");
    return {ch.matrix * j.values, ch.ordering};
}

std::vector<DownlinkField> multiuser_downlink(std::span<const SystemChannel> channels,
                                              std::span<const CurrentVector> currents)
{
    if (channels.empty() || channels.size() != currents.size())
        throw DimensionMismatch("need one current vector per channel and at least one user");
    for (const auto &ch : channels)
        if (ch.matrix.cols() != channels.front().matrix.cols() || ch.ordering != channels.front().ordering)
            throw DimensionMismatch("all users must share the transmit dimension and ordering");

    std::vector<DownlinkField> out;
    out.reserve(channels.size());
    for (std::size_t k = 0; k < channels.size(); ++k)
    {
        DownlinkField field;
        field.signal = apply(channels[k], currents[k]);
        field.interference = {VectorXc::Zero(channels[k].matrix.rows()), channels[k].ordering};
        for (std::size_t i = 0; i < currents.size(); ++i)
            if (i != k)
                field.interference.values += apply(channels[k], currents[i]).values;
        out.push_back(std::move(field));
    }
    return out;
}

} // namespace hmimo
