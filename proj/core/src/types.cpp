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

#include "hmimo/types.hpp"

namespace hmimo
{

std::string_view to_string(ChannelModel model)
{
    switch (model)
    {
    case ChannelModel::Exact:
        return "Exact";
    case ChannelModel::CA1:
        return "CA1";
    case ChannelModel::CA2:
        return "CA2";
    }
    return "unknown";
}

std::string_view to_string(Ordering ordering)
{
    return ordering == Ordering::ElementMajor ? "element_major" : "coordinate_major";
}

std::optional<ChannelModel> parse_model(std::string_view name)
{
    if (name == "Exact" || name == "exact")
        return ChannelModel::Exact;
    if (name == "CA1" || name == "CA-I" || name == "ca1")
        return ChannelModel::CA1;
    if (name == "CA2" || name == "CA-II" || name == "ca2")
        return ChannelModel::CA2;
    return std::nullopt;
}

std::optional<Ordering> parse_ordering(std::string_view name)
{
    if (name == "element_major" || name == "zeta")
        return Ordering::ElementMajor;
    if (name == "coordinate_major" || name == "varsigma")
        return Ordering::CoordinateMajor;
    return std::nullopt;
}

} // namespace hmimo
