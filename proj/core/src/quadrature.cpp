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

#include "hmimo/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

#include <gsl/gsl_integration.h>

#include "hmimo/errors.hpp"

namespace hmimo
{

const GaussLegendreRule &gauss_legendre(int n)
{
    if (n < 1)
        throw InvalidArgument("Gauss-Legendre order must be >= 1");

    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const GaussLegendreRule>> cache;

    std::lock_guard lock(mutex);
    auto &slot = cache[n];
    if (!slot)
    {
        std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
            gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)), &gsl_integration_glfixed_table_free);
        if (!table)
            throw InvalidArgument("could not build Gauss-Legendre table of order " + std::to_string(n));

        auto rule = std::make_unique<GaussLegendreRule>();
        rule->nodes.resize(static_cast<std::size_t>(n));
        rule->weights.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &rule->nodes[static_cast<std::size_t>(i)],
                                          &rule->weights[static_cast<std::size_t>(i)], table.get());
        slot = std::move(rule);
    }
    return *slot;
}

} // namespace hmimo
