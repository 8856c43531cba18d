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

#include <benchmark/benchmark.h>

#include <hmimo/analysis.hpp>
#include <hmimo/assembly.hpp>

namespace
{

using namespace hmimo;

const EmConstants &em()
{
    static const EmConstants k = EmConstants::at_frequency(30e9);
    return k;
}

std::pair<ElementFrame, ElementFrame> near_pair()
{
    const double lam = em().wavelength;
    SurfaceSpec t, r;
    t.pitch_h = t.pitch_v = r.pitch_h = r.pitch_v = 0.05 * lam;
    r.center = Vec3(0.1 * lam, 0.0, lam);
    r.angles = Angles::from_degrees(90, 75, 0, 90);
    return {element_frames(t)[0], element_frames(r)[0]};
}

void BM_DyadicGreen(benchmark::State &state)
{
    const Vec3 a(0.0, 0.0, 0.0), b(0.003, -0.002, 0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(dyadic_green(b, a, em().wavenumber));
}
BENCHMARK(BM_DyadicGreen);

void BM_IntegratePair(benchmark::State &state)
{
    const auto [tx, rx] = near_pair();
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_pair(tx, rx, em(), nodes));
    state.SetItemsProcessed(state.iterations() * nodes * nodes * nodes * nodes);
}
BENCHMARK(BM_IntegratePair)->Arg(4)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

void BM_PairModel(benchmark::State &state)
{
    const auto [tx, rx] = near_pair();
    const auto model = static_cast<ChannelModel>(state.range(0));
    const auto q = model == ChannelModel::Exact ? std::optional(QuadratureSpec{}) : std::nullopt;
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_channel(model, tx, rx, em(), q));
    state.SetLabel(std::string(to_string(model)));
}
BENCHMARK(BM_PairModel)
    ->Arg(static_cast<int>(ChannelModel::Exact))
    ->Arg(static_cast<int>(ChannelModel::CA1))
    ->Arg(static_cast<int>(ChannelModel::CA2));

void BM_AssembleReference(benchmark::State &state)
{
    const ExperimentSetup s = reference_setup();
    const auto tx = element_frames(s.tx);
    const auto rx = element_frames(s.rx);
    const auto model = static_cast<ChannelModel>(state.range(0));
    const auto q = model == ChannelModel::Exact ? std::optional(QuadratureSpec{6, 3, 1e-9}) : std::nullopt;
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble(tx, rx, s.em, model, q, 1));
    state.SetLabel(std::string(to_string(model)));
}
BENCHMARK(BM_AssembleReference)
    ->Arg(static_cast<int>(ChannelModel::Exact))
    ->Arg(static_cast<int>(ChannelModel::CA1))
    ->Unit(benchmark::kMillisecond);

void BM_SingularSpectrum(benchmark::State &state)
{
    const ExperimentSetup s = reference_setup();
    const SystemChannel ch = assemble(element_frames(s.tx), element_frames(s.rx), s.em, ChannelModel::CA1);
    for (auto _ : state)
        benchmark::DoNotOptimize(singular_spectrum(ch));
}
BENCHMARK(BM_SingularSpectrum);

} // namespace

BENCHMARK_MAIN();
