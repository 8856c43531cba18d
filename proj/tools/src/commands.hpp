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

#ifndef HMIMO_TOOLS_COMMANDS_HPP
#define HMIMO_TOOLS_COMMANDS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace hmimo::tools
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_config_error = 2,
    exit_numerical_error = 3,
};

struct Overrides
{
    std::optional<unsigned> jobs;
    std::optional<double> threshold_ratio;
    std::optional<int> quad_nodes;
};

void apply(ExperimentConfig &c, const Overrides &o);

// Each command writes its artifacts plus manifest.json into out_dir and
// returns the names of the files it wrote.
std::vector<std::string> cmd_pair(const ExperimentConfig &c, const std::filesystem::path &out_dir);
std::vector<std::string> cmd_sweep(const ExperimentConfig &c, const std::filesystem::path &out_dir);
std::vector<std::string> cmd_eigen(const ExperimentConfig &c, const std::filesystem::path &out_dir);
std::vector<std::string> cmd_export(const ExperimentConfig &c, const std::filesystem::path &out_dir);

int run_cli(int argc, const char *const *argv);

} // namespace hmimo::tools

#endif
