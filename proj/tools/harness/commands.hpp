// Copyright 2026 The gpgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPGSIM_HARNESS_COMMANDS_HPP
#define GPGSIM_HARNESS_COMMANDS_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "config.hpp"

namespace gpgsim::harness {

struct Option {
    std::string key;
    std::string default_value;
    std::string help;
};

struct RunContext {
    std::filesystem::path out_dir = ".";
    int threads = 0;
};

struct CommandResult {
    std::vector<std::filesystem::path> files;
    /// Non-zero when the command ran but a check it performs failed.
    int exit_code = 0;
};

struct CommandSpec {
    std::string name;
    std::string description;
    /// Always includes "output".
    std::vector<Option> options;
    std::function<CommandResult(const Config &, const RunContext &)> run;
};

const std::vector<CommandSpec> &command_specs();
const CommandSpec &find_command(const std::string &name);

/// Option defaults for `name`, then `cfg` on top.
Config effective_config(const std::string &name, const Config &cfg);

/// Validates keys against the command's options and runs it on the effective config.
/// Throws ConfigError for bad input; nothing is written in that case.
CommandResult run_command(const std::string &name, const Config &cfg, const RunContext &ctx);

}  // namespace gpgsim::harness

#endif
