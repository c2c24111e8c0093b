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

#ifndef GPGSIM_HARNESS_OUTPUT_HPP
#define GPGSIM_HARNESS_OUTPUT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "config.hpp"

namespace gpgsim::harness {

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// `flag` if non-empty, else $GPGSIM_OUTPUT_DIR, else ".".
std::filesystem::path output_directory(const std::string &flag);

/// Writes `content` to a sibling temporary and renames it over `path`. Creates parent directories.
void write_atomic(const std::filesystem::path &path, const std::string &content);

/// "# gpgsim <version>", "# command <name>", "# config_hash <hex>" lines.
std::string csv_header(const std::string &command, const Config &cfg);

/// Body lines of a CSV with '#' comment lines removed.
std::string strip_comments(const std::string &csv);

}  // namespace gpgsim::harness

#endif
