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

#include "output.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "gpgsim/gpgsim.hpp"

namespace gpgsim::harness {

std::filesystem::path output_directory(const std::string &flag) {
    if (!flag.empty()) {
        return flag;
    }
    if (const char *env = std::getenv("GPGSIM_OUTPUT_DIR"); env && *env) {
        return env;
    }
    return ".";
}

void write_atomic(const std::filesystem::path &path, const std::string &content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw OutputError("cannot create " + path.parent_path().string() + ": " + ec.message());
        }
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << content;
        f.flush();
        if (!f) {
            f.close();
            std::filesystem::remove(tmp, ec);
            throw OutputError("cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw OutputError("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

std::string csv_header(const std::string &command, const Config &cfg) {
    return "# gpgsim " + std::string(version()) + "\n# command " + command + "\n# config_hash " +
           config_hash(command, cfg) + "\n";
}

std::string strip_comments(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace gpgsim::harness
