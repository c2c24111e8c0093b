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

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gpgsim/gpgsim.hpp"
#include "json.hpp"
#include "output.hpp"

using namespace gpgsim::harness;

namespace {

int diagnose(const std::string &kind, const std::string &key, const std::string &message, int code) {
    nlohmann::json d = {{"error", kind}, {"message", message}};
    if (!key.empty()) {
        d["key"] = key;
    }
    std::cerr << d.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gpgsim: Dicke-state preparation and metrology experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(gpgsim::version()));

    std::string config_file;
    std::vector<std::string> overrides;
    std::string out_dir;
    int threads = 0;
    app.add_option("--config", config_file, "key = value config file");
    app.add_option("--set", overrides, "key=value override, repeatable");
    app.add_option("--out", out_dir, "output directory (default $GPGSIM_OUTPUT_DIR or .)");
    app.add_option("--threads", threads, "worker threads, 0 for all cores");

    std::map<std::string, std::map<std::string, std::string>> flags;
    std::map<std::string, std::map<std::string, CLI::Option *>> handles;
    for (const auto &spec : command_specs()) {
        CLI::App *sub = app.add_subcommand(spec.name, spec.description);
        for (const auto &o : spec.options) {
            std::string help = o.help + " [" + (o.default_value.empty() ? "empty" : o.default_value) + "]";
            handles[spec.name][o.key] = sub->add_option("--" + o.key, flags[spec.name][o.key], help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return diagnose("usage", "", e.what(), 2);
    }

    std::string name = app.get_subcommands().front()->get_name();
    try {
        Config cfg;
        if (!config_file.empty()) {
            cfg = Config::load(config_file);
        }
        for (const auto &[key, opt] : handles[name]) {
            if (opt->count() > 0) {
                cfg.set(key, flags[name][key]);
            }
        }
        for (const auto &s : overrides) {
            cfg.apply_override(s);
        }
        RunContext ctx{output_directory(out_dir), threads};
        CommandResult r = run_command(name, cfg, ctx);
        for (const auto &f : r.files) {
            std::cout << f.string() << "\n";
        }
        return r.exit_code;
    } catch (const ConfigError &e) {
        return diagnose("invalid_config", e.key, e.what(), 2);
    } catch (const OutputError &e) {
        return diagnose("output", "", e.what(), 3);
    } catch (const std::exception &e) {
        return diagnose("runtime", "", e.what(), 3);
    }
}
