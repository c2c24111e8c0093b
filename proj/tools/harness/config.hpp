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

#ifndef GPGSIM_HARNESS_CONFIG_HPP
#define GPGSIM_HARNESS_CONFIG_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpgsim::harness {

/// Bad configuration. `key` is empty for document-level problems.
struct ConfigError : std::runtime_error {
    ConfigError(std::string key, const std::string &what) : std::runtime_error(what), key(std::move(key)) {
    }
    std::string key;
};

/// Flat key=value document. Later assignments replace earlier ones.
class Config {
   public:
    /// One `key = value` per line; `#` starts a comment; blank lines ignored.
    static Config parse(std::string_view text);
    static Config load(const std::string &path);

    void set(const std::string &key, const std::string &value);
    /// "key=value".
    void apply_override(const std::string &assignment);
    /// Keys of `other` replace ours.
    void merge(const Config &other);

    bool has(const std::string &key) const;
    const std::string &get_string(const std::string &key) const;
    long long get_int(const std::string &key) const;
    double get_double(const std::string &key) const;
    bool get_bool(const std::string &key) const;
    /// Comma list of integers; `a:b` and `a:b:step` expand to inclusive ranges.
    std::vector<int> get_int_list(const std::string &key) const;
    /// Comma list of reals; empty value gives an empty list.
    std::vector<double> get_double_list(const std::string &key) const;

    /// Throws ConfigError on a key outside `known`.
    void restrict_to(const std::set<std::string> &known) const;

    /// Sorted "key=value\n" lines.
    std::string canonical() const;
    const std::map<std::string, std::string> &entries() const noexcept {
        return values_;
    }

   private:
    std::map<std::string, std::string> values_;
};

uint64_t fnv1a64(std::string_view data);

/// 16 hex digits of fnv1a64 over the command name and canonical config.
std::string config_hash(const std::string &command, const Config &cfg);

}  // namespace gpgsim::harness

#endif
