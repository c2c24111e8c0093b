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

#include "config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gpgsim::harness {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double to_double(const std::string &key, const std::string &v) {
    char *end = nullptr;
    errno = 0;
    double d = std::strtod(v.c_str(), &end);
    if (v.empty() || *end != '\0' || errno == ERANGE) {
        throw ConfigError(key, "'" + v + "' is not a number");
    }
    return d;
}

long long to_int(const std::string &key, const std::string &v) {
    char *end = nullptr;
    errno = 0;
    long long i = std::strtoll(v.c_str(), &end, 10);
    if (v.empty() || *end != '\0' || errno == ERANGE) {
        throw ConfigError(key, "'" + v + "' is not an integer");
    }
    return i;
}

}  // namespace

Config Config::parse(std::string_view text) {
    Config c;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos || trim(t.substr(0, eq)).empty()) {
            throw ConfigError("", "line " + std::to_string(lineno) + ": expected key = value");
        }
        c.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return c;
}

Config Config::load(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ConfigError("", "cannot read config file " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

void Config::set(const std::string &key, const std::string &value) {
    values_[key] = value;
}

void Config::apply_override(const std::string &assignment) {
    size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("", "override '" + assignment + "' must be key=value");
    }
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void Config::merge(const Config &other) {
    for (const auto &[k, v] : other.values_) {
        values_[k] = v;
    }
}

bool Config::has(const std::string &key) const {
    return values_.count(key) > 0;
}

const std::string &Config::get_string(const std::string &key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        throw ConfigError(key, "missing key");
    }
    return it->second;
}

long long Config::get_int(const std::string &key) const {
    return to_int(key, get_string(key));
}

double Config::get_double(const std::string &key) const {
    return to_double(key, get_string(key));
}

bool Config::get_bool(const std::string &key) const {
    const std::string &v = get_string(key);
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw ConfigError(key, "'" + v + "' is not a boolean");
}

std::vector<int> Config::get_int_list(const std::string &key) const {
    std::vector<int> out;
    const std::string &v = get_string(key);
    if (trim(v).empty()) {
        return out;
    }
    for (const auto &item : split(v, ',')) {
        auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(static_cast<int>(to_int(key, parts[0])));
            continue;
        }
        if (parts.size() > 3) {
            throw ConfigError(key, "range '" + item + "' must be a:b or a:b:step");
        }
        long long a = to_int(key, parts[0]);
        long long b = to_int(key, parts[1]);
        long long step = parts.size() == 3 ? to_int(key, parts[2]) : 1;
        if (step <= 0 || b < a || (b - a) / step > 1000000) {
            throw ConfigError(key, "range '" + item + "' is empty or too large");
        }
        for (long long x = a; x <= b; x += step) {
            out.push_back(static_cast<int>(x));
        }
    }
    return out;
}

std::vector<double> Config::get_double_list(const std::string &key) const {
    std::vector<double> out;
    const std::string &v = get_string(key);
    if (trim(v).empty()) {
        return out;
    }
    for (const auto &item : split(v, ',')) {
        out.push_back(to_double(key, item));
    }
    return out;
}

void Config::restrict_to(const std::set<std::string> &known) const {
    for (const auto &[k, v] : values_) {
        if (!known.count(k)) {
            throw ConfigError(k, "unknown key");
        }
    }
}

std::string Config::canonical() const {
    std::string out;
    for (const auto &[k, v] : values_) {
        out += k + "=" + v + "\n";
    }
    return out;
}

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string config_hash(const std::string &command, const Config &cfg) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(command + "\n" + cfg.canonical())));
    return buf;
}

}  // namespace gpgsim::harness
