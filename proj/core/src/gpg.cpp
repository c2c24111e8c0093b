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

#include "gpgsim/gpg.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

void check_params(const GpgParams &p) {
    if (!std::isfinite(p.theta) || !std::isfinite(p.phi) || !std::isfinite(p.chi)) {
        throw InvalidArgument("GPG parameters must be finite");
    }
}

void check_ordering(const std::vector<int> &ordering, size_t count) {
    if (ordering.size() != count) {
        throw InvalidArgument("ordering length does not match the gate count");
    }
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); i++) {
        if (sorted[i] != static_cast<int>(i) + 1) {
            throw InvalidArgument("ordering must be a permutation of 1..G");
        }
    }
}

}  // namespace

CVector gpg_unitary(int n_spins, const GpgParams &p) {
    if (n_spins < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    check_params(p);
    CVector d(n_spins + 1);
    for (int i = 0; i <= n_spins; i++) {
        double m = m_of_index(n_spins, i);
        d[i] = std::polar(1.0, -2.0 * p.chi * std::sin(p.theta * m + p.phi));
    }
    return d;
}

PhasingSchedule phasing_schedule(int n_spins, int ell) {
    return phasing_schedule(n_spins, ell, kPi);
}

PhasingSchedule phasing_schedule(int n_spins, int ell, double phase) {
    if (n_spins < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    if (ell < 0 || ell > n_spins) {
        throw InvalidArgument("ell must lie in [0, N], got " + std::to_string(ell));
    }
    if (!std::isfinite(phase)) {
        throw InvalidArgument("phase must be finite");
    }
    double lam = std::fmod(phase, 2 * kPi);
    if (lam < 0) {
        lam += 2 * kPi;
    }
    bool even = n_spins % 2 == 0;
    int count = even ? n_spins / 2 : n_spins;
    double chi = even ? lam / (n_spins + 1) : lam / (2.0 * (n_spins + 1));
    PhasingSchedule s{n_spins, ell, {}, {}};
    for (int k = 1; k <= count; k++) {
        double theta = 2 * kPi * k / (n_spins + 1);
        double phi = 2 * kPi * k * (0.5 * n_spins - ell) / (n_spins + 1) + kPi / 2;
        s.gates.push_back({theta, phi, chi});
        s.ordering.push_back(k);
    }
    return s;
}

PhasingSchedule with_ordering(PhasingSchedule schedule, std::vector<int> ordering) {
    check_ordering(ordering, schedule.gates.size());
    schedule.ordering = std::move(ordering);
    return schedule;
}

CVector schedule_product(const PhasingSchedule &schedule) {
    check_ordering(schedule.ordering, schedule.gates.size());
    CVector d = CVector::Ones(schedule.n_spins + 1);
    for (int k : schedule.ordering) {
        d = d.cwiseProduct(gpg_unitary(schedule.n_spins, schedule.gates[k - 1]));
    }
    return d;
}

CVector ideal_phasing(int n_spins, int ell, double phase) {
    if (ell < 0 || ell > n_spins) {
        throw InvalidArgument("ell must lie in [0, N]");
    }
    CVector d = CVector::Ones(n_spins + 1);
    d[ell] = std::polar(1.0, -phase);
    return d;
}

double aligned_max_deviation(const CVector &a, const CVector &b) {
    if (a.size() != b.size() || a.size() == 0) {
        throw InvalidArgument("aligned_max_deviation: size mismatch");
    }
    Complex r = a[0] / b[0];
    Complex c = r / std::abs(r);
    return (a - c * b).cwiseAbs().maxCoeff();
}

DickeKet apply_phasing(const DickeKet &state, const PhasingSchedule &schedule) {
    if (state.n_spins() != schedule.n_spins) {
        throw InvalidArgument("apply_phasing: N mismatch between state and schedule");
    }
    return DickeKet::normalized(state.n_spins(), state.amplitudes().cwiseProduct(schedule_product(schedule)));
}

std::string schedule_to_json(const PhasingSchedule &schedule) {
    nlohmann::json j;
    j["n_spins"] = schedule.n_spins;
    j["target_ell"] = schedule.target_ell;
    j["gates"] = nlohmann::json::array();
    for (const auto &g : schedule.gates) {
        j["gates"].push_back({{"theta", g.theta}, {"phi", g.phi}, {"chi", g.chi}});
    }
    j["ordering"] = schedule.ordering;
    return j.dump(2);
}

PhasingSchedule schedule_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        PhasingSchedule s;
        s.n_spins = j.at("n_spins").get<int>();
        s.target_ell = j.at("target_ell").get<int>();
        for (const auto &g : j.at("gates")) {
            s.gates.push_back({g.at("theta").get<double>(), g.at("phi").get<double>(), g.at("chi").get<double>()});
        }
        s.ordering = j.at("ordering").get<std::vector<int>>();
        check_ordering(s.ordering, s.gates.size());
        return s;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("invalid schedule JSON: ") + e.what());
    }
}

double decay_action_factor(double theta, double kappa_over_g) {
    return 0.5 * (std::exp(-1.5 * theta * kappa_over_g) + std::exp(-0.5 * theta * kappa_over_g));
}

std::vector<PulseStep> gpg_pulse_decomposition(
    const GpgParams &p, double alpha_mag, double beta_mag, const PulseOptions &opts) {
    check_params(p);
    if (alpha_mag < 0 || beta_mag < 0 || !(opts.kappa_over_g >= 0)) {
        throw InvalidArgument("displacement magnitudes and kappa_over_g must be non-negative");
    }
    double f = decay_action_factor(p.theta, opts.kappa_over_g);
    double achieved = alpha_mag * beta_mag * f;
    if (std::abs(achieved - p.chi) > 1e-12 * std::max(1.0, p.chi)) {
        throw InvalidArgument("alpha_mag * beta_mag * f(theta) must equal chi");
    }
    Complex alpha = std::polar(alpha_mag, p.phi);
    Complex beta = beta_mag;
    double shrink = std::exp(-opts.kappa_over_g * p.theta);
    std::vector<PulseStep> steps;
    if (!opts.vacuum_start) {
        steps.push_back(DispersiveInterval{p.theta, true});
    }
    steps.push_back(Displacement{alpha});
    steps.push_back(DispersiveInterval{p.theta, false});
    steps.push_back(Displacement{beta});
    steps.push_back(DispersiveInterval{p.theta, true});
    steps.push_back(Displacement{-alpha * shrink});
    steps.push_back(DispersiveInterval{p.theta, false});
    steps.push_back(Displacement{-beta * shrink});
    return steps;
}

std::vector<PulseStep> gpg_pulse_decomposition(const GpgParams &p, const PulseOptions &opts) {
    double f = decay_action_factor(p.theta, opts.kappa_over_g);
    double mag = std::sqrt(std::max(p.chi, 0.0) / f);
    return gpg_pulse_decomposition(p, mag, mag, opts);
}

}  // namespace gpgsim
