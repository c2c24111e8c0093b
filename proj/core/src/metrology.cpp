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

#include "gpgsim/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

DickeKet apply_field(const DickeKet &state, const FieldRotation &rot) {
    return rotate(state, -rot.eta, kPi / 2 - rot.field_delta);
}

DickeDensity apply_field(const DickeDensity &state, const FieldRotation &rot) {
    return rotate(state, -rot.eta, kPi / 2 - rot.field_delta);
}

double crb(int n_spins) {
    if (n_spins < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    return 2.0 / (static_cast<double>(n_spins) * (n_spins + 2));
}

PrecisionReport precision_from_moments(int n_spins, const CollectiveMoments &m, EtaMode mode, double eta) {
    double gap = m.mean_jx2 - m.mean_jz2;
    if (std::abs(gap) <= 1e-12 * std::max(1.0, m.mean_jx2)) {
        throw DegenerateEstimatorError("<Jx^2> = <Jz^2>: the Jz^2 estimator has no signal");
    }
    double vx = m.var_jx2;
    double vz = m.var_jz2;
    // Treat Jz^2 variance at rounding level as exactly zero.
    double scale = std::max(1.0, m.mean_jx2 * m.mean_jx2);
    bool vz_zero = vz <= 1e-13 * scale;
    PrecisionReport r{};
    r.crb = crb(n_spins);
    r.eta_min = (vz_zero || vx <= 0) ? (vz_zero ? 0.0 : kPi / 2) : std::atan(std::pow(vz / vx, 0.25));

    // g = (dJx^2)^2 f(eta) = vz/t + vx t with t = tan^2(eta).
    double g = kInf;
    switch (mode) {
        case EtaMode::Value: {
            if (!std::isfinite(eta)) {
                throw InvalidArgument("eta must be finite");
            }
            double t = std::tan(eta) * std::tan(eta);
            if (t == 0.0) {
                g = vz_zero ? 0.0 : kInf;
            } else {
                g = (vz_zero ? 0.0 : vz / t) + vx * t;
            }
            break;
        }
        case EtaMode::ZeroLimit:
            g = vz_zero ? 0.0 : kInf;
            break;
        case EtaMode::Optimal:
            g = vz_zero ? 0.0 : 2.0 * std::sqrt(vz * vx);
            break;
    }
    double base = 4 * m.mean_jx2 - 3 * m.mean_jy2 - 2 * m.mean_jz2 * (1 + m.mean_jx2) + 6 * m.mean_jz_jx2_jz;
    r.delta_eta_sq = (g + base) / (4 * gap * gap);
    r.f_of_eta = vx > 0 ? g / vx : (g == 0 ? 0.0 : kInf);
    return r;
}

PrecisionReport precision_sq(const DickeKet &state, double eta) {
    return precision_from_moments(state.n_spins(), moments(state), EtaMode::Value, eta);
}

PrecisionReport precision_sq(const DickeDensity &state, double eta) {
    return precision_from_moments(state.n_spins(), moments(state), EtaMode::Value, eta);
}

PrecisionReport precision_sq_zero_limit(const DickeKet &state) {
    return precision_from_moments(state.n_spins(), moments(state), EtaMode::ZeroLimit);
}

PrecisionReport precision_sq_zero_limit(const DickeDensity &state) {
    return precision_from_moments(state.n_spins(), moments(state), EtaMode::ZeroLimit);
}

PrecisionReport precision_sq_optimal(const DickeKet &state) {
    return precision_from_moments(state.n_spins(), moments(state), EtaMode::Optimal);
}

PrecisionReport precision_sq_optimal(const DickeDensity &state) {
    return precision_from_moments(state.n_spins(), moments(state), EtaMode::Optimal);
}

double estimate_eta_from_jz2(int n_spins, double mean_jz2) {
    double r = 8 * mean_jz2 / (static_cast<double>(n_spins) * (n_spins + 2));
    if (!std::isfinite(r) || r < -1e-12 || r > 1 + 1e-12) {
        throw InvalidSignalError("8<Jz^2>/(N(N+2)) outside [0, 1]");
    }
    return std::asin(std::sqrt(std::clamp(r, 0.0, 1.0)));
}

double mixed_state_precision(int n_spins, double fidelity) {
    if (!(fidelity >= 0 && fidelity <= 1)) {
        throw InvalidArgument("fidelity must lie in [0, 1]");
    }
    return crb(n_spins) + std::sqrt((1 - fidelity) / 10);
}

bool in_high_fidelity_regime(double fidelity) {
    return 1 - fidelity < 1e-2;
}

DickeDensity depolarized_model_state(int n_spins, double fidelity) {
    if (n_spins < 2 || n_spins % 2 != 0) {
        throw InvalidArgument("depolarized model needs even N (|J,0> must exist)");
    }
    if (!(fidelity >= 0 && fidelity <= 1)) {
        throw InvalidArgument("fidelity must lie in [0, 1]");
    }
    double a = (1 + 1.0 / n_spins) * fidelity - 1.0 / n_spins;
    double b = (1 - fidelity) / n_spins;
    CMatrix rho = CMatrix::Identity(n_spins + 1, n_spins + 1) * b;
    rho(n_spins / 2, n_spins / 2) += a;
    return DickeDensity(n_spins, rho);
}

double readout_mean_excitation(double n_bar, double pulse_area, double mean_jz2) {
    return n_bar + pulse_area * pulse_area * mean_jz2;
}

double classical_average_estimator(const std::vector<double> &samples) {
    if (samples.empty()) {
        throw InvalidArgument("classical_average_estimator needs at least one sample");
    }
    double s = 0;
    for (double m : samples) {
        s += m * m;
    }
    return s / static_cast<double>(samples.size());
}

std::vector<double> sample_jz(const DickeKet &state, int count, std::mt19937_64 &rng) {
    if (count < 0) {
        throw InvalidArgument("sample count must be non-negative");
    }
    std::vector<double> p(state.dimension());
    for (int i = 0; i < state.dimension(); i++) {
        p[i] = std::norm(state.amplitudes()[i]);
    }
    std::discrete_distribution<int> dist(p.begin(), p.end());
    std::vector<double> out(count);
    for (auto &x : out) {
        x = m_of_index(state.n_spins(), dist(rng));
    }
    return out;
}

}  // namespace gpgsim
