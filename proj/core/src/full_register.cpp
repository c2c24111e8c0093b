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

#include "gpgsim/full_register.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

constexpr int kMaxRegisterSpins = 8;

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Jz eigenvalue of a bitstring: zeros count +1/2, ones -1/2.
double m_of_bits(int n, uint32_t bits) {
    int ones = std::popcount(bits);
    return 0.5 * (n - ones) - 0.5 * ones;
}

void apply_all(int n, CVector &psi, const Eigen::Matrix2cd &g) {
    size_t dim = psi.size();
    for (int q = 0; q < n; q++) {
        uint32_t mask = 1u << q;
        for (size_t b = 0; b < dim; b++) {
            if (b & mask) {
                continue;
            }
            Complex a0 = psi[b];
            Complex a1 = psi[b | mask];
            psi[b] = g(0, 0) * a0 + g(0, 1) * a1;
            psi[b | mask] = g(1, 0) * a0 + g(1, 1) * a1;
        }
    }
}

void check_spins(int n) {
    if (n < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    if (n > kMaxRegisterSpins) {
        throw ResourceLimitError("full_register_oracle supports N <= 8, got " + std::to_string(n));
    }
}

RegisterOracleResult run(int n, CVector psi, const std::vector<RegisterStep> &circuit) {
    size_t dim = psi.size();
    for (const auto &step : circuit) {
        if (const auto *g = std::get_if<QubitGateAll>(&step)) {
            apply_all(n, psi, g->gate);
        } else if (const auto *d = std::get_if<DickeDiagonalStep>(&step)) {
            if (d->phases.size() != n + 1) {
                throw InvalidArgument("Dicke diagonal has the wrong length");
            }
            for (size_t b = 0; b < dim; b++) {
                psi[b] *= d->phases[index_of_m(n, m_of_bits(n, static_cast<uint32_t>(b)))];
            }
        } else {
            const auto &p = std::get<GpgStep>(step).params;
            for (size_t b = 0; b < dim; b++) {
                double m = m_of_bits(n, static_cast<uint32_t>(b));
                psi[b] *= std::polar(1.0, -2.0 * p.chi * std::sin(p.theta * m + p.phi));
            }
        }
    }
    CVector amps = CVector::Zero(n + 1);
    for (size_t b = 0; b < dim; b++) {
        amps[index_of_m(n, m_of_bits(n, static_cast<uint32_t>(b)))] += psi[b];
    }
    for (int i = 0; i <= n; i++) {
        int zeros = i;
        amps[i] /= std::sqrt(binomial(n, zeros));
    }
    double weight = amps.squaredNorm();
    double leakage = std::max(0.0, psi.squaredNorm() - weight);
    return {DickeKet::normalized(n, amps), leakage};
}

}  // namespace

RegisterStep global_rotation(double angle, double azimuth) {
    Eigen::Matrix2cd sx, sy;
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    Eigen::Matrix2cd u = std::cos(angle / 2) * Eigen::Matrix2cd::Identity() -
                         Complex(0, std::sin(angle / 2)) * (std::cos(azimuth) * sx + std::sin(azimuth) * sy);
    return QubitGateAll{u};
}

RegisterStep global_z() {
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    return QubitGateAll{z};
}

RegisterOracleResult full_register_oracle(int n_spins, const std::vector<RegisterStep> &circuit) {
    return full_register_oracle(DickeKet::lowest(n_spins), circuit);
}

RegisterOracleResult full_register_oracle(const DickeKet &initial, const std::vector<RegisterStep> &circuit) {
    int n = initial.n_spins();
    check_spins(n);
    size_t dim = size_t{1} << n;
    CVector psi = CVector::Zero(dim);
    for (size_t b = 0; b < dim; b++) {
        int i = index_of_m(n, m_of_bits(n, static_cast<uint32_t>(b)));
        psi[b] = initial.amplitudes()[i] / std::sqrt(binomial(n, i));
    }
    return run(n, std::move(psi), circuit);
}

}  // namespace gpgsim
