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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gpgsim/errors.hpp"
#include "gpgsim/lindblad.hpp"
#include "gpgsim/noise.hpp"

using namespace gpgsim;

namespace {

DickeDensity random_density(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix a(n + 1, n + 1);
    for (int i = 0; i <= n; i++) {
        for (int k = 0; k <= n; k++) {
            a(i, k) = Complex(g(rng), g(rng));
        }
    }
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return DickeDensity(n, 0.5 * (rho + rho.adjoint()));
}

}  // namespace

TEST(noise, zero_decay_factors_vanish) {
    auto cf = decoherence_factors(6, {0.7, 0.3, 0.5}, 0.5, {0.0});
    EXPECT_EQ(cf.gamma.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(cf.delta.cwiseAbs().maxCoeff(), 0.0);
    auto cc = decoherence_factors_composite(6, {0.7, 0.3, 0.5}, 0.5, {0.0});
    EXPECT_EQ(cc.gamma.cwiseAbs().maxCoeff(), 0.0);
}

TEST(noise, coherent_branch_without_decay_is_gpg_phase) {
    double th = 0.9;
    double ph = 0.4;
    double a2 = 0.6;
    for (double m : {-1.0, 0.0, 1.5}) {
        for (double mp : {-0.5, 1.0}) {
            Complex lc = coherent_branch_log_coefficient(m, mp, th, ph, a2, 0.0);
            double expect = -2 * a2 * (std::sin(th * m + ph) - std::sin(th * mp + ph));
            EXPECT_NEAR(lc.real(), 0.0, 1e-13);
            EXPECT_NEAR(std::remainder(lc.imag() - expect, 2 * kPi), 0.0, 1e-12);
        }
    }
}

TEST(noise, closed_form_gamma_matches_composition) {
    for (double k : {0.01, 0.1, 0.2}) {
        for (double th : {0.5, 2 * kPi / 3, 2.9}) {
            for (double ph : {0.0, kPi / 2, 2.0}) {
                auto a = decoherence_factors(4, {th, ph, 0.3}, 0.4, {k});
                auto b = decoherence_factors_composite(4, {th, ph, 0.3}, 0.4, {k});
                EXPECT_LT((a.gamma - b.gamma).cwiseAbs().maxCoeff(), 1e-12) << k << " " << th << " " << ph;
            }
        }
    }
}

TEST(noise, first_order_expansion) {
    const int n = 4;
    GpgParams p{2 * kPi / 5, 0.7, 0.0};
    double a2 = 0.5;
    for (double k : {1e-3, 5e-4}) {
        auto exact = decoherence_factors(n, p, a2, {k});
        auto lin = first_order_factors(n, p, a2, {k});
        RMatrix dref = delta_unmodified_reference(n, p, a2, {k});
        double eg = (exact.gamma - lin.gamma).cwiseAbs().maxCoeff();
        double ed = (dref - lin.delta_unmodified).cwiseAbs().maxCoeff();
        EXPECT_LT(eg, 50 * k * k) << k;
        EXPECT_LT(ed, 50 * k * k) << k;
        EXPECT_GT(lin.gamma.cwiseAbs().maxCoeff(), 10 * eg);
    }
}

TEST(noise, modified_action_cases) {
    auto z = modified_action(1.0, 0.4, {0.0});
    EXPECT_DOUBLE_EQ(z.alpha_sq, 0.4);
    EXPECT_DOUBLE_EQ(z.displacement_shrink, 1.0);
    auto m = modified_action(kPi, 0.3, {0.1});
    double f = (std::exp(-0.15 * kPi) + std::exp(-0.05 * kPi)) / 2;
    EXPECT_NEAR(m.alpha_sq, 0.3 / f, 1e-14);
    EXPECT_NEAR(m.achieved_chi, 0.3, 1e-14);
    EXPECT_NEAR(m.displacement_shrink, std::exp(-0.1 * kPi), 1e-15);
    EXPECT_THROW(modified_action(kPi, 0.3, {50.0}), ResourceLimitError);
    EXPECT_THROW(modified_action(kPi, 0.3, {-1.0}), InvalidArgument);
    EXPECT_THROW(modified_action(kPi, 0.3, {0.1}, 0.1), ResourceLimitError);
}

TEST(noise, zero_decay_channel_is_unitary) {
    GpgParams p{0.8, 0.2, 0.45};
    auto ch = noisy_gpg_channel(5, p, {0.0});
    std::mt19937_64 rng(3);
    DickeDensity rho = random_density(5, rng);
    CVector u = gpg_unitary(5, p);
    CMatrix ref = u.asDiagonal() * rho.matrix() * u.conjugate().asDiagonal();
    EXPECT_LT((ch.apply(rho).matrix() - ref).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(noise, diagonal_populations_invariant) {
    auto ch = noisy_gpg_channel(8, {2 * kPi / 9, 1.1, kPi / 9}, {0.15});
    std::mt19937_64 rng(8);
    DickeDensity rho = random_density(8, rng);
    DickeDensity out = ch.apply(rho);
    for (int i = 0; i <= 8; i++) {
        EXPECT_NEAR(out.matrix()(i, i).real(), rho.matrix()(i, i).real(), 1e-14);
    }
}

TEST(noise, channels_are_cptp) {
    std::mt19937_64 rng(11);
    for (double k : {0.01, 0.1, 0.2}) {
        for (int n : {2, 5, 10}) {
            for (int ell = 0; ell <= n; ell += 3) {
                auto np = noisy_phasing_channel(n, ell, {k});
                EXPECT_GT(np.channel.min_choi_eigenvalue(), -1e-10);
                for (int t = 0; t < 3; t++) {
                    DickeDensity out = np.channel.apply(random_density(n, rng));
                    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
                    EXPECT_GT(out.min_eigenvalue(), -1e-9);
                }
            }
        }
    }
}

TEST(noise, factor_symmetries_and_bounds) {
    for (double k : {0.02, 0.1, 0.2}) {
        for (double th = 0.3; th <= kPi + 1e-12; th += 0.4) {
            for (double ph = 0.0; ph < 2 * kPi; ph += 0.9) {
                double a2 = 0.35;
                auto cf = decoherence_factors(6, {th, ph, 0.3}, a2, {k});
                EXPECT_LT((cf.gamma - cf.gamma.transpose()).cwiseAbs().maxCoeff(), 1e-12);
                EXPECT_LT((cf.delta + cf.delta.transpose()).cwiseAbs().maxCoeff(), 1e-12);
                EXPECT_LT(cf.gamma.diagonal().cwiseAbs().maxCoeff(), 1e-15);
                EXPECT_GT(cf.gamma.minCoeff(), -1e-12);
                EXPECT_LE(cf.gamma.maxCoeff(), a2 * 6 * kPi * k);
                EXPECT_LE(cf.delta.cwiseAbs().maxCoeff(), a2 * 4 * kPi * k);
            }
        }
    }
}

TEST(noise, composite_report) {
    auto zero = noisy_phasing_channel(10, 5, {0.0});
    EXPECT_DOUBLE_EQ(zero.report.process_fidelity, 1.0);
    auto r = noisy_phasing_channel(10, 5, {0.01}).report;
    EXPECT_GT(r.process_fidelity, std::exp(-kPi * kPi * 0.01));
    EXPECT_NEAR(r.bound_composite, 0.9061, 1e-4);
    EXPECT_LT(r.upsilon.cwiseAbs().maxCoeff(), 1 + 1e-12);
    EXPECT_LT((r.upsilon.diagonal() - CVector::Ones(11)).cwiseAbs().maxCoeff(), 1e-12);
    auto r2 = noisy_phasing_channel(10, 5, {0.02}).report;
    EXPECT_GT(r2.process_fidelity, std::exp(-kPi * kPi * 0.02));
    EXPECT_LT(r2.process_fidelity, 1.0);
}

TEST(noise, fidelity_nearly_independent_of_n) {
    double f20 = noisy_phasing_channel(20, 10, {0.01}).report.process_fidelity;
    double f40 = noisy_phasing_channel(40, 20, {0.01}).report.process_fidelity;
    EXPECT_LT(std::abs(f20 - f40) / f40, 0.02);
}

TEST(noise, process_fidelity_extremes) {
    EXPECT_DOUBLE_EQ(process_fidelity(CMatrix::Ones(7, 7)), 1.0);
    EXPECT_NEAR(process_fidelity(CMatrix::Identity(7, 7)), 1.0 / 7, 1e-15);
}

TEST(noise, per_gate_bound_below_measured) {
    EXPECT_DOUBLE_EQ(per_gate_bound(0.3, 1.0, {0.0}), 1.0);
    DecayParams d{0.1};
    GpgParams p{2 * kPi / 11, 0.0, kPi / 11};
    double bound = per_gate_bound(p.chi, p.theta, d);
    auto ch = noisy_gpg_channel(10, p, d);
    double measured = process_fidelity(ch.multiplier());
    EXPECT_GT(bound, 0.0);
    EXPECT_LT(bound, measured);
    // The looser of the two written forms.
    EXPECT_LT(per_gate_bound_alpha(p.chi, d), measured);
    EXPECT_DOUBLE_EQ(per_gate_bound_alpha(1.0 / 8, {1.0}), 0.0);
}

TEST(noise, commuting_composition) {
    auto s = phasing_schedule(12, 4);
    auto ref = noisy_phasing_channel(s, {0.05}).report.upsilon;
    std::vector<int> ord = s.ordering;
    std::mt19937_64 rng(9);
    for (int t = 0; t < 5; t++) {
        std::shuffle(ord.begin(), ord.end(), rng);
        auto u = noisy_phasing_channel(with_ordering(s, ord), {0.05}).report.upsilon;
        EXPECT_LT((u - ref).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(noise, per_gate_channel_matches_lindblad_oracle) {
    const double k = 0.1;
    GpgParams p{2 * kPi / 3, kPi / 2, kPi / 3};
    auto steps = gpg_pulse_decomposition(p, PulseOptions{true, k});
    auto oracle = lindblad_spin_channel(2, steps, {k});
    auto ch = noisy_gpg_channel(2, p, {k});
    CVector u = ch.unitary_diagonal();
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            Complex expect = u[i] * std::conj(u[j]) * ch.multiplier()(i, j);
            EXPECT_NEAR(std::abs(oracle.outputs[i * 3 + j](i, j) - expect), 0.0, 1e-6) << i << j;
        }
    }
    EXPECT_NEAR(oracle.probe_vacuum_population, 1.0, 1e-6);
    EXPECT_LT(trace_distance(choi_state(oracle), choi_state(ch)), 1e-5);
}

TEST(noise, lindblad_trace_distance_small_decay) {
    const double k = 0.05;
    GpgParams p{1.3, 0.4, 0.5};
    auto oracle = lindblad_spin_channel(2, gpg_pulse_decomposition(p, PulseOptions{true, k}), {k});
    EXPECT_LT(trace_distance(choi_state(oracle), choi_state(noisy_gpg_channel(2, p, {k}))), 1e-5);
}
