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

#include <cmath>
#include <random>

#include "gpgsim/errors.hpp"
#include "gpgsim/grover.hpp"
#include "gpgsim/metrology.hpp"
#include "oracles.hpp"

using namespace gpgsim;

TEST(metrology, field_zero_is_identity) {
    DickeKet s = spin_coherent(6, 0.9);
    DickeKet out = apply_field(s, {0.0, 1.2});
    EXPECT_LT((out.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(metrology, field_matches_matrix_exponential) {
    auto o = oracles::ladder(5);
    DickeKet s = spin_coherent(5, 0.4);
    double eta = 0.33;
    double d = 0.8;
    CMatrix u = oracles::expm(Complex(0.0, eta) * (std::sin(d) * o.jx + std::cos(d) * o.jy));
    CVector ref = u * s.amplitudes();
    EXPECT_LT((apply_field(s, {eta, d}).amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-10);
    DickeDensity rho = apply_field(DickeDensity::from_ket(s), {eta, d});
    EXPECT_LT((rho.matrix() - ref * ref.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(metrology, small_angle_jz2) {
    int n = 10;
    for (double eta : {1e-3, 1e-2}) {
        auto m = moments(apply_field(DickeKet::basis(n, 0.0), {eta, 0.3}));
        double lead = n * (n + 2) * eta * eta / 8;
        EXPECT_NEAR(m.mean_jz2, lead, 0.01 * lead);
        // Exact relation sin^2(eta) = 8<Jz^2>/(N(N+2)).
        EXPECT_NEAR(m.mean_jz2, n * (n + 2) * std::sin(eta) * std::sin(eta) / 8, 1e-12);
    }
}

TEST(metrology, field_direction_independence) {
    double ref = moments(apply_field(DickeKet::basis(12, 0.0), {0.4, 0.0})).mean_jz2;
    for (double d = 0; d < 2 * kPi; d += 0.37) {
        EXPECT_NEAR(moments(apply_field(DickeKet::basis(12, 0.0), {0.4, d})).mean_jz2, ref, 1e-10);
    }
}

TEST(metrology, crb_values) {
    EXPECT_DOUBLE_EQ(crb(2), 0.25);
    EXPECT_DOUBLE_EQ(crb(10), 1.0 / 60);
    EXPECT_NEAR(crb(70), 3.9683e-4, 1e-8);
}

TEST(metrology, crb_saturation_zero_limit) {
    for (int n = 2; n <= 500; n += 2) {
        auto r = precision_sq_zero_limit(DickeKet::basis(n, 0.0));
        ASSERT_NEAR(r.delta_eta_sq, crb(n), 1e-12 * std::max(1.0, crb(n))) << n;
        ASSERT_LE(std::abs(r.delta_eta_sq - crb(n)), 1e-12);
    }
    EXPECT_NEAR(precision_sq_zero_limit(DickeKet::basis(70, 0.0)).delta_eta_sq, 3.9683e-4, 1e-8);
    EXPECT_NEAR(precision_sq_zero_limit(DickeKet::basis(10, 0.0)).delta_eta_sq, 1.0 / 60, 1e-14);
}

TEST(metrology, field_delta_invariance_of_precision) {
    DickeKet w = DickeKet::basis(20, 0.0);
    double ref = precision_sq(apply_field(w, {0.0, 0.0}), 0.05).delta_eta_sq;
    for (double d : {0.3, 1.1, 2.9}) {
        EXPECT_NEAR(precision_sq(apply_field(w, {0.0, d}), 0.05).delta_eta_sq, ref, 1e-10);
    }
}

TEST(metrology, grover_state_precision_regression) {
    DickeKet psi = prepare_dicke(70, 0.0).state;
    auto opt = precision_sq_optimal(psi);
    EXPECT_NEAR(opt.delta_eta_sq / crb(70), 1.192, 0.002);
    EXPECT_GE(opt.delta_eta_sq, crb(70) - 1e-12);
    auto zero = precision_sq_zero_limit(psi);
    EXPECT_TRUE(std::isinf(zero.delta_eta_sq));
    EXPECT_GT(moments(psi).var_jz2, 0.01);
}

TEST(metrology, precision_at_finite_eta_approaches_optimum) {
    DickeKet psi = prepare_dicke(70, 0.0).state;
    auto opt = precision_sq_optimal(psi);
    auto at = precision_sq(psi, opt.eta_min);
    EXPECT_NEAR(at.delta_eta_sq, opt.delta_eta_sq, 1e-12);
    EXPECT_GT(precision_sq(psi, 0.5 * opt.eta_min).delta_eta_sq, opt.delta_eta_sq);
    EXPECT_GT(precision_sq(psi, 2 * opt.eta_min).delta_eta_sq, opt.delta_eta_sq);
}

TEST(metrology, degenerate_estimator) {
    // Every single-spin state has <Jx^2> = <Jz^2> = 1/4.
    EXPECT_THROW(precision_sq_optimal(DickeKet::lowest(1)), DegenerateEstimatorError);
}

TEST(metrology, estimate_eta) {
    EXPECT_DOUBLE_EQ(estimate_eta_from_jz2(10, 0.0), 0.0);
    EXPECT_NEAR(estimate_eta_from_jz2(10, 120.0 / 8), kPi / 2, 1e-7);
    EXPECT_THROW(estimate_eta_from_jz2(10, 20.0), InvalidSignalError);
    EXPECT_THROW(estimate_eta_from_jz2(10, -1.0), InvalidSignalError);
    auto m = moments(apply_field(DickeKet::basis(20, 0.0), {0.1, 0.0}));
    EXPECT_NEAR(estimate_eta_from_jz2(20, m.mean_jz2), 0.1, 1e-9);
    for (double eta = 0.05; eta < kPi / 4; eta += 0.1) {
        auto mm = moments(apply_field(DickeKet::basis(16, 0.0), {eta, 0.7}));
        EXPECT_NEAR(estimate_eta_from_jz2(16, mm.mean_jz2), eta, 1e-8);
    }
}

TEST(metrology, mixed_state_precision_values) {
    EXPECT_DOUBLE_EQ(mixed_state_precision(70, 1.0), crb(70));
    EXPECT_NEAR(mixed_state_precision(70, 1 - 1e-4), 3.559e-3, 1e-6);
    EXPECT_TRUE(in_high_fidelity_regime(1 - 1e-3));
    EXPECT_FALSE(in_high_fidelity_regime(0.95));
    EXPECT_THROW(mixed_state_precision(70, 1.5), InvalidArgument);
}

TEST(metrology, mixed_state_precision_monotone) {
    for (int n : {10, 40, 70}) {
        double prev = 1e300;
        for (double f = 0.9; f <= 1.0; f += 0.01) {
            double v = mixed_state_precision(n, f);
            EXPECT_LE(v, prev + 1e-15);
            prev = v;
        }
    }
    for (double f : {0.99, 0.999}) {
        double prev = 1e300;
        for (int n = 4; n <= 200; n += 4) {
            double v = mixed_state_precision(n, f);
            EXPECT_LE(v, prev + 1e-15);
            prev = v;
        }
    }
}

TEST(metrology, depolarized_model_against_closed_form) {
    DickeDensity rho = depolarized_model_state(70, 1 - 1e-3);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GT(rho.min_eigenvalue(), -1e-12);
    double direct = precision_sq_optimal(rho).delta_eta_sq;
    double closed = mixed_state_precision(70, 1 - 1e-3);
    EXPECT_NEAR(direct, closed, 0.1 * closed);
    EXPECT_THROW(depolarized_model_state(7, 0.99), InvalidArgument);
}

TEST(metrology, readout) {
    EXPECT_DOUBLE_EQ(readout_mean_excitation(0.3, 0.0, 5.0), 0.3);
    EXPECT_DOUBLE_EQ(readout_mean_excitation(0.0, 1.0, 3.0), 3.0);
    EXPECT_DOUBLE_EQ(readout_mean_excitation(0.7, 2.0, moments(DickeKet::basis(70, 0.0)).mean_jz2), 0.7);
}

TEST(metrology, classical_average) {
    EXPECT_DOUBLE_EQ(classical_average_estimator({0, 0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(classical_average_estimator({1, -1}), 1.0);
    EXPECT_THROW(classical_average_estimator({}), InvalidArgument);
}

TEST(metrology, monte_carlo_matches_exact_jz2) {
    DickeKet s = apply_field(DickeKet::basis(20, 0.0), {0.2, 0.0});
    auto m = moments(s);
    std::mt19937_64 rng(2024);
    int count = 100000;
    auto samples = sample_jz(s, count, rng);
    double est = classical_average_estimator(samples);
    double fourth = 0;
    for (double x : samples) {
        fourth += x * x * x * x;
    }
    double var = fourth / count - est * est;
    double se = std::sqrt(var / count);
    EXPECT_NEAR(est, m.mean_jz2, 3 * se);
}
