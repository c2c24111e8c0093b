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
#include <random>

#include "gpgsim/errors.hpp"
#include "gpgsim/gpg.hpp"
#include "gpgsim/lindblad.hpp"
#include "oracles.hpp"

using namespace gpgsim;

TEST(gpg, zero_chi_is_identity) {
    CVector d = gpg_unitary(5, {1.3, 0.2, 0.0});
    EXPECT_LT((d - CVector::Ones(6)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(gpg, zero_theta_is_global_phase) {
    double c = 0.37;
    CVector d = gpg_unitary(4, {0.0, kPi / 2, c});
    for (auto x : d) {
        EXPECT_NEAR(std::abs(x - std::polar(1.0, -2 * c)), 0.0, 1e-15);
    }
}

TEST(gpg, n2_quarter_turn) {
    CVector d = gpg_unitary(2, {kPi / 2, 0.0, kPi / 4});
    EXPECT_NEAR(std::abs(d[0] - kI), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[1] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[2] + kI), 0.0, 1e-15);
}

TEST(gpg, rejects_non_finite) {
    EXPECT_THROW(gpg_unitary(2, {std::nan(""), 0, 0}), InvalidArgument);
}

TEST(gpg, schedule_shape_even_and_odd) {
    auto s = phasing_schedule(10, 3);
    ASSERT_EQ(s.gates.size(), 5u);
    for (int k = 1; k <= 5; k++) {
        EXPECT_NEAR(s.gates[k - 1].theta, 2 * kPi * k / 11, 1e-15);
        EXPECT_NEAR(s.gates[k - 1].phi, 2 * kPi * k * (5 - 3) / 11.0 + kPi / 2, 1e-13);
        EXPECT_NEAR(s.gates[k - 1].chi, kPi / 11, 1e-15);
    }
    auto o = phasing_schedule(3, 0);
    ASSERT_EQ(o.gates.size(), 3u);
    EXPECT_NEAR(o.gates[0].chi, kPi / 8, 1e-15);
    EXPECT_THROW(phasing_schedule(4, 5), InvalidArgument);
    EXPECT_THROW(phasing_schedule(4, -1), InvalidArgument);
}

TEST(gpg, n2_middle_flip) {
    CVector p = schedule_product(phasing_schedule(2, 1));
    CVector ideal(3);
    ideal << 1, -1, 1;
    EXPECT_LT(aligned_max_deviation(p, ideal), 1e-12);
}

TEST(gpg, n10_middle_flip) {
    EXPECT_LT(aligned_max_deviation(schedule_product(phasing_schedule(10, 5)), ideal_phasing(10, 5)), 1e-10);
}

TEST(gpg, n3_odd_rule) {
    CVector p = schedule_product(phasing_schedule(3, 0));
    EXPECT_LT(aligned_max_deviation(p, ideal_phasing(3, 0)), 1e-10);
}

TEST(gpg, phase_shift_property_all_n_and_ell) {
    for (int n = 2; n <= 40; n++) {
        for (int ell = 0; ell <= n; ell++) {
            double dev = aligned_max_deviation(schedule_product(phasing_schedule(n, ell)), ideal_phasing(n, ell));
            ASSERT_LT(dev, 1e-9) << n << " " << ell;
        }
    }
}

TEST(gpg, general_phase_schedule) {
    for (int n : {2, 5, 12}) {
        for (double lam : {0.0, 0.5, 2.0, 4.0, 6.2}) {
            auto s = phasing_schedule(n, 1, lam);
            EXPECT_LT(aligned_max_deviation(schedule_product(s), ideal_phasing(n, 1, lam)), 1e-10);
        }
    }
}

TEST(gpg, ordering_does_not_change_product) {
    auto s = phasing_schedule(20, 7);
    CVector ref = schedule_product(s);
    std::vector<int> ord = s.ordering;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; t++) {
        std::shuffle(ord.begin(), ord.end(), rng);
        EXPECT_LT((schedule_product(with_ordering(s, ord)) - ref).cwiseAbs().maxCoeff(), 1e-13);
    }
    EXPECT_THROW(with_ordering(s, {1, 2, 3}), InvalidArgument);
    std::vector<int> bad(10, 1);
    EXPECT_THROW(with_ordering(s, bad), InvalidArgument);
}

TEST(gpg, apply_phasing_basis_and_superposition) {
    auto s = phasing_schedule(4, 2);
    DickeKet k = DickeKet::basis(4, 0.0);
    EXPECT_NEAR(apply_phasing(k, s).fidelity(k), 1.0, 1e-12);
    CVector u = CVector::Constant(5, 1 / std::sqrt(5.0));
    DickeKet out = apply_phasing(DickeKet(4, u), s);
    Complex ref = out.amplitudes()[0];
    for (int i = 0; i < 5; i++) {
        Complex expect = (i == 2 ? -1.0 : 1.0) * ref;
        EXPECT_NEAR(std::abs(out.amplitudes()[i] - expect), 0.0, 1e-12);
    }
    CVector z = CVector::Zero(5);
    z[0] = 1.0;
    DickeKet zk(4, z);
    EXPECT_LT(1 - apply_phasing(zk, s).fidelity(zk), 1e-12);
    EXPECT_THROW(apply_phasing(DickeKet::lowest(3), s), InvalidArgument);
}

TEST(gpg, schedule_json_round_trip) {
    auto s = with_ordering(phasing_schedule(8, 2), {4, 1, 3, 2});
    auto back = schedule_from_json(schedule_to_json(s));
    EXPECT_EQ(back.n_spins, 8);
    EXPECT_EQ(back.target_ell, 2);
    EXPECT_EQ(back.ordering, s.ordering);
    for (size_t i = 0; i < s.gates.size(); i++) {
        EXPECT_EQ(back.gates[i].theta, s.gates[i].theta);
        EXPECT_EQ(back.gates[i].phi, s.gates[i].phi);
        EXPECT_EQ(back.gates[i].chi, s.gates[i].chi);
    }
    EXPECT_THROW(schedule_from_json("{\"n_spins\": 2}"), InvalidArgument);
    EXPECT_THROW(schedule_from_json("not json"), InvalidArgument);
}

TEST(gpg, pulse_program_shape) {
    GpgParams p{0.9, 0.4, 0.6};
    auto steps = gpg_pulse_decomposition(p);
    ASSERT_EQ(steps.size(), 7u);
    int intervals = 0;
    for (const auto &s : steps) {
        if (const auto *iv = std::get_if<DispersiveInterval>(&s)) {
            EXPECT_DOUBLE_EQ(iv->theta, 0.9);
            intervals++;
        }
    }
    EXPECT_EQ(intervals, 3);
    EXPECT_EQ(gpg_pulse_decomposition(p, {false, 0.0}).size(), 8u);
    EXPECT_THROW(gpg_pulse_decomposition(p, 1.0, 1.0), InvalidArgument);
    Complex a = std::get<Displacement>(steps[0]).amplitude;
    Complex b = std::get<Displacement>(steps[2]).amplitude;
    EXPECT_NEAR(std::arg(a) - std::arg(b), 0.4, 1e-14);
    EXPECT_NEAR(std::abs(a) * std::abs(b), 0.6, 1e-14);
}

TEST(gpg, pulse_program_zero_chi_is_displacements_only) {
    auto steps = gpg_pulse_decomposition({0.5, 0.0, 0.0}, 0.0, 0.0);
    for (const auto &s : steps) {
        if (const auto *d = std::get_if<Displacement>(&s)) {
            EXPECT_EQ(std::abs(d->amplitude), 0.0);
        }
    }
}

TEST(gpg, decay_factor) {
    EXPECT_DOUBLE_EQ(decay_action_factor(1.0, 0.0), 1.0);
    EXPECT_NEAR(decay_action_factor(2.0, 0.1), 0.5 * (std::exp(-0.3) + std::exp(-0.1)), 1e-15);
}

TEST(gpg, spin_flip_identity) {
    for (int n : {1, 2, 5, 10}) {
        CMatrix f = rotation_matrix(n, kPi, 0.0);
        for (double t : {0.3, 1.9}) {
            CVector r(n + 1);
            for (int i = 0; i <= n; i++) {
                r[i] = std::polar(1.0, -t * m_of_index(n, i));
            }
            CMatrix lhs = f * r.conjugate().asDiagonal() * f.adjoint();
            CMatrix rhs = r.asDiagonal();
            EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-11);
        }
    }
}

// Joint spin-mode evolution with no decay reproduces the GPG and returns the mode to vacuum.
TEST(gpg, pulse_program_round_trip_through_mode) {
    GpgParams p{1.1, 0.7, 0.8};
    auto ch = lindblad_spin_channel(2, gpg_pulse_decomposition(p), {0.0});
    CVector u = gpg_unitary(2, p);
    for (int i = 0; i < 3; i++) {
        for (int k = 0; k < 3; k++) {
            Complex expect = u[i] * std::conj(u[k]);
            EXPECT_NEAR(std::abs(ch.outputs[i * 3 + k](i, k) - expect), 0.0, 1e-8);
        }
    }
    EXPECT_NEAR(ch.probe_vacuum_population, 1.0, 1e-8);
}
