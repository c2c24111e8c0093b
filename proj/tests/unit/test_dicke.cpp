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

#include <random>
#include <thread>

#include "gpgsim/dicke.hpp"
#include "gpgsim/errors.hpp"
#include "gpgsim/full_register.hpp"
#include "gpgsim/gpg.hpp"
#include "oracles.hpp"

using namespace gpgsim;

namespace {

double max_abs(const CMatrix &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace

TEST(dicke, m_index_round_trip) {
    EXPECT_EQ(m_of_index(4, 0), -2.0);
    EXPECT_EQ(m_of_index(3, 3), 1.5);
    for (int n : {1, 2, 7, 10}) {
        for (int i = 0; i <= n; i++) {
            EXPECT_EQ(index_of_m(n, m_of_index(n, i)), i);
        }
    }
    EXPECT_THROW(index_of_m(4, 0.5), InvalidArgument);
    EXPECT_THROW(index_of_m(4, 3.0), InvalidArgument);
}

TEST(dicke, ket_rejects_bad_input) {
    EXPECT_THROW(DickeKet(2, CVector::Zero(3)), InvalidArgument);
    EXPECT_THROW(DickeKet(2, CVector::Ones(2)), InvalidArgument);
    EXPECT_THROW(DickeKet(0, CVector::Ones(1)), InvalidArgument);
    CVector v = CVector::Zero(3);
    v[1] = 1.0;
    DickeKet k(2, v);
    EXPECT_EQ(k.amplitude(0.0), Complex(1.0));
}

TEST(dicke, density_rejects_bad_input) {
    CMatrix m = CMatrix::Identity(3, 3) / 3.0;
    EXPECT_NO_THROW(DickeDensity(2, m));
    m(0, 1) = 0.1;
    EXPECT_THROW(DickeDensity(2, m), InvalidArgument);
    EXPECT_THROW(DickeDensity(2, CMatrix::Identity(3, 3)), InvalidArgument);
}

TEST(dicke, jz_small_cases) {
    auto ops1 = build_collective_operators(1);
    EXPECT_NEAR(ops1.jz(0, 0).real(), -0.5, 1e-15);
    EXPECT_NEAR(ops1.jz(1, 1).real(), 0.5, 1e-15);
    auto ops2 = build_collective_operators(2);
    EXPECT_NEAR(ops2.jz(0, 0).real(), -1.0, 1e-15);
    EXPECT_NEAR(ops2.jz(1, 1).real(), 0.0, 1e-15);
    EXPECT_NEAR(ops2.jz(2, 2).real(), 1.0, 1e-15);
    EXPECT_THROW(build_collective_operators(0), InvalidArgument);
}

TEST(dicke, jx_squared_middle_element) {
    auto ops = build_collective_operators(4);
    CMatrix jx2 = ops.jx * ops.jx;
    EXPECT_NEAR(jx2(2, 2).real(), 3.0, 1e-12);
}

TEST(dicke, operators_match_ladder_oracle) {
    for (int n : {1, 3, 8, 21}) {
        auto ops = build_collective_operators(n);
        auto o = oracles::ladder(n);
        EXPECT_LT(max_abs(ops.jx - o.jx), 1e-13);
        EXPECT_LT(max_abs(ops.jy - o.jy), 1e-13);
        EXPECT_LT(max_abs(ops.jz - o.jz), 1e-13);
        EXPECT_LT(max_abs(ops.jx - 0.5 * (ops.j_plus + ops.j_minus)), 1e-13);
    }
}

TEST(dicke, angular_momentum_algebra) {
    for (int n : {1, 2, 5, 40, 200}) {
        auto o = build_collective_operators(n);
        EXPECT_LT(max_abs(o.jx * o.jy - o.jy * o.jx - kI * o.jz), 1e-11) << n;
        EXPECT_LT(max_abs(o.jy * o.jz - o.jz * o.jy - kI * o.jx), 1e-11) << n;
        EXPECT_LT(max_abs(o.jz * o.jx - o.jx * o.jz - kI * o.jy), 1e-11) << n;
        double j = 0.5 * n;
        CMatrix cas = o.jx * o.jx + o.jy * o.jy + o.jz * o.jz;
        EXPECT_LT(max_abs(cas - j * (j + 1) * CMatrix::Identity(n + 1, n + 1)), 1e-10 * std::max(1.0, j * j));
    }
}

TEST(dicke, tridiagonal_applications_match_dense) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int n : {1, 6, 13}) {
        CVector v(n + 1);
        for (auto &x : v) {
            x = Complex(g(rng), g(rng));
        }
        auto o = build_collective_operators(n);
        EXPECT_LT((apply_jx(n, v) - o.jx * v).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((apply_jy(n, v) - o.jy * v).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((apply_jz(n, v) - o.jz * v).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(dicke, wigner_d_identity_at_zero) {
    EXPECT_LT(max_abs(wigner_d_matrix(7, 0.0) - CMatrix::Identity(8, 8)), 1e-14);
}

TEST(dicke, wigner_d_factorial_element) {
    CMatrix d = wigner_d_matrix(10, kPi / 2);
    double expected = oracles::factorial_overlap(10);
    EXPECT_NEAR(expected, 0.49607837, 1e-8);
    EXPECT_NEAR(std::abs(d(index_of_m(10, 0.0), 0)), expected, 1e-12);
}

TEST(dicke, wigner_d_matches_matrix_exponential) {
    auto o = oracles::ladder(6);
    for (double a : {0.3, 1.7, -2.9, kPi}) {
        CMatrix ref = oracles::expm(Complex(0.0, -a) * o.jy);
        EXPECT_LT(max_abs(wigner_d_matrix(6, a) - ref), 1e-10) << a;
        CMatrix refx = oracles::expm(Complex(0.0, a) * o.jx);
        EXPECT_LT(max_abs(exp_i_jx(6, a) - refx), 1e-10) << a;
        CMatrix h = std::cos(0.4) * o.jx + std::sin(0.4) * o.jy;
        EXPECT_LT(max_abs(rotation_matrix(6, a, 0.4) - oracles::expm(Complex(0.0, -a) * h)), 1e-10);
    }
}

TEST(dicke, rotation_unitarity_large_n) {
    for (int n : {2, 101, 1000}) {
        CMatrix u = rotation_matrix(n, 1.234, 0.7);
        EXPECT_LT(max_abs(u.adjoint() * u - CMatrix::Identity(n + 1, n + 1)), 1e-11) << n;
    }
}

TEST(dicke, rotate_vector_matches_matrix) {
    DickeKet s = spin_coherent(9, 0.8);
    CVector a = rotate(s, 0.6, 1.1).amplitudes();
    CVector b = rotation_matrix(9, 0.6, 1.1) * s.amplitudes();
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(dicke, spin_coherent_matches_binomial_column) {
    for (int n : {1, 4, 10, 31}) {
        for (double eps : {0.0, 0.4, kPi / 2, 2.5}) {
            CVector ref = oracles::binomial_coherent_column(n, eps);
            CVector got = spin_coherent(n, eps).amplitudes();
            EXPECT_LT((got - ref).cwiseAbs().maxCoeff(), 1e-11) << n << " " << eps;
        }
    }
    EXPECT_NEAR(std::abs(spin_coherent(10, kPi / 2).amplitude(0.0)), 0.49607837, 1e-8);
    EXPECT_NEAR(spin_coherent(2, kPi).fidelity(DickeKet::basis(2, 1.0)), 1.0, 1e-12);
    EXPECT_NEAR(spin_coherent(5, 0.0).fidelity(DickeKet::lowest(5)), 1.0, 1e-15);
}

TEST(dicke, moments_of_basis_states) {
    auto m = moments(DickeKet::basis(4, 0.0));
    EXPECT_NEAR(m.mean_jz2, 0.0, 1e-14);
    EXPECT_NEAR(m.mean_jx2, 3.0, 1e-12);
    EXPECT_NEAR(m.mean_jy2, 3.0, 1e-12);
    auto l = moments(DickeKet::lowest(6));
    EXPECT_NEAR(l.mean_jz2, 9.0, 1e-12);
    EXPECT_NEAR(l.var_jz2, 0.0, 1e-12);
}

TEST(dicke, moments_ket_and_density_agree) {
    DickeKet s = spin_coherent(8, 1.1);
    auto a = moments(s);
    auto b = moments(DickeDensity::from_ket(s));
    EXPECT_NEAR(a.mean_jx2, b.mean_jx2, 1e-11);
    EXPECT_NEAR(a.mean_jz_jx2_jz, b.mean_jz_jx2_jz, 1e-11);
    EXPECT_NEAR(a.var_jx2, b.var_jx2, 1e-10);
    EXPECT_NEAR(a.var_jz2, b.var_jz2, 1e-10);
    auto o = oracles::ladder(8);
    CMatrix jx2 = o.jx * o.jx;
    Complex ref = s.amplitudes().dot(jx2 * s.amplitudes());
    EXPECT_NEAR(a.mean_jx2, ref.real(), 1e-11);
    EXPECT_LE(a.mean_jx2, 16.0 + 1e-12);
}

TEST(dicke, density_fidelity_and_trace_distance) {
    DickeKet a = DickeKet::basis(3, 0.5);
    DickeKet b = DickeKet::basis(3, -0.5);
    DickeDensity ra = DickeDensity::from_ket(a);
    DickeDensity rb = DickeDensity::from_ket(b);
    EXPECT_NEAR(ra.fidelity(a), 1.0, 1e-15);
    EXPECT_NEAR(ra.fidelity(b), 0.0, 1e-15);
    EXPECT_NEAR(ra.trace_distance(rb), 1.0, 1e-12);
    EXPECT_GT(ra.min_eigenvalue(), -1e-12);
}

TEST(dicke, jx_eigensystem_cache_is_shared_across_threads) {
    std::vector<std::shared_ptr<const JxEigensystem>> got(6);
    std::vector<std::thread> threads;
    for (int t = 0; t < 6; t++) {
        threads.emplace_back([&, t] { got[t] = jx_eigensystem(57); });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (int t = 1; t < 6; t++) {
        EXPECT_LT((got[t]->vectors - got[0]->vectors).cwiseAbs().maxCoeff(), 0.0 + 1e-300);
    }
    for (int i = 0; i <= 57; i++) {
        EXPECT_EQ(got[0]->values[i], m_of_index(57, i));
    }
}

TEST(full_register, empty_circuit_is_all_down) {
    auto r = full_register_oracle(4, {});
    EXPECT_NEAR(r.state.fidelity(DickeKet::lowest(4)), 1.0, 1e-14);
    EXPECT_LT(r.leakage, 1e-12);
}

TEST(full_register, rotation_matches_wigner_path) {
    auto r = full_register_oracle(4, {global_rotation(-kPi / 2, kPi / 2)});
    CVector ref = exp_i_jy(4, kPi / 2).col(0);
    EXPECT_LT((r.state.amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT(r.leakage, 1e-10);
}

TEST(full_register, gpg_matches_diagonal) {
    GpgParams p{0.7, 0.3, 1.9};
    DickeKet start = spin_coherent(4, 1.0);
    auto r = full_register_oracle(start, {GpgStep{p}});
    CVector ref = start.amplitudes().cwiseProduct(gpg_unitary(4, p));
    EXPECT_LT((r.state.amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(full_register, random_circuits_agree_with_dicke_path) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int n : {2, 4, 6}) {
        for (int trial = 0; trial < 5; trial++) {
            std::vector<RegisterStep> circuit;
            CVector v = DickeKet::lowest(n).amplitudes();
            for (int s = 0; s < 6; s++) {
                double a = u(rng);
                double az = u(rng);
                circuit.push_back(global_rotation(a, az));
                v = rotation_matrix(n, a, az) * v;
                GpgParams p{u(rng), u(rng), std::abs(u(rng))};
                circuit.push_back(GpgStep{p});
                v = v.cwiseProduct(gpg_unitary(n, p));
            }
            auto r = full_register_oracle(n, circuit);
            EXPECT_GT(oracles::state_fidelity(r.state.amplitudes(), v), 1 - 1e-9);
            EXPECT_LT(r.leakage, 1e-10);
        }
    }
}

TEST(full_register, resource_limit) {
    EXPECT_THROW(full_register_oracle(9, {}), ResourceLimitError);
}
