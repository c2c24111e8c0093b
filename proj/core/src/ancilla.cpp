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

#include "gpgsim/ancilla.hpp"

#include <cmath>

#include <boost/math/special_functions/binomial.hpp>

#include "gpgsim/errors.hpp"
#include "gpgsim/grover.hpp"

namespace gpgsim {

namespace {

Eigen::Matrix2cd hadamard() {
    Eigen::Matrix2cd h;
    double s = 1 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    return x;
}

void check_parity(int n_spins) {
    if (n_spins < 2 || n_spins % 2 != 0 || (n_spins / 2) % 2 != 1) {
        throw UnsupportedParityError("error-tolerant circuits need N even with N/2 odd");
    }
}

// Global phase c with product = c * ideal, read off an untouched entry.
Complex schedule_phase(int n_spins, int ell) {
    CVector p = schedule_product(phasing_schedule(n_spins, ell));
    int ref = ell == 0 ? 1 : 0;
    return p[ref] / std::abs(p[ref]);
}

CMatrix reflection(int n_spins, int ell) {
    CMatrix r = CMatrix::Identity(n_spins + 1, n_spins + 1);
    r(ell, ell) = -1.0;
    return r;
}

struct GroverBlock {
    CMatrix unitary;
    /// arg <J,0| unitary |s>, derived from exact reflections and the known gate phases.
    double phase;
    int steps;
    int gpg_count;
};

GroverBlock grover_block(int n_spins, bool ideal) {
    GroverPlan plan = make_plan(n_spins, 0.0);
    int d = n_spins + 1;
    int ell = index_of_m(n_spins, 0.0);
    CVector s = spin_coherent(n_spins, plan.epsilon).amplitudes();
    if (ideal) {
        // Householder reflection taking |s> to |J,0>.
        CVector u = s;
        u[ell] -= 1.0;
        CMatrix h = CMatrix::Identity(d, d) - 2.0 * u * u.adjoint() / u.squaredNorm();
        return {h, std::arg((h * s)[ell]), plan.n_steps, 0};
    }
    CMatrix e = exp_i_jy(n_spins, plan.epsilon);
    CMatrix us = e * schedule_product(phasing_schedule(n_spins, 0)).asDiagonal() * e.adjoint();
    CMatrix step = us * schedule_product(phasing_schedule(n_spins, ell)).asDiagonal();
    CMatrix ideal_step = e * reflection(n_spins, 0) * e.adjoint() * reflection(n_spins, ell);
    CMatrix total = CMatrix::Identity(d, d);
    CMatrix ideal_total = CMatrix::Identity(d, d);
    for (int k = 0; k < plan.n_steps; k++) {
        total = step * total;
        ideal_total = ideal_step * ideal_total;
    }
    Complex c = schedule_phase(n_spins, 0) * schedule_phase(n_spins, ell);
    double phase = plan.n_steps * std::arg(c) + std::arg((ideal_total * s)[ell]);
    return {total, phase, plan.n_steps, grover_gpg_count(plan)};
}

std::vector<CircuitOutcome> measure_and_correct(const AncillaDickeState &state, const DickeKet &target) {
    AncillaDickeState after = apply_ancilla_gate(state, hadamard());
    CVector z = z_correction(state.n_spins());
    std::vector<CircuitOutcome> out;
    for (int bit = 0; bit < 2; bit++) {
        CVector v = after.branch(bit);
        double p = v.squaredNorm();
        if (bit == 1) {
            v = v.cwiseProduct(z);
        }
        DickeKet k = DickeKet::normalized(state.n_spins(), v);
        out.push_back({bit == 0 ? 1 : -1, p, k, target.fidelity(k)});
    }
    return out;
}

AncillaDickeState rephase(const AncillaDickeState &state, double zeta0, double zeta1) {
    Eigen::Matrix2cd g = Eigen::Matrix2cd::Zero();
    g(0, 0) = std::polar(1.0, -zeta0);
    g(1, 1) = std::polar(1.0, -zeta1);
    return apply_ancilla_gate(state, g);
}

}  // namespace

AncillaDickeState::AncillaDickeState(int n_spins, CMatrix amplitudes) : n_(n_spins), amps_(std::move(amplitudes)) {
    if (n_spins < 1 || amps_.rows() != 2 || amps_.cols() != n_spins + 1) {
        throw InvalidArgument("ancilla state must be 2 x (N+1)");
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12) {
        throw InvalidArgument("ancilla state must have unit norm");
    }
}

AncillaDickeState AncillaDickeState::product(const Eigen::Vector2cd &ancilla, const DickeKet &ket) {
    CMatrix a(2, ket.dimension());
    a.row(0) = ancilla[0] * ket.amplitudes().transpose();
    a.row(1) = ancilla[1] * ket.amplitudes().transpose();
    return {ket.n_spins(), a};
}

CVector AncillaDickeState::branch(int ancilla_bit) const {
    if (ancilla_bit != 0 && ancilla_bit != 1) {
        throw InvalidArgument("ancilla bit must be 0 or 1");
    }
    return amps_.row(ancilla_bit).transpose();
}

CVector AncillaDickeState::flattened() const {
    CVector v(2 * (n_ + 1));
    v << branch(0), branch(1);
    return v;
}

BlockOperator BlockOperator::controlled(const CMatrix &u) {
    return {CMatrix::Identity(u.rows(), u.cols()), u};
}

BlockOperator BlockOperator::uncontrolled(const CMatrix &u) {
    return {u, u};
}

AncillaDickeState BlockOperator::apply(const AncillaDickeState &state) const {
    if (zero_block.rows() != state.n_spins() + 1) {
        throw InvalidArgument("block operator dimension mismatch");
    }
    CMatrix a(2, state.n_spins() + 1);
    a.row(0) = (zero_block * state.branch(0)).transpose();
    a.row(1) = (one_block * state.branch(1)).transpose();
    return {state.n_spins(), a};
}

CMatrix BlockOperator::dense() const {
    Eigen::Index d = zero_block.rows();
    CMatrix m = CMatrix::Zero(2 * d, 2 * d);
    m.topLeftCorner(d, d) = zero_block;
    m.bottomRightCorner(d, d) = one_block;
    return m;
}

BlockOperator operator*(const BlockOperator &later, const BlockOperator &first) {
    return {later.zero_block * first.zero_block, later.one_block * first.one_block};
}

AncillaDickeState apply_ancilla_gate(const AncillaDickeState &state, const Eigen::Matrix2cd &gate) {
    CMatrix a = gate * state.amplitudes();
    return {state.n_spins(), a};
}

BlockOperator controlled_gpg(int n_spins, const GpgParams &p) {
    return BlockOperator::controlled(gpg_unitary(n_spins, p).asDiagonal());
}

double default_rotation_theta(int n_spins) {
    if (n_spins < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    return 1e-3 / n_spins;
}

ControlledRotation controlled_collective_rotation(int n_spins, double theta) {
    if (!(theta > 0)) {
        throw InvalidArgument("controlled rotation needs theta > 0");
    }
    double chi = kPi / (4 * theta);
    BlockOperator core = controlled_gpg(n_spins, {theta, 0.0, chi});
    CMatrix ex = exp_i_jx(n_spins, kPi / 2);
    BlockOperator op = BlockOperator::uncontrolled(ex.adjoint()) * core * BlockOperator::uncontrolled(ex);
    CVector ideal(n_spins + 1);
    for (int i = 0; i <= n_spins; i++) {
        ideal[i] = std::polar(1.0, -0.5 * kPi * m_of_index(n_spins, i));
    }
    Complex tr = (ideal.conjugate().array() * core.one_block.diagonal().array()).sum();
    double dd = n_spins + 1.0;
    double infid = std::max(0.0, 1 - std::norm(tr) / (dd * dd));
    return {op, core, theta, chi, infid, theta * n_spins >= 1.0};
}

CMatrix ghz_step_matrix(int n_spins) {
    CMatrix e = exp_i_jy(n_spins, kPi / 2);
    return e * gpg_unitary(n_spins, {kPi, kPi / 2, kPi / 8}).asDiagonal() * e.adjoint();
}

double ghz_phase_fix_angle(int n_spins) {
    CMatrix g = ghz_step_matrix(n_spins);
    return std::arg(g(n_spins, 0) / g(0, 0)) / n_spins;
}

CVector z_correction(int n_spins) {
    CVector z(n_spins + 1);
    for (int i = 0; i <= n_spins; i++) {
        // J - M = N - i ones.
        z[i] = (n_spins - i) % 2 == 0 ? 1.0 : -1.0;
    }
    return z;
}

DickeKet phi_u(int u, int n, int k) {
    if (u < 1 || n < 1 || k < 1) {
        throw InvalidArgument("phi_u needs u, n, k >= 1");
    }
    int n_spins = k * n * u;
    double j = 0.5 * n_spins;
    CVector a = CVector::Zero(n_spins + 1);
    for (int jj = 0; jj <= n; jj++) {
        double amp = std::sqrt(boost::math::binomial_coefficient<double>(n, jj) / std::pow(2.0, n));
        a[index_of_m(n_spins, k * jj - j)] += amp;
    }
    return DickeKet(n_spins, a);
}

DickeKet phi1_target(int n_spins) {
    if (n_spins < 2 || n_spins % 2 != 0) {
        throw InvalidArgument("phi1 needs even N");
    }
    return phi_u(1, 2, n_spins / 2);
}

DickeKet phi2_target(int n_spins) {
    if (n_spins < 2 || n_spins % 2 != 0) {
        throw InvalidArgument("phi2 needs even N");
    }
    return phi_u(2, 1, n_spins / 2);
}

TolerantPreparation prepare_phi2(int n_spins, const TolerantOptions &opts) {
    check_parity(n_spins);
    double theta = opts.rotation_theta > 0 ? opts.rotation_theta : default_rotation_theta(n_spins);
    ControlledRotation rot = controlled_collective_rotation(n_spins, theta);
    BlockOperator rot_op = opts.ideal_gates ? BlockOperator::controlled(exp_i_jy(n_spins, kPi / 2)) : rot.op;
    GroverBlock g = grover_block(n_spins, opts.ideal_gates);

    AncillaDickeState st = AncillaDickeState::product(hadamard().col(0), DickeKet::lowest(n_spins));
    st = rot_op.apply(st);
    st = BlockOperator::controlled(g.unitary).apply(st);
    st = rephase(st, 0.0, g.phase);

    DickeKet target = phi2_target(n_spins);
    TolerantPreparation out{measure_and_correct(st, target), target, st, rot, g.steps, g.gpg_count + 1};
    return out;
}

TolerantPreparation prepare_phi1(int n_spins, const TolerantOptions &opts) {
    check_parity(n_spins);
    double theta = opts.rotation_theta > 0 ? opts.rotation_theta : default_rotation_theta(n_spins);
    ControlledRotation rot = controlled_collective_rotation(n_spins, theta);
    BlockOperator rot_op = opts.ideal_gates ? BlockOperator::controlled(exp_i_jy(n_spins, kPi / 2)) : rot.op;
    GroverBlock g = grover_block(n_spins, opts.ideal_gates);
    CMatrix ghz = ghz_step_matrix(n_spins);
    if (opts.ghz_phase_fix) {
        double a = ghz_phase_fix_angle(n_spins);
        CVector z(n_spins + 1);
        for (int i = 0; i <= n_spins; i++) {
            z[i] = std::polar(1.0, -a * m_of_index(n_spins, i));
        }
        ghz = z.asDiagonal() * ghz;
    }
    double ghz_phase = std::arg(ghz(0, 0));

    AncillaDickeState st =
        AncillaDickeState::product(hadamard() * pauli_x().col(0), DickeKet::lowest(n_spins));
    st = BlockOperator::controlled(ghz).apply(st);
    st = apply_ancilla_gate(st, pauli_x());
    st = rot_op.apply(st);
    st = BlockOperator::controlled(g.unitary).apply(st);
    // HX|0> leaves a -1 on the GHZ branch.
    st = rephase(st, ghz_phase + kPi, g.phase);

    DickeKet target = phi1_target(n_spins);
    TolerantPreparation out{measure_and_correct(st, target), target, st, rot, g.steps, g.gpg_count + 2};
    return out;
}

}  // namespace gpgsim
