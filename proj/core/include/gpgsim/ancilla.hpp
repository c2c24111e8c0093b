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

#ifndef GPGSIM_ANCILLA_HPP
#define GPGSIM_ANCILLA_HPP

#include <vector>

#include <Eigen/Dense>

#include "gpgsim/dicke.hpp"
#include "gpgsim/gpg.hpp"

namespace gpgsim {

/// One ancilla qubit times the Dicke register. Row a of `amplitudes` is the |a>_A branch.
class AncillaDickeState {
   public:
    /// Throws InvalidArgument on shape mismatch or |norm^2 - 1| > 1e-12.
    AncillaDickeState(int n_spins, CMatrix amplitudes);

    static AncillaDickeState product(const Eigen::Vector2cd &ancilla, const DickeKet &ket);

    int n_spins() const noexcept {
        return n_;
    }
    const CMatrix &amplitudes() const noexcept {
        return amps_;
    }
    CVector branch(int ancilla_bit) const;
    /// Stacked (|0>_A block, |1>_A block) vector of length 2(N+1).
    CVector flattened() const;

   private:
    int n_;
    CMatrix amps_;
};

/// |0><0| (x) zero_block + |1><1| (x) one_block.
struct BlockOperator {
    CMatrix zero_block;
    CMatrix one_block;

    /// identity on |0>_A, u on |1>_A.
    static BlockOperator controlled(const CMatrix &u);
    /// u on both blocks.
    static BlockOperator uncontrolled(const CMatrix &u);

    int n_spins() const noexcept {
        return static_cast<int>(zero_block.rows()) - 1;
    }
    AncillaDickeState apply(const AncillaDickeState &state) const;
    /// Dense 2(N+1) matrix in the flattened() basis.
    CMatrix dense() const;
};

/// this applied after `first`.
BlockOperator operator*(const BlockOperator &later, const BlockOperator &first);

/// Single-qubit gate on the ancilla.
AncillaDickeState apply_ancilla_gate(const AncillaDickeState &state, const Eigen::Matrix2cd &gate);

/// Lambda(U_GPG).
BlockOperator controlled_gpg(int n_spins, const GpgParams &p);

struct ControlledRotation {
    /// Lambda(e^{i Jy pi/2}) = e^{-i Jx pi/2} core e^{i Jx pi/2}.
    BlockOperator op;
    /// Lambda(U_GPG(theta, 0, pi/(4 theta))).
    BlockOperator core;
    double theta;
    /// Phase-space area of the core gate, chi = pi/(4 theta).
    double alpha_sq;
    /// 1 - |Tr(V^dag U)|^2/(N+1)^2 of the core block against exp(-i jz pi/2).
    double block_infidelity;
    /// theta N >= 1.
    bool precondition_warning;
};

/// 1e-3 / N.
double default_rotation_theta(int n_spins);
/// Throws InvalidArgument unless theta > 0.
ControlledRotation controlled_collective_rotation(int n_spins, double theta);

/// e^{i Jy pi/2} U_GPG(pi, pi/2, pi/8) e^{-i Jy pi/2}. On |J,-J> this gives
/// (|J,-J> + c|J,J>)/sqrt 2 with c = +-i, not c = 1.
CMatrix ghz_step_matrix(int n_spins);
/// Angle a of exp(-i a jz) taking the ghz_step_matrix output to (|J,-J> + |J,J>)/sqrt 2.
double ghz_phase_fix_angle(int n_spins);

/// Diagonal (-1)^{J-M}, the action of Z on every qubit.
CVector z_correction(int n_spins);

/// 2^{-n/2} sum_j sqrt(C(n,j)) |J = k n u/2, M = k j - J>.
DickeKet phi_u(int u, int n, int k);
/// (|J,-J> + sqrt 2 |J,0> + |J,J>)/2.
DickeKet phi1_target(int n_spins);
/// (|J,-J> + |J,0>)/sqrt 2.
DickeKet phi2_target(int n_spins);

struct CircuitOutcome {
    int outcome_r;
    double probability;
    /// After the Z(r) correction.
    DickeKet conditional_state;
    double fidelity;
};

struct TolerantOptions {
    /// Exact e^{i Jy pi/2} and an exact |s> -> |J,0> map in place of the GPG circuits.
    bool ideal_gates = false;
    /// Controlled-rotation theta; <= 0 selects default_rotation_theta.
    double rotation_theta = 0.0;
    /// phi1 only: collective z rotation by ghz_phase_fix_angle after the GHZ step.
    bool ghz_phase_fix = true;
};

struct TolerantPreparation {
    std::vector<CircuitOutcome> outcomes;
    DickeKet target;
    /// Joint state just before the ancilla measurement.
    AncillaDickeState pre_measurement;
    ControlledRotation rotation;
    int n_grover_steps;
    /// Controlled GPGs used, the rotation core included.
    int controlled_gpg_count;
};

/// Throws UnsupportedParityError unless N is even with N/2 odd.
TolerantPreparation prepare_phi2(int n_spins, const TolerantOptions &opts = {});
TolerantPreparation prepare_phi1(int n_spins, const TolerantOptions &opts = {});

}  // namespace gpgsim

#endif
