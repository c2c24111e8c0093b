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

#ifndef GPGSIM_SYNTHESIS_HPP
#define GPGSIM_SYNTHESIS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "gpgsim/dicke.hpp"
#include "gpgsim/gpg.hpp"

namespace gpgsim {

/// K = [prod_s e^{i beta_s Jy} U_GPG(gates[s])] P, s = 1..N-1 left to right, with the fixed
/// P = e^{-i Jy pi/2} U_GPG(pi/2, 0, pi/4) e^{i Jy pi/2}.
struct AnsatzParams {
    std::vector<double> betas;
    std::vector<GpgParams> gates;
};

/// 4N - 4.
int ansatz_parameter_count(int n_spins);
/// (beta_s, theta_s, phi_s, chi_s) per s.
std::vector<double> flatten(const AnsatzParams &p);
AnsatzParams unflatten(int n_spins, const std::vector<double> &x);

CMatrix ansatz_prefix(int n_spins);
CMatrix ansatz_unitary(int n_spins, const AnsatzParams &p);
/// K|J,-J>.
CVector ansatz_column(int n_spins, const AnsatzParams &p);

struct NelderMeadConfig {
    int max_evaluations = 20000;
    double initial_step = 0.3;
    /// Stop when the simplex value spread falls below this.
    double f_tol = 1e-16;
    /// Restarts of the simplex around the incumbent after convergence.
    int reinitializations = 6;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    int evaluations;
};

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             const NelderMeadConfig &cfg = {});

struct SynthesisConfig {
    int restarts = 50;
    uint64_t seed = 1;
    /// Restarts stop early once this infidelity is reached.
    double stop_infidelity = 1e-12;
    NelderMeadConfig local;
};

struct StateMapResult {
    AnsatzParams params;
    double infidelity;
    int best_restart;
    int restarts_run;
    int evaluations;
};

/// Minimizes 1 - |<target|K|J,-J>|^2 from uniform starts in beta in [0,pi), theta in (0,2pi),
/// phi in [0,2pi), chi in [0,pi]. Ties go to the earlier restart.
StateMapResult optimize_state_map(int n_spins, const DickeKet &target, const SynthesisConfig &cfg = {});

/// e^{i angle Jy}.
struct RotationStep {
    double angle;
};

using ProgramStep = std::variant<RotationStep, GpgParams>;

struct SynthesisFactor {
    int k;
    double lambda;
    AnsatzParams map;
    double state_infidelity;
    /// ||K e^{i lambda P} K^dag - (1 + (e^{i lambda} - 1)|v_k><v_k|)||_2.
    double deviation;
};

struct UnitaryProgram {
    int n_spins;
    /// Time order.
    std::vector<ProgramStep> steps;
    std::vector<SynthesisFactor> factors;
    /// Eigenphase removed to reach the lambda_{N+1} = 0 convention.
    double global_phase;
    int gate_count;
    /// 5N^2/2.
    double gate_budget;
};

/// Target U = sum_k e^{i lambda_k} |v_k><v_k| with v_k the columns of `eigenvectors`.
/// Throws InvalidArgument on shape mismatch or a non-orthonormal basis (tolerance 1e-10).
UnitaryProgram synthesize_unitary(int n_spins, const std::vector<double> &eigenphases, const CMatrix &eigenvectors,
                                  const SynthesisConfig &cfg = {});
/// Eigendecomposition by complex Schur form. Throws InvalidArgument unless `u` is unitary.
UnitaryProgram synthesize_unitary(int n_spins, const CMatrix &u, const SynthesisConfig &cfg = {});

/// Product of the program steps, global phase included.
CMatrix program_unitary(const UnitaryProgram &program);
/// Spectral norm of a - c b, c the unit phase minimizing it approximately via tr(b^dag a).
double aligned_spectral_distance(const CMatrix &a, const CMatrix &b);

std::string program_to_json(const UnitaryProgram &program);

}  // namespace gpgsim

#endif
