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

#ifndef GPGSIM_LINDBLAD_HPP
#define GPGSIM_LINDBLAD_HPP

#include <vector>

#include "gpgsim/gpg.hpp"
#include "gpgsim/noise.hpp"

namespace gpgsim {

struct LindbladConfig {
    int fock_cutoff = 40;
    double rtol = 1e-9;
    double atol = 1e-12;
    /// Largest tolerated top-level Fock weight.
    double leakage_tolerance = 1e-10;
    /// Extra Fock levels used to build the displacement operators before truncating.
    int displacement_padding = 40;
};

/// Joint spin (N+1) x mode (cutoff+1) operator, index s*(cutoff+1) + n.
struct LindbladResult {
    int n_spins;
    int fock_cutoff;
    CMatrix joint;
    /// Largest top-level Fock weight seen at the integrator's accepted steps.
    double max_top_population;
};

/// Integrates drho/dt = -i[V, rho] + kappa (a rho a^dag - {a^dag a, rho}/2) over `steps`, with
/// V = -a^dag a Jz so an unflipped interval is R(theta Jz); flipped intervals are wrapped in
/// exp(-i pi jx) ... exp(+i pi jx). Displacements are instantaneous. Mode starts in vacuum.
/// N <= 3. Throws TruncationError if the top Fock weight exceeds the tolerance.
LindbladResult lindblad_oracle(int n_spins, const CMatrix &spin_input, const std::vector<PulseStep> &steps,
                               const DecayParams &d, const LindbladConfig &cfg = {});

CMatrix reduced_spin(const LindbladResult &r);
/// Tr[(1 x |0><0|) rho].
Complex vacuum_weight(const LindbladResult &r);

/// Spin channel sampled on every dyad |M><M'| plus a physical probe |+><+|, |+> uniform.
struct OracleSpinChannel {
    int n_spins;
    /// outputs[i*(N+1)+k] is the reduced spin output for input |i><k|.
    std::vector<CMatrix> outputs;
    double max_top_population;
    /// Vacuum population after the sequence for the physical probe.
    double probe_vacuum_population;
};

OracleSpinChannel lindblad_spin_channel(int n_spins, const std::vector<PulseStep> &steps, const DecayParams &d,
                                        const LindbladConfig &cfg = {});

/// Normalized Choi state (1/d) sum |i><k| x E(|i><k|).
CMatrix choi_state(const OracleSpinChannel &ch);
CMatrix choi_state(const DephasedUnitaryChannel &ch);
/// (1/2)||a - b||_1 for Hermitian inputs.
double trace_distance(const CMatrix &a, const CMatrix &b);

}  // namespace gpgsim

#endif
