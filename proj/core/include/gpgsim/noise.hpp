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

#ifndef GPGSIM_NOISE_HPP
#define GPGSIM_NOISE_HPP

#include "gpgsim/dicke.hpp"
#include "gpgsim/gpg.hpp"

namespace gpgsim {

struct DecayParams {
    double kappa_over_g;
};

struct ModifiedAction {
    double alpha_sq;
    double achieved_chi;
    /// exp(-kappa theta / g) applied to the third and fourth displacements.
    double displacement_shrink;
};

/// alpha_sq = 2 chi / (e^{-3 theta k/2} + e^{-theta k/2}). Throws ResourceLimitError above `alpha_sq_cap`.
ModifiedAction modified_action(double theta, double target_chi, const DecayParams &d, double alpha_sq_cap = 1e6);

/// Gamma and Delta over the Dicke ladder; R = exp(-Gamma) exp(i Delta).
struct ChannelFactors {
    RMatrix gamma;
    RMatrix delta;
};

/// Gamma from the closed form, Delta as the exact residual phase relative to U_GPG(theta, phi, alpha_sq f(theta)).
ChannelFactors decoherence_factors(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d);
/// Both factors from the coherent-branch composition.
ChannelFactors decoherence_factors_composite(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d);

/// Closed-form Gamma_{M,M'} for |alpha| = |beta|.
double gamma_closed_form(double m, double mp, double theta, double phi, double alpha_sq, double kappa_over_g);

/// log of the (M,M') coherence multiplier of the displacement/dispersive sequence, vacuum in and out,
/// with |alpha| = |beta| = sqrt(alpha_sq). Includes the coherent GPG phase.
Complex coherent_branch_log_coefficient(
    double m, double mp, double theta, double phi, double alpha_sq, double kappa_over_g);

struct FirstOrderFactors {
    RMatrix gamma;
    /// Phase relative to U_GPG with chi = alpha_sq (no decay correction to the action).
    RMatrix delta_unmodified;
};

/// Linear-in-kappa/g expansions, evaluated term by term.
FirstOrderFactors first_order_factors(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d);
/// Exact phase of the coherence multiplier relative to U_GPG with chi = alpha_sq.
RMatrix delta_unmodified_reference(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d);

/// rho -> diag(u) [R o rho] diag(u)^dag.
class DephasedUnitaryChannel {
   public:
    DephasedUnitaryChannel(CVector unitary_diagonal, CMatrix multiplier);

    int n_spins() const noexcept {
        return static_cast<int>(u_.size()) - 1;
    }
    const CVector &unitary_diagonal() const noexcept {
        return u_;
    }
    const CMatrix &multiplier() const noexcept {
        return r_;
    }
    DickeDensity apply(const DickeDensity &rho) const;
    /// Smallest eigenvalue of the multiplier; non-negative iff the channel is CP.
    double min_choi_eigenvalue() const;

   private:
    CVector u_;
    CMatrix r_;
};

/// Per-gate channel with chi = p.chi delivered through modified_action.
DephasedUnitaryChannel noisy_gpg_channel(int n_spins, const GpgParams &p, const DecayParams &d);

struct NoisyScheduleReport {
    CMatrix upsilon;
    double process_fidelity;
    /// Weakest per-gate bound over the schedule.
    double bound_per_gate;
    /// exp(-pi^2 kappa/g).
    double bound_composite;
};

struct NoisyPhasing {
    NoisyScheduleReport report;
    DephasedUnitaryChannel channel;
};

NoisyPhasing noisy_phasing_channel(const PhasingSchedule &schedule, const DecayParams &d);
NoisyPhasing noisy_phasing_channel(int n_spins, int ell, const DecayParams &d);

/// Re sum(upsilon) / (N+1)^2.
double process_fidelity(const CMatrix &upsilon);

/// exp(-6 pi x k) cos(4 pi x k) with x = chi / f(theta); 0 once the cosine argument reaches pi/2.
double per_gate_bound(double chi, double theta, const DecayParams &d);
/// Same bound written with alpha_sq = chi / f(theta).
double per_gate_bound_alpha(double alpha_sq, const DecayParams &d);

}  // namespace gpgsim

#endif
