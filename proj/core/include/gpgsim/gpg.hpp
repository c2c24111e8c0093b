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

#ifndef GPGSIM_GPG_HPP
#define GPGSIM_GPG_HPP

#include <string>
#include <variant>
#include <vector>

#include "gpgsim/dicke.hpp"

namespace gpgsim {

struct GpgParams {
    double theta;
    double phi;
    double chi;
};

/// Diagonal of exp(-i 2 chi sin(theta Jz + phi)), ordered by increasing M.
CVector gpg_unitary(int n_spins, const GpgParams &p);

/// GPG list realizing W(ell). `ordering` holds 1-based gate labels k (theta_k = 2 pi k/(N+1)).
struct PhasingSchedule {
    int n_spins;
    int target_ell;
    std::vector<GpgParams> gates;
    std::vector<int> ordering;
};

/// W(ell) = exp(-i pi |J,ell-N/2><J,ell-N/2|) up to a global phase.
PhasingSchedule phasing_schedule(int n_spins, int ell);
/// Same gates with chi rescaled so the product is exp(-i phase |J,ell-N/2><J,ell-N/2|).
/// `phase` is taken modulo 2 pi into [0, 2 pi).
PhasingSchedule phasing_schedule(int n_spins, int ell, double phase);
PhasingSchedule with_ordering(PhasingSchedule schedule, std::vector<int> ordering);

CVector schedule_product(const PhasingSchedule &schedule);
/// Diagonal of exp(-i phase |J,ell-N/2><J,ell-N/2|).
CVector ideal_phasing(int n_spins, int ell, double phase = kPi);
/// Max elementwise |a - c b| where the unit c aligns the M=-J entries.
double aligned_max_deviation(const CVector &a, const CVector &b);
DickeKet apply_phasing(const DickeKet &state, const PhasingSchedule &schedule);

std::string schedule_to_json(const PhasingSchedule &schedule);
PhasingSchedule schedule_from_json(const std::string &text);

struct Displacement {
    Complex amplitude;
};

/// R(sign theta Jz) = exp(i sign theta a^dag a Jz). A flipped interval is realized as
/// exp(i pi jx) R(theta Jz) exp(-i pi jx) = R(-theta Jz).
struct DispersiveInterval {
    double theta;
    bool flipped;
};

using PulseStep = std::variant<Displacement, DispersiveInterval>;

struct PulseOptions {
    bool vacuum_start = true;
    /// Decay compensation: the last two displacements shrink by exp(-kappa_over_g theta).
    double kappa_over_g = 0.0;
};

/// Steps in time order for D(-b)R(t)D(-a)R(-t)D(b)R(t)D(a)[R(-t)], with arg(a) - arg(b) = phi.
/// Requires alpha_mag beta_mag f(theta) = chi, f = 1 without decay.
std::vector<PulseStep> gpg_pulse_decomposition(
    const GpgParams &p, double alpha_mag, double beta_mag, const PulseOptions &opts = {});
/// |alpha| = |beta| = sqrt(chi / f(theta)).
std::vector<PulseStep> gpg_pulse_decomposition(const GpgParams &p, const PulseOptions &opts = {});

/// (exp(-3 theta k/2) + exp(-theta k/2))/2.
double decay_action_factor(double theta, double kappa_over_g);

}  // namespace gpgsim

#endif
