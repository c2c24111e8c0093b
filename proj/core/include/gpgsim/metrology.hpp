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

#ifndef GPGSIM_METROLOGY_HPP
#define GPGSIM_METROLOGY_HPP

#include <random>
#include <vector>

#include "gpgsim/dicke.hpp"

namespace gpgsim {

struct FieldRotation {
    double eta;
    double field_delta;
};

/// exp(i eta (jx sin(field_delta) + jy cos(field_delta))).
DickeKet apply_field(const DickeKet &state, const FieldRotation &rot);
DickeDensity apply_field(const DickeDensity &state, const FieldRotation &rot);

struct PrecisionReport {
    double delta_eta_sq;
    double crb;
    /// atan(((dJz^2)^2 / (dJx^2)^2)^{1/4}); 0 for a Jz^2 eigenstate.
    double eta_min;
    /// f(eta) at the evaluated point; +inf where the 1/tan^2 term diverges.
    double f_of_eta;
};

enum class EtaMode {
    Value,
    /// eta -> 0 with the tan^2 terms combined before the limit.
    ZeroLimit,
    /// eta = eta_min.
    Optimal,
};

/// Full O = Jz^2 variance from the probe moments. Throws DegenerateEstimatorError if <Jx^2> = <Jz^2>.
PrecisionReport precision_from_moments(int n_spins, const CollectiveMoments &m, EtaMode mode, double eta = 0.0);

PrecisionReport precision_sq(const DickeKet &state, double eta);
PrecisionReport precision_sq(const DickeDensity &state, double eta);
PrecisionReport precision_sq_zero_limit(const DickeKet &state);
PrecisionReport precision_sq_zero_limit(const DickeDensity &state);
PrecisionReport precision_sq_optimal(const DickeKet &state);
PrecisionReport precision_sq_optimal(const DickeDensity &state);

/// 2/(N(N+2)).
double crb(int n_spins);

/// asin(sqrt(8 <Jz^2>/(N(N+2)))). Throws InvalidSignalError outside [0, 1].
double estimate_eta_from_jz2(int n_spins, double mean_jz2);

/// 2/(N(N+2)) + sqrt((1-F)/10).
double mixed_state_precision(int n_spins, double fidelity);
/// 1 - F < 1e-2.
bool in_high_fidelity_regime(double fidelity);
/// a|J,0><J,0| + b 1 with a = (1+1/N)F - 1/N, b = (1-F)/N. Requires even N.
DickeDensity depolarized_model_state(int n_spins, double fidelity);

/// n_bar + pulse_area^2 <Jz^2>.
double readout_mean_excitation(double n_bar, double pulse_area, double mean_jz2);

/// sum M(k)^2 / p.
double classical_average_estimator(const std::vector<double> &samples);

/// Projective Jz outcomes M drawn from |amplitude|^2.
std::vector<double> sample_jz(const DickeKet &state, int count, std::mt19937_64 &rng);

}  // namespace gpgsim

#endif
