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

#ifndef GPGSIM_PIPELINE_HPP
#define GPGSIM_PIPELINE_HPP

#include "gpgsim/dicke.hpp"
#include "gpgsim/grover.hpp"
#include "gpgsim/noise.hpp"

namespace gpgsim {

struct NoisyPreparationConfig {
    DecayParams decay{0.0};
    /// Collective dephasing exponent A applied after every phasing map W.
    double dephasing_per_reflection = 0.0;
};

struct NoisyPreparation {
    DickeDensity state;
    double fidelity;
    GroverPlan plan;
};

/// Grover preparation of |J,M> with each W replaced by its mode-decay channel, followed by
/// rho_{M,M'} -> rho_{M,M'} exp(-(M-M')^2 A) in the lab frame.
NoisyPreparation noisy_prepare_dicke(int n_spins, double target_m, const NoisyPreparationConfig &cfg = {});

}  // namespace gpgsim

#endif
