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

#include "gpgsim/pipeline.hpp"

#include "gpgsim/decoupling.hpp"
#include "gpgsim/errors.hpp"

namespace gpgsim {

NoisyPreparation noisy_prepare_dicke(int n_spins, double target_m, const NoisyPreparationConfig &cfg) {
    if (!(cfg.decay.kappa_over_g >= 0) || !(cfg.dephasing_per_reflection >= 0)) {
        throw InvalidArgument("noise parameters must be non-negative");
    }
    GroverPlan plan = make_plan(n_spins, target_m);
    DickeKet target = DickeKet::basis(n_spins, target_m);
    if (plan.degenerate) {
        DickePreparation p = prepare_dicke(n_spins, target_m);
        DickeDensity rho = DickeDensity::from_ket(p.state);
        return {rho, rho.fidelity(target), plan};
    }
    int ell = index_of_m(n_spins, target_m);
    DephasedUnitaryChannel w_target = noisy_phasing_channel(n_spins, ell, cfg.decay).channel;
    DephasedUnitaryChannel w_zero = noisy_phasing_channel(n_spins, 0, cfg.decay).channel;
    double a = cfg.dephasing_per_reflection;
    DickeDensity rho = DickeDensity::from_ket(spin_coherent(n_spins, plan.epsilon));
    for (int s = 0; s < plan.n_steps; s++) {
        rho = w_target.apply(rho);
        if (a > 0) {
            rho = apply_global_dephasing(rho, a);
        }
        rho = rotate(rho, plan.epsilon, kPi / 2);
        rho = w_zero.apply(rho);
        rho = rotate(rho, -plan.epsilon, kPi / 2);
        if (a > 0) {
            rho = apply_global_dephasing(rho, a);
        }
    }
    return {rho, rho.fidelity(target), plan};
}

}  // namespace gpgsim
