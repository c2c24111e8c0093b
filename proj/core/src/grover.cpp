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

#include "gpgsim/grover.hpp"

#include <algorithm>
#include <cmath>

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

int target_ell(const GroverPlan &plan) {
    return index_of_m(plan.n_spins, plan.target_m);
}

}  // namespace

GroverPlan make_plan(int n_spins, double target_m) {
    if (n_spins < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    int idx = index_of_m(n_spins, target_m);
    double j = 0.5 * n_spins;
    GroverPlan plan{n_spins, target_m, 0.0, 1.0, kPi, 0, false};
    if (idx == 0 || idx == n_spins) {
        plan.degenerate = true;
        plan.epsilon = idx == 0 ? kPi : 0.0;
        return plan;
    }
    plan.epsilon = std::acos(std::clamp(target_m / j, -1.0, 1.0));
    DickeKet s = spin_coherent(n_spins, plan.epsilon);
    plan.overlap = std::abs(s.amplitudes()[idx]);
    plan.grover_delta = 2 * std::asin(std::min(plan.overlap, 1.0));
    plan.n_steps = static_cast<int>(std::floor(kPi / (4 * plan.overlap)));
    return plan;
}

double asymptotic_step_argument(int n_spins) {
    return std::pow(kPi, 1.25) * std::pow(static_cast<double>(n_spins), 0.25) / std::pow(2.0, 2.25);
}

int asymptotic_step_count(int n_spins) {
    if (n_spins < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    return static_cast<int>(std::floor(asymptotic_step_argument(n_spins)));
}

long long half_integer_family_size(int k) {
    double t = 2.0 * k + 1;
    return static_cast<long long>(std::ceil(32 * t * t * t * t / std::pow(kPi, 5)));
}

double asymptotic_overlap(int n_spins, double target_m) {
    double j = 0.5 * n_spins;
    double s2 = 1 - (target_m / j) * (target_m / j);
    return std::pow(std::sqrt(kPi * j) * std::sqrt(std::max(s2, 0.0)), -0.5);
}

DickeKet grover_step(const DickeKet &state, const GroverPlan &plan) {
    int n = plan.n_spins;
    if (state.n_spins() != n) {
        throw InvalidArgument("grover_step: N mismatch");
    }
    DickeKet w = apply_phasing(state, phasing_schedule(n, target_ell(plan)));
    // e^{-i eps Jy} then W(0) then e^{+i eps Jy}.
    CVector v = rotate(n, w.amplitudes(), plan.epsilon, kPi / 2);
    v = v.cwiseProduct(schedule_product(phasing_schedule(n, 0)));
    v = rotate(n, v, -plan.epsilon, kPi / 2);
    return DickeKet::normalized(n, v);
}

DickePreparation prepare_dicke(int n_spins, double target_m) {
    GroverPlan plan = make_plan(n_spins, target_m);
    DickeKet target = DickeKet::basis(n_spins, target_m);
    if (plan.degenerate) {
        // |J,J> is the global flip exp(-i pi jx)|J,-J>.
        DickeKet out = plan.epsilon == 0.0 ? rotate(DickeKet::lowest(n_spins), kPi, 0.0) : DickeKet::lowest(n_spins);
        return {out, target.fidelity(out), plan, 0};
    }
    DickeKet psi = spin_coherent(n_spins, plan.epsilon);
    for (int s = 0; s < plan.n_steps; s++) {
        psi = grover_step(psi, plan);
    }
    return {psi, target.fidelity(psi), plan, grover_gpg_count(plan)};
}

double predicted_fidelity(const GroverPlan &plan) {
    double s = std::sin((plan.n_steps + 0.5) * plan.grover_delta);
    return s * s;
}

int grover_gpg_count(const GroverPlan &plan) {
    if (plan.degenerate) {
        return 0;
    }
    int per_reflection = plan.n_spins % 2 == 0 ? plan.n_spins / 2 : plan.n_spins;
    return 2 * per_reflection * plan.n_steps;
}

}  // namespace gpgsim
