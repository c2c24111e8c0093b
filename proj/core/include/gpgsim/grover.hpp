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

#ifndef GPGSIM_GROVER_HPP
#define GPGSIM_GROVER_HPP

#include "gpgsim/dicke.hpp"
#include "gpgsim/gpg.hpp"

namespace gpgsim {

struct GroverPlan {
    int n_spins;
    double target_m;
    double epsilon;
    double overlap;
    double grover_delta;
    int n_steps;
    /// |M| = J: no amplification, prepare_dicke short-circuits.
    bool degenerate;
};

/// Exact overlap from the Wigner-d column e^{i eps Jy}|J,-J>. Throws InvalidArgument off the ladder.
GroverPlan make_plan(int n_spins, double target_m);

/// floor(pi^{5/4} N^{1/4} / 2^{9/4}).
int asymptotic_step_count(int n_spins);
/// pi^{5/4} N^{1/4} / 2^{9/4} + 1/2 before flooring is the half-integer test quantity.
double asymptotic_step_argument(int n_spins);
/// ceil(32 (2k+1)^4 / pi^5).
long long half_integer_family_size(int k);
/// (sqrt(pi J) sin eps)^{-1/2}; equals (pi J)^{-1/4} for M = 0.
double asymptotic_overlap(int n_spins, double target_m);

/// U_s U_w with U_w = W(M + N/2), U_s = e^{i eps Jy} W(0) e^{-i eps Jy}.
DickeKet grover_step(const DickeKet &state, const GroverPlan &plan);

struct DickePreparation {
    DickeKet state;
    double fidelity;
    GroverPlan plan;
    int gpg_count;
};

DickePreparation prepare_dicke(int n_spins, double target_m);

/// sin^2((n_steps + 1/2) grover_delta).
double predicted_fidelity(const GroverPlan &plan);
/// Phasing gates per reflection times two reflections per step.
int grover_gpg_count(const GroverPlan &plan);

}  // namespace gpgsim

#endif
