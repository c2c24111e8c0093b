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

#ifndef GPGSIM_FULL_REGISTER_HPP
#define GPGSIM_FULL_REGISTER_HPP

#include <variant>
#include <vector>

#include "gpgsim/dicke.hpp"
#include "gpgsim/gpg.hpp"

namespace gpgsim {

/// The same 2x2 gate on every qubit. Qubit basis {|0>, |1>}, |0> has Jz = +1/2.
struct QubitGateAll {
    Eigen::Matrix2cd gate;
};

/// Phase per M, applied to every bitstring by its Jz eigenvalue.
struct DickeDiagonalStep {
    CVector phases;
};

/// exp(-i 2 chi sin(theta Jz + phi)) evaluated per bitstring.
struct GpgStep {
    GpgParams params;
};

using RegisterStep = std::variant<QubitGateAll, DickeDiagonalStep, GpgStep>;

/// Single-qubit factor of exp(-i angle (cos(az) Jx + sin(az) Jy)).
RegisterStep global_rotation(double angle, double azimuth);
/// Z on every qubit.
RegisterStep global_z();

struct RegisterOracleResult {
    DickeKet state;
    /// 1 - weight in the symmetric sector.
    double leakage;
};

/// Runs `circuit` on the 2^N register from all spins down and projects onto the Dicke basis.
/// N > 8 throws ResourceLimitError.
RegisterOracleResult full_register_oracle(int n_spins, const std::vector<RegisterStep> &circuit);

/// Same, starting from an arbitrary symmetric state embedded on the register.
RegisterOracleResult full_register_oracle(const DickeKet &initial, const std::vector<RegisterStep> &circuit);

}  // namespace gpgsim

#endif
