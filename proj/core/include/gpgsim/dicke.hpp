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

#ifndef GPGSIM_DICKE_HPP
#define GPGSIM_DICKE_HPP

#include <memory>

#include "gpgsim/types.hpp"

namespace gpgsim {

/// Index i of the Dicke ladder holds M = i - N/2.
double m_of_index(int n_spins, int index);
/// Inverse of m_of_index. Throws InvalidArgument if `m` is not on the ladder.
int index_of_m(int n_spins, double m);

/// Pure state on the symmetric subspace, amplitudes ordered by increasing M.
class DickeKet {
   public:
    /// Throws InvalidArgument on length mismatch or |norm^2 - 1| > 1e-10.
    DickeKet(int n_spins, CVector amplitudes);

    static DickeKet basis(int n_spins, double m);
    /// |J,-J>, all spins down.
    static DickeKet lowest(int n_spins);
    /// Rescales `amplitudes` to unit norm.
    static DickeKet normalized(int n_spins, CVector amplitudes);

    int n_spins() const noexcept {
        return n_;
    }
    double j() const noexcept {
        return 0.5 * n_;
    }
    int dimension() const noexcept {
        return n_ + 1;
    }
    const CVector &amplitudes() const noexcept {
        return amps_;
    }
    Complex amplitude(double m) const;
    /// <this|other>.
    Complex overlap(const DickeKet &other) const;
    /// |<this|other>|^2.
    double fidelity(const DickeKet &other) const;

   private:
    int n_;
    CVector amps_;
};

class DickeDensity {
   public:
    /// Checks Hermiticity and unit trace to 1e-10. Positivity is reported by min_eigenvalue().
    DickeDensity(int n_spins, CMatrix matrix);

    static DickeDensity from_ket(const DickeKet &ket);

    int n_spins() const noexcept {
        return n_;
    }
    int dimension() const noexcept {
        return n_ + 1;
    }
    const CMatrix &matrix() const noexcept {
        return rho_;
    }
    double min_eigenvalue() const;
    /// <psi|rho|psi>.
    double fidelity(const DickeKet &ket) const;
    /// (1/2)||rho - sigma||_1.
    double trace_distance(const DickeDensity &other) const;

   private:
    int n_;
    CMatrix rho_;
};

struct CollectiveOperators {
    int n_spins;
    CMatrix jx;
    CMatrix jy;
    CMatrix jz;
    CMatrix j_plus;
    CMatrix j_minus;
};

CollectiveOperators build_collective_operators(int n_spins);

struct CollectiveMoments {
    double mean_jx2;
    double mean_jy2;
    double mean_jz2;
    double mean_jz_jx2_jz;
    double var_jx2;
    double var_jz2;
};

CollectiveMoments moments(const DickeKet &state);
CollectiveMoments moments(const DickeDensity &state);

/// Tridiagonal applications of the collective operators to a vector of length N+1.
CVector apply_jx(int n_spins, const CVector &v);
CVector apply_jy(int n_spins, const CVector &v);
CVector apply_jz(int n_spins, const CVector &v);

/// Eigensystem of jx (real symmetric tridiagonal); eigenvalues snapped to M = -J..J.
struct JxEigensystem {
    RVector values;
    RMatrix vectors;
};

/// Cached per N; safe for concurrent callers.
std::shared_ptr<const JxEigensystem> jx_eigensystem(int n_spins);

/// exp(-i angle (cos(azimuth) jx + sin(azimuth) jy)).
CMatrix rotation_matrix(int n_spins, double angle, double azimuth);
CVector rotate(int n_spins, const CVector &v, double angle, double azimuth);
DickeKet rotate(const DickeKet &state, double angle, double azimuth);
DickeDensity rotate(const DickeDensity &state, double angle, double azimuth);

/// exp(-i angle jy).
CMatrix wigner_d_matrix(int n_spins, double angle);
/// exp(+i angle jy).
CMatrix exp_i_jy(int n_spins, double angle);
/// exp(+i angle jx).
CMatrix exp_i_jx(int n_spins, double angle);

/// exp(+i epsilon jy)|J,-J>.
DickeKet spin_coherent(int n_spins, double epsilon);

}  // namespace gpgsim

#endif
