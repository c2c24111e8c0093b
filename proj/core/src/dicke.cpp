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

#include "gpgsim/dicke.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include <Eigen/Eigenvalues>

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

void require_spins(int n) {
    if (n < 1) {
        throw InvalidArgument("n_spins must be >= 1, got " + std::to_string(n));
    }
}

void require_length(int n, Eigen::Index len) {
    if (len != n + 1) {
        throw InvalidArgument(
            "expected " + std::to_string(n + 1) + " Dicke amplitudes, got " + std::to_string(len));
    }
}

void require_finite(double x, const char *name) {
    if (!std::isfinite(x)) {
        throw InvalidArgument(std::string(name) + " must be finite");
    }
}

// <M+1|J+|M> for index i (M = i - J).
double ladder(int n, int i) {
    double j = 0.5 * n;
    double m = i - j;
    return std::sqrt(std::max(0.0, j * (j + 1) - m * (m + 1)));
}

CVector phase_by_m(int n, double azimuth, double sign) {
    CVector d(n + 1);
    for (int i = 0; i <= n; i++) {
        d[i] = std::polar(1.0, sign * azimuth * m_of_index(n, i));
    }
    return d;
}

}  // namespace

double m_of_index(int n_spins, int index) {
    return index - 0.5 * n_spins;
}

int index_of_m(int n_spins, double m) {
    double idx = m + 0.5 * n_spins;
    double r = std::round(idx);
    if (std::abs(idx - r) > 1e-9 || r < 0 || r > n_spins) {
        throw InvalidArgument("M=" + std::to_string(m) + " is not on the Dicke ladder for N=" + std::to_string(n_spins));
    }
    return static_cast<int>(r);
}

DickeKet::DickeKet(int n_spins, CVector amplitudes) : n_(n_spins), amps_(std::move(amplitudes)) {
    require_spins(n_);
    require_length(n_, amps_.size());
    double norm2 = amps_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-10) {
        throw InvalidArgument("DickeKet amplitudes are not normalized (norm^2=" + std::to_string(norm2) + ")");
    }
}

DickeKet DickeKet::basis(int n_spins, double m) {
    require_spins(n_spins);
    CVector v = CVector::Zero(n_spins + 1);
    v[index_of_m(n_spins, m)] = 1.0;
    return DickeKet(n_spins, std::move(v));
}

DickeKet DickeKet::lowest(int n_spins) {
    return basis(n_spins, -0.5 * n_spins);
}

DickeKet DickeKet::normalized(int n_spins, CVector amplitudes) {
    require_spins(n_spins);
    require_length(n_spins, amplitudes.size());
    double norm = amplitudes.norm();
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw InvalidArgument("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return DickeKet(n_spins, std::move(amplitudes));
}

Complex DickeKet::amplitude(double m) const {
    return amps_[index_of_m(n_, m)];
}

Complex DickeKet::overlap(const DickeKet &other) const {
    if (other.n_ != n_) {
        throw InvalidArgument("overlap of kets with different N");
    }
    return amps_.dot(other.amps_);
}

double DickeKet::fidelity(const DickeKet &other) const {
    return std::norm(overlap(other));
}

DickeDensity::DickeDensity(int n_spins, CMatrix matrix) : n_(n_spins), rho_(std::move(matrix)) {
    require_spins(n_);
    if (rho_.rows() != n_ + 1 || rho_.cols() != n_ + 1) {
        throw InvalidArgument("DickeDensity must be (N+1)x(N+1)");
    }
    double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (!std::isfinite(herm) || herm > 1e-10) {
        throw InvalidArgument("DickeDensity is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    Complex tr = rho_.trace();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw InvalidArgument("DickeDensity trace is not 1 (" + std::to_string(tr.real()) + ")");
    }
}

DickeDensity DickeDensity::from_ket(const DickeKet &ket) {
    return DickeDensity(ket.n_spins(), ket.amplitudes() * ket.amplitudes().adjoint());
}

double DickeDensity::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double DickeDensity::fidelity(const DickeKet &ket) const {
    if (ket.n_spins() != n_) {
        throw InvalidArgument("fidelity of states with different N");
    }
    return ket.amplitudes().dot(rho_ * ket.amplitudes()).real();
}

double DickeDensity::trace_distance(const DickeDensity &other) const {
    if (other.n_ != n_) {
        throw InvalidArgument("trace distance of states with different N");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_ - other.rho_, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

CollectiveOperators build_collective_operators(int n_spins) {
    require_spins(n_spins);
    int d = n_spins + 1;
    CollectiveOperators ops;
    ops.n_spins = n_spins;
    ops.jz = CMatrix::Zero(d, d);
    ops.j_plus = CMatrix::Zero(d, d);
    for (int i = 0; i < d; i++) {
        ops.jz(i, i) = m_of_index(n_spins, i);
        if (i + 1 < d) {
            ops.j_plus(i + 1, i) = ladder(n_spins, i);
        }
    }
    ops.j_minus = ops.j_plus.adjoint();
    ops.jx = (ops.j_plus + ops.j_minus) * 0.5;
    ops.jy = (ops.j_plus - ops.j_minus) / Complex(0.0, 2.0);
    return ops;
}

CVector apply_jx(int n_spins, const CVector &v) {
    require_length(n_spins, v.size());
    CVector out = CVector::Zero(n_spins + 1);
    for (int i = 0; i < n_spins; i++) {
        double c = 0.5 * ladder(n_spins, i);
        out[i + 1] += c * v[i];
        out[i] += c * v[i + 1];
    }
    return out;
}

CVector apply_jy(int n_spins, const CVector &v) {
    require_length(n_spins, v.size());
    // jy = (J+ - J-)/(2i): <i+1|jy|i> = -i c, <i|jy|i+1> = +i c.
    CVector out = CVector::Zero(n_spins + 1);
    for (int i = 0; i < n_spins; i++) {
        double c = 0.5 * ladder(n_spins, i);
        out[i + 1] += Complex(0.0, -c) * v[i];
        out[i] += Complex(0.0, c) * v[i + 1];
    }
    return out;
}

CVector apply_jz(int n_spins, const CVector &v) {
    require_length(n_spins, v.size());
    CVector out(n_spins + 1);
    for (int i = 0; i <= n_spins; i++) {
        out[i] = m_of_index(n_spins, i) * v[i];
    }
    return out;
}

CollectiveMoments moments(const DickeKet &state) {
    int n = state.n_spins();
    const CVector &v = state.amplitudes();
    CVector x1 = apply_jx(n, v);
    CVector x2 = apply_jx(n, x1);
    CVector y1 = apply_jy(n, v);
    CVector z1 = apply_jz(n, v);
    CVector xz = apply_jx(n, z1);
    CollectiveMoments m{};
    m.mean_jx2 = x1.squaredNorm();
    m.mean_jy2 = y1.squaredNorm();
    m.mean_jz2 = z1.squaredNorm();
    m.mean_jz_jx2_jz = xz.squaredNorm();
    m.var_jx2 = std::max(0.0, x2.squaredNorm() - m.mean_jx2 * m.mean_jx2);
    double z4 = apply_jz(n, z1).squaredNorm();
    m.var_jz2 = std::max(0.0, z4 - m.mean_jz2 * m.mean_jz2);
    return m;
}

namespace {

CMatrix apply_cols(int n, const CMatrix &a, CVector (*op)(int, const CVector &)) {
    CMatrix out(a.rows(), a.cols());
    for (Eigen::Index c = 0; c < a.cols(); c++) {
        out.col(c) = op(n, a.col(c));
    }
    return out;
}

}  // namespace

CollectiveMoments moments(const DickeDensity &state) {
    int n = state.n_spins();
    const CMatrix &rho = state.matrix();
    CMatrix x2 = apply_cols(n, apply_cols(n, rho, apply_jx), apply_jx);
    CMatrix x4 = apply_cols(n, apply_cols(n, x2, apply_jx), apply_jx);
    CMatrix y2 = apply_cols(n, apply_cols(n, rho, apply_jy), apply_jy);
    CMatrix z2 = apply_cols(n, apply_cols(n, rho, apply_jz), apply_jz);
    CMatrix z4 = apply_cols(n, apply_cols(n, z2, apply_jz), apply_jz);
    CMatrix zxxz = apply_cols(n, apply_cols(n, apply_cols(n, apply_cols(n, rho, apply_jz), apply_jx), apply_jx), apply_jz);
    CollectiveMoments m{};
    m.mean_jx2 = x2.trace().real();
    m.mean_jy2 = y2.trace().real();
    m.mean_jz2 = z2.trace().real();
    m.mean_jz_jx2_jz = zxxz.trace().real();
    m.var_jx2 = std::max(0.0, x4.trace().real() - m.mean_jx2 * m.mean_jx2);
    m.var_jz2 = std::max(0.0, z4.trace().real() - m.mean_jz2 * m.mean_jz2);
    return m;
}

std::shared_ptr<const JxEigensystem> jx_eigensystem(int n_spins) {
    require_spins(n_spins);
    static std::shared_mutex mutex;
    static std::map<int, std::shared_ptr<const JxEigensystem>> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(n_spins);
        if (it != cache.end()) {
            return it->second;
        }
    }
    std::unique_lock lock(mutex);
    auto it = cache.find(n_spins);
    if (it != cache.end()) {
        return it->second;
    }
    int d = n_spins + 1;
    RVector diag = RVector::Zero(d);
    RVector sub(std::max(d - 1, 0));
    for (int i = 0; i + 1 < d; i++) {
        sub[i] = 0.5 * ladder(n_spins, i);
    }
    auto sys = std::make_shared<JxEigensystem>();
    if (d == 1) {
        sys->values = RVector::Zero(1);
        sys->vectors = RMatrix::Identity(1, 1);
    } else {
        Eigen::SelfAdjointEigenSolver<RMatrix> es;
        es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        sys->vectors = es.eigenvectors();
        sys->values.resize(d);
        for (int i = 0; i < d; i++) {
            sys->values[i] = m_of_index(n_spins, i);
        }
    }
    cache.emplace(n_spins, sys);
    return sys;
}

CVector rotate(int n_spins, const CVector &v, double angle, double azimuth) {
    require_spins(n_spins);
    require_length(n_spins, v.size());
    require_finite(angle, "angle");
    require_finite(azimuth, "azimuth");
    auto sys = jx_eigensystem(n_spins);
    CVector w = v;
    if (azimuth != 0.0) {
        w = w.cwiseProduct(phase_by_m(n_spins, azimuth, +1.0));
    }
    CVector c = sys->vectors.transpose().cast<Complex>() * w;
    for (int i = 0; i <= n_spins; i++) {
        c[i] *= std::polar(1.0, -angle * sys->values[i]);
    }
    w = sys->vectors.cast<Complex>() * c;
    if (azimuth != 0.0) {
        w = w.cwiseProduct(phase_by_m(n_spins, azimuth, -1.0));
    }
    return w;
}

CMatrix rotation_matrix(int n_spins, double angle, double azimuth) {
    require_spins(n_spins);
    require_finite(angle, "angle");
    require_finite(azimuth, "azimuth");
    auto sys = jx_eigensystem(n_spins);
    int d = n_spins + 1;
    CVector e(d);
    for (int i = 0; i < d; i++) {
        e[i] = std::polar(1.0, -angle * sys->values[i]);
    }
    CMatrix v = sys->vectors.cast<Complex>();
    CMatrix u = v * e.asDiagonal() * v.transpose();
    if (azimuth != 0.0) {
        CVector l = phase_by_m(n_spins, azimuth, -1.0);
        u = l.asDiagonal() * u * l.conjugate().asDiagonal();
    }
    return u;
}

DickeKet rotate(const DickeKet &state, double angle, double azimuth) {
    return DickeKet::normalized(state.n_spins(), rotate(state.n_spins(), state.amplitudes(), angle, azimuth));
}

DickeDensity rotate(const DickeDensity &state, double angle, double azimuth) {
    CMatrix u = rotation_matrix(state.n_spins(), angle, azimuth);
    CMatrix r = u * state.matrix() * u.adjoint();
    CMatrix h = 0.5 * (r + r.adjoint());
    return DickeDensity(state.n_spins(), h);
}

CMatrix wigner_d_matrix(int n_spins, double angle) {
    return rotation_matrix(n_spins, angle, kPi / 2);
}

CMatrix exp_i_jy(int n_spins, double angle) {
    return rotation_matrix(n_spins, -angle, kPi / 2);
}

CMatrix exp_i_jx(int n_spins, double angle) {
    return rotation_matrix(n_spins, -angle, 0.0);
}

DickeKet spin_coherent(int n_spins, double epsilon) {
    return rotate(DickeKet::lowest(n_spins), -epsilon, kPi / 2);
}

}  // namespace gpgsim
