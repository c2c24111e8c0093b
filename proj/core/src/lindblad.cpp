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

#include "gpgsim/lindblad.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

using State = std::vector<double>;

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix displacement(Complex gamma, int cutoff, int padding) {
    int e = cutoff + 1 + padding;
    CMatrix a = CMatrix::Zero(e, e);
    for (int n = 0; n + 1 < e; n++) {
        a(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
    }
    // D = exp(K), K = gamma a^dag - conj(gamma) a = -i H with H Hermitian.
    CMatrix h = Complex(0.0, 1.0) * (gamma * a.adjoint() - std::conj(gamma) * a);
    h = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    CVector ph(e);
    for (int i = 0; i < e; i++) {
        ph[i] = std::polar(1.0, -es.eigenvalues()[i]);
    }
    CMatrix full = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    return full.topLeftCorner(cutoff + 1, cutoff + 1);
}

struct Integrator {
    int n;
    int l1;
    int dim;
    double kappa;
    std::vector<double> h;
    std::vector<double> occ;

    Integrator(int n_spins, int cutoff, double kappa) : n(n_spins), l1(cutoff + 1), dim((n_spins + 1) * (cutoff + 1)), kappa(kappa) {
        h.resize(dim);
        occ.resize(dim);
        for (int s = 0; s <= n; s++) {
            for (int k = 0; k < l1; k++) {
                occ[s * l1 + k] = k;
                h[s * l1 + k] = -k * m_of_index(n, s);
            }
        }
    }

    void operator()(const State &x, State &dxdt, double) const {
        const Complex *rho = reinterpret_cast<const Complex *>(x.data());
        Complex *out = reinterpret_cast<Complex *>(dxdt.data());
        for (int j = 0; j < dim; j++) {
            bool j_top = (j % l1) == l1 - 1;
            for (int i = 0; i < dim; i++) {
                size_t idx = static_cast<size_t>(j) * dim + i;
                Complex r = rho[idx];
                Complex v = Complex(-0.5 * kappa * (occ[i] + occ[j]), -(h[i] - h[j])) * r;
                if (kappa != 0.0 && !j_top && (i % l1) != l1 - 1) {
                    v += kappa * std::sqrt((occ[i] + 1) * (occ[j] + 1)) * rho[idx + dim + 1];
                }
                out[idx] = v;
            }
        }
    }

    double top_weight(const State &x) const {
        const Complex *rho = reinterpret_cast<const Complex *>(x.data());
        double w = 0;
        for (int s = 0; s <= n; s++) {
            for (int sp = 0; sp <= n; sp++) {
                int i = s * l1 + l1 - 1;
                int j = sp * l1 + l1 - 1;
                w = std::max(w, std::abs(rho[static_cast<size_t>(j) * dim + i]));
            }
        }
        return w;
    }
};

State pack(const CMatrix &m) {
    State x(2 * m.size());
    std::copy_n(reinterpret_cast<const double *>(m.data()), x.size(), x.data());
    return x;
}

CMatrix unpack(const State &x, int dim) {
    CMatrix m(dim, dim);
    std::copy_n(x.data(), x.size(), reinterpret_cast<double *>(m.data()));
    return m;
}

}  // namespace

LindbladResult lindblad_oracle(int n_spins, const CMatrix &spin_input, const std::vector<PulseStep> &steps,
                               const DecayParams &d, const LindbladConfig &cfg) {
    if (n_spins < 1) {
        throw InvalidArgument("n_spins must be >= 1");
    }
    if (n_spins > 3) {
        throw ResourceLimitError("lindblad_oracle supports N <= 3");
    }
    if (cfg.fock_cutoff < 1) {
        throw InvalidArgument("fock_cutoff must be >= 1");
    }
    if (!(d.kappa_over_g >= 0)) {
        throw InvalidArgument("kappa_over_g must be non-negative");
    }
    if (spin_input.rows() != n_spins + 1 || spin_input.cols() != n_spins + 1) {
        throw InvalidArgument("spin input must be (N+1)x(N+1)");
    }
    int l1 = cfg.fock_cutoff + 1;
    CMatrix vac = CMatrix::Zero(l1, l1);
    vac(0, 0) = 1.0;
    CMatrix rho = kron(spin_input, vac);
    Integrator rhs(n_spins, cfg.fock_cutoff, d.kappa_over_g);
    CMatrix eye_mode = CMatrix::Identity(l1, l1);
    CMatrix eye_spin = CMatrix::Identity(n_spins + 1, n_spins + 1);
    CMatrix flip = kron(rotation_matrix(n_spins, kPi, 0.0), eye_mode);
    double top = rhs.top_weight(pack(rho));

    auto check = [&](double w) {
        top = std::max(top, w);
        if (top > cfg.leakage_tolerance) {
            throw TruncationError("Fock cutoff too small: top-level weight " + std::to_string(top), top);
        }
    };

    for (const auto &step : steps) {
        if (const auto *disp = std::get_if<Displacement>(&step)) {
            CMatrix dm = kron(eye_spin, displacement(disp->amplitude, cfg.fock_cutoff, cfg.displacement_padding));
            rho = dm * rho * dm.adjoint();
            check(rhs.top_weight(pack(rho)));
            continue;
        }
        const auto &iv = std::get<DispersiveInterval>(step);
        if (iv.flipped) {
            rho = flip * rho * flip.adjoint();
        }
        State x = pack(rho);
        namespace odeint = boost::numeric::odeint;
        auto stepper = odeint::make_controlled(cfg.atol, cfg.rtol, odeint::runge_kutta_dopri5<State>());
        odeint::integrate_adaptive(stepper, rhs, x, 0.0, iv.theta, 1e-2,
                                   [&](const State &s, double) { check(rhs.top_weight(s)); });
        rho = unpack(x, rhs.dim);
        if (iv.flipped) {
            rho = flip.adjoint() * rho * flip;
        }
    }
    return {n_spins, cfg.fock_cutoff, rho, top};
}

CMatrix reduced_spin(const LindbladResult &r) {
    int l1 = r.fock_cutoff + 1;
    int d = r.n_spins + 1;
    CMatrix out = CMatrix::Zero(d, d);
    for (int s = 0; s < d; s++) {
        for (int sp = 0; sp < d; sp++) {
            for (int k = 0; k < l1; k++) {
                out(s, sp) += r.joint(s * l1 + k, sp * l1 + k);
            }
        }
    }
    return out;
}

Complex vacuum_weight(const LindbladResult &r) {
    int l1 = r.fock_cutoff + 1;
    Complex w = 0;
    for (int s = 0; s <= r.n_spins; s++) {
        w += r.joint(s * l1, s * l1);
    }
    return w;
}

OracleSpinChannel lindblad_spin_channel(int n_spins, const std::vector<PulseStep> &steps, const DecayParams &d,
                                        const LindbladConfig &cfg) {
    int dd = n_spins + 1;
    OracleSpinChannel out{n_spins, {}, 0.0, 0.0};
    for (int i = 0; i < dd; i++) {
        for (int k = 0; k < dd; k++) {
            CMatrix e = CMatrix::Zero(dd, dd);
            e(i, k) = 1.0;
            LindbladResult r = lindblad_oracle(n_spins, e, steps, d, cfg);
            out.outputs.push_back(reduced_spin(r));
            out.max_top_population = std::max(out.max_top_population, r.max_top_population);
        }
    }
    CMatrix probe = CMatrix::Constant(dd, dd, 1.0 / dd);
    LindbladResult r = lindblad_oracle(n_spins, probe, steps, d, cfg);
    out.max_top_population = std::max(out.max_top_population, r.max_top_population);
    out.probe_vacuum_population = vacuum_weight(r).real();
    return out;
}

CMatrix choi_state(const OracleSpinChannel &ch) {
    int dd = ch.n_spins + 1;
    CMatrix c = CMatrix::Zero(dd * dd, dd * dd);
    for (int i = 0; i < dd; i++) {
        for (int k = 0; k < dd; k++) {
            c.block(i * dd, k * dd, dd, dd) = ch.outputs[i * dd + k] / static_cast<double>(dd);
        }
    }
    return c;
}

CMatrix choi_state(const DephasedUnitaryChannel &ch) {
    int dd = ch.n_spins() + 1;
    const CVector &u = ch.unitary_diagonal();
    CMatrix c = CMatrix::Zero(dd * dd, dd * dd);
    for (int i = 0; i < dd; i++) {
        for (int k = 0; k < dd; k++) {
            c(i * dd + i, k * dd + k) = u[i] * ch.multiplier()(i, k) * std::conj(u[k]) / static_cast<double>(dd);
        }
    }
    return c;
}

double trace_distance(const CMatrix &a, const CMatrix &b) {
    CMatrix diff = a - b;
    CMatrix h = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace gpgsim
