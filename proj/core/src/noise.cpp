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

#include "gpgsim/noise.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

void check_decay(const DecayParams &d) {
    if (!std::isfinite(d.kappa_over_g) || d.kappa_over_g < 0) {
        throw InvalidArgument("kappa_over_g must be finite and non-negative");
    }
}

void check_alpha(double alpha_sq) {
    if (!std::isfinite(alpha_sq) || alpha_sq < 0) {
        throw InvalidArgument("alpha_sq must be finite and non-negative");
    }
}

// Coherent amplitudes a (ket branch M) and b (bra branch M') through the sequence.
struct Branch {
    double m;
    double mp;
    double kappa;
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
    Complex log_c{0.0, 0.0};

    void displace(Complex g) {
        log_c += Complex(0.0, std::imag(g * std::conj(a)) - std::imag(g * std::conj(b)));
        a += g;
        b += g;
    }

    // Interval under H = s a^dag a Jz for duration theta (g = 1); s = -1 is R(+theta Jz).
    void evolve(double s, double theta) {
        Complex rate(kappa, s * (m - mp));
        Complex bc = kappa == 0.0 ? Complex(0.0) : kappa * (1.0 - std::exp(-rate * theta)) / rate;
        log_c += a * std::conj(b) * bc - (std::norm(a) + std::norm(b)) * (-std::expm1(-kappa * theta)) / 2.0;
        a *= std::exp(Complex(-kappa / 2, -s * m) * theta);
        b *= std::exp(Complex(-kappa / 2, -s * mp) * theta);
    }
};

template <typename F>
RMatrix fill_offdiagonal(int n, F &&f) {
    RMatrix out = RMatrix::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; i++) {
        for (int k = 0; k <= n; k++) {
            if (i != k) {
                out(i, k) = f(m_of_index(n, i), m_of_index(n, k));
            }
        }
    }
    return out;
}

CMatrix multiplier_from(const ChannelFactors &cf) {
    Eigen::Index d = cf.gamma.rows();
    CMatrix r(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index k = 0; k < d; k++) {
            r(i, k) = std::exp(Complex(-cf.gamma(i, k), cf.delta(i, k)));
        }
    }
    return r;
}

}  // namespace

ModifiedAction modified_action(double theta, double target_chi, const DecayParams &d, double alpha_sq_cap) {
    check_decay(d);
    if (!std::isfinite(target_chi) || target_chi < 0) {
        throw InvalidArgument("target_chi must be finite and non-negative");
    }
    double f = decay_action_factor(theta, d.kappa_over_g);
    double alpha_sq = target_chi / f;
    if (!(alpha_sq <= alpha_sq_cap)) {
        throw ResourceLimitError("required |alpha|^2 exceeds the configured cap");
    }
    return {alpha_sq, alpha_sq * f, std::exp(-d.kappa_over_g * theta)};
}

Complex coherent_branch_log_coefficient(
    double m, double mp, double theta, double phi, double alpha_sq, double kappa_over_g) {
    check_alpha(alpha_sq);
    double mag = std::sqrt(alpha_sq);
    Complex alpha = std::polar(mag, phi);
    Complex beta = mag;
    double shrink = std::exp(-kappa_over_g * theta);
    Branch br{m, mp, kappa_over_g};
    br.displace(alpha);
    br.evolve(-1, theta);
    br.displace(beta);
    br.evolve(+1, theta);
    br.displace(-alpha * shrink);
    br.evolve(-1, theta);
    br.displace(-beta * shrink);
    return br.log_c;
}

double gamma_closed_form(double m, double mp, double theta, double phi, double alpha_sq, double kappa_over_g) {
    if (m == mp) {
        return 0.0;
    }
    const Complex i(0.0, 1.0);
    const double k = kappa_over_g;
    const double th = theta;
    const double dm = m - mp;
    Complex pre = alpha_sq * dm * std::exp(-i * (phi + th * (mp + m - 2.0 * i * k))) / (2 * (dm * dm + k * k));
    Complex s = -4.0 * dm * std::exp(i * (th * (mp + m) + phi));
    s += -4.0 * i * k * std::exp(2.0 * i * th * mp + th * k + i * phi);
    s += (mp - m + i * k) * std::exp(0.5 * th * (2.0 * i * mp + 4.0 * i * m + k) + 2.0 * i * phi);
    s += (-mp + m + i * k) * std::exp(i * th * mp + 2.0 * i * th * m + 1.5 * th * k + 2.0 * i * phi);
    s += (mp - m - i * k) * std::exp(0.5 * th * (4.0 * i * mp + 2.0 * i * m + k) + 2.0 * i * phi);
    s += (-mp + m - i * k) * std::exp(2.0 * i * th * mp + i * th * m + 1.5 * th * k + 2.0 * i * phi);
    s += 4.0 * dm * std::exp(i * (phi + th * (mp + m - 2.0 * i * k)));
    s += std::exp(0.5 * th * (k + 2.0 * i * m)) * (mp - m + i * k);
    s += std::exp(1.5 * th * k + i * th * m) * (-mp + m + i * k);
    s += (mp - m - i * k) * std::exp(0.5 * th * (k + 2.0 * i * mp));
    s += (-mp + m - i * k) * std::exp(1.5 * th * k + i * th * mp);
    s += 4.0 * i * k * std::exp(2.0 * i * th * m + th * k + i * phi);
    return (pre * s).real();
}

ChannelFactors decoherence_factors(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d) {
    check_decay(d);
    check_alpha(alpha_sq);
    if (d.kappa_over_g == 0.0) {
        return {RMatrix::Zero(n_spins + 1, n_spins + 1), RMatrix::Zero(n_spins + 1, n_spins + 1)};
    }
    ChannelFactors cf;
    cf.gamma = fill_offdiagonal(n_spins, [&](double m, double mp) {
        return gamma_closed_form(m, mp, p.theta, p.phi, alpha_sq, d.kappa_over_g);
    });
    cf.delta = decoherence_factors_composite(n_spins, p, alpha_sq, d).delta;
    return cf;
}

ChannelFactors decoherence_factors_composite(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d) {
    check_decay(d);
    check_alpha(alpha_sq);
    if (d.kappa_over_g == 0.0) {
        return {RMatrix::Zero(n_spins + 1, n_spins + 1), RMatrix::Zero(n_spins + 1, n_spins + 1)};
    }
    double chi = alpha_sq * decay_action_factor(p.theta, d.kappa_over_g);
    ChannelFactors cf;
    cf.gamma = fill_offdiagonal(n_spins, [&](double m, double mp) {
        return -coherent_branch_log_coefficient(m, mp, p.theta, p.phi, alpha_sq, d.kappa_over_g).real();
    });
    cf.delta = fill_offdiagonal(n_spins, [&](double m, double mp) {
        Complex lc = coherent_branch_log_coefficient(m, mp, p.theta, p.phi, alpha_sq, d.kappa_over_g);
        return lc.imag() + 2 * chi * (std::sin(p.theta * m + p.phi) - std::sin(p.theta * mp + p.phi));
    });
    return cf;
}

RMatrix delta_unmodified_reference(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d) {
    check_decay(d);
    check_alpha(alpha_sq);
    return fill_offdiagonal(n_spins, [&](double m, double mp) {
        Complex lc = coherent_branch_log_coefficient(m, mp, p.theta, p.phi, alpha_sq, d.kappa_over_g);
        return lc.imag() + 2 * alpha_sq * (std::sin(p.theta * m + p.phi) - std::sin(p.theta * mp + p.phi));
    });
}

FirstOrderFactors first_order_factors(int n_spins, const GpgParams &p, double alpha_sq, const DecayParams &d) {
    check_decay(d);
    check_alpha(alpha_sq);
    const double th = p.theta;
    const double ph = p.phi;
    const double k = d.kappa_over_g;
    FirstOrderFactors out;
    out.gamma = fill_offdiagonal(n_spins, [&](double m, double mp) {
        double s = 2 * std::sin(th * mp + ph) - th * mp * (std::cos(th * mp + ph) + std::cos(th * m + ph) + 4) +
                   th * m * std::cos(th * mp + ph) - 4 * std::sin(th * (m - mp)) - 2 * std::sin(th * m + ph) +
                   th * m * std::cos(th * m + ph) + 4 * th * m;
        return alpha_sq * k / (m - mp) * s;
    });
    out.delta_unmodified = fill_offdiagonal(n_spins, [&](double m, double mp) {
        const Complex i(0.0, 1.0);
        Complex a = -std::sin(th * mp) + i * std::cos(th * mp) + std::sin(th * m) - i * std::cos(th * m);
        Complex b = std::cos(th * mp + th * m + ph) - i * std::sin(th * mp + th * m + ph);
        Complex c = i * std::sin(th * (mp + m) + 2 * ph) + std::cos(th * (mp + m) + 2 * ph) + 1.0;
        return (alpha_sq * th * k * a * b * c).real();
    });
    return out;
}

DephasedUnitaryChannel::DephasedUnitaryChannel(CVector unitary_diagonal, CMatrix multiplier)
    : u_(std::move(unitary_diagonal)), r_(std::move(multiplier)) {
    if (r_.rows() != u_.size() || r_.cols() != u_.size()) {
        throw InvalidArgument("channel multiplier must match the unitary dimension");
    }
}

DickeDensity DephasedUnitaryChannel::apply(const DickeDensity &rho) const {
    if (rho.dimension() != u_.size()) {
        throw InvalidArgument("channel applied to a state of the wrong dimension");
    }
    CMatrix out = u_.asDiagonal() * r_.cwiseProduct(rho.matrix()) * u_.conjugate().asDiagonal();
    CMatrix h = 0.5 * (out + out.adjoint());
    return DickeDensity(rho.n_spins(), h);
}

double DephasedUnitaryChannel::min_choi_eigenvalue() const {
    CMatrix h = 0.5 * (r_ + r_.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DephasedUnitaryChannel noisy_gpg_channel(int n_spins, const GpgParams &p, const DecayParams &d) {
    ModifiedAction ma = modified_action(p.theta, p.chi, d);
    ChannelFactors cf = decoherence_factors(n_spins, p, ma.alpha_sq, d);
    GpgParams q = p;
    q.chi = ma.achieved_chi;
    return DephasedUnitaryChannel(gpg_unitary(n_spins, q), multiplier_from(cf));
}

NoisyPhasing noisy_phasing_channel(const PhasingSchedule &schedule, const DecayParams &d) {
    check_decay(d);
    int n = schedule.n_spins;
    RMatrix gamma = RMatrix::Zero(n + 1, n + 1);
    RMatrix delta = RMatrix::Zero(n + 1, n + 1);
    double weakest = 1.0;
    for (int k : schedule.ordering) {
        const GpgParams &g = schedule.gates[k - 1];
        ModifiedAction ma = modified_action(g.theta, g.chi, d);
        ChannelFactors cf = decoherence_factors(n, g, ma.alpha_sq, d);
        gamma += cf.gamma;
        delta += cf.delta;
        weakest = std::min(weakest, per_gate_bound(g.chi, g.theta, d));
    }
    CMatrix ups = multiplier_from({gamma, delta});
    NoisyScheduleReport rep{ups, process_fidelity(ups), weakest, std::exp(-kPi * kPi * d.kappa_over_g)};
    return {rep, DephasedUnitaryChannel(schedule_product(schedule), ups)};
}

NoisyPhasing noisy_phasing_channel(int n_spins, int ell, const DecayParams &d) {
    return noisy_phasing_channel(phasing_schedule(n_spins, ell), d);
}

double process_fidelity(const CMatrix &upsilon) {
    double d = static_cast<double>(upsilon.rows());
    return upsilon.sum().real() / (d * d);
}

double per_gate_bound_alpha(double alpha_sq, const DecayParams &d) {
    check_decay(d);
    check_alpha(alpha_sq);
    double x = alpha_sq * d.kappa_over_g;
    if (4 * kPi * x >= kPi / 2) {
        return 0.0;
    }
    return std::exp(-6 * kPi * x) * std::cos(4 * kPi * x);
}

double per_gate_bound(double chi, double theta, const DecayParams &d) {
    check_decay(d);
    return per_gate_bound_alpha(chi / decay_action_factor(theta, d.kappa_over_g), d);
}

}  // namespace gpgsim
