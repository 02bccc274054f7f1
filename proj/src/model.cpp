#include "starkqc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace starkqc::model {

namespace {

// Principal branch: nonnegative real part, positive imaginary part on the cut.
cdouble principal_sqrt(cdouble z) {
    cdouble w = std::sqrt(z);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
    return w;
}

// e^{-decay*tau/2} [cosh(sig*tau/2) + (mix/sig) sinh(sig*tau/2)].
// For |sig| < kSigmaZeroTol the removable singularity is replaced by its
// limit e^{-decay*tau/2} (1 + mix*tau/2). For large real cosh arguments the
// equivalent two-exponential form avoids overflow of the intermediate cosh.
cdouble damped_envelope(double tau, cdouble decay, cdouble mix, cdouble sig) {
    const cdouble half_tau(0.5 * tau, 0.0);
    if (std::abs(sig) < kSigmaZeroTol) {
        return std::exp(-decay * half_tau) * (1.0 + mix * half_tau);
    }
    const cdouble arg = sig * half_tau;
    if (std::abs(arg.real()) < 350.0) {
        return std::exp(-decay * half_tau) * (std::cosh(arg) + (mix / sig) * std::sinh(arg));
    }
    const cdouble ratio = mix / sig;
    const cdouble amp_plus = 0.5 * (1.0 + ratio);
    const cdouble amp_minus = 0.5 * (1.0 - ratio);
    return amp_plus * std::exp((sig - decay) * half_tau) +
           amp_minus * std::exp(-(sig + decay) * half_tau);
}

void require_scenario(const ModelParams& p, Scenario s, const char* op) {
    if (p.scenario != s) {
        throw std::invalid_argument(std::string(op) + ": wrong scenario for these parameters");
    }
}

void require_tau(double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("tau must be finite and >= 0");
    }
}

}  // namespace

void ModelParams::validate() const {
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw std::invalid_argument("lambda must be finite and > 0");
    }
    if (!std::isfinite(eta) || eta < 0.0) {
        throw std::invalid_argument("eta must be finite and >= 0");
    }
    if (!std::isfinite(xi)) {
        throw std::invalid_argument("xi must be finite");
    }
}

void StatePrep::validate() const {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
        throw std::invalid_argument("state weight x must lie in [0, 1]");
    }
}

void XState::validate() const {
    const double tr = r11 + r22 + r33 + r44;
    if (std::abs(tr - 1.0) > 1e-10) {
        throw std::invalid_argument("XState: trace " + std::to_string(tr) + " != 1");
    }
    for (double d : {r11, r22, r33, r44}) {
        if (!std::isfinite(d) || d < -1e-10) {
            throw std::invalid_argument("XState: negative population " + std::to_string(d));
        }
    }
    if (std::norm(r23) > r22 * r33 + 1e-10) {
        throw std::invalid_argument("XState: inner coherence violates block positivity");
    }
    if (std::norm(r14) > r11 * r44 + 1e-10) {
        throw std::invalid_argument("XState: outer coherence violates block positivity");
    }
}

linalg::HermMatrix XState::to_matrix() const {
    linalg::Matrix m(4);
    m(0, 0) = r11;
    m(1, 1) = r22;
    m(2, 2) = r33;
    m(3, 3) = r44;
    m(1, 2) = r23;
    m(2, 1) = std::conj(r23);
    m(0, 3) = r14;
    m(3, 0) = std::conj(r14);
    return linalg::HermMatrix(m);
}

cdouble sigma_vacuum(const ModelParams& p) {
    p.validate();
    require_scenario(p, Scenario::Vacuum, "sigma_vacuum");
    const cdouble z(p.lambda, 2.0 * p.eta);
    return principal_sqrt(z * z - 4.0 * p.lambda);
}

cdouble phi(double tau, const ModelParams& p) {
    require_tau(tau);
    const cdouble z(p.lambda, 2.0 * p.eta);
    return damped_envelope(tau, z, z, sigma_vacuum(p));
}

cdouble sigma_excited(const ModelParams& p) {
    p.validate();
    require_scenario(p, Scenario::OnePhoton, "sigma_excited");
    const cdouble w(p.lambda, p.eta - p.xi);
    return principal_sqrt(w * w - 12.0 * p.lambda);
}

cdouble theta(double tau, const ModelParams& p) {
    require_tau(tau);
    const cdouble decay(p.lambda, p.xi + 7.0 * p.eta);
    const cdouble mix(p.lambda, p.eta - p.xi);
    return damped_envelope(tau, decay, mix, sigma_excited(p));
}

cdouble amplitude_factor(double tau, const ModelParams& p) {
    return p.scenario == Scenario::Vacuum ? phi(tau, p) : theta(tau, p);
}

AmplitudePair amplitudes(double tau, const StatePrep& prep, const ModelParams& p) {
    prep.validate();
    const cdouble f = amplitude_factor(tau, p);
    AmplitudePair a;
    a.b1 = prep.x * f;
    a.b2 = std::sqrt(1.0 - prep.x * prep.x) * f;
    a.tau = tau;
    return a;
}

XState density_matrix(double tau, const StatePrep& prep, const ModelParams& p) {
    const AmplitudePair a = amplitudes(tau, prep, p);
    XState s;
    s.r11 = 0.0;
    s.r22 = std::norm(a.b1);
    s.r33 = std::norm(a.b2);
    s.r44 = 1.0 - s.r22 - s.r33;
    s.r23 = a.b1 * std::conj(a.b2);
    s.r14 = 0.0;
    s.validate();
    return s;
}

Regime regime(const ModelParams& p) {
    p.validate();
    return p.lambda >= 2.0 ? Regime::Markovian : Regime::NonMarkovian;
}

}  // namespace starkqc::model
