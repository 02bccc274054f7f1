// support.hpp - shared test fixtures: seeded random generators and an
// independent RK4 integrator for the memory-kernel dynamics.

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "starkqc/complex_linalg.hpp"
#include "starkqc/model.hpp"

namespace testsup {

using starkqc::linalg::cdouble;
using starkqc::linalg::HermMatrix;
using starkqc::linalg::Matrix;

inline Matrix random_matrix(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cdouble(g(rng), g(rng));
    return m;
}

inline HermMatrix random_hermitian(std::mt19937_64& rng, int n) {
    const Matrix a = random_matrix(rng, n);
    Matrix h = 0.5 * (a + a.adjoint());
    for (int i = 0; i < n; ++i) h(i, i) = cdouble(h(i, i).real(), 0.0);
    return HermMatrix(h);
}

// G G^dag / tr, a random density matrix (PSD, trace one).
inline HermMatrix random_density(std::mt19937_64& rng, int n) {
    const Matrix g = random_matrix(rng, n);
    Matrix p = g * g.adjoint();
    const double tr = p.trace().real();
    p = (1.0 / tr) * p;
    p = 0.5 * (p + p.adjoint());
    for (int i = 0; i < n; ++i) p(i, i) = cdouble(p(i, i).real(), 0.0);
    return HermMatrix(p);
}

// Valid two-qubit X state with random populations and block-bounded coherences.
inline starkqc::model::XState random_x_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double d[4];
    double sum = 0.0;
    for (double& v : d) {
        v = -std::log(u(rng) + 1e-12);
        sum += v;
    }
    starkqc::model::XState s;
    s.r11 = d[0] / sum;
    s.r22 = d[1] / sum;
    s.r33 = d[2] / sum;
    s.r44 = 1.0 - s.r11 - s.r22 - s.r33;
    const double m23 = std::sqrt(s.r22 * s.r33) * u(rng);
    const double m14 = std::sqrt(s.r11 * s.r44) * u(rng);
    s.r23 = std::polar(m23, 2.0 * M_PI * u(rng));
    s.r14 = std::polar(m14, 2.0 * M_PI * u(rng));
    return s;
}

// Fourth-order Runge-Kutta on the equivalent ODE system for the amplitude
// factor: the exponential memory kernel turns the integro-differential
// equation into
//   vacuum:    f' = -lambda w,                 w' = f - (lambda + 2i eta) w
//   one-photon f' = -3 lambda w - i(xi+3eta) f, w' = f - (lambda + 4i eta) w
// with f(0) = 1, w(0) = 0. Independent of the closed forms under test.
inline cdouble rk4_amplitude(double tau_end, const starkqc::model::ModelParams& p, int n) {
    const bool vac = p.scenario == starkqc::model::Scenario::Vacuum;
    const cdouble kernel_rate = vac ? cdouble(p.lambda, 2.0 * p.eta) : cdouble(p.lambda, 4.0 * p.eta);
    const cdouble drive = vac ? 1.0 * p.lambda : 3.0 * p.lambda;
    const cdouble detune = vac ? cdouble(0.0, 0.0) : cdouble(0.0, p.xi + 3.0 * p.eta);
    const double h = tau_end / n;
    cdouble f = 1.0, w = 0.0;
    const auto df = [&](cdouble fv, cdouble wv) { return -drive * wv - detune * fv; };
    const auto dw = [&](cdouble fv, cdouble wv) { return fv - kernel_rate * wv; };
    for (int k = 0; k < n; ++k) {
        const cdouble k1f = df(f, w), k1w = dw(f, w);
        const cdouble k2f = df(f + 0.5 * h * k1f, w + 0.5 * h * k1w);
        const cdouble k2w = dw(f + 0.5 * h * k1f, w + 0.5 * h * k1w);
        const cdouble k3f = df(f + 0.5 * h * k2f, w + 0.5 * h * k2w);
        const cdouble k3w = dw(f + 0.5 * h * k2f, w + 0.5 * h * k2w);
        const cdouble k4f = df(f + h * k3f, w + h * k3w);
        const cdouble k4w = dw(f + h * k3f, w + h * k3w);
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    }
    return f;
}

// Bisection root of |phi(tau)|^2 = 1/2 on [lo, hi]; the bracket must straddle.
inline double half_population_root(const starkqc::model::ModelParams& p, double lo, double hi) {
    const auto g = [&](double t) { return std::norm(starkqc::model::phi(t, p)) - 0.5; };
    double flo = g(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace testsup
