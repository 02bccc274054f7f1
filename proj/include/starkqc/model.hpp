// model.hpp - closed-form amplitude dynamics of two dissipative two-level atoms
// with Stark shifts, and the reduced two-qubit density matrix they generate.
//
// All rates are in units of the atomic decay rate (gamma0 == 1); time is the
// scaled time tau = gamma0*t.

#pragma once

#include <complex>

#include "starkqc/complex_linalg.hpp"

namespace starkqc::model {

using linalg::cdouble;

// Initial state of each atom's reservoir mode.
enum class Scenario { Vacuum, OnePhoton };

enum class Regime { Markovian, NonMarkovian };

// Below this magnitude of sigma the amplitude formula switches to its
// critical-damping limit (removable singularity).
inline constexpr double kSigmaZeroTol = 1e-8;

struct ModelParams {
    double lambda = 10.0;  // Lorentzian spectral width
    double eta = 0.0;      // Stark shift of the upper level
    double xi = 0.0;       // Stark shift of the lower level (OnePhoton only)
    Scenario scenario = Scenario::Vacuum;

    void validate() const;  // lambda > 0, eta >= 0, all finite
};

// Superposition weight x of the initially excited second atom:
// |psi(0)> = x|01> + sqrt(1-x^2)|10> in the (atom P, atom Q) product basis.
struct StatePrep {
    double x = 0.0;
    void validate() const;  // 0 <= x <= 1
};

struct AmplitudePair {
    cdouble b1;  // excited-state amplitude of atom P
    cdouble b2;  // excited-state amplitude of atom Q
    double tau = 0.0;
};

// Two-qubit X state in the basis {|11>, |10>, |01>, |00>} (excited first).
// Only the diagonal and the two anti-diagonal coherences are nonzero; the
// model always produces r11 == 0 and r14 == 0.
struct XState {
    double r11 = 0.0;
    double r22 = 0.0;
    double r33 = 0.0;
    double r44 = 0.0;
    cdouble r23;
    cdouble r14;

    // Throws std::invalid_argument when trace, positivity of the diagonal, or
    // positivity of the 2x2 blocks (|r23|^2 <= r22*r33, |r14|^2 <= r11*r44)
    // fail beyond 1e-10.
    void validate() const;

    linalg::HermMatrix to_matrix() const;
};

// sigma = sqrt((lambda + 2i*eta)^2 - 4*lambda), principal branch.
cdouble sigma_vacuum(const ModelParams& p);

// phi(tau) = e^{-Z tau/2} [cosh(sigma tau/2) + (Z/sigma) sinh(sigma tau/2)],
// Z = lambda + 2i*eta. phi(0) == 1 exactly; |phi| <= 1.
cdouble phi(double tau, const ModelParams& p);

// sigma = sqrt((lambda + i(eta-xi))^2 - 12*lambda); algebraically equal to
// sqrt(-12*lambda - 4i(lambda+4i*eta)(xi+3*eta) + (lambda + i(xi+7*eta))^2).
cdouble sigma_excited(const ModelParams& p);

// Theta(tau) = e^{-(lambda+i(xi+7 eta)) tau/2} [cosh(sigma tau/2)
//              + ((lambda+i(eta-xi))/sigma) sinh(sigma tau/2)].
// The modulus depends on (eta, xi) only through eta - xi.
cdouble theta(double tau, const ModelParams& p);

// phi or Theta according to p.scenario.
cdouble amplitude_factor(double tau, const ModelParams& p);

// b1 = x * f(tau), b2 = sqrt(1-x^2) * f(tau) with f = phi or Theta.
AmplitudePair amplitudes(double tau, const StatePrep& prep, const ModelParams& p);

// Reduced two-qubit state: r22 = |b1|^2, r33 = |b2|^2, r23 = b1*conj(b2),
// r44 = 1 - |b1|^2 - |b2|^2, r11 = r14 = 0. Invariant violations (e.g. an
// amplitude with modulus above 1) are surfaced, not clamped.
XState density_matrix(double tau, const StatePrep& prep, const ModelParams& p);

// Markovian iff lambda >= 2 (weak coupling, gamma0 < lambda/2); the boundary
// lambda == 2 is classified Markovian by convention.
Regime regime(const ModelParams& p);

}  // namespace starkqc::model
