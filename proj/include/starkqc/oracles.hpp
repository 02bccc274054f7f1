// oracles.hpp - independent brute-force reference computations that validate
// the closed forms: eigenvalue-route concurrence, sphere-grid skew-information
// minimization, classical-quantum trace-norm minimization, and quadrature
// residuals of the memory-kernel equations.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "starkqc/measures.hpp"
#include "starkqc/model.hpp"

namespace starkqc::oracles {

inline constexpr std::uint64_t kDefaultSeed = 12345;

// Candidate zero-discord state: a projective measurement axis on the first
// qubit plus one conditional qubit state per outcome (9 free parameters).
struct CqCandidate {
    double p1 = 0.5;
    double theta = 0.0;       // measurement axis polar angle
    double phi_angle = 0.0;   // measurement axis azimuth
    std::array<double, 3> bloch1{};
    std::array<double, 3> bloch2{};

    linalg::Matrix to_state() const;  // 4x4 density matrix
    void validate() const;
};

struct OracleReport {
    std::string name;
    double closed_form_value = 0.0;
    double oracle_value = 0.0;
    double gap = 0.0;  // |closed_form_value - oracle_value|
    double tolerance = 0.0;
    long evaluations = 0;
    bool pass = false;
    std::string detail;
};

// Concurrence through the Hermitian equivalent: eigenvalues of
// sqrt(rho) * rho_tilde * sqrt(rho) with rho_tilde = (sy x sy) rho* (sy x sy)
// match those of rho*rho_tilde; C = max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)}.
double concurrence_oracle(const model::XState& s);

// Skew information I(rho, K) = -1/2 tr([sqrt(rho), K]^2) for K = n.sigma x I.
double skew_information(const linalg::Matrix& sqrt_rho, double nx, double ny, double nz);

// Minimum of the skew information over observable axes on an
// (n_theta x n_phi) sphere grid (each >= 64), optionally followed by
// Nelder-Mead refinement around the best grid point.
double lqu_oracle(const model::XState& s, int n_theta, int n_phi, bool refine = true);

// Exact alternative route: 1 - max eigenvalue of the 3x3 matrix
// [M]ij = tr{sqrt(rho)(sigma_i x I) sqrt(rho)(sigma_j x I)}.
double lqu_via_m_matrix(const model::XState& s);

// Best (smallest) trace-norm distance to a classical-quantum state found by
// seeded random search plus simplex descent with 3 restarts; an upper bound
// on the true discord. budget >= 1000 objective evaluations.
double tdd_oracle(const model::XState& s, long budget, std::uint64_t seed = kDefaultSeed);

// Max over a uniform grid of |d(phi)/dtau + 2 int_0^tau g(tau-t') phi(t') dt'|
// with g(u) = (lambda/2) e^{-(lambda+2i eta)u}; centered differences for the
// derivative and composite trapezoid for the convolution, n_steps >= 2000.
double kernel_residual_vacuum(const model::ModelParams& p, double tau_max, int n_steps);

enum class KernelSign { AsPrinted, Corrected };

// Residual of Theta against
//   dTheta/dtau = -3 lambda int_0^tau e^{-+(lambda+4i eta)(tau-t')} Theta dt'
//                 - i(xi+3 eta) Theta
// with the exponent sign chosen by the flag (Corrected = decaying kernel).
double kernel_residual_excited(const model::ModelParams& p, double tau_max, int n_steps,
                               KernelSign sign);

enum class SuiteScale { Quick, Full };

// Runs every closed-form/oracle comparison at the chosen scale and returns
// one report entry per comparison.
std::vector<OracleReport> run_suite(SuiteScale scale, std::uint64_t seed = kDefaultSeed);

bool suite_passed(const std::vector<OracleReport>& reports);

}  // namespace starkqc::oracles
