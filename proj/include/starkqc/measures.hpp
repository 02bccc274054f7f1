// measures.hpp - closed-form quantum-correlation measures on two-qubit X states:
// concurrence, Bures-distance entanglement, trace-distance discord, and local
// quantum uncertainty, plus sudden-change detection for the latter.

#pragma once

#include <vector>

#include "starkqc/model.hpp"

namespace starkqc::measures {

// Nonzero correlation-tensor coefficients of an X state after the standard
// local-unitary normal form (coherences taken by modulus).
struct FanoBloch {
    double r00 = 1.0;
    double r03 = 0.0;
    double r30 = 0.0;
    double r11c = 0.0;
    double r22c = 0.0;
    double r33c = 0.0;
};

struct LquResult {
    double q = 0.0;
    double m11 = 0.0;
    double m33 = 0.0;
    // Set when |b1|^2 + |b2|^2 <= 1e-14: the state is the pure product |00>
    // and q is 0 by convention.
    bool fully_decayed = false;
};

// One evaluated time point.
struct CorrelationSample {
    double tau = 0.0;
    double concurrence = 0.0;
    double bures = 0.0;
    double tdd = 0.0;
    double lqu = 0.0;
    double m11 = 0.0;
    double m33 = 0.0;
};

// C = 2 max{0, |r23| - sqrt(r11 r44), |r14| - sqrt(r22 r33)}.
// For model states (r11 = r14 = 0) this reduces to 2|r23|.
double concurrence_x(const model::XState& s);

// B = sqrt(2 - sqrt(2 + 2 sqrt(1 - c^2))); monotone in c, B(1) = sqrt(2-sqrt(2)).
// Inputs outside [0,1] by more than 1e-12 are rejected.
double bures_entanglement(double c);

FanoBloch fano_bloch(const model::XState& s);

// Trace-distance discord closed form,
//   D = sqrt((R11^2 Rmax^2 - R22^2 Rmin^2) / (Rmax^2 - Rmin^2 + R11^2 - R22^2)),
// Rmax^2 = max{R33^2, R22^2 + R30^2}, Rmin^2 = min{R11^2, R33^2}. The 0/0 case
// (denominator < 1e-12 with R11 == R22, e.g. the Bell state) takes the
// algebraic limit D = |R11|.
double tdd(const model::XState& s);
double tdd_from_fano(const FanoBloch& f);

// Local quantum uncertainty of the model state generated by an amplitude pair.
// The skew-information matrix is diagonal with
//   M11 = M22 = 2|b1|^2 sqrt(1-n)/sqrt(n),  M33 = (n - 4|b1|^2|b2|^2)/n,
// n = |b1|^2 + |b2|^2, measured on the atom whose excited amplitude is b1;
// Q = 1 - max(M11, M33).
LquResult lqu_model(const model::AmplitudePair& a);

// All tau in (0, tau_max] where M11 - M33 changes sign, each refined by
// bisection; for x = 1/sqrt(2) these are the roots of |phi(tau)|^2 = 1/2.
std::vector<double> sudden_change_times(const model::StatePrep& prep, const model::ModelParams& p,
                                        double tau_max, double step);

CorrelationSample evaluate_all(double tau, const model::StatePrep& prep, const model::ModelParams& p);

}  // namespace starkqc::measures
