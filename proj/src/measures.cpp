#include "starkqc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace starkqc::measures {

namespace {

constexpr double kDecayedTol = 1e-14;  // fully decayed amplitude-norm threshold
constexpr double kRangeSlack = 1e-9;   // numerical slack on measure ranges

double clamp_measure(double v, const char* what) {
    if (v < -kRangeSlack || v > 1.0 + kRangeSlack) {
        throw std::invalid_argument(std::string(what) + " outside [0,1] beyond slack: " +
                                    std::to_string(v));
    }
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double concurrence_x(const model::XState& s) {
    s.validate();
    const double inner = std::abs(s.r23) - std::sqrt(std::max(s.r11, 0.0) * std::max(s.r44, 0.0));
    const double outer = std::abs(s.r14) - std::sqrt(std::max(s.r22, 0.0) * std::max(s.r33, 0.0));
    return 2.0 * std::max({0.0, inner, outer});
}

double bures_entanglement(double c) {
    if (!std::isfinite(c) || c < -1e-12 || c > 1.0 + 1e-12) {
        throw std::invalid_argument("concurrence outside [0,1]: " + std::to_string(c));
    }
    c = std::clamp(c, 0.0, 1.0);
    const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
    return std::sqrt(std::max(0.0, 2.0 - std::sqrt(2.0 + 2.0 * root)));
}

FanoBloch fano_bloch(const model::XState& s) {
    s.validate();
    FanoBloch f;
    f.r00 = 1.0;
    f.r03 = 1.0 - 2.0 * (s.r22 + s.r44);
    f.r30 = 1.0 - 2.0 * (s.r33 + s.r44);
    f.r11c = 2.0 * (std::abs(s.r23) + std::abs(s.r14));
    f.r22c = 2.0 * (std::abs(s.r23) - std::abs(s.r14));
    f.r33c = 1.0 - 2.0 * (s.r22 + s.r33);
    return f;
}

double tdd_from_fano(const FanoBloch& f) {
    const double r11sq = f.r11c * f.r11c;
    const double r22sq = f.r22c * f.r22c;
    const double r33sq = f.r33c * f.r33c;
    const double rmax2 = std::max(r33sq, r22sq + f.r30 * f.r30);
    const double rmin2 = std::min(r11sq, r33sq);
    const double den = rmax2 - rmin2 + r11sq - r22sq;
    if (std::abs(den) < 1e-12) {
        if (std::abs(r11sq - r22sq) > 1e-12) {
            throw std::invalid_argument("tdd: degenerate coefficients with R11 != R22");
        }
        return clamp_measure(std::abs(f.r11c), "tdd");
    }
    const double num = std::max(0.0, r11sq * rmax2 - r22sq * rmin2);
    return clamp_measure(std::sqrt(num / den), "tdd");
}

double tdd(const model::XState& s) { return tdd_from_fano(fano_bloch(s)); }

LquResult lqu_model(const model::AmplitudePair& a) {
    const double b1sq = std::norm(a.b1);
    const double b2sq = std::norm(a.b2);
    const double n = b1sq + b2sq;
    if (n > 1.0 + 1e-9) {
        throw std::invalid_argument("lqu_model: amplitude norm above 1");
    }
    LquResult r;
    if (n <= kDecayedTol) {
        r.q = 0.0;
        r.m11 = 0.0;
        r.m33 = 1.0;
        r.fully_decayed = true;
        return r;
    }
    const double ground = std::max(0.0, 1.0 - n);
    r.m11 = 2.0 * b1sq * std::sqrt(ground) / std::sqrt(n);
    r.m33 = (n - 4.0 * b1sq * b2sq) / n;
    r.q = clamp_measure(1.0 - std::max(r.m11, r.m33), "lqu");
    return r;
}

std::vector<double> sudden_change_times(const model::StatePrep& prep, const model::ModelParams& p,
                                        double tau_max, double step) {
    prep.validate();
    p.validate();
    if (!(tau_max > 0.0) || !(step > 0.0)) {
        throw std::invalid_argument("sudden_change_times: tau_max and step must be > 0");
    }

    const auto branch_gap = [&](double tau) {
        const LquResult r = lqu_model(model::amplitudes(tau, prep, p));
        return r.m11 - r.m33;
    };

    std::vector<double> crossings;
    // tau = 0 is degenerate for pure initial states (both branches vanish),
    // so the scan seeds its sign just above zero.
    double prev_tau = std::min(step * 1e-6, 1e-9);
    double prev_f = branch_gap(prev_tau);

    for (long k = 1;; ++k) {
        const double tau = std::min(static_cast<double>(k) * step, tau_max);
        const double f = branch_gap(tau);
        if (f != 0.0) {
            if (prev_f != 0.0 && std::signbit(f) != std::signbit(prev_f)) {
                double lo = prev_tau, hi = tau;
                double flo = prev_f;
                while (hi - lo > 1e-12) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = branch_gap(mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (std::signbit(fm) == std::signbit(flo)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                crossings.push_back(0.5 * (lo + hi));
            }
            prev_tau = tau;
            prev_f = f;
        }
        if (tau >= tau_max) break;
    }
    return crossings;
}

CorrelationSample evaluate_all(double tau, const model::StatePrep& prep, const model::ModelParams& p) {
    const model::AmplitudePair a = model::amplitudes(tau, prep, p);
    const model::XState s = model::density_matrix(tau, prep, p);

    CorrelationSample out;
    out.tau = tau;
    out.concurrence = concurrence_x(s);
    out.bures = bures_entanglement(out.concurrence);
    out.tdd = tdd(s);
    const LquResult l = lqu_model(a);
    out.lqu = l.q;
    out.m11 = l.m11;
    out.m33 = l.m33;
    return out;
}

}  // namespace starkqc::measures
