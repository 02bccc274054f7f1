#include "starkqc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace starkqc::oracles {

using linalg::cdouble;
using linalg::HermMatrix;
using linalg::Matrix;

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Derivative-free simplex descent (Nelder-Mead), used for the local
// refinement stages of the LQU and TDD oracles.

struct NmResult {
    std::vector<double> x;
    double value = std::numeric_limits<double>::infinity();
    long evals = 0;
};

template <typename F>
NmResult nelder_mead(F&& f, const std::vector<double>& x0, const std::vector<double>& step,
                     long max_evals, double fatol) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    NmResult out;

    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
    for (std::size_t i = 0; i <= n; ++i) {
        vals[i] = f(pts[i]);
        ++out.evals;
    }

    const auto order = [&] {
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p2(n + 1);
        std::vector<double> v2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = vals[idx[i]];
        }
        pts = std::move(p2);
        vals = std::move(v2);
    };

    while (out.evals < max_evals) {
        order();
        if (vals[n] - vals[0] < fatol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + coef * (pts[n][j] - centroid[j]);
            return p;
        };

        const std::vector<double> refl = blend(-1.0);
        const double frefl = f(refl);
        ++out.evals;
        if (frefl < vals[0]) {
            const std::vector<double> expd = blend(-2.0);
            const double fexpd = f(expd);
            ++out.evals;
            if (fexpd < frefl) {
                pts[n] = expd;
                vals[n] = fexpd;
            } else {
                pts[n] = refl;
                vals[n] = frefl;
            }
            continue;
        }
        if (frefl < vals[n - 1]) {
            pts[n] = refl;
            vals[n] = frefl;
            continue;
        }
        const bool outside = frefl < vals[n];
        const std::vector<double> contr = blend(outside ? -0.5 : 0.5);
        const double fcontr = f(contr);
        ++out.evals;
        if (fcontr < std::min(frefl, vals[n])) {
            pts[n] = contr;
            vals[n] = fcontr;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 1; i <= n && out.evals < max_evals; ++i) {
            for (std::size_t j = 0; j < n; ++j) pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
            vals[i] = f(pts[i]);
            ++out.evals;
        }
    }

    order();
    out.x = pts[0];
    out.value = vals[0];
    return out;
}

Matrix bloch_qubit(double ux, double uy, double uz) {
    Matrix m = linalg::identity2();
    const Matrix s = ux * linalg::pauli_x() + uy * linalg::pauli_y() + uz * linalg::pauli_z();
    return 0.5 * (m + s);
}

// Measuring the first qubit along (theta, phi) and discarding the outcome
// dephases rho into a classical-quantum state; these make strong structured
// starts for the search (the optimal conditional states are typically pure,
// which random Bloch sampling almost never reaches).
std::vector<double> dephasing_params(const Matrix& rho, double th, double ph) {
    std::vector<double> q(9, 0.0);
    q[1] = th;
    q[2] = ph;
    // unit eigenvectors of (I +- n.sigma)/2 in the (|1>, |0>) basis
    const double c2 = std::cos(0.5 * th);
    const double s2 = std::sin(0.5 * th);
    const cdouble up[2] = {c2, s2 * std::exp(cdouble(0.0, ph))};
    const cdouble dn[2] = {-s2, c2 * std::exp(cdouble(0.0, ph))};
    for (int outcome = 0; outcome < 2; ++outcome) {
        const cdouble* v = outcome == 0 ? up : dn;
        Matrix m(2);
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) {
                cdouble sum = 0.0;
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        sum += std::conj(v[a]) * rho(2 * a + k, 2 * b + l) * v[b];
                    }
                }
                m(k, l) = sum;
            }
        }
        const double p = m.trace().real();
        double u[3] = {0.0, 0.0, 0.0};
        if (p > 1e-14) {
            u[0] = (m * linalg::pauli_x()).trace().real() / p;
            u[1] = (m * linalg::pauli_y()).trace().real() / p;
            u[2] = (m * linalg::pauli_z()).trace().real() / p;
        }
        if (outcome == 0) {
            q[0] = p;
            q[3] = u[0];
            q[4] = u[1];
            q[5] = u[2];
        } else {
            q[6] = u[0];
            q[7] = u[1];
            q[8] = u[2];
        }
    }
    return q;
}

CqCandidate candidate_from_params(const std::vector<double>& q) {
    CqCandidate c;
    c.p1 = std::clamp(q[0], 0.0, 1.0);
    c.theta = q[1];
    c.phi_angle = q[2];
    for (int i = 0; i < 3; ++i) {
        c.bloch1[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(3 + i)];
        c.bloch2[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(6 + i)];
    }
    for (auto* u : {&c.bloch1, &c.bloch2}) {
        const double norm = std::sqrt((*u)[0] * (*u)[0] + (*u)[1] * (*u)[1] + (*u)[2] * (*u)[2]);
        if (norm > 1.0) {
            for (double& v : *u) v /= norm;
        }
    }
    return c;
}

}  // namespace

void CqCandidate::validate() const {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw std::invalid_argument("CqCandidate: p1 outside [0,1]");
    }
    for (const auto& u : {bloch1, bloch2}) {
        const double norm2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
        if (norm2 > 1.0 + 1e-12) {
            throw std::invalid_argument("CqCandidate: Bloch vector norm above 1");
        }
    }
}

Matrix CqCandidate::to_state() const {
    const double st = std::sin(theta);
    const double nx = st * std::cos(phi_angle);
    const double ny = st * std::sin(phi_angle);
    const double nz = std::cos(theta);
    const Matrix axis = nx * linalg::pauli_x() + ny * linalg::pauli_y() + nz * linalg::pauli_z();
    const Matrix proj_up = 0.5 * (linalg::identity2() + axis);
    const Matrix proj_dn = linalg::identity2() - proj_up;
    const Matrix q1 = bloch_qubit(bloch1[0], bloch1[1], bloch1[2]);
    const Matrix q2 = bloch_qubit(bloch2[0], bloch2[1], bloch2[2]);
    return p1 * linalg::kron(proj_up, q1) + (1.0 - p1) * linalg::kron(proj_dn, q2);
}

// Eigenvalues of the PSD product matrix below this threshold are exact zeros
// masked by ~1e-15 matmul rounding; sqrt would blow the noise up to ~1e-8.
constexpr double kSpectrumRankTol = 1e-13;

double concurrence_oracle(const model::XState& s) {
    s.validate();
    const HermMatrix rho = s.to_matrix();
    const HermMatrix sq = linalg::psd_sqrt(rho);  // rejects non-PSD input
    const Matrix yy = linalg::kron(linalg::pauli_y(), linalg::pauli_y());
    const Matrix rho_tilde = yy * rho.matrix().conjugate() * yy;
    const HermMatrix prod(sq.matrix() * rho_tilde * sq.matrix());
    const std::vector<double> ev = linalg::hermitian_eigenvalues(prod);
    const auto root = [](double lam) {
        return lam < kSpectrumRankTol ? 0.0 : std::sqrt(lam);
    };
    double c = root(ev[0]);
    for (std::size_t i = 1; i < ev.size(); ++i) c -= root(ev[i]);
    return std::max(0.0, c);
}

double skew_information(const Matrix& sqrt_rho, double nx, double ny, double nz) {
    const Matrix k2 = nx * linalg::pauli_x() + ny * linalg::pauli_y() + nz * linalg::pauli_z();
    const Matrix k = linalg::kron(k2, linalg::identity2());
    const Matrix comm = sqrt_rho * k - k * sqrt_rho;
    return -0.5 * (comm * comm).trace().real();
}

double lqu_oracle(const model::XState& s, int n_theta, int n_phi, bool refine) {
    if (n_theta < 64 || n_phi < 64) {
        throw std::invalid_argument("lqu_oracle: grid sizes must be >= 64");
    }
    s.validate();
    const Matrix sq = linalg::psd_sqrt(s.to_matrix()).matrix();

    double best = std::numeric_limits<double>::infinity();
    double best_th = 0.0;
    double best_ph = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const double th = kPi * i / (n_theta - 1);  // includes both poles
        const double sth = std::sin(th);
        const double cth = std::cos(th);
        for (int j = 0; j < n_phi; ++j) {
            const double ph = 2.0 * kPi * j / n_phi;
            const double v = skew_information(sq, sth * std::cos(ph), sth * std::sin(ph), cth);
            if (v < best) {
                best = v;
                best_th = th;
                best_ph = ph;
            }
        }
    }

    if (refine) {
        const auto obj = [&](const std::vector<double>& q) {
            const double sth = std::sin(q[0]);
            return skew_information(sq, sth * std::cos(q[1]), sth * std::sin(q[1]), std::cos(q[0]));
        };
        const NmResult r = nelder_mead(obj, {best_th, best_ph},
                                       {kPi / (n_theta - 1), 2.0 * kPi / n_phi}, 600, 1e-15);
        best = std::min(best, r.value);
    }
    return best;
}

double lqu_via_m_matrix(const model::XState& s) {
    s.validate();
    const Matrix sq = linalg::psd_sqrt(s.to_matrix()).matrix();
    const Matrix paulis[3] = {linalg::pauli_x(), linalg::pauli_y(), linalg::pauli_z()};
    Matrix m(3);
    for (int i = 0; i < 3; ++i) {
        const Matrix si = linalg::kron(paulis[i], linalg::identity2());
        for (int j = i; j < 3; ++j) {
            const Matrix sj = linalg::kron(paulis[j], linalg::identity2());
            const double v = (sq * si * sq * sj).trace().real();
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    const std::vector<double> ev = linalg::hermitian_eigenvalues(HermMatrix(m));
    return 1.0 - ev[0];
}

double tdd_oracle(const model::XState& s, long budget, std::uint64_t seed) {
    if (budget < 1000) {
        throw std::invalid_argument("tdd_oracle: budget must be >= 1000 evaluations");
    }
    s.validate();
    const Matrix rho = s.to_matrix().matrix();

    const auto objective = [&](const std::vector<double>& q) {
        return linalg::trace_norm(HermMatrix(rho - candidate_from_params(q).to_state()));
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);

    constexpr std::size_t kRestarts = 3;
    const long coarse = budget / 2;
    std::vector<std::pair<double, std::vector<double>>> starts;

    double best = std::numeric_limits<double>::infinity();
    const auto consider = [&](std::vector<double> q) {
        const double v = objective(q);
        best = std::min(best, v);
        starts.emplace_back(v, std::move(q));
        std::push_heap(starts.begin(), starts.end());
        if (starts.size() > kRestarts) {
            std::pop_heap(starts.begin(), starts.end());
            starts.pop_back();
        }
    };

    // structured stage: measurement-dephasing candidates over an axis grid
    long used = 0;
    for (int i = 0; i <= 6 && used < coarse; ++i) {
        const double th = kPi * i / 6;
        const int nph = (i == 0 || i == 6) ? 1 : 8;
        for (int j = 0; j < nph && used < coarse; ++j) {
            consider(dephasing_params(rho, th, 2.0 * kPi * j / nph));
            ++used;
        }
    }
    // random stage
    for (; used < coarse; ++used) {
        consider({unit(rng),
                  std::acos(sym(rng)),
                  2.0 * kPi * unit(rng),
                  sym(rng), sym(rng), sym(rng),
                  sym(rng), sym(rng), sym(rng)});
    }

    std::sort(starts.begin(), starts.end());
    const long per_restart = (budget - coarse) / kRestarts;
    const std::vector<double> step{0.1, 0.2, 0.2, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
    std::vector<double> fine_step(step.size());
    for (std::size_t i = 0; i < step.size(); ++i) fine_step[i] = 0.02 * step[i];
    for (const auto& [v0, q0] : starts) {
        // two descent stages per restart; the second rebuilds a small simplex
        // around the first stage's minimum to escape collapsed geometry
        const NmResult r1 = nelder_mead(objective, q0, step, (2 * per_restart) / 3, 1e-15);
        const NmResult r2 =
            nelder_mead(objective, r1.x, fine_step, per_restart - r1.evals, 1e-15);
        best = std::min({best, r1.value, r2.value});
    }
    return best;
}

double kernel_residual_vacuum(const model::ModelParams& p, double tau_max, int n_steps) {
    p.validate();
    if (p.scenario != model::Scenario::Vacuum) {
        throw std::invalid_argument("kernel_residual_vacuum: scenario must be Vacuum");
    }
    if (n_steps < 2000) throw std::invalid_argument("kernel_residual_vacuum: n_steps must be >= 2000");
    if (!(tau_max > 0.0)) throw std::invalid_argument("kernel_residual_vacuum: tau_max must be > 0");

    const cdouble z(p.lambda, 2.0 * p.eta);
    const double h = tau_max / n_steps;
    std::vector<cdouble> f(static_cast<std::size_t>(n_steps) + 1);
    for (int k = 0; k <= n_steps; ++k) f[static_cast<std::size_t>(k)] = model::phi(k * h, p);

    // Composite-trapezoid convolution, accumulated recursively so the cost
    // stays linear: S_{k+1} = e^{-z h}(S_k + f_k/2) + f_{k+1}/2.
    const cdouble decay_step = std::exp(-z * h);
    std::vector<cdouble> conv(f.size());
    conv[0] = 0.0;
    cdouble acc = 0.0;
    for (int k = 0; k < n_steps; ++k) {
        acc = decay_step * (acc + 0.5 * f[static_cast<std::size_t>(k)]) +
              0.5 * f[static_cast<std::size_t>(k) + 1];
        conv[static_cast<std::size_t>(k) + 1] = acc;
    }

    double worst = 0.0;
    for (int k = 1; k < n_steps; ++k) {
        const cdouble deriv =
            (f[static_cast<std::size_t>(k) + 1] - f[static_cast<std::size_t>(k) - 1]) / (2.0 * h);
        const cdouble r = deriv + p.lambda * h * conv[static_cast<std::size_t>(k)];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double kernel_residual_excited(const model::ModelParams& p, double tau_max, int n_steps,
                               KernelSign sign) {
    p.validate();
    if (p.scenario != model::Scenario::OnePhoton) {
        throw std::invalid_argument("kernel_residual_excited: scenario must be OnePhoton");
    }
    if (n_steps < 2000) throw std::invalid_argument("kernel_residual_excited: n_steps must be >= 2000");
    if (!(tau_max > 0.0)) throw std::invalid_argument("kernel_residual_excited: tau_max must be > 0");

    const cdouble ker(p.lambda, 4.0 * p.eta);
    const cdouble kernel_rate = (sign == KernelSign::Corrected) ? -ker : ker;
    const cdouble detuning(0.0, p.xi + 3.0 * p.eta);
    const double h = tau_max / n_steps;
    std::vector<cdouble> f(static_cast<std::size_t>(n_steps) + 1);
    for (int k = 0; k <= n_steps; ++k) f[static_cast<std::size_t>(k)] = model::theta(k * h, p);

    const cdouble step_factor = std::exp(kernel_rate * h);
    std::vector<cdouble> conv(f.size());
    conv[0] = 0.0;
    cdouble acc = 0.0;
    for (int k = 0; k < n_steps; ++k) {
        acc = step_factor * (acc + 0.5 * f[static_cast<std::size_t>(k)]) +
              0.5 * f[static_cast<std::size_t>(k) + 1];
        conv[static_cast<std::size_t>(k) + 1] = acc;
    }

    double worst = 0.0;
    for (int k = 1; k < n_steps; ++k) {
        const cdouble deriv =
            (f[static_cast<std::size_t>(k) + 1] - f[static_cast<std::size_t>(k) - 1]) / (2.0 * h);
        const cdouble r = deriv + 3.0 * p.lambda * h * conv[static_cast<std::size_t>(k)] +
                          detuning * f[static_cast<std::size_t>(k)];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Suite assembly

namespace {

struct LquCase {
    model::ModelParams params;
    model::StatePrep prep;
    double tau;
};

std::vector<LquCase> lqu_cases(SuiteScale scale) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<LquCase> cases;
    const std::vector<double> taus_markov =
        scale == SuiteScale::Quick ? std::vector<double>{0.2, 1.0} : std::vector<double>{0.2, 0.5, 1.0, 2.0};
    const std::vector<double> taus_nonmarkov =
        scale == SuiteScale::Quick ? std::vector<double>{2.0, 10.0} : std::vector<double>{2.0, 5.0, 10.0, 25.0};
    for (double x : {inv_sqrt2, 0.3, 0.8}) {
        for (double eta : {0.0, 5.0}) {
            for (double tau : taus_markov) {
                cases.push_back({{10.0, eta, 0.0, model::Scenario::Vacuum}, {x}, tau});
            }
        }
        for (double eta : {0.0, 0.5}) {
            for (double tau : taus_nonmarkov) {
                cases.push_back({{0.1, eta, 0.0, model::Scenario::Vacuum}, {x}, tau});
            }
        }
    }
    return cases;
}

std::vector<LquCase> tdd_cases() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<LquCase> cases;
    const double xs[] = {inv_sqrt2, 0.3, 0.6, 0.8, 0.95};
    const double taus_markov[] = {0.3, 0.5, 0.7, 0.4, 0.2};
    const double etas_markov[] = {0.0, 5.0, 10.0, 15.0, 5.0};
    const double taus_nonmarkov[] = {2.0, 3.0, 1.0, 8.0, 4.0};
    const double etas_nonmarkov[] = {0.0, 0.2, 0.0, 1.0, 1.5};
    for (int i = 0; i < 5; ++i) {
        cases.push_back({{10.0, etas_markov[i], 0.0, model::Scenario::Vacuum}, {xs[i]}, taus_markov[i]});
        cases.push_back(
            {{0.1, etas_nonmarkov[i], 0.0, model::Scenario::Vacuum}, {xs[i]}, taus_nonmarkov[i]});
        cases.push_back({{10.0, etas_markov[(i + 2) % 5], 0.0, model::Scenario::Vacuum},
                         {xs[(i + 1) % 5]},
                         taus_markov[(i + 3) % 5]});
        cases.push_back({{0.1, etas_nonmarkov[(i + 3) % 5], 0.0, model::Scenario::Vacuum},
                         {xs[(i + 2) % 5]},
                         taus_nonmarkov[(i + 1) % 5]});
    }
    cases.resize(20);
    return cases;
}

}  // namespace

std::vector<OracleReport> run_suite(SuiteScale scale, std::uint64_t seed) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<OracleReport> reports;

    // concurrence: closed form vs eigenvalue oracle on a vacuum-state grid
    {
        const int nx = 20;
        const int ntau = scale == SuiteScale::Quick ? 10 : 20;
        double worst = 0.0;
        long count = 0;
        for (double lam : {10.0, 0.1}) {
            const double tau_max = lam >= 2.0 ? 3.0 : 50.0;
            for (double eta : {0.0, 0.5, 1.5, 5.0, 15.0}) {
                const model::ModelParams p{lam, eta, 0.0, model::Scenario::Vacuum};
                for (int ix = 0; ix < nx; ++ix) {
                    const model::StatePrep prep{static_cast<double>(ix) / (nx - 1)};
                    for (int it = 1; it <= ntau; ++it) {
                        const double tau = tau_max * it / ntau;
                        const model::XState s = model::density_matrix(tau, prep, p);
                        worst = std::max(worst,
                                         std::abs(measures::concurrence_x(s) - concurrence_oracle(s)));
                        ++count;
                    }
                }
            }
        }
        reports.push_back({"concurrence_closed_vs_eigenvalue_oracle", 0.0, worst, worst, 1e-9, count,
                           worst <= 1e-9,
                           "max |closed - oracle| over a vacuum-scenario state grid"});
    }

    // concurrence on one-photon states, including eta/xi mixtures
    {
        double worst = 0.0;
        long count = 0;
        const double pairs[][2] = {{0.0, 0.0}, {15.0, 0.0}, {20.0, 5.0}, {0.0, 3.0}};
        for (double lam : {10.0, 0.1}) {
            for (const auto& pr : pairs) {
                const model::ModelParams p{lam, pr[0], pr[1], model::Scenario::OnePhoton};
                const std::array<double, 2> taus =
                    lam >= 2.0 ? std::array<double, 2>{0.3, 1.5} : std::array<double, 2>{3.0, 12.0};
                for (double x : {inv_sqrt2, 0.4, 0.9}) {
                    for (double tau : taus) {
                        const model::XState s = model::density_matrix(tau, {x}, p);
                        worst = std::max(worst,
                                         std::abs(measures::concurrence_x(s) - concurrence_oracle(s)));
                        ++count;
                    }
                }
            }
        }
        reports.push_back({"concurrence_closed_vs_oracle_one_photon", 0.0, worst, worst, 1e-9, count,
                           worst <= 1e-9, "same comparison on one-photon-scenario states"});
    }

    // LQU: closed form vs sphere-grid minimization and vs the eigenvalue route
    {
        const int nt = 200, np = 400;
        double worst_grid = 0.0;
        double most_negative = 0.0;
        double worst_eig = 0.0;
        long count = 0;
        for (const LquCase& c : lqu_cases(scale)) {
            const model::AmplitudePair a = model::amplitudes(c.tau, c.prep, c.params);
            const model::XState s = model::density_matrix(c.tau, c.prep, c.params);
            const double closed = measures::lqu_model(a).q;
            const double grid = lqu_oracle(s, nt, np);
            const double eig = lqu_via_m_matrix(s);
            worst_grid = std::max(worst_grid, std::abs(grid - closed));
            most_negative = std::min(most_negative, grid - closed);
            worst_eig = std::max(worst_eig, std::abs(eig - closed));
            ++count;
        }
        reports.push_back({"lqu_closed_vs_sphere_grid", 0.0, worst_grid, worst_grid, 1e-3,
                           count * static_cast<long>(nt) * np,
                           worst_grid <= 1e-3 && most_negative >= -1e-9,
                           "200x400 grid plus refinement; grid minimum also may not undercut the "
                           "closed form beyond 1e-9"});
        reports.push_back({"lqu_closed_vs_m_matrix_eigenvalues", 0.0, worst_eig, worst_eig, 1e-9,
                           count, worst_eig <= 1e-9,
                           "exact 3x3 skew-information matrix route"});
    }

    // LQU grid-only gap shrinks under refinement
    {
        const model::ModelParams p{10.0, 0.0, 0.0, model::Scenario::Vacuum};
        const model::StatePrep prep{inv_sqrt2};
        const double tau = 0.2;
        const model::XState s = model::density_matrix(tau, prep, p);
        const double closed = measures::lqu_model(model::amplitudes(tau, prep, p)).q;
        const double g1 = std::abs(lqu_oracle(s, 64, 64, false) - closed);
        const double g2 = std::abs(lqu_oracle(s, 128, 128, false) - closed);
        const double g3 = std::abs(lqu_oracle(s, 256, 256, false) - closed);
        const bool monotone = g1 >= g2 - 1e-12 && g2 >= g3 - 1e-12;
        reports.push_back({"lqu_grid_refinement_monotone", g1, g3, std::abs(g1 - g3), 0.0,
                           64L * 64 + 128L * 128 + 256L * 256, monotone,
                           "grid-only gaps at 64/128/256: " + std::to_string(g1) + " -> " +
                               std::to_string(g2) + " -> " + std::to_string(g3)});
    }

    // TDD: closed form vs classical-quantum minimization (upper-bound oracle)
    {
        const long budget = scale == SuiteScale::Quick ? 40000 : 120000;
        double worst_ratio = 0.0;
        double most_negative = 0.0;
        long count = 0;
        for (const LquCase& c : tdd_cases()) {
            const model::XState s = model::density_matrix(c.tau, c.prep, c.params);
            const double closed = measures::tdd(s);
            const double oracle = tdd_oracle(s, budget, seed + static_cast<std::uint64_t>(count));
            worst_ratio = std::max(worst_ratio, oracle / closed);
            most_negative = std::min(most_negative, oracle - closed);
            ++count;
        }
        reports.push_back({"tdd_closed_vs_cq_minimization", 1.0, worst_ratio,
                           std::abs(worst_ratio - 1.0), 0.02, count * budget,
                           worst_ratio <= 1.02 && most_negative >= -1e-9,
                           "worst oracle/closed ratio over 20 model states; oracle is an upper bound"});
    }

    // TDD oracle on an exactly classical-quantum state
    {
        const long budget = scale == SuiteScale::Quick ? 12000 : 60000;
        const model::ModelParams p{10.0, 0.0, 0.0, model::Scenario::Vacuum};
        const model::XState s = model::density_matrix(0.0, {1.0}, p);
        const double oracle = tdd_oracle(s, budget, seed);
        reports.push_back({"tdd_oracle_product_state", 0.0, oracle, oracle, 1e-6, budget,
                           oracle <= 1e-6, "a matching classical-quantum state exists"});
    }

    // memory-kernel residual, vacuum scenario
    {
        const int n = scale == SuiteScale::Quick ? 400000 : 800000;
        double worst = 0.0;
        for (double lam : {10.0, 0.1}) {
            for (double eta : {0.0, 0.5, 15.0}) {
                const model::ModelParams p{lam, eta, 0.0, model::Scenario::Vacuum};
                worst = std::max(worst, kernel_residual_vacuum(p, 10.0, n));
            }
        }
        reports.push_back({"kernel_residual_vacuum", 0.0, worst, worst, 1e-6, 6L * n, worst <= 1e-6,
                           "max residual over lambda in {10, 0.1}, eta in {0, 0.5, 15}, tau <= 10"});
    }

    // memory-kernel residual, one-photon scenario, corrected kernel sign
    {
        const int n = scale == SuiteScale::Quick ? 200000 : 400000;
        double worst = 0.0;
        const double combos[][3] = {{10.0, 0.0, 0.0}, {10.0, 15.0, 0.0}, {10.0, 5.0, 2.0}, {0.1, 2.0, 1.5}};
        for (const auto& c : combos) {
            const model::ModelParams p{c[0], c[1], c[2], model::Scenario::OnePhoton};
            worst = std::max(worst, kernel_residual_excited(p, 3.0, n, KernelSign::Corrected));
        }
        reports.push_back({"kernel_residual_excited_corrected", 0.0, worst, worst, 1e-5, 4L * n,
                           worst <= 1e-5, "decaying-exponent kernel, tau <= 3"});
    }

    // kernel sign determination for the one-photon equation
    {
        const model::ModelParams p{10.0, 0.0, 0.0, model::Scenario::OnePhoton};
        const double corrected = kernel_residual_excited(p, 3.0, 20000, KernelSign::Corrected);
        const double as_printed = kernel_residual_excited(p, 3.0, 20000, KernelSign::AsPrinted);
        reports.push_back({"excited_kernel_sign_determination", corrected, as_printed,
                           std::abs(as_printed - corrected), 1e-5, 2L * 20000,
                           corrected <= 1e-5 && as_printed > 1.0,
                           "closed_form_value = residual with the decaying exponent (the sign the "
                           "amplitude actually satisfies); oracle_value = residual with the growing "
                           "exponent as printed"});
    }

    // second-order convergence of the residual quadrature
    {
        const model::ModelParams pv{10.0, 0.0, 0.0, model::Scenario::Vacuum};
        const double r1 = kernel_residual_vacuum(pv, 3.0, 2000);
        const double r2 = kernel_residual_vacuum(pv, 3.0, 4000);
        reports.push_back({"kernel_residual_order_vacuum", r1, r2, std::abs(r1 - r2), 0.0,
                           2000L + 4000L, r1 / r2 >= 3.0,
                           "halving the step must cut the residual by >= 3x; ratio = " +
                               std::to_string(r1 / r2)});
        const model::ModelParams pe{10.0, 0.0, 0.0, model::Scenario::OnePhoton};
        const double e1 = kernel_residual_excited(pe, 3.0, 2000, KernelSign::Corrected);
        const double e2 = kernel_residual_excited(pe, 3.0, 4000, KernelSign::Corrected);
        reports.push_back({"kernel_residual_order_excited", e1, e2, std::abs(e1 - e2), 0.0,
                           2000L + 4000L, e1 / e2 >= 3.0,
                           "ratio = " + std::to_string(e1 / e2)});
    }

    return reports;
}

bool suite_passed(const std::vector<OracleReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const OracleReport& r) { return r.pass; });
}

}  // namespace starkqc::oracles
