#include <doctest.h>

#include <cmath>
#include <random>

#include "starkqc/model.hpp"
#include "support.hpp"

using namespace starkqc;
using linalg::cdouble;
using model::ModelParams;
using model::Scenario;
using model::StatePrep;

namespace {
const double kX = 1.0 / std::sqrt(2.0);
}

TEST_CASE("sigma_vacuum: frozen values") {
    CHECK(std::abs(model::sigma_vacuum({10.0, 0.0, 0.0, Scenario::Vacuum}) -
                   cdouble(7.745966692414834, 0.0)) < 1e-12);
    // critical damping boundary
    CHECK(std::abs(model::sigma_vacuum({4.0, 0.0, 0.0, Scenario::Vacuum})) < 1e-12);
    CHECK(std::abs(model::sigma_vacuum({0.1, 0.0, 0.0, Scenario::Vacuum}) -
                   cdouble(0.0, 0.6244997998398398)) < 1e-12);
}

TEST_CASE("sigma_excited: frozen value and algebraic equivalence") {
    CHECK(std::abs(model::sigma_excited({10.0, 0.0, 0.0, Scenario::OnePhoton}) -
                   cdouble(0.0, 4.47213595499958)) < 1e-12);

    // the long form -12L - 4i(L+4i eta)(xi+3 eta) + (L+i(xi+7 eta))^2 must
    // agree with the implemented short form
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double lam = 0.05 + 20.0 * u(rng);
        const double eta = 20.0 * u(rng);
        const double xi = 20.0 * (u(rng) - 0.5);
        const ModelParams p{lam, eta, xi, Scenario::OnePhoton};
        const cdouble zl(lam, xi + 7.0 * eta);
        const cdouble long_form =
            std::sqrt(-12.0 * lam - cdouble(0.0, 4.0) * cdouble(lam, 4.0 * eta) * (xi + 3.0 * eta) +
                      zl * zl);
        const cdouble got = model::sigma_excited(p);
        CHECK(std::min(std::abs(got - long_form), std::abs(got + long_form)) < 1e-12);
    }

    // depends on eta and xi only through their difference
    const cdouble a = model::sigma_excited({10.0, 15.0, 4.0, Scenario::OnePhoton});
    const cdouble b = model::sigma_excited({10.0, 11.0, 0.0, Scenario::OnePhoton});
    CHECK(a == b);
}

TEST_CASE("phi: exact start, contraction, quadrature agreement") {
    for (double lam : {10.0, 4.0, 0.1}) {
        for (double eta : {0.0, 0.5, 15.0}) {
            const ModelParams p{lam, eta, 0.0, Scenario::Vacuum};
            const cdouble p0 = model::phi(0.0, p);
            CHECK(p0.real() == 1.0);
            CHECK(p0.imag() == 0.0);
            for (int k = 0; k <= 500; ++k) {
                CHECK(std::abs(model::phi(0.1 * k, p)) <= 1.0 + 1e-9);
            }
        }
    }

    // independent RK4 solution of the memory-kernel equation
    for (double lam : {10.0, 0.1}) {
        for (double eta : {0.0, 0.5, 15.0}) {
            const ModelParams p{lam, eta, 0.0, Scenario::Vacuum};
            const cdouble closed = model::phi(1.0, p);
            const cdouble integ = testsup::rk4_amplitude(1.0, p, 20000);
            CHECK(std::abs(closed - integ) < 1e-6);
        }
    }
}

TEST_CASE("phi: critical damping limit is continuous") {
    const ModelParams crit{4.0, 0.0, 0.0, Scenario::Vacuum};
    // sigma == 0 exactly: phi = e^{-2 tau}(1 + 2 tau)
    for (double tau : {0.3, 1.0, 2.5}) {
        const double expected = std::exp(-2.0 * tau) * (1.0 + 2.0 * tau);
        CHECK(std::abs(model::phi(tau, crit) - expected) < 1e-12);
        for (double lam : {4.0 - 1e-9, 4.0 + 1e-9}) {
            CHECK(std::abs(model::phi(tau, {lam, 0.0, 0.0, Scenario::Vacuum}) - expected) < 1e-7);
        }
    }
}

TEST_CASE("phi: death and revival in the strong-coupling regime") {
    const ModelParams p{0.1, 0.0, 0.0, Scenario::Vacuum};
    int deaths = 0;
    double prev = std::norm(model::phi(0.0, p));
    bool in_death = false;
    for (int k = 1; k <= 5000; ++k) {
        const double v = std::norm(model::phi(0.01 * k, p));
        if (v < 1e-4 && !in_death) {
            ++deaths;
            in_death = true;
        }
        if (v > 1e-2) in_death = false;
        prev = v;
    }
    (void)prev;
    CHECK(deaths >= 2);  // periodic death and revival
}

TEST_CASE("theta: exact start, contraction, quadrature agreement") {
    const double combos[][3] = {{10.0, 0.0, 0.0}, {10.0, 15.0, 0.0}, {0.1, 2.0, 1.5}, {10.0, 5.0, 5.0}};
    for (const auto& c : combos) {
        const ModelParams p{c[0], c[1], c[2], Scenario::OnePhoton};
        const cdouble t0 = model::theta(0.0, p);
        CHECK(t0.real() == 1.0);
        CHECK(t0.imag() == 0.0);
        for (int k = 0; k <= 500; ++k) {
            CHECK(std::abs(model::theta(0.1 * k, p)) <= 1.0 + 1e-9);
        }
        const cdouble closed = model::theta(1.0, p);
        const cdouble integ = testsup::rk4_amplitude(1.0, p, 20000);
        CHECK(std::abs(closed - integ) < 1e-6);
    }
}

TEST_CASE("theta: modulus depends only on eta - xi") {
    const double m1 = std::abs(model::theta(0.5, {10.0, 15.0, 0.0, Scenario::OnePhoton}));
    const double m2 = std::abs(model::theta(0.5, {10.0, 20.0, 5.0, Scenario::OnePhoton}));
    CHECK(std::abs(m1 - m2) < 1e-12);

    // larger Stark-shift difference slows the envelope decay
    const double slow = std::abs(model::theta(5.0, {0.1, 10.0, 0.0, Scenario::OnePhoton}));
    const double fast = std::abs(model::theta(5.0, {0.1, 0.0, 0.0, Scenario::OnePhoton}));
    CHECK(slow > fast);
}

TEST_CASE("density_matrix: anchors") {
    const ModelParams p{10.0, 0.0, 0.0, Scenario::Vacuum};

    const model::XState bell = model::density_matrix(0.0, {kX}, p);
    CHECK(bell.r22 == doctest::Approx(0.5).margin(1e-12));
    CHECK(bell.r33 == doctest::Approx(0.5).margin(1e-12));
    CHECK(bell.r23.real() == doctest::Approx(0.5).margin(1e-12));
    CHECK(std::abs(bell.r44) < 1e-12);
    CHECK(bell.r11 == 0.0);
    CHECK(bell.r14 == cdouble(0.0, 0.0));

    const model::XState prod = model::density_matrix(0.0, {1.0}, p);
    CHECK(prod.r22 == 1.0);
    CHECK(prod.r33 == 0.0);
    CHECK(prod.r44 == 0.0);
    CHECK(std::abs(prod.r23) == 0.0);

    // long-time Markovian limit: everything decays into |00>
    const model::XState late = model::density_matrix(40.0, {kX}, p);
    CHECK(late.r44 == doctest::Approx(1.0).margin(1e-10));
    CHECK(late.r22 < 1e-10);
    CHECK(late.r33 < 1e-10);
}

TEST_CASE("density_matrix: always a valid quantum state") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const bool vac = trial % 2 == 0;
        const double lam = vac ? (trial % 4 < 2 ? 10.0 : 0.1) : (trial % 4 < 2 ? 10.0 : 0.1);
        const ModelParams p{lam, 15.0 * u(rng), vac ? 0.0 : 10.0 * u(rng),
                            vac ? Scenario::Vacuum : Scenario::OnePhoton};
        const double tau = (lam >= 2.0 ? 3.0 : 50.0) * u(rng);
        const model::XState s = model::density_matrix(tau, {u(rng)}, p);
        const auto ev = linalg::hermitian_eigenvalues(s.to_matrix());
        CHECK(ev.back() >= -1e-10);
        double tr = 0.0;
        for (double v : ev) tr += v;
        CHECK(tr == doctest::Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("density_matrix: vacuum dynamics ignore xi bitwise") {
    for (double tau : {0.0, 0.4, 2.7}) {
        const model::XState a = model::density_matrix(tau, {0.3}, {10.0, 5.0, 0.0, Scenario::Vacuum});
        const model::XState b = model::density_matrix(tau, {0.3}, {10.0, 5.0, 7.3, Scenario::Vacuum});
        CHECK(a.r22 == b.r22);
        CHECK(a.r33 == b.r33);
        CHECK(a.r44 == b.r44);
        CHECK(a.r23 == b.r23);
    }
}

TEST_CASE("density_matrix: one-photon dynamics depend only on eta - xi") {
    for (double tau : {0.2, 1.0, 3.0}) {
        const model::XState a =
            model::density_matrix(tau, {0.6}, {10.0, 15.0, 0.0, Scenario::OnePhoton});
        const model::XState b =
            model::density_matrix(tau, {0.6}, {10.0, 20.0, 5.0, Scenario::OnePhoton});
        CHECK(std::abs(a.r22 - b.r22) < 1e-12);
        CHECK(std::abs(a.r33 - b.r33) < 1e-12);
        CHECK(std::abs(a.r44 - b.r44) < 1e-12);
        CHECK(std::abs(a.r23 - b.r23) < 1e-12);
    }
}

TEST_CASE("amplitudes: initial conditions") {
    const ModelParams p{0.1, 1.0, 0.0, Scenario::Vacuum};
    for (double x : {0.0, 0.3, kX, 1.0}) {
        const model::AmplitudePair a = model::amplitudes(0.0, {x}, p);
        CHECK(a.b1 == cdouble(x, 0.0));
        CHECK(a.b2.real() == doctest::Approx(std::sqrt(1.0 - x * x)).margin(1e-15));
        CHECK(a.b2.imag() == 0.0);
        CHECK(std::norm(a.b1) + std::norm(a.b2) <= 1.0 + 1e-9);
    }
}

TEST_CASE("regime: boundary convention") {
    CHECK(model::regime({10.0, 0.0, 0.0, Scenario::Vacuum}) == model::Regime::Markovian);
    CHECK(model::regime({0.1, 0.0, 0.0, Scenario::Vacuum}) == model::Regime::NonMarkovian);
    CHECK(model::regime({2.0, 0.0, 0.0, Scenario::Vacuum}) == model::Regime::Markovian);
    CHECK(model::regime({1.999, 0.0, 0.0, Scenario::Vacuum}) == model::Regime::NonMarkovian);
}

TEST_CASE("validation and scenario guards") {
    CHECK_THROWS_AS(ModelParams({-1.0, 0.0, 0.0, Scenario::Vacuum}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(ModelParams({10.0, -0.5, 0.0, Scenario::Vacuum}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(ModelParams({10.0, 0.0, std::nan(""), Scenario::Vacuum}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(StatePrep{-0.1}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(StatePrep{1.1}.validate(), std::invalid_argument);

    CHECK_THROWS_AS(model::sigma_vacuum({10.0, 0.0, 0.0, Scenario::OnePhoton}),
                    std::invalid_argument);
    CHECK_THROWS_AS(model::sigma_excited({10.0, 0.0, 0.0, Scenario::Vacuum}),
                    std::invalid_argument);
    CHECK_THROWS_AS(model::phi(-0.1, {10.0, 0.0, 0.0, Scenario::Vacuum}), std::invalid_argument);
}

TEST_CASE("XState: invariant violations are surfaced") {
    model::XState bad_trace{0.0, 0.5, 0.5, 0.1, cdouble(0.0, 0.0), cdouble(0.0, 0.0)};
    CHECK_THROWS_AS(bad_trace.validate(), std::invalid_argument);

    model::XState neg_pop{-0.2, 0.6, 0.3, 0.3, cdouble(0.0, 0.0), cdouble(0.0, 0.0)};
    CHECK_THROWS_AS(neg_pop.validate(), std::invalid_argument);

    model::XState big_coherence{0.0, 0.5, 0.5, 0.0, cdouble(0.6, 0.0), cdouble(0.0, 0.0)};
    CHECK_THROWS_AS(big_coherence.validate(), std::invalid_argument);

    model::XState bell{0.0, 0.5, 0.5, 0.0, cdouble(0.5, 0.0), cdouble(0.0, 0.0)};
    CHECK_NOTHROW(bell.validate());
}
