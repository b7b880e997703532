#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "zcount/special.hpp"

using zcount::Complex;
using zcount::EvalTolerance;
using zcount::WeightKind;
namespace num = std::numbers;

namespace {

// --- independent oracles (kept free of the library evaluation paths) ---

// direct summation, 1e6 terms, plus midpoint integral tail
double zeta_series_oracle(double sigma) {
    const long N = 1000000;
    double sum = 0.0;
    for (long n = N; n >= 1; --n) sum += std::pow(double(n), -sigma);
    return sum + std::pow(N + 0.5, 1.0 - sigma) / (sigma - 1.0);
}

// direct complex summation with midpoint tail; needs Re(s) >= 1.3
Complex zeta_complex_oracle(Complex s) {
    const long N = 200000;
    Complex sum(0.0, 0.0);
    for (long n = N; n >= 1; --n) sum += std::exp(-s * std::log(double(n)));
    return sum + std::exp((1.0 - s) * std::log(N + 0.5)) / (s - 1.0);
}

// standalone Euler-Maclaurin at a fixed refined cutoff (4x the library's
// typical choice) with two extra Bernoulli terms
Complex hurwitz_em_oracle(Complex s, double a, long M) {
    static const double bern[8] = {1.0 / 6,  -1.0 / 30,   1.0 / 42, -1.0 / 30,
                                   5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
    Complex sum(0.0, 0.0);
    for (long n = M - 1; n >= 0; --n) sum += std::exp(-s * std::log(n + a));
    const double Ma = M + a;
    Complex out = sum + std::exp((1.0 - s) * std::log(Ma)) / (s - 1.0) +
                  0.5 * std::exp(-s * std::log(Ma));
    Complex rising = s;
    double fact = 2.0;  // (2j)!
    Complex mp = std::exp(-(s + 1.0) * std::log(Ma));
    for (int j = 1; j <= 8; ++j) {
        out += bern[j - 1] / fact * rising * mp;
        rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
        fact *= double(2 * j + 1) * double(2 * j + 2);
        mp *= std::exp(Complex(-2.0 * std::log(Ma), 0.0));
    }
    return out;
}

// log Gamma(z) via the product recursion off a plain Stirling evaluation at
// z + 20 (no internal shifting logic shared with the library)
Complex lgamma_shift_oracle(Complex z) {
    static const double stir[10] = {
        1.0 / 12,    -1.0 / 360,        1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
        -691.0 / 360360, 1.0 / 156,     -3617.0 / 122400,
        43867.0 / 244188, -174611.0 / 125400};
    const Complex zs = z + 20.0;
    Complex w = (zs - 0.5) * std::log(zs) - zs + 0.5 * std::log(2.0 * num::pi);
    Complex invp = 1.0 / zs;
    const Complex inv2 = invp * invp;
    for (int j = 0; j < 10; ++j) {
        w += stir[j] * invp;
        invp *= inv2;
    }
    for (int k = 0; k < 20; ++k) w -= std::log(z + double(k));
    return w;
}

}  // namespace

TEST_CASE("zeta_real: analytic values") {
    CHECK(zcount::zeta_real(2.0) == doctest::Approx(num::pi * num::pi / 6.0).epsilon(1e-12));
    CHECK(zcount::zeta_real(4.0) ==
          doctest::Approx(std::pow(num::pi, 4) / 90.0).epsilon(1e-12));
}

TEST_CASE("zeta_real: agrees with the direct-series oracle at sigma=1.5") {
    const double oracle = zeta_series_oracle(1.5);
    CHECK(std::fabs(zcount::zeta_real(1.5) - oracle) < 1e-10);
}

TEST_CASE("zeta_real: domain and convergence errors") {
    CHECK_THROWS_AS(zcount::zeta_real(1.0), zcount::DomainError);
    CHECK_THROWS_AS(zcount::zeta_real(0.5), zcount::DomainError);
    CHECK_THROWS_AS(zcount::hurwitz_zeta(Complex(0.5, 40.0), 1.0,
                                         EvalTolerance{1e-12, 20}),
                    zcount::NonConvergence);
    const EvalTolerance bad{1e-17, 100};
    CHECK_THROWS_AS(bad.validate(), zcount::DomainError);
}

TEST_CASE("hurwitz_zeta: identities at a=1 and a=1/2") {
    const Complex two(2.0, 0.0);
    CHECK(std::abs(zcount::hurwitz_zeta(two, 1.0) -
                   Complex(num::pi * num::pi / 6.0, 0.0)) < 1e-12);
    CHECK(std::abs(zcount::hurwitz_zeta(two, 0.5) -
                   Complex(num::pi * num::pi / 2.0, 0.0)) < 1e-12);
}

TEST_CASE("hurwitz_zeta: refined-cutoff oracle at s=0.5+10i, a=1/3") {
    const Complex s(0.5, 10.0);
    const Complex oracle = hurwitz_em_oracle(s, 1.0 / 3.0, 256);
    CHECK(std::abs(zcount::hurwitz_zeta(s, 1.0 / 3.0) - oracle) < 1e-8);
}

TEST_CASE("hurwitz_zeta: pole and domain errors") {
    CHECK_THROWS_AS(zcount::hurwitz_zeta(Complex(1.0, 0.0), 0.5), zcount::PoleError);
    CHECK_THROWS_AS(zcount::hurwitz_zeta(Complex(2.0, 0.0), 0.0), zcount::DomainError);
    CHECK_THROWS_AS(zcount::hurwitz_zeta(Complex(2.0, 0.0), 1.5), zcount::DomainError);
}

TEST_CASE("hurwitz_zeta(s,1) matches complex zeta on a grid") {
    for (int i = 0; i < 20; ++i) {
        const Complex s(1.5 + 0.075 * i, 0.9 * i);
        const Complex oracle = zeta_complex_oracle(s);
        CHECK(std::abs(zcount::hurwitz_zeta(s, 1.0) - oracle) < 1e-9);
    }
}

TEST_CASE("log_gamma: analytic values") {
    CHECK(std::abs(zcount::log_gamma(Complex(0.5, 0.0)) -
                   Complex(0.5 * std::log(num::pi), 0.0)) < 1e-12);
    CHECK(std::abs(zcount::log_gamma(Complex(5.0, 0.0)) -
                   Complex(std::log(24.0), 0.0)) < 1e-12);
}

TEST_CASE("log_gamma: shift-identity oracle at 0.25+7.5i") {
    const Complex z(0.25, 7.5);
    CHECK(std::abs(zcount::log_gamma(z) - lgamma_shift_oracle(z)) < 1e-10);
}

TEST_CASE("log_gamma: poles at non-positive integers") {
    CHECK_THROWS_AS(zcount::log_gamma(Complex(0.0, 0.0)), zcount::PoleError);
    CHECK_THROWS_AS(zcount::log_gamma(Complex(-3.0, 0.0)), zcount::PoleError);
}

TEST_CASE("log_gamma: recurrence exp(lg(z+1)-lg(z)) = z") {
    std::mt19937 rng(20240915);
    std::uniform_real_distribution<double> re(0.2, 5.0), im(-50.0, 50.0);
    for (int i = 0; i < 50; ++i) {
        const Complex z(re(rng), im(rng));
        const Complex ratio =
            std::exp(zcount::log_gamma(z + 1.0) - zcount::log_gamma(z));
        CHECK(std::abs(ratio - z) / std::abs(z) < 1e-9);
    }
}

TEST_CASE("stirling_im_loggamma: cross-checks against log_gamma") {
    CHECK(std::fabs(zcount::stirling_im_loggamma(1, 1.0) -
                    zcount::log_gamma(Complex(0.75, 0.5)).imag()) < 1e-10);
    CHECK(std::fabs(zcount::stirling_im_loggamma(0, 10.0) -
                    zcount::log_gamma(Complex(0.25, 5.0)).imag()) < 1e-10);
}

TEST_CASE("stirling_im_loggamma: asymptotic pi/8 remainder") {
    const double T = 1e6;
    const double main = 0.5 * T * (std::log(0.5 * T) - 1.0);
    CHECK(std::fabs(zcount::stirling_im_loggamma(1, T) - main - num::pi / 8.0) <
          1e-5);
}

TEST_CASE("g_bound: direct arithmetic of the displayed terms") {
    const double g1 = 0.25 * std::log(1.0 + 9.0 / 4.0) +
                      0.25 * std::atan(2.0 / 3.0) +
                      1.0 / (3.0 * std::abs(Complex(1.5, 1.0)));
    CHECK(zcount::g_bound(1, 1.0) == doctest::Approx(g1).epsilon(1e-12));
    CHECK(std::fabs(zcount::g_bound(1, 1.0) - 0.62656) < 1e-4);

    const double g0 = std::fabs(0.25 * std::log(1.25) - 0.25 * std::atan(2.0)) +
                      1.0 / (3.0 * std::abs(Complex(0.5, 1.0)));
    CHECK(zcount::g_bound(0, 1.0) == doctest::Approx(g0).epsilon(1e-12));
    CHECK(std::fabs(zcount::g_bound(0, 1.0) - 0.51914) < 1e-4);

    CHECK(std::fabs(zcount::g_bound(1, 1e6) - num::pi / 8.0) < 1e-5);
    CHECK_THROWS_AS(zcount::g_bound(1, 0.5), zcount::DomainError);
}

TEST_CASE("g_bound: |g(0,T)| <= g(1,T), and g(1,T) non-increasing") {
    double prev = zcount::g_bound(1, 1.0);
    for (double T = 1.0; T <= 100.0; T += 0.5) {
        const double g1 = zcount::g_bound(1, T);
        CHECK(zcount::g_bound(0, T) <= g1);
        CHECK(g1 <= prev + 1e-14);
        prev = g1;
    }
}

TEST_CASE("big_g: delta=0 collapses to the 1/3 bracket") {
    CHECK(std::fabs(zcount::big_g(0, 0.0, 1.0) -
                    4.0 / (3.0 * std::abs(Complex(0.5, 1.0)))) < 1e-10);
    CHECK(std::fabs(zcount::big_g(1, 0.0, 2.0) -
                    4.0 / (3.0 * std::abs(Complex(1.5, 2.0)))) < 1e-10);
}

TEST_CASE("big_g: term-by-term independent re-evaluation") {
    const int a = 0;
    const double d = std::sqrt(2.0) * 0.75, t = 1.0;
    const double ah = a + 0.5;
    const double expected =
        0.5 * (a - 0.5 + d) * std::atan2(ah + d, t) +
        0.5 * (a - 0.5 - d) * std::atan2(ah - d, t) -
        (a - 0.5) * std::atan2(ah, t) -
        0.25 * t *
            std::log(1.0 + (2.0 * d * d * (t * t - ah * ah) + d * d * d * d) /
                               ((t * t + ah * ah) * (t * t + ah * ah))) +
        (1.0 / std::abs(Complex(ah + d, t)) + 1.0 / std::abs(Complex(ah - d, t)) +
         2.0 / std::abs(Complex(ah, t))) /
            3.0;
    CHECK(std::fabs(zcount::big_g(a, d, t) - expected) < 1e-10);
    CHECK_THROWS_AS(zcount::big_g(0, 3.5, 1.0), zcount::DomainError);
}

TEST_CASE("big_g: monotone in t (down) and delta (up) on a 20x20 grid") {
    for (int a = 0; a <= 1; ++a) {
        for (int i = 0; i < 20; ++i) {
            const double d = 1.5 * i / 19.0;
            double prev = zcount::big_g(a, d, 1.0);
            for (int j = 1; j < 20; ++j) {
                const double t = 1.0 + 2.0 * j;
                const double v = zcount::big_g(a, d, t);
                CHECK(v <= prev + 1e-13);
                prev = v;
            }
        }
        for (int j = 0; j < 20; ++j) {
            const double t = 1.0 + 2.0 * j;
            double prev = zcount::big_g(a, 0.0, t);
            for (int i = 1; i < 20; ++i) {
                const double d = 1.5 * i / 19.0;
                const double v = zcount::big_g(a, d, t);
                CHECK(v >= prev - 1e-13);
                prev = v;
            }
        }
    }
}

TEST_CASE("big_f: values") {
    CHECK(std::fabs(zcount::big_f(0.0, 5.0)) < 1e-15);
    const double d = std::sqrt(2.0) * 0.75;
    const double direct = 2.0 * std::atan(0.5) - std::atan(0.5 + d) - std::atan(0.5 - d);
    CHECK(zcount::big_f(d, 1.0) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(std::fabs(zcount::big_f(d, 1.0) - 0.4373378917) < 1e-9);
    CHECK(std::fabs(zcount::big_f(1.0, 1e6)) < 1e-5);
}

TEST_CASE("boundary_weight: spot values") {
    // at phi=pi the sin term vanishes and the radicand is 1+(R-(2+eta))^2
    const double r = 1.714286, eta = 0.25;
    const double R = r * 0.75;
    const double direct = std::sqrt(1.0 + (R - 2.25) * (R - 2.25));
    CHECK(zcount::boundary_weight(WeightKind::w, 1.0, num::pi, eta, r) ==
          doctest::Approx(direct).epsilon(1e-12));
    CHECK(std::fabs(zcount::boundary_weight(WeightKind::w, 1.0, num::pi, eta, r) -
                    1.38919) < 1e-4);

    CHECK(std::fabs(zcount::boundary_weight(WeightKind::w_star, 1e6, 0.7, eta, r) -
                    1.0) < 1e-6);

    const double wt = std::sqrt(1.0 + 2.0 * R / 2.0 +
                                (R * R + eta * eta + 2.0 * r * eta * 0.75 * 0.0) /
                                    4.0);  // phi = pi/2: cos = 0, sin = 1
    CHECK(zcount::boundary_weight(WeightKind::w_tilde, 2.0, num::pi / 2, eta, r) ==
          doctest::Approx(wt).epsilon(1e-10));
}

TEST_CASE("boundary_weight: w and w_star non-increasing in T on their arcs") {
    const double eta = 0.25, r = 12.0 / 7.0;
    for (int i = 0; i <= 8; ++i) {
        const double phi_w = num::pi / 2 + num::pi / 2 * i / 8.0;
        const double phi_ws = num::pi + num::pi / 2 * i / 8.0;
        double prev_w = zcount::boundary_weight(WeightKind::w, 1.0, phi_w, eta, r);
        double prev_ws =
            zcount::boundary_weight(WeightKind::w_star, 1.0, phi_ws, eta, r);
        for (double T = 1.5; T <= 20.0; T += 0.5) {
            const double vw = zcount::boundary_weight(WeightKind::w, T, phi_w, eta, r);
            const double vws =
                zcount::boundary_weight(WeightKind::w_star, T, phi_ws, eta, r);
            CHECK(vw <= prev_w + 1e-13);
            CHECK(vws <= prev_ws + 1e-13);
            prev_w = vw;
            prev_ws = vws;
        }
    }
}

TEST_CASE("sandwich precondition: zeta(2s)/zeta(s) < zeta(s) on (1.05, 4]") {
    for (int i = 0; i < 20; ++i) {
        const double s = 1.05 + (4.0 - 1.05) * i / 19.0 + 1e-3;
        const double zs = zcount::zeta_real(s);
        CHECK(zcount::zeta_real(2.0 * s) / zs < zs);
    }
}
