#pragma once

#include <complex>

#include "zcount/errors.hpp"

namespace zcount {

using Complex = std::complex<double>;

// Accuracy request for series evaluations.
struct EvalTolerance {
    double abs_tol = 1e-12;
    long max_terms = 1000000;

    void validate() const;  // throws DomainError
};

// Riemann zeta on the real axis, sigma > 1.  Euler-Maclaurin with a tail
// bound; absolute error <= tol.abs_tol.
double zeta_real(double sigma, const EvalTolerance& tol = {});

// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n+a)^{-s}, continued by
// Euler-Maclaurin.  a in (0,1]; supports Re(s) > -11.
Complex hurwitz_zeta(Complex s, double a, const EvalTolerance& tol = {});

// Principal branch of log Gamma(z), via upward recursion to |z+n| >= 15
// followed by the Stirling series.  Absolute error <= 1e-12.
Complex log_gamma(Complex z);

// Im log Gamma(1/4 + a/2 + iT/2) assembled through its Stirling
// decomposition (T/2)log(T/2e) + g(a,T); a in {0,1}, T >= 1.
double stirling_im_loggamma(int a, double T);

// Worst-case bound for the g(a,T) remainder of the Stirling decomposition:
// for a=1 the upper value g(1,T), for a=0 the magnitude |g(0,T)|.
double g_bound(int a, double T);

// G(a, delta, t): bound for |Delta_+ arg Gamma((s+a)/2) + Delta_- arg
// Gamma((s+a)/2)| across the critical line.  a in {0,1}, t >= 1,
// 0 <= delta <= 3.
double big_g(int a, double delta, double t);

// F(delta, t) = 2 atan(1/2t) - atan((1/2+delta)/t) - atan((1/2-delta)/t).
double big_f(double delta, double t);

// The four boundary weights entering the phi-integrals of the constants.
// w / w_star carry the (2+eta) cross term (Dirichlet side), w_tilde /
// w_tilde_star the eta cross term (Dedekind side); the starred variants
// drop the sin(phi) term.
enum class WeightKind { w, w_star, w_tilde, w_tilde_star };

double boundary_weight(WeightKind kind, double T, double phi, double eta, double r);

}  // namespace zcount
