#pragma once

#include <complex>
#include <string>
#include <variant>

#include "zcount/characters.hpp"
#include "zcount/constants.hpp"
#include "zcount/special.hpp"

namespace zcount {

// Q itself (d = 1) or a quadratic field of fundamental discriminant d.
struct QuadraticField {
    long long d = 1;

    int degree() const { return d == 1 ? 1 : 2; }                   // n_K
    double abs_disc() const { return d == 1 ? 1.0 : double(d < 0 ? -d : d); }
    int real_embeddings() const { return d == 1 ? 1 : (d > 0 ? 2 : 0); }
    int complex_embeddings() const { return d < 0 ? 1 : 0; }
    std::string label() const;
};

// Validates d (1, or fundamental) and returns the field.
QuadraticField make_quadratic_field(long long d);

using Subject = std::variant<DirichletCharacter, QuadraticField>;

// Counting rectangle with vertices sigma1 +- iT and 1-sigma1 +- iT.
struct Rectangle {
    double sigma1 = 2.0;  // in (1, 2.5]
    double T = 10.0;      // >= 1
};

struct ZeroCountReport {
    std::string subject;
    double T = 0.0;            // requested height
    double perturbed_T = 0.0;  // height actually counted at
    long long N = 0;
    double main_term = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    double winding_residual = 0.0;
    long long samples_used = 0;

    std::string to_json() const;
};

// L(s, chi) = k^{-s} sum_a chi(a) zeta(s, a/k); abs error <= k * tol.abs_tol.
Complex eval_l(Complex s, const DirichletCharacter& chi,
               const EvalTolerance& tol = {});

// Completed L-function (k/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi), assembled
// in log space.  Requires a primitive nonprincipal character.
Complex eval_xi_chi(Complex s, const DirichletCharacter& chi,
                    const EvalTolerance& tol = {});

// Completed Dedekind zeta of Q or a quadratic field:
// s(s-1) (d_K/(pi^{n_K} 2^{2 r2}))^{s/2} Gamma(s/2)^{r1} Gamma(s)^{r2} zeta_K(s).
Complex eval_xi_quadratic(Complex s, const QuadraticField& K,
                          const EvalTolerance& tol = {});

// Winding number of the completed function around the rectangle boundary,
// by adaptive phase continuation (consecutive increments kept under pi/2).
// Fills N and the winding diagnostics only.
ZeroCountReport count_zeros(const Subject& subject, const Rectangle& rect,
                            const EvalTolerance& tol = {});

// Smooth main term of the zero-counting formula.
double main_term(const Subject& subject, double T);

// Full pipeline: count, main term, theorem bound, slack.  Retries with
// T += 1e-3 (up to 5 times) when a zero sits on the boundary.
ZeroCountReport verify(const DirichletCharacter& chi, double T,
                       const TheoremOneConstants& constants,
                       const EvalTolerance& tol = {});
ZeroCountReport verify(const QuadraticField& K, double T,
                       const TheoremTwoConstants& constants,
                       const EvalTolerance& tol = {});

}  // namespace zcount
