#include "zcount/special.hpp"

#include <cmath>
#include <limits>

namespace zcount {

namespace {

constexpr double kLog2Pi = 1.837877066409345483560659472811235279;

// B_{2j}/(2j)! for j = 1..7 (B2 .. B14)
constexpr double kBernOverFact[7] = {
    8.3333333333333333e-02,   // 1/12
    -1.3888888888888889e-03,  // -1/720
    3.3068783068783069e-05,   // 1/30240
    -8.2671957671957672e-07,  // -1/1209600
    2.0876756987868099e-08,   // 5/239500800
    -5.2841901386874932e-10,  // -691/1307674368000
    1.3382536530684679e-11,   // 7/523069747200
};

// B_{2j}/((2j)(2j-1)) for j = 1..8 (Stirling series coefficients)
constexpr double kStirling[8] = {
    8.3333333333333333e-02,   // 1/12
    -2.7777777777777778e-03,  // -1/360
    7.9365079365079365e-04,   // 1/1260
    -5.9523809523809524e-04,  // -1/1680
    8.4175084175084175e-04,   // 1/1188
    -1.9175269175269175e-03,  // -691/360360
    6.4102564102564103e-03,   // 1/156
    -2.9550653594771242e-02,  // -3617/122400
};

// x^{-s} for real x > 0
inline Complex pow_neg(double x, Complex s) {
    const double L = std::log(x);
    const double mag = std::exp(-s.real() * L);
    const double ang = -s.imag() * L;
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

inline bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

void EvalTolerance::validate() const {
    if (!(abs_tol >= 10.0 * std::numeric_limits<double>::epsilon()))
        throw DomainError("EvalTolerance: abs_tol below 10*machine-epsilon");
    if (max_terms <= 0 || max_terms > 1000000)
        throw DomainError("EvalTolerance: max_terms out of (0, 1e6]");
}

Complex hurwitz_zeta(Complex s, double a, const EvalTolerance& tol) {
    tol.validate();
    if (!finite(s)) throw DomainError("hurwitz_zeta: non-finite s");
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0,1]");
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        throw PoleError("hurwitz_zeta: pole at s=1");
    const double sigma = s.real();
    if (sigma <= -11.0)
        throw DomainError("hurwitz_zeta: Re(s) <= -11 unsupported");

    // |(s)_13| for the first-omitted-term bound (B14 term)
    double prod = 1.0;
    for (int j = 0; j < 13; ++j) prod *= std::abs(s + double(j));
    const double tail_fac =
        std::abs(kBernOverFact[6]) * prod * std::abs(s + 13.0) / (sigma + 13.0);

    long M = std::lround(std::max(16.0, 1.5 * std::abs(s.imag()) + 8.0));
    bool ok = false;
    while (M <= tol.max_terms) {
        if (tail_fac * std::pow(M + a, -sigma - 13.0) <= tol.abs_tol) {
            ok = true;
            break;
        }
        M = M + M / 3 + 8;
    }
    if (!ok) throw NonConvergence("hurwitz_zeta: cutoff exceeds max_terms");

    Complex sum(0.0, 0.0);
    for (long n = M - 1; n >= 0; --n) sum += pow_neg(n + a, s);

    const double Ma = M + a;
    Complex result = sum + pow_neg(Ma, s - 1.0) / (s - 1.0) + 0.5 * pow_neg(Ma, s);

    // correction terms through B12, first omitted (B14) below abs_tol
    Complex rising = s;                       // (s)_{2j-1}
    Complex mp = pow_neg(Ma, s + 1.0);        // (M+a)^{-s-2j+1}
    const Complex m2 = pow_neg(Ma, Complex(2.0, 0.0));
    for (int j = 1; j <= 6; ++j) {
        result += kBernOverFact[j - 1] * rising * mp;
        rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
        mp *= m2;
    }
    return result;
}

double zeta_real(double sigma, const EvalTolerance& tol) {
    if (!(sigma > 1.0 + 1e-6))
        throw DomainError("zeta_real: requires sigma > 1 + 1e-6");
    return hurwitz_zeta(Complex(sigma, 0.0), 1.0, tol).real();
}

Complex log_gamma(Complex z) {
    if (!finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleError("log_gamma: pole at non-positive integer");

    // shift right until Re(z+n) >= 15, which also gives |z+n| >= 15
    const int shift = (z.real() < 15.0) ? int(std::ceil(15.0 - z.real())) : 0;
    Complex acc(0.0, 0.0);
    for (int k = 0; k < shift; ++k) acc += std::log(z + double(k));

    const Complex zs = z + double(shift);
    Complex w = (zs - 0.5) * std::log(zs) - zs + 0.5 * kLog2Pi;
    const Complex inv2 = 1.0 / (zs * zs);
    Complex invp = 1.0 / zs;  // zs^{-(2j-1)}
    for (int j = 0; j < 8; ++j) {
        w += kStirling[j] * invp;
        invp *= inv2;
    }
    return w - acc;
}

double stirling_im_loggamma(int a, double T) {
    if (a != 0 && a != 1) throw DomainError("stirling_im_loggamma: a must be 0 or 1");
    if (!(T >= 1.0)) throw DomainError("stirling_im_loggamma: requires T >= 1");

    const double main = 0.5 * T * (std::log(0.5 * T) - 1.0);
    const double q = double(2 * a + 1);
    const double logterm = 0.25 * T * std::log1p(q * q / (4.0 * T * T));
    const double atanterm = 0.25 * double(2 * a - 1) * std::atan(2.0 * T / q);

    // exact remainder: Im log Gamma(z) minus the closed-form Stirling part
    const Complex z(0.25 + 0.5 * a, 0.5 * T);
    const Complex closed = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
    const double rem = (log_gamma(z) - closed).imag();

    return main + logterm + atanterm + rem;
}

double g_bound(int a, double T) {
    if (a != 0 && a != 1) throw DomainError("g_bound: a must be 0 or 1");
    if (!(T >= 1.0)) throw DomainError("g_bound: requires T >= 1");
    if (a == 1) {
        return 0.25 * T * std::log1p(9.0 / (4.0 * T * T)) +
               0.25 * std::atan(2.0 * T / 3.0) + 1.0 / (3.0 * std::hypot(1.5, T));
    }
    return std::fabs(0.25 * T * std::log1p(1.0 / (4.0 * T * T)) -
                     0.25 * std::atan(2.0 * T)) +
           1.0 / (3.0 * std::hypot(0.5, T));
}

double big_g(int a, double delta, double t) {
    if (a != 0 && a != 1) throw DomainError("big_g: a must be 0 or 1");
    if (!(t >= 1.0)) throw DomainError("big_g: requires t >= 1");
    if (!(delta >= 0.0 && delta <= 3.0)) throw DomainError("big_g: delta out of [0,3]");

    const double ah = a + 0.5;  // a + 1/2
    const double am = a - 0.5;  // a - 1/2
    const double arcs = 0.5 * (am + delta) * std::atan((ah + delta) / t) +
                        0.5 * (am - delta) * std::atan((ah - delta) / t) -
                        am * std::atan(ah / t);
    const double d2 = delta * delta;
    const double num = 2.0 * d2 * (t * t - ah * ah) + d2 * d2;
    const double den = (t * t + ah * ah) * (t * t + ah * ah);
    const double logterm = -0.25 * t * std::log1p(num / den);
    const double bracket = (1.0 / std::hypot(ah + delta, t) +
                            1.0 / std::hypot(ah - delta, t) +
                            2.0 / std::hypot(ah, t)) / 3.0;
    return arcs + logterm + bracket;
}

double big_f(double delta, double t) {
    if (!(t >= 1.0)) throw DomainError("big_f: requires t >= 1");
    if (!(delta >= 0.0 && delta < 3.5)) throw DomainError("big_f: delta out of [0, 3.5)");
    return 2.0 * std::atan(0.5 / t) - std::atan((0.5 + delta) / t) -
           std::atan((0.5 - delta) / t);
}

double boundary_weight(WeightKind kind, double T, double phi, double eta, double r) {
    if (!(T >= 1.0)) throw DomainError("boundary_weight: requires T >= 1");
    if (!(eta > 0.0 && eta <= 0.5)) throw DomainError("boundary_weight: eta out of (0, 1/2]");
    if (!(r > 1.0)) throw DomainError("boundary_weight: requires r > 1");

    const double R = r * (0.5 + eta);
    const double c = (kind == WeightKind::w || kind == WeightKind::w_star)
                         ? 2.0 + eta
                         : eta;
    double rad = 1.0 + (R * R + c * c + 2.0 * R * c * std::cos(phi)) / (T * T);
    if (kind == WeightKind::w || kind == WeightKind::w_tilde)
        rad += 2.0 * R * std::sin(phi) / T;
    if (!(rad > 0.0)) throw DomainError("boundary_weight: non-positive radicand");
    return std::sqrt(rad);
}

}  // namespace zcount
