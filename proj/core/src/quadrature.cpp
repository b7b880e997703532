#include "zcount/quadrature.hpp"

#include <cmath>

namespace zcount {

namespace {

// Gauss7/Kronrod15 nodes and weights (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double value;
    double err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fs = f(c - dx) + f(c + dx);
        resk += kWgk[i] * fs;
        if (i % 2 == 1) resg += kWg[(i - 1) / 2] * fs;
    }
    resk *= h;
    resg *= h;
    if (!std::isfinite(resk))
        throw DomainError("integrate: integrand not finite on panel");
    const double diff = std::fabs(resk - resg);
    double err = std::pow(200.0 * diff, 1.5);
    if (err > diff) err = diff;
    return {resk, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double abs_tol) {
    if (!(abs_tol > 0.0)) throw DomainError("integrate: abs_tol must be positive");
    if (!(a < b)) throw DomainError("integrate: requires a < b");

    QuadratureResult out;
    long splits = 0;

    // depth-first, left interval first: deterministic panel order
    const std::function<void(double, double, double, int)> go =
        [&](double lo, double hi, double tol, int depth) {
            const Panel p = gk15(f, lo, hi);
            if (p.err <= tol) {
                out.value += p.value;
                out.est_error += p.err;
                ++out.subdivisions;
                return;
            }
            if (++splits >= kMaxPanels || depth >= 52)
                throw NonConvergence("integrate: panel cap reached");
            const double mid = 0.5 * (lo + hi);
            go(lo, mid, 0.5 * tol, depth + 1);
            go(mid, hi, 0.5 * tol, depth + 1);
        };
    go(a, b, abs_tol, 0);
    return out;
}

}  // namespace zcount
