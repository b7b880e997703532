#pragma once

#include <string>
#include <vector>

#include "zcount/errors.hpp"

namespace zcount {

// How the convexity shift p is chosen from eta.
struct PRule {
    enum class Kind { eta_over_7, fixed_p };
    Kind kind = Kind::eta_over_7;
    double fixed_value = 0.0;

    static PRule eta_over_7() { return {Kind::eta_over_7, 0.0}; }
    static PRule fixed(double p) { return {Kind::fixed_p, p}; }
    std::string describe() const;
};

// Tunables (eta, p, T0) plus the derived contour quantities.
struct BoundParameters {
    double eta = 0.25;
    double p = -0.25 / 7.0;
    double T0 = 1.0;
    // derived
    double sigma1 = 0.0;  // 1/2 + sqrt(2)(eta + 1/2)
    double delta = 0.0;   // sqrt(2)(1/2 + eta)
    double r = 0.0;       // (1 + eta - p)/(1/2 + eta)
};

BoundParameters derive_params(double eta, const PRule& rule, double T0);

struct TheoremOneConstants {
    double C1 = 0.0;
    double C2 = 0.0;
    BoundParameters params;
    std::string provenance;  // "computed" or "rounded-up"
};

struct TheoremTwoConstants {
    double D1 = 0.0;
    double D2 = 0.0;
    double D3 = 0.0;
    BoundParameters params;
    std::string provenance;
};

// C1 = (1/2 - p) / (pi log r).
double c1(const BoundParameters& params);

// C2 assembled from the special functions and the two phi-integrals
// (quadrature tolerance 1e-9).
double c2(const BoundParameters& params);

TheoremOneConstants theorem1_constants(const BoundParameters& params);

// D1 = C1; D2 = C2 - (2/pi)(g(1,T0) - |g(0,T0)|); D3 from the four arc
// integrals of the boundary weights.
TheoremTwoConstants d_constants(const BoundParameters& params);

// Round up at the third decimal (the constants are upper bounds).
double ceil3(double x);

enum class TableFormat { markdown, csv, json };

// One row per eta; constants rounded up to 3 decimals.  Rows that fail to
// compute are marked "ERR".
std::string render_table(int theorem,
                         const std::vector<double>& T0_list,
                         const std::vector<double>& eta_grid,
                         TableFormat format,
                         const PRule& rule = PRule::eta_over_7());

}  // namespace zcount
