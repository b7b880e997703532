#include "zcount/constants.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "zcount/quadrature.hpp"
#include "zcount/special.hpp"

namespace zcount {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.414213562373095048801688724209698079;

// tolerance used for the zeta values feeding the integrands
const EvalTolerance kZetaTol{1e-12, 1000000};

double log_zeta(double sigma) { return std::log(zeta_real(sigma, kZetaTol)); }

std::string fmt3(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string fmt_eta(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string fmt_t0(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace

std::string PRule::describe() const {
    if (kind == Kind::eta_over_7) return "eta-over-7";
    char buf[48];
    std::snprintf(buf, sizeof buf, "fixed:%g", fixed_value);
    return buf;
}

BoundParameters derive_params(double eta, const PRule& rule, double T0) {
    if (!(eta > 0.0 && eta <= 0.5))
        throw DomainError("derive_params: eta out of (0, 1/2]");
    if (!(T0 >= 1.0)) throw DomainError("derive_params: T0 must be >= 1");

    double p;
    if (rule.kind == PRule::Kind::eta_over_7) {
        p = -eta / 7.0;
    } else {
        p = rule.fixed_value;
        if (!(p >= -eta && p < 0.0))
            throw DomainError("derive_params: fixed p out of [-eta, 0)");
    }

    BoundParameters out;
    out.eta = eta;
    out.p = p;
    out.T0 = T0;
    out.sigma1 = 0.5 + kSqrt2 * (eta + 0.5);
    out.delta = kSqrt2 * (0.5 + eta);
    out.r = (1.0 + eta - p) / (0.5 + eta);
    return out;
}

double c1(const BoundParameters& P) {
    return (0.5 - P.p) / (kPi * std::log(P.r));
}

double c2(const BoundParameters& P) {
    const double eta = P.eta, p = P.p, T0 = P.T0, r = P.r;
    const double lr = std::log(r);

    const double head =
        2.0 / kPi *
        (log_zeta(P.sigma1) + g_bound(1, T0) + 0.5 * big_g(0, P.delta, T0));

    const auto Iz = integrate(
        [&](double phi) {
            return log_zeta(1.0 + eta + (1.0 + eta - p) * std::cos(phi));
        },
        -kPi / 2, kPi / 2, 1e-9);
    const auto Iw = integrate(
        [&](double phi) {
            return -std::cos(phi) *
                   std::log(boundary_weight(WeightKind::w, T0, phi, eta, r));
        },
        kPi / 2, kPi, 1e-9);
    const auto Iws = integrate(
        [&](double phi) {
            return -std::cos(phi) *
                   std::log(boundary_weight(WeightKind::w_star, T0, phi, eta, r));
        },
        kPi, 3 * kPi / 2, 1e-9);

    const double brace =
        1.5 * log_zeta(1.0 + eta) - log_zeta(2.0 + 2.0 * eta) +
        (log_zeta(1.0 - p) - log_zeta(1.0 + eta)) / kPi + Iz.value / (2.0 * kPi) +
        (0.5 - p) / (2.0 * kPi) *
            (-2.0 * std::log(2.0 * kPi) + Iw.value + Iws.value);

    return head + brace / lr;
}

TheoremOneConstants theorem1_constants(const BoundParameters& P) {
    return {c1(P), c2(P), P, "computed"};
}

TheoremTwoConstants d_constants(const BoundParameters& P) {
    const double eta = P.eta, p = P.p, T0 = P.T0, r = P.r;
    const double lr = std::log(r);

    const double C2 = c2(P);
    const double D1 = c1(P);
    const double D2 = C2 - 2.0 / kPi * (g_bound(1, T0) - g_bound(0, T0));

    const auto arc = [&](WeightKind kind, double lo, double hi) {
        return integrate(
                   [&](double phi) {
                       return std::log(boundary_weight(kind, T0, phi, eta, r));
                   },
                   lo, hi, 1e-9)
            .value;
    };
    const double arcs = arc(WeightKind::w_tilde_star, -kPi / 2, 0.0) +
                        arc(WeightKind::w_tilde, 0.0, kPi / 2) +
                        arc(WeightKind::w, kPi / 2, kPi) +
                        arc(WeightKind::w_star, kPi, 3 * kPi / 2);

    const double D3 = 2.0 +
                      r * (0.5 + eta) / (kPi * lr * (1.0 + eta - p)) *
                          std::log((1.0 - p) / (1.0 + p)) +
                      big_f(P.delta, T0) / kPi + arcs / (2.0 * kPi * lr);

    return {D1, D2, D3, P, "computed"};
}

double ceil3(double x) {
    return std::ceil(x * 1000.0 - 1e-6) / 1000.0;
}

std::string render_table(int theorem, const std::vector<double>& T0_list,
                         const std::vector<double>& eta_grid, TableFormat format,
                         const PRule& rule) {
    if (theorem != 1 && theorem != 2)
        throw DomainError("render_table: theorem must be 1 or 2");
    if (T0_list.empty() || eta_grid.empty())
        throw DomainError("render_table: empty grid");

    struct Row {
        double eta = 0.0;
        bool ok = false;
        std::vector<double> cols;  // C1,C2... or D1,D2,D3... after ceil3
    };
    std::vector<Row> rows;
    for (double eta : eta_grid) {
        Row row;
        row.eta = eta;
        try {
            if (theorem == 1) {
                row.cols.push_back(ceil3(c1(derive_params(eta, rule, T0_list.front()))));
                for (double t0 : T0_list)
                    row.cols.push_back(ceil3(c2(derive_params(eta, rule, t0))));
            } else {
                row.cols.push_back(ceil3(c1(derive_params(eta, rule, T0_list.front()))));
                for (double t0 : T0_list) {
                    const auto d = d_constants(derive_params(eta, rule, t0));
                    row.cols.push_back(ceil3(d.D2));
                    row.cols.push_back(ceil3(d.D3));
                }
            }
            row.ok = true;
        } catch (const std::exception&) {
            row.ok = false;
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::string> headers;
    headers.push_back("eta");
    headers.push_back(theorem == 1 ? "C1" : "D1");
    for (double t0 : T0_list) {
        const std::string tag = "[T0=" + fmt_t0(t0) + "]";
        if (theorem == 1) {
            headers.push_back("C2" + tag);
        } else {
            headers.push_back("D2" + tag);
            headers.push_back("D3" + tag);
        }
    }

    std::ostringstream os;
    switch (format) {
        case TableFormat::markdown: {
            os << "|";
            for (const auto& h : headers) os << " " << h << " |";
            os << "\n|";
            for (size_t i = 0; i < headers.size(); ++i) os << " --- |";
            os << "\n";
            for (const auto& row : rows) {
                os << "| " << fmt_eta(row.eta) << " |";
                if (row.ok)
                    for (double v : row.cols) os << " " << fmt3(v) << " |";
                else
                    for (size_t i = 1; i < headers.size(); ++i) os << " ERR |";
                os << "\n";
            }
            break;
        }
        case TableFormat::csv: {
            for (size_t i = 0; i < headers.size(); ++i)
                os << (i ? "," : "") << headers[i];
            os << "\n";
            for (const auto& row : rows) {
                os << fmt_eta(row.eta);
                if (row.ok)
                    for (double v : row.cols) os << "," << fmt3(v);
                else
                    for (size_t i = 1; i < headers.size(); ++i) os << ",ERR";
                os << "\n";
            }
            break;
        }
        case TableFormat::json: {
            nlohmann::json env;
            env["theorem"] = theorem;
            env["T0"] = T0_list;
            env["p_rule"] = rule.describe();
            nlohmann::json jrows = nlohmann::json::array();
            for (const auto& row : rows) {
                nlohmann::json jr;
                jr["eta"] = row.eta;
                if (!row.ok) {
                    jr["error"] = "ERR";
                    jrows.push_back(jr);
                    continue;
                }
                const bool single = T0_list.size() == 1;
                if (theorem == 1) {
                    jr["C1"] = row.cols[0];
                    if (single) {
                        jr["C2"] = row.cols[1];
                    } else {
                        jr["C2"] = std::vector<double>(row.cols.begin() + 1, row.cols.end());
                    }
                } else {
                    jr["D1"] = row.cols[0];
                    if (single) {
                        jr["D2"] = row.cols[1];
                        jr["D3"] = row.cols[2];
                    } else {
                        std::vector<double> d2s, d3s;
                        for (size_t j = 0; j < T0_list.size(); ++j) {
                            d2s.push_back(row.cols[1 + 2 * j]);
                            d3s.push_back(row.cols[2 + 2 * j]);
                        }
                        jr["D2"] = d2s;
                        jr["D3"] = d3s;
                    }
                }
                jrows.push_back(jr);
            }
            env["rows"] = jrows;
            os << env.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace zcount
