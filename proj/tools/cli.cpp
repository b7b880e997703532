#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "zcount/constants.hpp"
#include "zcount/zerocount.hpp"

namespace zcount::cli {

namespace {

struct Options {
    int theorem = 1;
    std::vector<double> t0;
    std::vector<double> eta;
    std::string eta_grid;
    std::string p_rule = "eta-over-7";
    std::string format;
    int modulus = 0;
    long long disc = 0;
    std::vector<double> heights;
    double tol = 1e-12;
};

PRule parse_p_rule(const std::string& s) {
    if (s == "eta-over-7") return PRule::eta_over_7();
    if (s.rfind("fixed:", 0) == 0) {
        size_t pos = 0;
        const std::string v = s.substr(6);
        const double p = std::stod(v, &pos);
        if (pos != v.size()) throw CLI::ValidationError("--p-rule", "bad fixed value");
        return PRule::fixed(p);
    }
    throw CLI::ValidationError("--p-rule", "expected eta-over-7 or fixed:<v>");
}

std::vector<double> parse_eta_grid(const std::string& s) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(step > 0))
        throw CLI::ValidationError("--eta-grid", "expected start:stop:step");
    std::vector<double> out;
    for (double e = lo; e <= hi + 1e-9; e += step) out.push_back(e);
    if (out.empty()) throw CLI::ValidationError("--eta-grid", "empty grid");
    return out;
}

TableFormat parse_format(const std::string& s) {
    if (s == "md") return TableFormat::markdown;
    if (s == "csv") return TableFormat::csv;
    if (s == "json") return TableFormat::json;
    throw CLI::ValidationError("--format", "expected md, csv or json");
}

std::string fmt(double x, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, x);
    return buf;
}

std::string fmt_g(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

nlohmann::json report_json(const ZeroCountReport& r) {
    return nlohmann::json::parse(r.to_json());
}

std::string render_reports(const std::vector<ZeroCountReport>& rows,
                           TableFormat format, const std::string& command,
                           const nlohmann::json& params) {
    std::ostringstream os;
    switch (format) {
        case TableFormat::markdown: {
            os << "| subject | T | N | main_term | bound | slack | residual | "
                  "perturbed_T |\n";
            os << "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
            for (const auto& r : rows)
                os << "| " << r.subject << " | " << fmt_g(r.T) << " | " << r.N
                   << " | " << fmt(r.main_term) << " | " << fmt(r.bound) << " | "
                   << fmt(r.slack) << " | " << fmt(r.winding_residual, 4) << " | "
                   << fmt_g(r.perturbed_T) << " |\n";
            break;
        }
        case TableFormat::csv: {
            os << "subject,T,N,main_term,bound,slack,winding_residual,"
                  "perturbed_T\n";
            for (const auto& r : rows)
                os << r.subject << "," << fmt_g(r.T) << "," << r.N << ","
                   << fmt(r.main_term) << "," << fmt(r.bound) << ","
                   << fmt(r.slack) << "," << fmt(r.winding_residual, 4) << ","
                   << fmt_g(r.perturbed_T) << "\n";
            break;
        }
        case TableFormat::json: {
            nlohmann::json env;
            env["tool_version"] = kToolVersion;
            env["command"] = command;
            env["params"] = params;
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& r : rows) jr.push_back(report_json(r));
            env["rows"] = jr;
            os << env.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

int run_constants_table(const Options& opt, RunResult& res) {
    const PRule rule = parse_p_rule(opt.p_rule);
    std::vector<double> etas = opt.eta;
    if (!opt.eta_grid.empty()) {
        const auto g = parse_eta_grid(opt.eta_grid);
        etas.insert(etas.end(), g.begin(), g.end());
    }
    if (etas.empty()) etas = parse_eta_grid("0.05:0.50:0.05");
    std::vector<double> t0s = opt.t0;
    if (t0s.empty()) t0s = {1.0, 10.0};

    const TableFormat format = parse_format(opt.format.empty() ? "md" : opt.format);
    if (format == TableFormat::json) {
        const auto lib = nlohmann::json::parse(
            render_table(opt.theorem, t0s, etas, TableFormat::json, rule));
        nlohmann::json env;
        env["tool_version"] = kToolVersion;
        env["command"] = "constants-table";
        env["params"] = {{"theorem", lib["theorem"]},
                         {"T0", lib["T0"]},
                         {"p_rule", lib["p_rule"]}};
        env["rows"] = lib["rows"];
        res.out = env.dump(2) + "\n";
    } else {
        res.out = render_table(opt.theorem, t0s, etas, format, rule);
    }
    return 0;
}

int run_constants_eval(const Options& opt, RunResult& res) {
    const PRule rule = parse_p_rule(opt.p_rule);
    if (opt.eta.size() > 1 || opt.t0.size() > 1)
        throw CLI::ValidationError("constants-eval",
                                   "takes a single --eta and --t0");
    const double eta = opt.eta.empty() ? 0.25 : opt.eta.front();
    const double t0 = opt.t0.empty() ? 1.0 : opt.t0.front();
    const TableFormat format =
        parse_format(opt.format.empty() ? "json" : opt.format);

    const BoundParameters P = derive_params(eta, rule, t0);
    nlohmann::json row;
    row["eta"] = eta;
    std::vector<std::pair<std::string, double>> cols;
    if (opt.theorem == 1) {
        cols = {{"C1", ceil3(c1(P))}, {"C2", ceil3(c2(P))}};
    } else {
        const auto d = d_constants(P);
        cols = {{"D1", ceil3(d.D1)}, {"D2", ceil3(d.D2)}, {"D3", ceil3(d.D3)}};
    }
    for (const auto& [k, v] : cols) row[k] = v;

    std::ostringstream os;
    switch (format) {
        case TableFormat::json: {
            nlohmann::json env;
            env["tool_version"] = kToolVersion;
            env["command"] = "constants-eval";
            env["params"] = {{"theorem", opt.theorem},
                             {"T0", t0},
                             {"p_rule", rule.describe()}};
            env["rows"] = nlohmann::json::array({row});
            os << env.dump(2) << "\n";
            break;
        }
        case TableFormat::markdown: {
            os << "| eta |";
            for (const auto& [k, v] : cols) os << " " << k << " |";
            os << "\n| --- |";
            for (size_t i = 0; i < cols.size(); ++i) os << " --- |";
            os << "\n| " << fmt(eta, 2) << " |";
            for (const auto& [k, v] : cols) os << " " << fmt(v, 3) << " |";
            os << "\n";
            break;
        }
        case TableFormat::csv: {
            os << "eta";
            for (const auto& [k, v] : cols) os << "," << k;
            os << "\n" << fmt(eta, 2);
            for (const auto& [k, v] : cols) os << "," << fmt(v, 3);
            os << "\n";
            break;
        }
    }
    res.out = os.str();
    return 0;
}

// shared by verify-dirichlet / verify-dedekind
int run_verify(const Options& opt, bool dirichlet, RunResult& res) {
    const PRule rule = parse_p_rule(opt.p_rule);
    const double eta = opt.eta.empty() ? 0.25 : opt.eta.front();
    const double t0 = opt.t0.empty() ? 1.0 : opt.t0.front();
    const TableFormat format = parse_format(opt.format.empty() ? "md" : opt.format);
    std::vector<double> heights = opt.heights;
    if (heights.empty()) heights = {10.0};

    const BoundParameters P = derive_params(eta, rule, t0);
    for (double T : heights)
        if (!(T >= std::max(1.0, t0)))
            throw CLI::ValidationError("--T", "heights must satisfy T >= max(1, t0)");

    const EvalTolerance tol{opt.tol, 1000000};

    std::vector<std::function<ZeroCountReport()>> jobs;
    if (dirichlet) {
        const TheoremOneConstants C{ceil3(c1(P)), ceil3(c2(P)), P, "rounded-up"};
        const auto chars = enumerate_characters(opt.modulus);
        for (const auto& chi : chars) {
            if (!chi.primitive() || chi.principal()) continue;
            for (double T : heights)
                jobs.push_back([chi, T, C, tol] { return verify(chi, T, C, tol); });
        }
        if (jobs.empty())
            throw CLI::ValidationError(
                "--modulus", "no primitive nonprincipal character of this modulus");
    } else {
        const auto d = d_constants(P);
        const TheoremTwoConstants C{ceil3(d.D1), ceil3(d.D2), ceil3(d.D3), P,
                                    "rounded-up"};
        const QuadraticField K = make_quadratic_field(opt.disc);
        for (double T : heights)
            jobs.push_back([K, T, C, tol] { return verify(K, T, C, tol); });
    }

    // bounded fan-out; results collected in job order, so output stays
    // deterministic
    const size_t window =
        std::max<size_t>(2, std::thread::hardware_concurrency());
    std::vector<std::future<ZeroCountReport>> futs(jobs.size());
    size_t next = 0;
    for (; next < std::min(window, jobs.size()); ++next)
        futs[next] = std::async(std::launch::async, jobs[next]);

    int status = 0;
    std::vector<ZeroCountReport> rows;
    for (size_t i = 0; i < jobs.size(); ++i) {
        try {
            rows.push_back(futs[i].get());
            if (rows.back().slack < 0.0) {
                status = std::max(status, 2);
                res.err += "slack violation: " + rows.back().subject + "\n";
            }
        } catch (const NonConvergence& e) {
            status = 3;
            res.err += std::string("non-convergence: ") + e.what() + "\n";
        } catch (const BoundaryZero& e) {
            status = 3;
            res.err += std::string("boundary-zero: ") + e.what() + "\n";
        }
        if (next < jobs.size()) {
            futs[next] = std::async(std::launch::async, jobs[next]);
            ++next;
        }
    }

    nlohmann::json params;
    params["eta"] = eta;
    params["t0"] = t0;
    params["p_rule"] = rule.describe();
    params["tol"] = opt.tol;
    params["T"] = heights;
    if (dirichlet)
        params["modulus"] = opt.modulus;
    else
        params["quadratic_disc"] = opt.disc;
    res.out = render_reports(rows, format,
                             dirichlet ? "verify-dirichlet" : "verify-dedekind",
                             params);
    return status;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult res;
    Options opt;

    CLI::App app{"explicit zero-counting constants and desk-scale verification",
                 "zcount"};
    app.require_subcommand(1);

    const auto add_constants_flags = [&](CLI::App* cmd) {
        cmd->add_option("--eta", opt.eta, "eta parameter (repeatable)")
            ->check(CLI::Range(1e-9, 0.5));
        cmd->add_option("--t0", opt.t0, "T0 threshold (repeatable)")
            ->check(CLI::Range(1.0, 1e9));
        cmd->add_option("--p-rule", opt.p_rule, "eta-over-7 | fixed:<v>");
        cmd->add_option("--format", opt.format, "md | csv | json");
    };

    auto* table = app.add_subcommand("constants-table",
                                     "emit the constants table over an eta grid");
    table->add_option("--theorem", opt.theorem, "1 or 2")->check(CLI::Range(1, 2));
    table->add_option("--eta-grid", opt.eta_grid, "start:stop:step");
    add_constants_flags(table);

    auto* eval = app.add_subcommand("constants-eval",
                                    "evaluate the constants for one parameter set");
    eval->add_option("--theorem", opt.theorem, "1 or 2")->check(CLI::Range(1, 2));
    add_constants_flags(eval);

    auto* vdir = app.add_subcommand("verify-dirichlet",
                                    "count zeros of L(s,chi) and check the bound");
    vdir->add_option("--modulus", opt.modulus, "character modulus (k >= 3)")
        ->required()
        ->check(CLI::Range(3, 1000));
    vdir->add_option("--T", opt.heights, "rectangle height (repeatable)")
        ->check(CLI::Range(1.0, 1e6));
    vdir->add_option("--tol", opt.tol, "evaluation tolerance")
        ->check(CLI::Range(1e-14, 1e-3));
    add_constants_flags(vdir);

    auto* vded = app.add_subcommand("verify-dedekind",
                                    "count zeros of zeta_K and check the bound");
    vded->add_option("--quadratic-disc", opt.disc,
                     "fundamental discriminant (or 1 for zeta)")
        ->required();
    vded->add_option("--T", opt.heights, "rectangle height (repeatable)")
        ->check(CLI::Range(1.0, 1e6));
    vded->add_option("--tol", opt.tol, "evaluation tolerance")
        ->check(CLI::Range(1e-14, 1e-3));
    add_constants_flags(vded);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        res.out = os.str();
        res.exit_code = 0;
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 64;
        return res;
    }

    try {
        if (table->parsed()) res.exit_code = run_constants_table(opt, res);
        else if (eval->parsed()) res.exit_code = run_constants_eval(opt, res);
        else if (vdir->parsed()) res.exit_code = run_verify(opt, true, res);
        else if (vded->parsed()) res.exit_code = run_verify(opt, false, res);
    } catch (const CLI::ValidationError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 64;
    } catch (const NonConvergence& e) {
        res.err = std::string("non-convergence: ") + e.what() + "\n";
        res.exit_code = 3;
    } catch (const DomainError& e) {
        res.err = std::string("invalid arguments: ") + e.what() + "\n";
        res.exit_code = 64;
    } catch (const NotFundamental& e) {
        res.err = std::string("invalid arguments: ") + e.what() + "\n";
        res.exit_code = 64;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 3;
    }
    return res;
}

}  // namespace zcount::cli
