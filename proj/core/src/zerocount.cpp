#include "zcount/zerocount.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "json.hpp"

namespace zcount {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

inline bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// log of the completed Dirichlet L-function; Im is a phase representative
// of arg xi(s, chi) mod 2pi.
Complex log_xi_chi(Complex s, const DirichletCharacter& chi,
                   const EvalTolerance& tol) {
    const int a = chi.parity();
    const int k = chi.modulus();
    Complex w = 0.5 * (s + double(a)) * std::log(double(k) / kPi);
    w += log_gamma(0.5 * (s + double(a)));
    w += std::log(eval_l(s, chi, tol));
    return w;
}

Complex log_xi_quadratic(Complex s, const QuadraticField& K,
                         const DirichletCharacter* chi_d,
                         const EvalTolerance& tol) {
    const int r1 = K.real_embeddings();
    const int r2 = K.complex_embeddings();
    Complex w = std::log(s) + std::log(s - 1.0);
    w += 0.5 * s *
         std::log(K.abs_disc() / (std::pow(kPi, K.degree()) * std::pow(4.0, r2)));
    if (r1) w += double(r1) * log_gamma(0.5 * s);
    if (r2) w += double(r2) * log_gamma(s);
    w += std::log(hurwitz_zeta(s, 1.0, tol));  // zeta(s)
    if (chi_d) w += std::log(eval_l(s, *chi_d, tol));
    return w;
}

struct WalkOutcome {
    double winding = 0.0;
    long long samples = 0;
};

constexpr long long kMaxWalkSamples = 400000;
constexpr int kMaxWalkDepth = 46;

// Total phase change around the rectangle boundary, divided by 2pi.
// Counterclockwise: right edge up, top edge left, left edge down, bottom
// edge right.  Adjacent increments are refined below pi/2.
WalkOutcome walk_boundary(const std::function<Complex(Complex)>& logf,
                          double sigma1, double T) {
    const Complex corners[5] = {
        {sigma1, -T}, {sigma1, T}, {1.0 - sigma1, T}, {1.0 - sigma1, -T},
        {sigma1, -T}};

    WalkOutcome out;
    double total = 0.0;

    double perimeter = 0.0;
    for (int e = 0; e < 4; ++e) perimeter += std::abs(corners[e + 1] - corners[e]);
    if (4.0 * perimeter + 16.0 > double(kMaxWalkSamples) / 4.0)
        throw NonConvergence("count_zeros: rectangle too large for the sample budget");

    const auto wrap = [](double d) {
        d = std::fmod(d, kTwoPi);
        if (d > kPi) d -= kTwoPi;
        if (d < -kPi) d += kTwoPi;
        return d;
    };

    for (int e = 0; e < 4; ++e) {
        const Complex A = corners[e];
        const Complex dir = corners[e + 1] - A;

        // gamma-factor poles (cancelled by trivial zeros of the L-factor)
        // can sit exactly on the left edge; nudge such samples along the edge
        const auto phase_at = [&](double u) {
            for (int att = 0; att < 4; ++att) {
                const double uu = u + att * 1e-7 * (u < 0.5 ? 1.0 : -1.0);
                try {
                    const Complex w = logf(A + uu * dir);
                    if (finite(w)) return w.imag();
                } catch (const PoleError&) {
                }
            }
            throw NonConvergence("count_zeros: boundary evaluation failed");
        };

        const int n0 = std::max(8, int(std::ceil(std::abs(dir) * 4.0)));
        std::vector<double> phase(size_t(n0) + 1);
        for (int j = 0; j <= n0; ++j) {
            phase[size_t(j)] = phase_at(double(j) / n0);
            ++out.samples;
        }

        const std::function<void(double, double, double, double, int)> refine =
            [&](double u0, double p0, double u1, double p1, int depth) {
                const double d = wrap(p1 - p0);
                if (std::fabs(d) < kPi / 2) {
                    total += d;
                    return;
                }
                if (depth >= kMaxWalkDepth)
                    throw BoundaryZero("count_zeros: phase refinement stalled "
                                       "(zero on or near the boundary)",
                                       std::fabs(d) / kTwoPi);
                if (out.samples >= kMaxWalkSamples)
                    throw NonConvergence("count_zeros: sample budget exhausted");
                const double um = 0.5 * (u0 + u1);
                const double pm = phase_at(um);
                ++out.samples;
                refine(u0, p0, um, pm, depth + 1);
                refine(um, pm, u1, p1, depth + 1);
            };
        for (int j = 0; j < n0; ++j)
            refine(double(j) / n0, phase[size_t(j)], double(j + 1) / n0,
                   phase[size_t(j) + 1], 0);
    }

    out.winding = total / kTwoPi;
    return out;
}

std::string subject_label(const Subject& subject) {
    if (std::holds_alternative<DirichletCharacter>(subject))
        return std::get<DirichletCharacter>(subject).label();
    return std::get<QuadraticField>(subject).label();
}

ZeroCountReport count_with_retries(const Subject& subject, double T,
                                   const EvalTolerance& tol) {
    std::optional<BoundaryZero> last{std::nullopt};
    for (int attempt = 0; attempt <= 5; ++attempt) {
        const double Tu = T + attempt * 1e-3;
        try {
            ZeroCountReport rep = count_zeros(subject, Rectangle{2.0, Tu}, tol);
            rep.T = T;
            return rep;
        } catch (const BoundaryZero& bz) {
            last = bz;
        }
    }
    throw *last;
}

}  // namespace

std::string QuadraticField::label() const {
    if (d == 1) return "zeta";
    return "zeta_K(d=" + std::to_string(d) + ")";
}

QuadraticField make_quadratic_field(long long d) {
    if (d != 1 && !is_fundamental_discriminant(d))
        throw NotFundamental("make_quadratic_field: d must be 1 or fundamental");
    return QuadraticField{d};
}

Complex eval_l(Complex s, const DirichletCharacter& chi, const EvalTolerance& tol) {
    if (chi.principal() && std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        throw PoleError("eval_l: principal character has a pole at s=1");
    const int k = chi.modulus();

    // keep the total error below k * tol.abs_tol including the k^{-s} factor
    EvalTolerance ht = tol;
    if (s.real() < 0.0)
        ht.abs_tol = tol.abs_tol * std::pow(double(k), s.real());

    Complex sum(0.0, 0.0);
    for (int a = 1; a < k; ++a) {
        const auto v = chi.value(a);
        if (v == std::complex<double>(0.0, 0.0)) continue;
        sum += v * hurwitz_zeta(s, double(a) / k, ht);
    }
    const double L = std::log(double(k));
    return sum * std::exp(-s * L);
}

Complex eval_xi_chi(Complex s, const DirichletCharacter& chi,
                    const EvalTolerance& tol) {
    // the principal character is never primitive for k >= 3
    if (!chi.primitive() || chi.principal())
        throw NotPrimitive("eval_xi_chi: chi must be primitive nonprincipal");
    return std::exp(log_xi_chi(s, chi, tol));
}

Complex eval_xi_quadratic(Complex s, const QuadraticField& K,
                          const EvalTolerance& tol) {
    make_quadratic_field(K.d);  // validate
    if (K.d == 1) return std::exp(log_xi_quadratic(s, K, nullptr, tol));
    const DirichletCharacter chi = kronecker_character(K.d);
    return std::exp(log_xi_quadratic(s, K, &chi, tol));
}

ZeroCountReport count_zeros(const Subject& subject, const Rectangle& rect,
                            const EvalTolerance& tol) {
    if (!(rect.sigma1 > 1.0 && rect.sigma1 <= 2.5))
        throw DomainError("count_zeros: sigma1 out of (1, 2.5]");
    if (!(rect.T >= 1.0)) throw DomainError("count_zeros: requires T >= 1");

    std::function<Complex(Complex)> logf;
    std::optional<DirichletCharacter> chi_d;
    if (std::holds_alternative<DirichletCharacter>(subject)) {
        const auto& chi = std::get<DirichletCharacter>(subject);
        if (!chi.primitive() || chi.principal())
            throw NotPrimitive("count_zeros: chi must be primitive nonprincipal");
        logf = [&chi, &tol](Complex s) { return log_xi_chi(s, chi, tol); };
    } else {
        const auto& K = std::get<QuadraticField>(subject);
        make_quadratic_field(K.d);
        if (K.d != 1) chi_d = kronecker_character(K.d);
        const DirichletCharacter* cd = chi_d ? &*chi_d : nullptr;
        logf = [&K, cd, &tol](Complex s) {
            return log_xi_quadratic(s, K, cd, tol);
        };
    }

    const WalkOutcome walk = walk_boundary(logf, rect.sigma1, rect.T);
    const long long N = std::llround(walk.winding);
    const double residual = std::fabs(walk.winding - double(N));
    if (residual >= 0.05)
        throw BoundaryZero("count_zeros: winding residual >= 0.05", residual);
    if (N < 0)
        throw NonConvergence("count_zeros: negative winding (sampling failure)");

    ZeroCountReport rep;
    rep.subject = subject_label(subject);
    rep.T = rect.T;
    rep.perturbed_T = rect.T;
    rep.N = N;
    rep.winding_residual = residual;
    rep.samples_used = walk.samples;
    return rep;
}

double main_term(const Subject& subject, double T) {
    if (!(T >= 1.0)) throw DomainError("main_term: requires T >= 1");
    if (std::holds_alternative<DirichletCharacter>(subject)) {
        const double k = std::get<DirichletCharacter>(subject).modulus();
        return T / kPi * std::log(k * T / (kTwoPi * std::exp(1.0)));
    }
    const auto& K = std::get<QuadraticField>(subject);
    return T / kPi *
           (std::log(K.abs_disc()) +
            K.degree() * std::log(T / (kTwoPi * std::exp(1.0))));
}

ZeroCountReport verify(const DirichletCharacter& chi, double T,
                       const TheoremOneConstants& constants,
                       const EvalTolerance& tol) {
    if (!(T >= std::max(1.0, constants.params.T0)))
        throw DomainError("verify: requires T >= max(1, T0)");
    const Subject subject = chi;
    ZeroCountReport rep = count_with_retries(subject, T, tol);
    const double Tu = rep.perturbed_T;
    rep.main_term = main_term(subject, Tu);
    rep.bound = constants.C1 * std::log(chi.modulus() * Tu) + constants.C2;
    rep.slack = rep.bound - std::fabs(double(rep.N) - rep.main_term);
    return rep;
}

ZeroCountReport verify(const QuadraticField& K, double T,
                       const TheoremTwoConstants& constants,
                       const EvalTolerance& tol) {
    if (!(T >= std::max(1.0, constants.params.T0)))
        throw DomainError("verify: requires T >= max(1, T0)");
    const Subject subject = make_quadratic_field(K.d);
    ZeroCountReport rep = count_with_retries(subject, T, tol);
    const double Tu = rep.perturbed_T;
    rep.main_term = main_term(subject, Tu);
    rep.bound = constants.D1 * (std::log(K.abs_disc()) + K.degree() * std::log(Tu)) +
                constants.D2 * K.degree() + constants.D3;
    rep.slack = rep.bound - std::fabs(double(rep.N) - rep.main_term);
    return rep;
}

std::string ZeroCountReport::to_json() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["T"] = T;
    j["perturbed_T"] = perturbed_T;
    j["N"] = N;
    j["main_term"] = main_term;
    j["bound"] = bound;
    j["slack"] = slack;
    j["winding_residual"] = winding_residual;
    j["samples_used"] = samples_used;
    return j.dump();
}

}  // namespace zcount
