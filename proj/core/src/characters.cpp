#include "zcount/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zcount {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long long power_mod(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) { n /= q; ++e; }
            out.emplace_back(q, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// primitive root mod p^e, p odd prime
long long primitive_root(long long p, int e) {
    const long long phi_p = p - 1;
    const auto fac = factorize(phi_p);
    long long g = 0;
    for (long long cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (const auto& [q, _] : fac) {
            if (power_mod(cand, phi_p / q, p) == 1) { ok = false; break; }
        }
        if (ok) { g = cand; break; }
    }
    if (e == 1) return g;
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    // lift: g must have order phi(p^2) mod p^2, otherwise g+p does
    if (power_mod(g, p - 1, p * p) == 1) g += p;
    return g % pe;
}

// Structure of (Z/kZ)^*: generators, their orders, the group exponent, and
// a joint discrete-log table.
struct UnitGroup {
    int k = 0;
    std::vector<long long> gens;
    std::vector<int> orders;
    int exponent = 1;                        // lcm of orders
    std::vector<std::vector<int>> dlog;      // dlog[n] = exponent tuple, empty if non-unit

    static UnitGroup build(int k);
};

UnitGroup UnitGroup::build(int k) {
    UnitGroup ug;
    ug.k = k;
    const auto fac = factorize(k);

    std::vector<std::pair<long long, int>> local;  // (local gen mod q, order), with modulus q
    std::vector<long long> moduli;
    for (const auto& [p, e] : fac) {
        long long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial
            if (e == 2) {
                local.emplace_back(3, 2);
                moduli.push_back(q);
            } else {
                local.emplace_back(q - 1, 2);  // -1
                moduli.push_back(q);
                local.emplace_back(5, int(q / 4));
                moduli.push_back(q);
            }
        } else {
            long long phi = q / p * (p - 1);
            local.emplace_back(primitive_root(p, e), int(phi));
            moduli.push_back(q);
        }
    }

    // CRT-lift each local generator: x = g (mod q), x = 1 (mod k/q)
    for (size_t i = 0; i < local.size(); ++i) {
        const long long q = moduli[i];
        const long long g = local[i].first % q;
        const long long rest = k / q;
        long long x = 1 % k;
        for (long long cand = 1; cand < k; ++cand) {
            if (cand % q == g && cand % rest == 1 % rest) {
                x = cand;
                break;
            }
        }
        ug.gens.push_back(x);
        ug.orders.push_back(local[i].second);
    }

    ug.exponent = 1;
    for (int d : ug.orders) ug.exponent = int(std::lcm((long long)ug.exponent, (long long)d));

    // joint dlog by odometer enumeration of the full group
    ug.dlog.assign(k, {});
    const int t = int(ug.gens.size());
    std::vector<int> tuple(t, 0);
    long long res = 1 % k;
    // iterate all tuples; maintain residue incrementally on the last index
    while (true) {
        ug.dlog[res] = tuple;
        // increment odometer (last index fastest)
        int i = t - 1;
        while (i >= 0) {
            ++tuple[i];
            res = res * ug.gens[i] % k;
            if (tuple[i] < ug.orders[i]) break;
            // wrapped: residue returns to previous state automatically since
            // gens[i]^orders[i] = 1 (mod k)
            tuple[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return ug;
}

}  // namespace

bool DirichletCharacter::real_valued() const {
    for (int e : expo_)
        if (e > 0 && 2 * e != order_) return false;
    return true;
}

int DirichletCharacter::exponent_at(long long n) const {
    long long m = n % modulus_;
    if (m < 0) m += modulus_;
    return expo_[size_t(m)];
}

std::complex<double> DirichletCharacter::value(long long n) const {
    const int e = exponent_at(n);
    if (e < 0) return {0.0, 0.0};
    if (e == 0) return {1.0, 0.0};
    if (2 * e == order_) return {-1.0, 0.0};
    if (4 * e == order_) return {0.0, 1.0};
    if (4 * e == 3 * order_) return {0.0, -1.0};
    const double ang = kTwoPi * double(e) / double(order_);
    return {std::cos(ang), std::sin(ang)};
}

DirichletCharacter DirichletCharacter::conjugate() const {
    if (real_valued()) return *this;
    DirichletCharacter c(*this);
    for (int& e : c.expo_)
        if (e > 0) e = order_ - e;
    c.label_ = label_ + "~";
    return c;
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
    if (modulus_ != other.modulus_) return false;
    for (int n = 0; n < modulus_; ++n) {
        const int e1 = expo_[size_t(n)];
        const int e2 = other.expo_[size_t(n)];
        if ((e1 < 0) != (e2 < 0)) return false;
        if (e1 >= 0 &&
            (long long)e1 * other.order_ != (long long)e2 * order_)
            return false;
    }
    return true;
}

void DirichletCharacter::finalize(const std::string& label) {
    label_ = label;
    const int e = expo_[size_t(modulus_ - 1)];  // chi(-1)
    parity_ = (e == 0) ? 0 : 1;

    principal_ = true;
    for (int x : expo_)
        if (x > 0) { principal_ = false; break; }

    // conductor: smallest f | k such that chi is trivial on n = 1 (mod f)
    conductor_ = modulus_;
    for (int f = 1; f <= modulus_; ++f) {
        if (modulus_ % f != 0) continue;
        bool trivial = true;
        for (int n = 1; n < modulus_; ++n) {
            if ((n - 1) % f == 0 && expo_[size_t(n)] > 0) {
                trivial = false;
                break;
            }
        }
        if (trivial) { conductor_ = f; break; }
    }
}

std::vector<DirichletCharacter> enumerate_characters(int k) {
    if (k < 3) throw DomainError("enumerate_characters: requires k >= 3");
    const UnitGroup ug = UnitGroup::build(k);
    const int t = int(ug.gens.size());
    const int m = ug.exponent;

    std::vector<DirichletCharacter> out;
    std::vector<int> c(t, 0);  // character exponents on the generators
    int index = 0;
    while (true) {
        DirichletCharacter chi;
        chi.modulus_ = k;
        chi.order_ = m;
        chi.expo_.assign(size_t(k), -1);
        for (int n = 0; n < k; ++n) {
            if (std::gcd(n, k) != 1) continue;
            const auto& tup = ug.dlog[size_t(n)];
            long long e = 0;
            for (int i = 0; i < t; ++i)
                e += (long long)c[i] * tup[i] * (m / ug.orders[i]);
            chi.expo_[size_t(n)] = int(e % m);
        }
        chi.finalize("chi_" + std::to_string(k) + "." + std::to_string(index));
        out.push_back(std::move(chi));
        ++index;

        // lexicographic odometer, first generator most significant
        int i = t - 1;
        while (i >= 0 && ++c[i] == ug.orders[i]) c[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
    if (!chi.primitive())
        throw NotPrimitive("gauss_sum: character is not primitive");
    const int k = chi.modulus();
    std::complex<double> tau(0.0, 0.0);
    for (int n = 1; n <= k; ++n) {
        const auto v = chi.value(n);
        if (v == std::complex<double>(0.0, 0.0)) continue;
        const double ang = kTwoPi * double(n) / double(k);
        tau += v * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return tau;
}

int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    if (v % 2 == 1) {
        const long long am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) { a /= 2; ++v; }
        if (v % 2 == 1) {
            const long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return (n == 1) ? result : 0;
}

bool is_fundamental_discriminant(long long d) {
    if (d == 0 || d == 1) return false;
    const auto squarefree = [](long long m) {
        m = std::llabs(m);
        for (long long q = 2; q * q <= m; ++q)
            if (m % (q * q) == 0) return false;
        return true;
    };
    const long long m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) return squarefree(d);
    if (m4 == 0) {
        const long long m = d / 4;
        const long long mm4 = ((m % 4) + 4) % 4;
        return (mm4 == 2 || mm4 == 3) && squarefree(m);
    }
    return false;
}

DirichletCharacter kronecker_character(long long d) {
    if (!is_fundamental_discriminant(d))
        throw NotFundamental("kronecker_character: d is not a fundamental discriminant");
    const int k = int(d < 0 ? -d : d);
    const UnitGroup ug = UnitGroup::build(k);
    const int m = ug.exponent;

    DirichletCharacter chi;
    chi.modulus_ = k;
    chi.order_ = m;
    chi.expo_.assign(size_t(k), -1);
    for (int n = 0; n < k; ++n) {
        if (std::gcd((long long)n, (long long)k) != 1) continue;
        const int kr = kronecker_symbol(d, n);
        chi.expo_[size_t(n)] = (kr == 1) ? 0 : m / 2;
    }
    chi.finalize("kron_" + std::to_string(d));
    if (!chi.primitive())
        throw NotFundamental("kronecker_character: induced character (internal)");
    return chi;
}

}  // namespace zcount
