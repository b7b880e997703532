#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zcount/errors.hpp"

namespace zcount {

// Dirichlet character mod k.  Values are stored as exact root-of-unity
// exponents: chi(n) = exp(2*pi*i*expo[n]/order) when gcd(n,k)=1, and 0
// otherwise.  Immutable after construction.
class DirichletCharacter {
public:
    int modulus() const { return modulus_; }
    int order() const { return order_; }       // exponent of (Z/kZ)^*
    int parity() const { return parity_; }     // 0 even, 1 odd
    int conductor() const { return conductor_; }
    bool primitive() const { return conductor_ == modulus_; }
    bool principal() const { return principal_; }
    bool real_valued() const;

    // exponent of chi(n) in Z/order, or -1 when gcd(n,k) > 1
    int exponent_at(long long n) const;
    std::complex<double> value(long long n) const;

    DirichletCharacter conjugate() const;
    const std::string& label() const { return label_; }

    // value-level equality (exponents compared as fractions of the order)
    bool operator==(const DirichletCharacter& other) const;

private:
    DirichletCharacter() = default;
    int modulus_ = 0;
    int order_ = 1;
    int parity_ = 0;
    int conductor_ = 1;
    bool principal_ = true;
    std::vector<int> expo_;  // size modulus_, -1 for non-units
    std::string label_;

    void finalize(const std::string& label);  // parity/conductor/principal

    friend std::vector<DirichletCharacter> enumerate_characters(int k);
    friend DirichletCharacter kronecker_character(long long d);
};

// All phi(k) characters mod k, ordered lexicographically by exponents on
// the generators of (Z/kZ)^*.  Requires k >= 3.
std::vector<DirichletCharacter> enumerate_characters(int k);

// Gauss sum tau(chi) = sum_{n=1}^{k} chi(n) exp(2 pi i n / k) by direct
// summation; requires a primitive character.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

// Real primitive character mod |d| attached to a fundamental discriminant.
DirichletCharacter kronecker_character(long long d);

// Kronecker symbol (a|n), fully extended.
int kronecker_symbol(long long a, long long n);

// Fundamental discriminant test (d = 1 is not accepted).
bool is_fundamental_discriminant(long long d);

}  // namespace zcount
