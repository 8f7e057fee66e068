#pragma once

#include "realforms/rational.hpp"

#include <string>
#include <vector>

namespace realforms {

/// Coefficients of the m-th cyclotomic polynomial, little-endian, computed by
/// recursive division of x^m - 1 by the lower cyclotomic factors. Cached and
/// safe for concurrent use.
const std::vector<Rational>& cyclotomic_polynomial(unsigned m);

/// Euler totient; degree of the m-th cyclotomic polynomial.
unsigned euler_phi(unsigned m);

/// Element of the cyclotomic field of order m, represented as a residue
/// modulo the m-th cyclotomic polynomial (coefficient vector of length φ(m)).
/// Conjugation sends the class of ζ to ζ^{m-1}; no ordering is defined.
class CycloElement {
public:
    /// Zero of the order-m field.
    explicit CycloElement(unsigned m);

    /// The residue class of x, a primitive m-th root of unity.
    static CycloElement zeta(unsigned m);

    static CycloElement from_rational(unsigned m, const Rational& r);

    /// The element i = ζ_m^{m/4}; requires 4 | m.
    static CycloElement imaginary_unit(unsigned m);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    CycloElement conj() const;
    CycloElement inverse() const;
    CycloElement pow(unsigned long long e) const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator/(const CycloElement& a, const CycloElement& b);

    CycloElement& operator+=(const CycloElement& o) { return *this = *this + o; }
    CycloElement& operator-=(const CycloElement& o) { return *this = *this - o; }
    CycloElement& operator*=(const CycloElement& o) { return *this = *this * o; }
    CycloElement& operator/=(const CycloElement& o) { return *this = *this / o; }

    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend bool operator!=(const CycloElement& a, const CycloElement& b) {
        return !(a == b);
    }

    /// Canonical encoding "m:c0,c1,..." with φ(m) rational coefficients.
    std::string str() const;
    static CycloElement parse(const std::string& s);

private:
    CycloElement(unsigned m, std::vector<Rational> coeffs)
        : order_(m), coeffs_(std::move(coeffs)) {}

    unsigned order_;
    std::vector<Rational> coeffs_;
};

/// A root of unity of exact multiplicative order n, living in the cyclotomic
/// field of order lcm(n, 4) so that i is available alongside it. Satisfies
/// ζ·conj(ζ) = 1.
CycloElement primitive_unity_root(unsigned n);

/// Exact multiplicative order check: z^n = 1 and z^d ≠ 1 for proper divisors.
bool has_multiplicative_order(const CycloElement& z, unsigned n);

}  // namespace realforms
