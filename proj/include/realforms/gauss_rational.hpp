#pragma once

#include "realforms/rational.hpp"

#include <stdexcept>
#include <string>

namespace realforms {

/// Element of the quadratic extension k(i), i² = -1, with the conjugation
/// (re, im) ↦ (re, -im) generating the Galois group over k. No ordering is
/// defined here; only the fixed field carries signs.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long long re) : re_(re) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    /// re² + im², a non-negative rational, zero only at zero.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_,
                             a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        return a * b.inverse();
    }

    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

    GaussRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussRational: inverse of zero");
        Rational n = norm();
        return GaussRational(re_ / n, -im_ / n);
    }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) {
        return !(a == b);
    }

    /// Canonical encoding "re|im" with both parts in rational encoding.
    std::string str() const { return re_.str() + "|" + im_.str(); }

    static GaussRational parse(const std::string& s) {
        auto bar = s.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("GaussRational: missing '|' in '" + s + "'");
        return GaussRational(Rational::parse(s.substr(0, bar)),
                             Rational::parse(s.substr(bar + 1)));
    }

private:
    Rational re_;
    Rational im_;
};

/// Image under the nontrivial element of Gal(k(i)|k).
inline GaussRational gauss_conj(const GaussRational& z) { return z.conj(); }

}  // namespace realforms
