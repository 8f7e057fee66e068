#pragma once

#include "realforms/rational.hpp"

#include <stdexcept>
#include <string>

namespace realforms {

/// Element of the rational quaternion algebra with basis 1, I, J, K,
/// I² = J² = K² = -1, IJ = K. Multiplication is associative and
/// non-commutative; the reduced norm a²+b²+c²+d² vanishes only at zero,
/// so every nonzero element is invertible.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(long long a) : a_(a) {}
    Quaternion(Rational a) : a_(std::move(a)) {}
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Quaternion unit_i() { return Quaternion(0, 1, 0, 0); }
    static Quaternion unit_j() { return Quaternion(0, 0, 1, 0); }
    static Quaternion unit_k() { return Quaternion(0, 0, 0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    /// In the center, i.e. b = c = d = 0.
    bool is_central() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    /// Purely imaginary, i.e. a = 0.
    bool is_pure() const { return a_.is_zero(); }

    /// The standard involution a+bI+cJ+dK ↦ a-bI-cJ-dK.
    Quaternion sigma() const { return Quaternion(a_, -b_, -c_, -d_); }

    Quaternion pure_part() const { return Quaternion(Rational(0), b_, c_, d_); }

    /// Reduced norm a²+b²+c²+d²; satisfies sigma(x)·x = norm(x)·1.
    Rational norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

    Quaternion operator-() const { return Quaternion(-a_, -b_, -c_, -d_); }

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return Quaternion(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return Quaternion(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
    }
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return Quaternion(
            x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_,
            x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_,
            x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_,
            x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_);
    }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    Quaternion inverse() const {
        if (is_zero()) throw std::domain_error("Quaternion: inverse of zero");
        Rational n = norm();
        return Quaternion(a_ / n, -b_ / n, -c_ / n, -d_ / n);
    }

    friend bool operator==(const Quaternion& x, const Quaternion& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

    /// Canonical encoding "a|b|c|d".
    std::string str() const {
        return a_.str() + "|" + b_.str() + "|" + c_.str() + "|" + d_.str();
    }

    static Quaternion parse(const std::string& s) {
        Rational part[4];
        std::size_t pos = 0;
        for (int t = 0; t < 4; ++t) {
            std::size_t bar = (t == 3) ? s.size() : s.find('|', pos);
            if (bar == std::string::npos)
                throw std::invalid_argument("Quaternion: expected 4 parts in '" + s + "'");
            part[t] = Rational::parse(s.substr(pos, bar - pos));
            pos = bar + 1;
        }
        return Quaternion(part[0], part[1], part[2], part[3]);
    }

private:
    Rational a_;
    Rational b_;
    Rational c_;
    Rational d_;
};

/// The involution σ; an anti-automorphism fixing exactly the center.
inline Quaternion quat_sigma(const Quaternion& x) { return x.sigma(); }

}  // namespace realforms
