#pragma once

#include "realforms/exact_matrix.hpp"

#include <cstdint>
#include <stdexcept>

namespace realforms {

/// 64-bit linear congruential generator, multiplier 6364136223846793005,
/// increment 1442695040888963407. All randomness in the library flows
/// through explicit seeds of this generator so results are reproducible
/// across platforms.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform-ish value in [0, bound) from the high bits.
    std::uint64_t next_below(std::uint64_t bound) {
        return (next() >> 33) % bound;
    }

private:
    std::uint64_t state_;
};

/// Rational with |numerator| <= height and 1 <= denominator <= height.
inline Rational random_rational(Lcg64& rng, int height = 5) {
    long long num = static_cast<long long>(rng.next_below(2 * height + 1)) - height;
    long long den = static_cast<long long>(rng.next_below(height)) + 1;
    return Rational(num, den);
}

inline GaussRational random_gauss(Lcg64& rng, int height = 5) {
    Rational re = random_rational(rng, height);
    Rational im = random_rational(rng, height);
    return GaussRational(re, im);
}

inline Quaternion random_quaternion(Lcg64& rng, int height = 5) {
    Rational a = random_rational(rng, height);
    Rational b = random_rational(rng, height);
    Rational c = random_rational(rng, height);
    Rational d = random_rational(rng, height);
    return Quaternion(a, b, c, d);
}

template <class T>
T random_scalar(Lcg64& rng, int height = 5);
template <>
inline Rational random_scalar<Rational>(Lcg64& rng, int height) {
    return random_rational(rng, height);
}
template <>
inline GaussRational random_scalar<GaussRational>(Lcg64& rng, int height) {
    return random_gauss(rng, height);
}
template <>
inline Quaternion random_scalar<Quaternion>(Lcg64& rng, int height) {
    return random_quaternion(rng, height);
}

template <class T>
ExactMatrix<T> random_matrix(Lcg64& rng, std::size_t rows, std::size_t cols,
                             int height = 5) {
    ExactMatrix<T> m(rows, cols, T(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<T>(rng, height);
    return m;
}

/// Redraws until invertible; failure after the retry bound signals a
/// degenerate random stream and is reported with the seed state consumed.
template <class T>
ExactMatrix<T> random_invertible(Lcg64& rng, std::size_t n, int height = 5,
                                 int max_tries = 32) {
    for (int t = 0; t < max_tries; ++t) {
        ExactMatrix<T> m = random_matrix<T>(rng, n, n, height);
        if (m.try_inverse()) return m;
    }
    throw std::runtime_error("random_invertible: retry bound exhausted");
}

}  // namespace realforms
