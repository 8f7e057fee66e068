#pragma once

#include "realforms/forms.hpp"
#include "realforms/lcg.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace realforms {

/// Raised when a bounded retry loop ran out of attempts; carries the seed so
/// the caller can retry with a fresh one.
struct SamplingError : std::runtime_error {
    std::uint64_t seed;

    explicit SamplingError(std::uint64_t s, const std::string& what_)
        : std::runtime_error(what_ + " (seed " + std::to_string(s) + ")"), seed(s) {}
};

/// (Id - X)(Id + X)^{-1}; throws domain_error when Id + X is singular.
template <class T>
ExactMatrix<T> cayley_transform(const ExactMatrix<T>& x) {
    if (!x.is_square())
        throw std::invalid_argument("cayley_transform: non-square matrix");
    const T one = one_like(x(0, 0));
    ExactMatrix<T> id = ExactMatrix<T>::identity(x.rows(), one);
    auto denom = (id + x).try_inverse();
    if (!denom) throw std::domain_error("cayley_transform: Id + X is singular");
    return (id - x) * *denom;
}

namespace detail {

// X = S^{-1}·W with W (anti-)symmetrized so that adj(X)·S = -S·X for the
// adjoint belonging to the form kind. For plain bilinear grams the parity of
// W follows the parity of S.
template <class T, class AdjFn>
ExactMatrix<T> form_skew_from(const ExactMatrix<T>& s_inv, const ExactMatrix<T>& y,
                              AdjFn adj, bool symmetrize) {
    ExactMatrix<T> w = symmetrize ? y + adj(y) : y - adj(y);
    return s_inv * w;
}

template <class T, class AdjFn>
ExactMatrix<T> cayley_sample_impl(const ExactMatrix<T>& s, std::uint64_t seed,
                                  AdjFn adj, bool symmetrize, int height,
                                  int max_tries) {
    auto s_inv = s.try_inverse();
    if (!s_inv) throw std::domain_error("cayley_sample: singular Gram matrix");
    Lcg64 rng(seed);
    for (int t = 0; t < max_tries; ++t) {
        ExactMatrix<T> y = random_matrix<T>(rng, s.rows(), s.cols(), height);
        ExactMatrix<T> x = form_skew_from(*s_inv, y, adj, symmetrize);
        const T one = one_like(x(0, 0));
        ExactMatrix<T> id = ExactMatrix<T>::identity(x.rows(), one);
        auto denom = (id + x).try_inverse();
        if (!denom) continue;
        ExactMatrix<T> m = (id - x) * *denom;
        if (adj(m) * s * m != s)
            throw std::logic_error("cayley_sample: membership recheck failed");
        return m;
    }
    throw SamplingError(seed, "cayley_sample: Id + X singular on every attempt");
}

}  // namespace detail

/// Sample of the group preserving the bilinear form of S (M^t·S·M = S),
/// via the Cayley transform of an S-skew matrix. S must be symmetric or
/// antisymmetric. Deterministic per seed; determinant is exactly 1.
ExactMatrix<Rational> cayley_sample_bilinear(const ExactMatrix<Rational>& s,
                                             std::uint64_t seed, int height = 5);

ExactMatrix<Rational> cayley_sample(const QuadraticForm& f, std::uint64_t seed);

/// Unitary sample: star(M)·S·M = S. When S is real diagonal the first column
/// is rescaled by the unit-modulus inverse determinant, making det M = 1;
/// otherwise det M·conj(det M) = 1 is all the transform guarantees.
ExactMatrix<GaussRational> cayley_sample(const HermitianForm& f, std::uint64_t seed);

/// Quaternionic samples: sigma_star(M)·S·M = S.
ExactMatrix<Quaternion> cayley_sample(const QuatHermitianForm& f, std::uint64_t seed);
ExactMatrix<Quaternion> cayley_sample(const QuatAntiHermitianForm& f, std::uint64_t seed);

}  // namespace realforms
