// Test-only oracles, independent of the elimination / congruence paths they
// cross-check.
#pragma once

#include "realforms/exact_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace realforms::testing {

/// Determinant by cofactor expansion along the first row.
template <class T>
T det_by_cofactor(const ExactMatrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    T acc = zero_like(m(0, 0));
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m(0, j))) continue;
        ExactMatrix<T> minor(n - 1, n - 1, zero_like(m(0, 0)));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        T term = m(0, j) * det_by_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Characteristic polynomial coefficients (c_0, ..., c_n) of det(λI - A),
/// c_n = 1, by the Faddeev-LeVerrier recurrence; exact over the rationals.
template <class T>
std::vector<T> charpoly(const ExactMatrix<T>& a) {
    const std::size_t n = a.rows();
    const T one = one_like(a(0, 0));
    std::vector<T> c(n + 1, zero_like(a(0, 0)));
    c[n] = one;
    ExactMatrix<T> m = ExactMatrix<T>::identity(n, one);
    for (std::size_t k = 1; k <= n; ++k) {
        ExactMatrix<T> am = a * m;
        T tr = zero_like(a(0, 0));
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        T kk = zero_like(a(0, 0));
        for (std::size_t i = 0; i < k; ++i) kk += one;
        c[n - k] = -(tr * scalar_inverse(kk));
        for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
        m = am;
    }
    return c;
}

/// Signature index of a symmetric rational matrix by Descartes' rule on its
/// characteristic polynomial: with all eigenvalues real and nonzero, the
/// positive-root count equals the sign variations exactly.
int signature_by_charpoly(const ExactMatrix<Rational>& sym);

/// Same oracle for a hermitian matrix; its characteristic polynomial has
/// rational coefficients.
int signature_by_charpoly(const ExactMatrix<GaussRational>& herm);

inline int descartes_positive_roots(const std::vector<Rational>& coeffs) {
    int changes = 0;
    int prev = 0;
    for (const auto& c : coeffs) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

inline int signature_by_charpoly(const ExactMatrix<Rational>& sym) {
    auto c = charpoly(sym);
    return descartes_positive_roots(c);
}

inline int signature_by_charpoly(const ExactMatrix<GaussRational>& herm) {
    auto c = charpoly(herm);
    std::vector<Rational> real_coeffs;
    for (const auto& x : c) {
        if (!x.is_real())
            throw std::logic_error("charpoly of hermitian matrix must be real");
        real_coeffs.push_back(x.re());
    }
    return descartes_positive_roots(real_coeffs);
}

}  // namespace realforms::testing
