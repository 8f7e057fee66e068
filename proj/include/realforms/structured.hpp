#pragma once

#include "realforms/exact_matrix.hpp"

#include <stdexcept>

namespace realforms {

/// The named diagonal / block matrices the whole classification runs on:
///   signature        diag(+1 ×p, -1 ×(n-p))
///   signature_root   diag(+1 ×p,  i ×(n-p)), squares to the signature matrix
///   symplectic_unit  block-diagonal 2×2 blocks [[0,1],[-1,0]], even size
enum class StructuredTag { signature, signature_root, symplectic_unit };

struct StructuredKind {
    StructuredTag tag;
    int n = 0;
    int p = 0;  // ignored for symplectic_unit
};

/// diag(+1 ×p, -1 ×(n-p)) over any scalar constructible from small ints.
template <class T = Rational>
ExactMatrix<T> signature_matrix(int n, int p) {
    if (n <= 0 || p < 0 || p > n)
        throw std::invalid_argument("signature_matrix: need 0 <= p <= n, n > 0");
    ExactMatrix<T> m(n, n, T(0));
    for (int i = 0; i < n; ++i) m(i, i) = i < p ? T(1) : T(-1);
    return m;
}

inline ExactMatrix<GaussRational> signature_matrix_gauss(int n, int p) {
    return signature_matrix<GaussRational>(n, p);
}

/// diag(+1 ×p, i ×(n-p)); its square is the signature matrix with the same p.
inline ExactMatrix<GaussRational> signature_root_matrix(int n, int p) {
    if (n <= 0 || p < 0 || p > n)
        throw std::invalid_argument("signature_root_matrix: need 0 <= p <= n, n > 0");
    ExactMatrix<GaussRational> m(n, n, GaussRational());
    for (int i = 0; i < n; ++i)
        m(i, i) = i < p ? GaussRational(1) : GaussRational::i();
    return m;
}

/// Block-diagonal [[0,1],[-1,0]] blocks; squares to -Id, transpose is its
/// negative (and its inverse). Requires even size.
template <class T = Rational>
ExactMatrix<T> symplectic_unit_matrix(int n) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("symplectic_unit_matrix: size must be positive and even");
    ExactMatrix<T> m(n, n, T(0));
    for (int b = 0; b < n; b += 2) {
        m(b, b + 1) = T(1);
        m(b + 1, b) = T(-1);
    }
    return m;
}

inline ExactMatrix<GaussRational> build_structured(const StructuredKind& kind) {
    switch (kind.tag) {
        case StructuredTag::signature:
            return signature_matrix_gauss(kind.n, kind.p);
        case StructuredTag::signature_root:
            return signature_root_matrix(kind.n, kind.p);
        case StructuredTag::symplectic_unit:
            return symplectic_unit_matrix<GaussRational>(kind.n);
    }
    throw std::invalid_argument("build_structured: unknown tag");
}

}  // namespace realforms
