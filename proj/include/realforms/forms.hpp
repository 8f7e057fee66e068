#pragma once

#include "realforms/exact_matrix.hpp"
#include "realforms/structured.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace realforms {

enum class FormKind { quadratic, hermitian, quat_hermitian, quat_antihermitian };

const char* form_kind_name(FormKind k);

/// Non-degenerate symmetric bilinear form over the rationals.
struct QuadraticForm {
    ExactMatrix<Rational> gram;

    explicit QuadraticForm(ExactMatrix<Rational> g) : gram(std::move(g)) {
        if (!gram.is_square() || gram != gram.transposed())
            throw std::invalid_argument("QuadraticForm: Gram matrix must be symmetric");
    }
};

/// Hermitian form over k(i): star(Gram) = Gram.
struct HermitianForm {
    ExactMatrix<GaussRational> gram;

    explicit HermitianForm(ExactMatrix<GaussRational> g) : gram(std::move(g)) {
        if (!gram.is_square() || gram != star(gram))
            throw std::invalid_argument("HermitianForm: Gram matrix must be hermitian");
    }
};

/// σ-hermitian form over the quaternions: sigma_star(Gram) = Gram.
struct QuatHermitianForm {
    ExactMatrix<Quaternion> gram;

    explicit QuatHermitianForm(ExactMatrix<Quaternion> g) : gram(std::move(g)) {
        if (!gram.is_square() || gram != sigma_star(gram))
            throw std::invalid_argument(
                "QuatHermitianForm: Gram matrix must be sigma-hermitian");
    }
};

/// σ-anti-hermitian form over the quaternions: sigma_star(Gram) = -Gram.
struct QuatAntiHermitianForm {
    ExactMatrix<Quaternion> gram;

    explicit QuatAntiHermitianForm(ExactMatrix<Quaternion> g) : gram(std::move(g)) {
        if (!gram.is_square() || sigma_star(gram) != -gram)
            throw std::invalid_argument(
                "QuatAntiHermitianForm: Gram matrix must be sigma-anti-hermitian");
    }
};

using FormSpec = std::variant<QuadraticForm, HermitianForm, QuatHermitianForm,
                              QuatAntiHermitianForm>;

FormKind kind_of(const FormSpec& f);
std::size_t form_size(const FormSpec& f);

template <class T>
struct CongruenceDiagonalization {
    ExactMatrix<T> transform;       // W with adj(W)·S·W diagonal
    std::vector<Rational> diagonal; // real pivots
    int positives = 0;
    int negatives = 0;
    int rank = 0;
};

namespace detail {

inline Rational real_pivot(const Rational& x) { return x; }
inline Rational real_pivot(const GaussRational& x) {
    if (!x.is_real())
        throw std::logic_error("congruence pivot not real");
    return x.re();
}

}  // namespace detail

/// Exact symmetric / hermitian congruence diagonalization. Pivots on a
/// nonzero diagonal entry when one exists; when the whole remaining diagonal
/// is zero, a column transvection scaled by the conjugate of a nonzero
/// off-diagonal entry creates a positive pivot. conj_value(T) decides
/// symmetric vs hermitian.
template <class T>
CongruenceDiagonalization<T> congruence_diagonalize(const ExactMatrix<T>& gram) {
    if (!gram.is_square())
        throw std::invalid_argument("congruence_diagonalize: non-square matrix");
    const std::size_t n = gram.rows();
    ExactMatrix<T> a = gram;
    ExactMatrix<T> w = ExactMatrix<T>::identity(n, one_like(gram(0, 0)));

    // col_j += col_k·alpha followed by row_j += conj(alpha)·row_k keeps the
    // congruence adj(E)·A·E; the witness only records the column operation.
    auto transvect = [&](std::size_t j, std::size_t k, const T& alpha) {
        for (std::size_t i = 0; i < n; ++i) a(i, j) += a(i, k) * alpha;
        T ca = conj_value(alpha);
        for (std::size_t i = 0; i < n; ++i) a(j, i) += ca * a(k, i);
        for (std::size_t i = 0; i < n; ++i) w(i, j) += w(i, k) * alpha;
    };
    auto swap_both = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        a.swap_rows(i, j);
        w.swap_cols(i, j);
    };

    CongruenceDiagonalization<T> out{w, {}, 0, 0, 0};
    for (std::size_t t = 0; t < n; ++t) {
        if (is_zero(a(t, t))) {
            for (std::size_t j = t + 1; j < n; ++j)
                if (!is_zero(a(j, j))) {
                    swap_both(t, j);
                    break;
                }
        }
        if (is_zero(a(t, t))) {
            bool found = false;
            for (std::size_t j = t; j < n && !found; ++j)
                for (std::size_t k = j + 1; k < n && !found; ++k)
                    if (!is_zero(a(j, k))) {
                        transvect(j, k, conj_value(a(j, k)));
                        if (j != t) swap_both(t, j);
                        found = true;
                    }
            if (!found) break;  // remaining block is zero
        }
        T d = a(t, t);
        out.rank++;
        Rational pr = detail::real_pivot(d);
        (pr.sign() > 0 ? out.positives : out.negatives)++;
        out.diagonal.push_back(pr);
        T dinv = scalar_inverse(d);
        for (std::size_t j = t + 1; j < n; ++j) {
            if (is_zero(a(t, j))) continue;
            transvect(j, t, -(dinv * a(t, j)));
        }
    }
    out.transform = w;
    return out;
}

/// Number of positive pivots of an exact congruence diagonalization; with
/// the rank, the complete equivalence invariant over a real closed field.
/// Degenerate input is rejected (the message reports the rank found).
int signature_index(const QuadraticForm& f);
int signature_index(const HermitianForm& f);

/// Variant-level dispatch; quaternionic hermitian forms delegate to the
/// quaternionic canonicalization, anti-hermitian forms have no index.
int signature_index(const FormSpec& f);

/// Real-closed-level equivalence: same kind, size, rank and index.
bool equivalent(const FormSpec& f, const FormSpec& g);

/// 3-Pfister form <1,a>⊗<1,b>⊗<1,c>.
struct Pfister3 {
    Rational a, b, c;

    Pfister3(Rational a_, Rational b_, Rational c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (a.is_zero() || b.is_zero() || c.is_zero())
            throw std::invalid_argument("Pfister3: slots must be nonzero");
    }
};

/// Diagonal Gram <1,a,b,ab,c,ac,bc,abc>.
QuadraticForm pfister3_expand(const Pfister3& p);

enum class PfisterClass { definite, split };

/// Over a real closed field a 3-Pfister form is either definite
/// (signature 8) or split (signature 0); nothing else can occur.
PfisterClass pfister3_class(const Pfister3& p);

}  // namespace realforms
