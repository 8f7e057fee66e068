#pragma once

#include "realforms/cyclotomic.hpp"
#include "realforms/gauss_rational.hpp"
#include "realforms/quaternion.hpp"
#include "realforms/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace realforms {

// Uniform hooks so matrix algorithms work over every scalar in the tower,
// including the cyclotomic one whose zero/one depend on the runtime order.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussRational& x) { return x.is_zero(); }
inline bool is_zero(const Quaternion& x) { return x.is_zero(); }
inline bool is_zero(const CycloElement& x) { return x.is_zero(); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline GaussRational zero_like(const GaussRational&) { return GaussRational(); }
inline Quaternion zero_like(const Quaternion&) { return Quaternion(); }
inline CycloElement zero_like(const CycloElement& x) { return CycloElement(x.order()); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline GaussRational one_like(const GaussRational&) { return GaussRational(1); }
inline Quaternion one_like(const Quaternion&) { return Quaternion(1); }
inline CycloElement one_like(const CycloElement& x) {
    return CycloElement::from_rational(x.order(), Rational(1));
}

inline Rational scalar_inverse(const Rational& x) { return x.inverse(); }
inline GaussRational scalar_inverse(const GaussRational& x) { return x.inverse(); }
inline Quaternion scalar_inverse(const Quaternion& x) { return x.inverse(); }
inline CycloElement scalar_inverse(const CycloElement& x) { return x.inverse(); }

inline Rational conj_value(const Rational& x) { return x; }
inline GaussRational conj_value(const GaussRational& x) { return x.conj(); }
inline CycloElement conj_value(const CycloElement& x) { return x.conj(); }

template <class T>
struct scalar_traits;
template <>
struct scalar_traits<Rational> {
    static constexpr const char* name = "rational";
    static constexpr bool commutative = true;
};
template <>
struct scalar_traits<GaussRational> {
    static constexpr const char* name = "gauss";
    static constexpr bool commutative = true;
};
template <>
struct scalar_traits<Quaternion> {
    static constexpr const char* name = "quaternion";
    static constexpr bool commutative = false;
};
template <>
struct scalar_traits<CycloElement> {
    static constexpr const char* name = "cyclo";
    static constexpr bool commutative = true;
};

/// Dense matrix over one scalar type of the tower, row-major, with exact
/// arithmetic throughout. Dimensions are positive; all values immutable in
/// practice (operations return new matrices).
template <class T>
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("ExactMatrix: dimensions must be positive");
    }

    static ExactMatrix identity(std::size_t n, const T& one) {
        ExactMatrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    ExactMatrix operator-() const {
        ExactMatrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        a.require_same_shape(b);
        ExactMatrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        a.require_same_shape(b);
        ExactMatrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("ExactMatrix: dimension mismatch in product");
        ExactMatrix r(a.rows_, b.cols_, zero_like(a.e_[0]));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend ExactMatrix operator*(const T& s, const ExactMatrix& m) {
        ExactMatrix r = m;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix transposed() const {
        ExactMatrix r(cols_, rows_, zero_like(e_[0]));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        const T one = one_like(e_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j ? ((*this)(i, j) != one) : !is_zero((*this)(i, j)))
                    return false;
            }
        return true;
    }

    bool is_zero_matrix() const {
        for (const auto& x : e_)
            if (!is_zero(x)) return false;
        return true;
    }

    /// Gauss–Jordan inverse; pivots on the first nonzero entry of each
    /// column and uses left row operations only, so it is valid over the
    /// quaternions as well. Returns nullopt when singular.
    std::optional<ExactMatrix> try_inverse() const {
        if (!is_square())
            throw std::invalid_argument("ExactMatrix: inverse of non-square matrix");
        const std::size_t n = rows_;
        ExactMatrix a = *this;
        ExactMatrix r = identity(n, one_like(e_[0]));
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = n;
            for (std::size_t i = col; i < n; ++i)
                if (!is_zero(a(i, col))) {
                    piv = i;
                    break;
                }
            if (piv == n) return std::nullopt;
            if (piv != col) {
                a.swap_rows(piv, col);
                r.swap_rows(piv, col);
            }
            T inv = scalar_inverse(a(col, col));
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) = inv * a(col, j);
                r(col, j) = inv * r(col, j);
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || is_zero(a(i, col))) continue;
                T f = a(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    r(i, j) -= f * r(col, j);
                }
            }
        }
        return r;
    }

    ExactMatrix inverse() const {
        auto inv = try_inverse();
        if (!inv) throw std::domain_error("ExactMatrix: singular matrix");
        return *inv;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }

private:
    void require_same_shape(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("ExactMatrix: shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> e_;
};

/// Exact determinant by pivoted elimination (first nonzero entry in column
/// order). Commutative scalars only.
template <class T>
T exact_det(const ExactMatrix<T>& m) {
    static_assert(scalar_traits<T>::commutative,
                  "exact_det is defined over commutative scalars only");
    if (!m.is_square())
        throw std::invalid_argument("exact_det: non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix<T> a = m;
    T det = one_like(a(0, 0));
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!is_zero(a(i, col))) {
                piv = i;
                break;
            }
        if (piv == n) return zero_like(a(0, 0));
        if (piv != col) {
            a.swap_rows(piv, col);
            negate = !negate;
        }
        det *= a(col, col);
        T inv = scalar_inverse(a(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(a(i, col))) continue;
            T f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return negate ? -det : det;
}

template <class T>
ExactMatrix<T> conj(const ExactMatrix<T>& m) {
    ExactMatrix<T> r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = conj_value(m(i, j));
    return r;
}

/// Conjugate transpose M̄^t.
template <class T>
ExactMatrix<T> star(const ExactMatrix<T>& m) {
    return conj(m).transposed();
}

/// Entrywise σ followed by transpose; the quaternionic adjoint, satisfying
/// sigma_star(MN) = sigma_star(N)·sigma_star(M).
inline ExactMatrix<Quaternion> sigma_star(const ExactMatrix<Quaternion>& m) {
    ExactMatrix<Quaternion> r(m.cols(), m.rows(), Quaternion());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).sigma();
    return r;
}

inline ExactMatrix<GaussRational> to_gauss(const ExactMatrix<Rational>& m) {
    ExactMatrix<GaussRational> r(m.rows(), m.cols(), GaussRational());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = GaussRational(m(i, j));
    return r;
}

}  // namespace realforms
