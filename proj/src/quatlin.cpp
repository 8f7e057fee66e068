#include "realforms/quatlin.hpp"

#include "realforms/structured.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace realforms {

ExactMatrix<GaussRational> mu_embed(const QuatMatrix& m) {
    ExactMatrix<GaussRational> r(2 * m.rows(), 2 * m.cols(), GaussRational());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Quaternion& h = m(i, j);
            r(2 * i, 2 * j) = GaussRational(h.a(), h.b());
            r(2 * i, 2 * j + 1) = GaussRational(h.c(), h.d());
            r(2 * i + 1, 2 * j) = GaussRational(-h.c(), h.d());
            r(2 * i + 1, 2 * j + 1) = GaussRational(h.a(), -h.b());
        }
    return r;
}

bool in_quaternionic_image(const ExactMatrix<GaussRational>& n) {
    if (!n.is_square())
        throw std::invalid_argument("in_quaternionic_image: non-square matrix");
    if (n.rows() % 2 != 0)
        throw std::invalid_argument("in_quaternionic_image: size must be even");
    auto a = symplectic_unit_matrix<GaussRational>(static_cast<int>(n.rows()));
    return n == a * conj(n) * (-a);  // A^{-1} = -A
}

bool sigma_transpose_compat(const QuatMatrix& m) {
    if (!m.is_square()) return false;
    auto a = symplectic_unit_matrix<GaussRational>(static_cast<int>(2 * m.rows()));
    return mu_embed(sigma_star(m)) == a * mu_embed(m).transposed() * (-a);
}

ExactMatrix<GaussRational> embedded_form_matrix(const QuatHermitianForm& h) {
    auto a = symplectic_unit_matrix<GaussRational>(static_cast<int>(2 * h.gram.rows()));
    if (!h.gram.try_inverse())
        throw std::domain_error("embedded_form_matrix: singular Gram matrix");
    return (-a) * mu_embed(h.gram);
}

ExactMatrix<GaussRational> embedded_form_matrix(const QuatAntiHermitianForm& h) {
    auto a = symplectic_unit_matrix<GaussRational>(static_cast<int>(2 * h.gram.rows()));
    if (!h.gram.try_inverse())
        throw std::domain_error("embedded_form_matrix: singular Gram matrix");
    return (-a) * mu_embed(h.gram);
}

ExactMatrix<GaussRational> embedded_form_matrix(const FormSpec& h) {
    if (const auto* hh = std::get_if<QuatHermitianForm>(&h))
        return embedded_form_matrix(*hh);
    if (const auto* ha = std::get_if<QuatAntiHermitianForm>(&h))
        return embedded_form_matrix(*ha);
    throw std::invalid_argument("embedded_form_matrix: quaternionic form required");
}

namespace {

// σ-congruence machinery shared by the hermitian and anti-hermitian cases.
// Applies sigma_star(E)·A·E for elementary column operations E, with the
// right/left multiplication order the quaternions require.
struct SigmaCongruence {
    ExactMatrix<Quaternion> a;
    ExactMatrix<Quaternion> w;

    explicit SigmaCongruence(const ExactMatrix<Quaternion>& gram)
        : a(gram),
          w(ExactMatrix<Quaternion>::identity(gram.rows(), Quaternion(1))) {}

    std::size_t size() const { return a.rows(); }

    // col_j += col_k · alpha, then row_j += sigma(alpha) · row_k.
    void transvect(std::size_t j, std::size_t k, const Quaternion& alpha) {
        const std::size_t n = size();
        for (std::size_t i = 0; i < n; ++i) a(i, j) += a(i, k) * alpha;
        Quaternion sa = alpha.sigma();
        for (std::size_t i = 0; i < n; ++i) a(j, i) += sa * a(k, i);
        for (std::size_t i = 0; i < n; ++i) w(i, j) += w(i, k) * alpha;
    }

    void swap_both(std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        a.swap_rows(i, j);
        w.swap_cols(i, j);
    }

    // Clears row/column t against the invertible pivot a(t,t).
    void eliminate(std::size_t t) {
        Quaternion dinv = a(t, t).inverse();
        for (std::size_t j = t + 1; j < size(); ++j) {
            if (a(t, j).is_zero()) continue;
            transvect(j, t, -(dinv * a(t, j)));
        }
    }
};

}  // namespace

QuatHermitianCanonical canonicalize_quat_hermitian(const QuatHermitianForm& h) {
    if (!h.gram.try_inverse())
        throw std::domain_error("canonicalize_quat_hermitian: singular Gram matrix");
    SigmaCongruence cg(h.gram);
    const std::size_t n = cg.size();
    int rank = 0, index = 0;
    std::vector<Rational> diagonal;
    for (std::size_t t = 0; t < n; ++t) {
        if (cg.a(t, t).is_zero()) {
            for (std::size_t j = t + 1; j < n; ++j)
                if (!cg.a(j, j).is_zero()) {
                    cg.swap_both(t, j);
                    break;
                }
        }
        if (cg.a(t, t).is_zero()) {
            // All remaining diagonal entries vanish: a transvection by
            // sigma(s) creates the pivot 2·norm(s) > 0.
            bool found = false;
            for (std::size_t j = t; j < n && !found; ++j)
                for (std::size_t k = j + 1; k < n && !found; ++k)
                    if (!cg.a(j, k).is_zero()) {
                        cg.transvect(j, k, cg.a(j, k).sigma());
                        if (j != t) cg.swap_both(t, j);
                        found = true;
                    }
            if (!found) break;
        }
        Quaternion d = cg.a(t, t);
        if (!d.is_central())
            throw std::logic_error("canonicalize_quat_hermitian: non-central pivot");
        rank++;
        diagonal.push_back(d.a());
        if (d.a().sign() > 0) index++;
        cg.eliminate(t);
    }
    if (rank != static_cast<int>(n))
        throw std::domain_error("canonicalize_quat_hermitian: degenerate form, rank " +
                                std::to_string(rank));
    return QuatHermitianCanonical{index, rank, cg.w, std::move(diagonal)};
}

QuatAntiHermitianCanonical canonicalize_quat_antihermitian(const QuatAntiHermitianForm& h) {
    if (!h.gram.try_inverse())
        throw std::domain_error("canonicalize_quat_antihermitian: singular Gram matrix");
    SigmaCongruence cg(h.gram);
    const std::size_t n = cg.size();
    int rank = 0;
    std::vector<Quaternion> diagonal;
    for (std::size_t t = 0; t < n; ++t) {
        if (cg.a(t, t).is_zero()) {
            for (std::size_t j = t + 1; j < n; ++j)
                if (!cg.a(j, j).is_zero()) {
                    cg.swap_both(t, j);
                    break;
                }
        }
        if (cg.a(t, t).is_zero()) {
            // new pivot = 2·pure_part(s·alpha); pick alpha so that s·alpha
            // has a nonzero pure part.
            bool found = false;
            for (std::size_t j = t; j < n && !found; ++j)
                for (std::size_t k = j + 1; k < n && !found; ++k)
                    if (!cg.a(j, k).is_zero()) {
                        Quaternion s = cg.a(j, k);
                        Quaternion alpha =
                            s.is_central() ? Quaternion::unit_i() : Quaternion(1);
                        cg.transvect(j, k, alpha);
                        if (j != t) cg.swap_both(t, j);
                        found = true;
                    }
            if (!found) break;
        }
        Quaternion d = cg.a(t, t);
        if (!d.is_pure() || d.is_zero())
            throw std::logic_error("canonicalize_quat_antihermitian: pivot not pure");
        rank++;
        diagonal.push_back(d);
        cg.eliminate(t);
    }
    if (rank != static_cast<int>(n))
        throw std::domain_error("canonicalize_quat_antihermitian: degenerate form, rank " +
                                std::to_string(rank));
    return QuatAntiHermitianCanonical{rank, cg.w, std::move(diagonal)};
}

namespace {

// Exact rational square root; nullopt when none exists.
std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    Int ns = boost::multiprecision::sqrt(r.num());
    Int ds = boost::multiprecision::sqrt(r.den());
    if (ns * ns != r.num() || ds * ds != r.den()) return std::nullopt;
    return Rational(ns, ds);
}

}  // namespace

Quaternion rotate_pure_to_axis(const Quaternion& v) {
    if (!v.is_pure() || v.is_zero())
        throw std::invalid_argument("rotate_pure_to_axis: nonzero pure quaternion required");
    auto r = rational_sqrt(v.norm());
    if (!r)
        throw std::domain_error("rotate_pure_to_axis: norm is not a perfect square");
    Quaternion target = Quaternion(Rational(0), *r, Rational(0), Rational(0));
    if (v == target) return Quaternion(1);
    // q = v/r + I conjugates v onto the I axis unless v = -r·I, where any
    // pure unit orthogonal to I works.
    Quaternion q = v * Quaternion(r->inverse()) + Quaternion::unit_i();
    if (q.is_zero()) q = Quaternion::unit_j();
    if (q * v != target * q)
        throw std::logic_error("rotate_pure_to_axis: rotation check failed");
    return q;
}

}  // namespace realforms
