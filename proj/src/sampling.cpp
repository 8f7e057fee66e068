#include "realforms/sampling.hpp"

namespace realforms {

ExactMatrix<Rational> cayley_sample_bilinear(const ExactMatrix<Rational>& s,
                                             std::uint64_t seed, int height) {
    if (!s.is_square())
        throw std::invalid_argument("cayley_sample_bilinear: non-square Gram");
    bool symmetric = s == s.transposed();
    bool antisymmetric = s.transposed() == -s;
    if (!symmetric && !antisymmetric)
        throw std::invalid_argument(
            "cayley_sample_bilinear: Gram must be symmetric or antisymmetric");
    auto adj = [](const ExactMatrix<Rational>& m) { return m.transposed(); };
    // Skewness X^t·S = -S·X needs W = S·X antisymmetric for symmetric S and
    // symmetric for antisymmetric S.
    return detail::cayley_sample_impl(s, seed, adj, antisymmetric, height, 32);
}

ExactMatrix<Rational> cayley_sample(const QuadraticForm& f, std::uint64_t seed) {
    auto m = cayley_sample_bilinear(f.gram, seed);
    if (exact_det(m) != Rational(1))
        throw std::logic_error("cayley_sample: bilinear sample determinant != 1");
    return m;
}

ExactMatrix<GaussRational> cayley_sample(const HermitianForm& f, std::uint64_t seed) {
    auto adj = [](const ExactMatrix<GaussRational>& m) { return star(m); };
    auto m = detail::cayley_sample_impl(f.gram, seed, adj, false, 5, 32);
    GaussRational d = exact_det(m);
    if (d * d.conj() != GaussRational(1))
        throw std::logic_error("cayley_sample: unitary determinant not unit-modulus");
    if (d != GaussRational(1)) {
        // Real diagonal Gram commutes with diag(1/d, 1, ..., 1), so the
        // rescaled sample still preserves the form and has determinant 1.
        bool real_diagonal = true;
        for (std::size_t i = 0; i < f.gram.rows() && real_diagonal; ++i)
            for (std::size_t j = 0; j < f.gram.cols() && real_diagonal; ++j)
                if ((i == j && !f.gram(i, j).is_real()) ||
                    (i != j && !f.gram(i, j).is_zero()))
                    real_diagonal = false;
        if (real_diagonal) {
            GaussRational dinv = d.inverse();
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, 0) = m(i, 0) * dinv;
            if (star(m) * f.gram * m != f.gram)
                throw std::logic_error("cayley_sample: normalization broke membership");
        }
    }
    return m;
}

ExactMatrix<Quaternion> cayley_sample(const QuatHermitianForm& f, std::uint64_t seed) {
    auto adj = [](const ExactMatrix<Quaternion>& m) { return sigma_star(m); };
    return detail::cayley_sample_impl(f.gram, seed, adj, false, 5, 32);
}

ExactMatrix<Quaternion> cayley_sample(const QuatAntiHermitianForm& f, std::uint64_t seed) {
    auto adj = [](const ExactMatrix<Quaternion>& m) { return sigma_star(m); };
    // anti-hermitian S flips the parity W = S·X must have, as in the
    // antisymmetric bilinear case
    return detail::cayley_sample_impl(f.gram, seed, adj, true, 5, 32);
}

}  // namespace realforms
