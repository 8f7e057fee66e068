#include "doctest.h"

#include "realforms/lcg.hpp"
#include "realforms/quatlin.hpp"
#include "realforms/sampling.hpp"
#include "realforms/structured.hpp"

using namespace realforms;

namespace {

QuatMatrix qscalar(const Quaternion& q) {
    QuatMatrix m(1, 1, q);
    return m;
}

}  // namespace

TEST_CASE("mu embedding frozen values") {
    auto i = GaussRational::i();

    auto mu_i = mu_embed(qscalar(Quaternion::unit_i()));
    CHECK(mu_i(0, 0) == i);
    CHECK(mu_i(1, 1) == -i);
    CHECK(mu_i(0, 1) == GaussRational(0));
    CHECK(mu_i(1, 0) == GaussRational(0));

    CHECK(mu_embed(qscalar(Quaternion(1))).is_identity());

    auto mu_k = mu_embed(qscalar(Quaternion::unit_k()));
    CHECK(mu_k(0, 0) == GaussRational(0));
    CHECK(mu_k(0, 1) == i);
    CHECK(mu_k(1, 0) == i);
    CHECK(mu_k(1, 1) == GaussRational(0));
    CHECK(mu_embed(qscalar(Quaternion::unit_i())) *
              mu_embed(qscalar(Quaternion::unit_j())) ==
          mu_k);
}

TEST_CASE("mu is an exact ring homomorphism") {
    Lcg64 rng(31);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 3;
        auto m = random_matrix<Quaternion>(rng, n, n);
        auto k = random_matrix<Quaternion>(rng, n, n);
        CHECK(mu_embed(m + k) == mu_embed(m) + mu_embed(k));
        CHECK(mu_embed(m * k) == mu_embed(m) * mu_embed(k));
    }
}

TEST_CASE("quaternionic image characterization") {
    Lcg64 rng(37);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + t % 3;
        auto m = random_matrix<Quaternion>(rng, n, n);
        CHECK(in_quaternionic_image(mu_embed(m)));
    }
    CHECK(in_quaternionic_image(
        ExactMatrix<GaussRational>::identity(4, GaussRational(1))));

    ExactMatrix<GaussRational> witness(2, 2, GaussRational());
    witness(0, 0) = GaussRational::i();
    witness(1, 1) = GaussRational::i();
    CHECK(!in_quaternionic_image(witness));

    ExactMatrix<GaussRational> odd(3, 3, GaussRational(1));
    CHECK_THROWS_AS(in_quaternionic_image(odd), std::invalid_argument);
}

TEST_CASE("sigma transpose compatibility") {
    // M = [[I]]: both sides diag(-i, i)
    auto m = qscalar(Quaternion::unit_i());
    auto lhs = mu_embed(sigma_star(m));
    CHECK(lhs(0, 0) == -GaussRational::i());
    CHECK(lhs(1, 1) == GaussRational::i());
    CHECK(sigma_transpose_compat(m));
    CHECK(sigma_transpose_compat(QuatMatrix::identity(2, Quaternion(1))));

    Lcg64 rng(41);
    for (int t = 0; t < 100; ++t) {
        auto r = random_matrix<Quaternion>(rng, 2, 2);
        CHECK(sigma_transpose_compat(r));
    }
}

TEST_CASE("embedded form matrix frozen values") {
    // h = [[1]] -> T = A_2^{-1} = [[0,-1],[1,0]], antisymmetric
    QuatHermitianForm h1(signature_matrix<Quaternion>(1, 1));
    auto t1 = embedded_form_matrix(h1);
    CHECK(t1(0, 0) == GaussRational(0));
    CHECK(t1(0, 1) == GaussRational(-1));
    CHECK(t1(1, 0) == GaussRational(1));
    CHECK(t1.transposed() == -t1);

    // h = [[I]] -> T = [[0,i],[i,0]], symmetric
    QuatMatrix gi(1, 1, Quaternion::unit_i());
    QuatAntiHermitianForm hi(gi);
    auto ti = embedded_form_matrix(hi);
    CHECK(ti(0, 0) == GaussRational(0));
    CHECK(ti(0, 1) == GaussRational::i());
    CHECK(ti(1, 0) == GaussRational::i());
    CHECK(ti.transposed() == ti);
}

TEST_CASE("embedded form transport on seeded samples") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int m = 1 + static_cast<int>(seed) % 2;
        QuatHermitianForm h(signature_matrix<Quaternion>(m, m - (seed % 2)));
        auto t = embedded_form_matrix(h);
        auto sample = cayley_sample(h, seed);
        REQUIRE(sigma_star(sample) * h.gram * sample == h.gram);
        auto n = mu_embed(sample);
        CHECK(n.transposed() * t * n == t);
    }
}

TEST_CASE("quaternionic hermitian canonicalization") {
    // diag(1, -1) -> index 1
    {
        QuatHermitianForm h(signature_matrix<Quaternion>(2, 1));
        auto c = canonicalize_quat_hermitian(h);
        CHECK(c.index == 1);
        CHECK(c.rank == 2);
    }
    // [[0,1],[1,0]] -> index 1, pivots 2 and -1/2
    {
        QuatMatrix g(2, 2, Quaternion());
        g(0, 1) = Quaternion(1);
        g(1, 0) = Quaternion(1);
        QuatHermitianForm h(g);
        auto c = canonicalize_quat_hermitian(h);
        CHECK(c.index == 1);
        CHECK(c.diagonal == std::vector<Rational>{Rational(2), Rational(-1, 2)});
        auto d = sigma_star(c.witness) * g * c.witness;
        CHECK(d(0, 1).is_zero());
        CHECK(d(1, 0).is_zero());
    }
    // diag(2, 3, -5) -> index 2
    {
        QuatMatrix g(3, 3, Quaternion());
        g(0, 0) = Quaternion(2);
        g(1, 1) = Quaternion(3);
        g(2, 2) = Quaternion(Rational(-5));
        auto c = canonicalize_quat_hermitian(QuatHermitianForm(g));
        CHECK(c.index == 2);
    }
    // non-hermitian input rejected at construction
    {
        QuatMatrix g(1, 1, Quaternion::unit_i());
        CHECK_THROWS_AS(QuatHermitianForm{g}, std::invalid_argument);
    }
    // congruence invariance of the index
    Lcg64 rng(43);
    for (int t = 0; t < 15; ++t) {
        int m = 1 + t % 3;
        int p = t % (m + 1);
        auto base = signature_matrix<Quaternion>(m, p);
        auto u = random_invertible<Quaternion>(rng, m);
        QuatHermitianForm h(sigma_star(u) * base * u);
        CHECK(canonicalize_quat_hermitian(h).index == p);
    }
}

TEST_CASE("quaternionic anti-hermitian canonicalization") {
    // diag(I, I) is already canonical: witness Id
    {
        QuatMatrix g(2, 2, Quaternion());
        g(0, 0) = Quaternion::unit_i();
        g(1, 1) = Quaternion::unit_i();
        auto c = canonicalize_quat_antihermitian(QuatAntiHermitianForm(g));
        CHECK(c.witness.is_identity());
        CHECK(c.rank == 2);
    }
    // [[0,J],[J,0]] is anti-hermitian; congruence yields pure diagonal
    {
        QuatMatrix g(2, 2, Quaternion());
        g(0, 1) = Quaternion::unit_j();
        g(1, 0) = Quaternion::unit_j();
        auto c = canonicalize_quat_antihermitian(QuatAntiHermitianForm(g));
        CHECK(c.rank == 2);
        for (const auto& d : c.diagonal) {
            CHECK(d.is_pure());
            CHECK(!d.is_zero());
        }
        auto diag = sigma_star(c.witness) * g * c.witness;
        CHECK(diag(0, 1).is_zero());
        CHECK(diag(1, 0).is_zero());
    }
    // [[0,J],[-J,0]] is sigma-hermitian, not anti-hermitian: rejected
    {
        QuatMatrix g(2, 2, Quaternion());
        g(0, 1) = Quaternion::unit_j();
        g(1, 0) = -Quaternion::unit_j();
        CHECK_THROWS_AS(QuatAntiHermitianForm{g}, std::invalid_argument);
    }
    // diag(3I + 4J): preserved, and the norm-25 entry rotates onto 5I
    {
        Quaternion v(Rational(0), Rational(3), Rational(4), Rational(0));
        QuatMatrix g(1, 1, v);
        auto c = canonicalize_quat_antihermitian(QuatAntiHermitianForm(g));
        CHECK(c.diagonal == std::vector<Quaternion>{v});
        Quaternion q = rotate_pure_to_axis(v);
        Quaternion rotated = q * v * q.inverse();
        CHECK(rotated == Quaternion(Rational(0), Rational(5), Rational(0), Rational(0)));
    }
    // rotation helper rejects non-square norms
    CHECK_THROWS_AS(rotate_pure_to_axis(Quaternion(Rational(0), Rational(1),
                                                   Rational(1), Rational(0))),
                    std::domain_error);
    CHECK_THROWS_AS(rotate_pure_to_axis(Quaternion(1)), std::invalid_argument);
    // -r·I edge: rotated by an orthogonal pure unit
    {
        Quaternion v(Rational(0), Rational(-5), Rational(0), Rational(0));
        Quaternion q = rotate_pure_to_axis(v);
        CHECK(q * v * q.inverse() ==
              Quaternion(Rational(0), Rational(5), Rational(0), Rational(0)));
    }
}

TEST_CASE("sigma_star anti-multiplicativity") {
    Lcg64 rng(47);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 3;
        auto m = random_matrix<Quaternion>(rng, n, n);
        auto k = random_matrix<Quaternion>(rng, n, n);
        CHECK(sigma_star(m * k) == sigma_star(k) * sigma_star(m));
        CHECK(sigma_star(sigma_star(m)) == m);
    }
}
