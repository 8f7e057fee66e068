#include "doctest.h"

#include "oracles.hpp"
#include "realforms/exact_matrix.hpp"
#include "realforms/forms.hpp"
#include "realforms/lcg.hpp"
#include "realforms/sampling.hpp"
#include "realforms/structured.hpp"

using namespace realforms;

namespace {

ExactMatrix<GaussRational> gmat(std::initializer_list<std::initializer_list<GaussRational>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    ExactMatrix<GaussRational> m(r, c, GaussRational());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("structured matrices") {
    auto ip = signature_matrix<Rational>(2, 1);
    CHECK(ip(0, 0) == Rational(1));
    CHECK(ip(1, 1) == Rational(-1));
    CHECK(ip(0, 1) == Rational(0));

    auto an = symplectic_unit_matrix<Rational>(2);
    CHECK(an(0, 1) == Rational(1));
    CHECK(an(1, 0) == Rational(-1));
    CHECK_THROWS_AS(symplectic_unit_matrix<Rational>(3), std::invalid_argument);

    auto jp = signature_root_matrix(3, 1);
    CHECK(jp(0, 0) == GaussRational(1));
    CHECK(jp(1, 1) == GaussRational::i());
    CHECK(jp * jp == signature_matrix_gauss(3, 1));

    auto built = build_structured({StructuredTag::symplectic_unit, 4, 0});
    CHECK(built == symplectic_unit_matrix<GaussRational>(4));
}

TEST_CASE("symplectic unit identities") {
    for (int n = 2; n <= 10; n += 2) {
        auto a = symplectic_unit_matrix<Rational>(n);
        auto id = ExactMatrix<Rational>::identity(n, Rational(1));
        CHECK(a * a == -id);
        CHECK(a.transposed() == -a);
        CHECK(a.inverse() == -a);
        CHECK(exact_det(a) == Rational(1));
    }
}

TEST_CASE("signature root identities") {
    for (int n = 1; n <= 8; ++n)
        for (int q = 0; q <= n; ++q) {
            auto jq = signature_root_matrix(n, q);
            auto iq = signature_matrix_gauss(n, q);
            CHECK(jq * iq * jq == ExactMatrix<GaussRational>::identity(n, GaussRational(1)));
            CHECK(star(jq) * jq == ExactMatrix<GaussRational>::identity(n, GaussRational(1)));
        }
    // star(J_p)·I_p·J_p = I_p (conjugation kills the i's modulus-wise); the
    // identity-valued product is the un-starred J_q·I_q·J_q above
    auto jp = signature_root_matrix(4, 2);
    CHECK(star(jp) * signature_matrix_gauss(4, 2) * jp == signature_matrix_gauss(4, 2));
}

TEST_CASE("exact determinant frozen values") {
    CHECK(exact_det(ExactMatrix<Rational>::identity(3, Rational(1))) == Rational(1));
    CHECK(exact_det(symplectic_unit_matrix<Rational>(4)) == Rational(1));
    CHECK(exact_det(signature_matrix<Rational>(5, 2)) == Rational(-1));
}

TEST_CASE("determinant agrees with cofactor oracle and is multiplicative") {
    Lcg64 rng(11);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + t % 4;
        auto m = random_matrix<Rational>(rng, n, n);
        CHECK(exact_det(m) == testing::det_by_cofactor(m));
        auto k = random_matrix<Rational>(rng, n, n);
        CHECK(exact_det(m * k) == exact_det(m) * exact_det(k));
        auto mg = random_matrix<GaussRational>(rng, n, n);
        CHECK(exact_det(mg) == testing::det_by_cofactor(mg));
    }
    // determinant over the cyclotomic scalar
    CycloElement z = primitive_unity_root(3);
    ExactMatrix<CycloElement> zm(2, 2, CycloElement(12));
    zm(0, 0) = z;
    zm(1, 1) = z;
    CHECK(exact_det(zm) == z * z);
    CHECK(exact_det(zm * zm) == exact_det(zm) * exact_det(zm));
}

TEST_CASE("star operator") {
    auto i = GaussRational::i();
    CHECK(star(gmat({{i}})) == gmat({{-i}}));
    CHECK(star(gmat({{GaussRational(1), i}, {GaussRational(0), GaussRational(1)}})) ==
          gmat({{GaussRational(1), GaussRational(0)}, {-i, GaussRational(1)}}));
    Lcg64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix<GaussRational>(rng, 3, 3);
        auto k = random_matrix<GaussRational>(rng, 3, 3);
        CHECK(star(star(m)) == m);
        CHECK(star(m * k) == star(k) * star(m));
    }
}

TEST_CASE("inverse round trip and singular rejection") {
    Lcg64 rng(5);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + t % 4;
        auto m = random_invertible<Rational>(rng, n);
        CHECK((m * m.inverse()).is_identity());
        CHECK((m.inverse() * m).is_identity());
        auto q = random_invertible<Quaternion>(rng, n);
        CHECK((q * q.inverse()).is_identity());
        CHECK((q.inverse() * q).is_identity());
    }
    ExactMatrix<Rational> sing(2, 2, Rational(1));
    CHECK(!sing.try_inverse());
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("cayley transform frozen example") {
    // S = Id(2), X = [[0,1],[-1,0]] -> M = [[0,-1],[1,0]]
    auto x = symplectic_unit_matrix<Rational>(2);
    auto m = cayley_transform(x);
    ExactMatrix<Rational> expected(2, 2, Rational(0));
    expected(0, 1) = Rational(-1);
    expected(1, 0) = Rational(1);
    CHECK(m == expected);
    CHECK(m.transposed() * m == ExactMatrix<Rational>::identity(2, Rational(1)));

    // X = 0 -> M = Id
    ExactMatrix<Rational> zero(3, 3, Rational(0));
    CHECK(cayley_transform(zero).is_identity());
}

TEST_CASE("cayley samples satisfy membership exactly") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        // indefinite orthogonal: S = I_1 in size 2
        auto s = signature_matrix<Rational>(2, 1);
        auto m = cayley_sample(QuadraticForm(s), seed);
        CHECK(m.transposed() * s * m == s);
        CHECK(exact_det(m) == Rational(1));

        // unitary
        auto sh = signature_matrix_gauss(3, 2);
        auto mh = cayley_sample(HermitianForm(sh), seed);
        CHECK(star(mh) * sh * mh == sh);
        CHECK(exact_det(mh) == GaussRational(1));

        // symplectic
        auto a = symplectic_unit_matrix<Rational>(4);
        auto sp = (-a) * signature_matrix<Rational>(4, 2);
        auto msp = cayley_sample_bilinear(sp, seed);
        CHECK(msp.transposed() * sp * msp == sp);
        CHECK(exact_det(msp) == Rational(1));

        // quaternionic hermitian
        auto sq = signature_matrix<Quaternion>(2, 1);
        auto mq = cayley_sample(QuatHermitianForm(sq), seed);
        CHECK(sigma_star(mq) * sq * mq == sq);
    }
}

TEST_CASE("cayley sampling is deterministic per seed") {
    auto s = signature_matrix<Rational>(3, 2);
    auto a = cayley_sample(QuadraticForm(s), 99);
    auto b = cayley_sample(QuadraticForm(s), 99);
    CHECK(a == b);
    auto c = cayley_sample(QuadraticForm(s), 100);
    CHECK(a != c);
}

TEST_CASE("cayley sample rejects singular gram") {
    ExactMatrix<Rational> sing(2, 2, Rational(0));
    CHECK_THROWS_AS(cayley_sample_bilinear(sing, 1), std::domain_error);
}
