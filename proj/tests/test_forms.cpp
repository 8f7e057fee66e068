#include "doctest.h"

#include "oracles.hpp"
#include "realforms/forms.hpp"
#include "realforms/lcg.hpp"
#include "realforms/structured.hpp"

using namespace realforms;

namespace {

ExactMatrix<Rational> diag(std::initializer_list<Rational> entries) {
    ExactMatrix<Rational> m(entries.size(), entries.size(), Rational(0));
    std::size_t i = 0;
    for (const auto& e : entries) {
        m(i, i) = e;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("signature index frozen values") {
    CHECK(signature_index(QuadraticForm(diag({Rational(1), Rational(-1), Rational(-1)}))) == 1);
    CHECK(signature_index(QuadraticForm(diag({Rational(2), Rational(3), Rational(5),
                                              Rational(-7)}))) == 3);

    // hermitian [[0, i], [-i, 0]]: index 1, pivots 2 and -1/2
    ExactMatrix<GaussRational> h(2, 2, GaussRational());
    h(0, 1) = GaussRational::i();
    h(1, 0) = -GaussRational::i();
    CHECK(signature_index(HermitianForm(h)) == 1);
    auto d = congruence_diagonalize(h);
    CHECK(d.diagonal == std::vector<Rational>{Rational(2), Rational(-1, 2)});
}

TEST_CASE("degenerate forms are rejected with rank report") {
    auto gram = diag({Rational(1), Rational(0), Rational(-2)});
    CHECK_THROWS_WITH_AS(signature_index(QuadraticForm(gram)),
                         "signature_index(quadratic): degenerate form, rank 2 < 3",
                         std::domain_error);
}

TEST_CASE("signature agrees with the characteristic-polynomial oracle") {
    Lcg64 rng(17);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 4;
        auto raw = random_matrix<Rational>(rng, n, n);
        auto sym = raw + raw.transposed();
        auto d = congruence_diagonalize(sym);
        if (d.rank != static_cast<int>(n)) continue;
        CHECK(d.positives == testing::signature_by_charpoly(sym));

        auto rawg = random_matrix<GaussRational>(rng, n, n);
        auto herm = rawg + star(rawg);
        auto dh = congruence_diagonalize(herm);
        if (dh.rank != static_cast<int>(n)) continue;
        CHECK(dh.positives == testing::signature_by_charpoly(herm));
    }
}

TEST_CASE("equivalence by rank and index") {
    FormSpec a = QuadraticForm(diag({Rational(1), Rational(-1)}));
    ExactMatrix<Rational> offdiag(2, 2, Rational(0));
    offdiag(0, 1) = Rational(1);
    offdiag(1, 0) = Rational(1);
    FormSpec b = QuadraticForm(offdiag);
    CHECK(equivalent(a, b));
    FormSpec c = QuadraticForm(diag({Rational(1), Rational(1)}));
    CHECK(!equivalent(a, c));
    CHECK_THROWS_AS(equivalent(a, FormSpec(HermitianForm(signature_matrix_gauss(2, 1)))),
                    std::invalid_argument);

    Lcg64 rng(23);
    for (int t = 0; t < 15; ++t) {
        int n = 2 + t % 3;
        auto base = signature_matrix<Rational>(n, t % (n + 1));
        auto u = random_invertible<Rational>(rng, n);
        FormSpec twisted = QuadraticForm(u.transposed() * base * u);
        CHECK(equivalent(FormSpec(QuadraticForm(base)), twisted));
    }
}

TEST_CASE("signature invariance under congruence") {
    Lcg64 rng(29);
    for (int t = 0; t < 15; ++t) {
        int n = 2 + t % 3;
        int p = t % (n + 1);
        auto u = random_invertible<GaussRational>(rng, n);
        auto gram = star(u) * signature_matrix_gauss(n, p) * u;
        CHECK(signature_index(HermitianForm(gram)) == p);
    }
}

TEST_CASE("pfister expansion frozen values") {
    auto all_one = pfister3_expand(Pfister3(Rational(1), Rational(1), Rational(1)));
    for (int i = 0; i < 8; ++i) CHECK(all_one.gram(i, i) == Rational(1));

    auto alt = pfister3_expand(Pfister3(Rational(-1), Rational(1), Rational(1)));
    Rational expect_alt[8] = {Rational(1), Rational(-1), Rational(1), Rational(-1),
                              Rational(1), Rational(-1), Rational(1), Rational(-1)};
    for (int i = 0; i < 8; ++i) CHECK(alt.gram(i, i) == expect_alt[i]);

    auto mixed = pfister3_expand(Pfister3(Rational(2), Rational(3), Rational(-5)));
    Rational expect_mixed[8] = {Rational(1),  Rational(2),   Rational(3),
                                Rational(6),  Rational(-5),  Rational(-10),
                                Rational(-15), Rational(-30)};
    for (int i = 0; i < 8; ++i) CHECK(mixed.gram(i, i) == expect_mixed[i]);

    CHECK_THROWS_AS(Pfister3(Rational(0), Rational(1), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("pfister classes: only the all-positive pattern is definite") {
    CHECK(pfister3_class(Pfister3(Rational(1), Rational(1), Rational(1))) ==
          PfisterClass::definite);
    CHECK(pfister3_class(Pfister3(Rational(-1), Rational(1), Rational(1))) ==
          PfisterClass::split);
    for (int mask = 0; mask < 8; ++mask) {
        Pfister3 p(Rational(mask & 1 ? 1 : -1), Rational(mask & 2 ? 1 : -1),
                   Rational(mask & 4 ? 1 : -1));
        auto d = congruence_diagonalize(pfister3_expand(p).gram);
        int sig = d.positives - d.negatives;
        CHECK((sig == 8 || sig == 0));
        CHECK(pfister3_class(p) ==
              (mask == 7 ? PfisterClass::definite : PfisterClass::split));
    }
}

TEST_CASE("zero-diagonal pivot handling terminates and is exact") {
    // antidiagonal symmetric matrices of several sizes
    for (int n = 2; n <= 5; ++n) {
        ExactMatrix<Rational> m(n, n, Rational(0));
        for (int i = 0; i < n; ++i) m(i, n - 1 - i) = Rational(1);
        auto d = congruence_diagonalize(m);
        CHECK(d.rank == n);
        CHECK(d.positives + d.negatives == n);
        auto check = d.transform.transposed() * m * d.transform;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(check(i, j) == Rational(0));
    }
}
