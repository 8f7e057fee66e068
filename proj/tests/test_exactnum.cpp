#include "doctest.h"

#include "realforms/cyclotomic.hpp"
#include "realforms/gauss_rational.hpp"
#include "realforms/lcg.hpp"
#include "realforms/quaternion.hpp"
#include "realforms/rational.hpp"

using namespace realforms;

TEST_CASE("rational sign and arithmetic") {
    CHECK(rational_sign(Rational(-3, 7)) == -1);
    CHECK(rational_sign(Rational(0)) == 0);
    CHECK(rational_sign(Rational(22, 7) - Rational(3)) == 1);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("gauss conjugation") {
    GaussRational z(Rational(3), Rational(2));
    CHECK(gauss_conj(z) == GaussRational(Rational(3), Rational(-2)));
    CHECK(gauss_conj(GaussRational(5)) == GaussRational(5));
    GaussRational w(Rational(1), Rational(1));
    CHECK(w * gauss_conj(w) == GaussRational(2));
    CHECK(gauss_conj(w) * w == GaussRational(2));
    CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
}

TEST_CASE("quaternion involution") {
    Quaternion x(Rational(1), Rational(2), Rational(3), Rational(4));
    CHECK(quat_sigma(x) == Quaternion(Rational(1), Rational(-2), Rational(-3),
                                      Rational(-4)));
    CHECK(quat_sigma(Quaternion(7)) == Quaternion(7));
    Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(),
               k = Quaternion::unit_k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(quat_sigma(i * j) == quat_sigma(j) * quat_sigma(i));
    CHECK(quat_sigma(k) == -k);
    CHECK(quat_sigma(x) * x == Quaternion(Rational(30)));
    CHECK(x.norm() == Rational(30));
    CHECK(x * x.inverse() == Quaternion(1));
    CHECK(x.inverse() * x == Quaternion(1));
}

TEST_CASE("field axiom spot checks on seeded randoms") {
    Lcg64 rng(42);
    for (int t = 0; t < 50; ++t) {
        Rational a = random_rational(rng), b = random_rational(rng),
                 c = random_rational(rng);
        CHECK((a + b) * c == a * c + b * c);
        GaussRational x = random_gauss(rng), y = random_gauss(rng);
        CHECK(gauss_conj(x * y) == gauss_conj(x) * gauss_conj(y));
        CHECK(gauss_conj(gauss_conj(x)) == x);
        Quaternion u = random_quaternion(rng), v = random_quaternion(rng);
        CHECK(quat_sigma(u * v) == quat_sigma(v) * quat_sigma(u));
        CHECK(quat_sigma(u) * u == Quaternion(u.norm()));
    }
}

TEST_CASE("cyclotomic polynomial values") {
    // Phi_1 = x-1, Phi_2 = x+1, Phi_4 = x^2+1, Phi_12 = x^4-x^2+1
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(cyclotomic_polynomial(4) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0),
                                Rational(1)});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("primitive unity roots") {
    // n = 2: zeta = -1 in the order-4 field
    CycloElement z2 = primitive_unity_root(2);
    CHECK(z2.order() == 4);
    CHECK(z2.is_rational());
    CHECK(z2.rational_value() == Rational(-1));

    // n = 4: zeta = i, zeta * conj(zeta) = 1
    CycloElement z4 = primitive_unity_root(4);
    CHECK(z4 == CycloElement::imaginary_unit(4));
    CHECK(z4 * z4.conj() == CycloElement::from_rational(4, Rational(1)));

    // n = 3: order 3 in the order-12 field
    CycloElement z3 = primitive_unity_root(3);
    CHECK(z3.order() == 12);
    CHECK(has_multiplicative_order(z3, 3));

    for (unsigned n = 1; n <= 12; ++n) {
        CycloElement z = primitive_unity_root(n);
        CHECK(has_multiplicative_order(z, n));
        CHECK(z * z.conj() == CycloElement::from_rational(z.order(), Rational(1)));
    }
}

TEST_CASE("cyclotomic arithmetic is a field") {
    CycloElement z = primitive_unity_root(3);
    CycloElement a = z + z * z;  // zeta + zeta^2 = -1
    CHECK(a == CycloElement::from_rational(12, Rational(-1)));
    CycloElement b = z - CycloElement::from_rational(12, Rational(2));
    CHECK(b * b.inverse() == CycloElement::from_rational(12, Rational(1)));
    CHECK_THROWS_AS(CycloElement(12) + CycloElement(4), std::invalid_argument);
    CHECK_THROWS_AS(CycloElement(8).inverse(), std::domain_error);
}

TEST_CASE("canonical scalar encodings round-trip") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-2).str() == "-2");
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8").str() == "-3/4");
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

    GaussRational g(Rational(3), Rational(-2));
    CHECK(g.str() == "3|-2");
    CHECK(GaussRational::parse(g.str()) == g);

    Quaternion q(Rational(1), Rational(2, 3), Rational(-3), Rational(0));
    CHECK(q.str() == "1|2/3|-3|0");
    CHECK(Quaternion::parse(q.str()) == q);

    CycloElement z = primitive_unity_root(4);
    CHECK(z.str() == "4:0,1");
    CHECK(CycloElement::parse(z.str()) == z);

    Lcg64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Rational r = random_rational(rng, 40);
        CHECK(Rational::parse(r.str()) == r);
        GaussRational gg = random_gauss(rng, 40);
        CHECK(GaussRational::parse(gg.str()) == gg);
        Quaternion qq = random_quaternion(rng, 40);
        CHECK(Quaternion::parse(qq.str()) == qq);
        CHECK(Rational::parse(r.str()).str() == r.str());
    }
}
