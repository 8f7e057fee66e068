#include "realforms/verify_suites.hpp"

#include "realforms/classify.hpp"
#include "realforms/cohomology.hpp"
#include "realforms/forms.hpp"
#include "realforms/lcg.hpp"
#include "realforms/quatlin.hpp"
#include "realforms/sampling.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace realforms {

namespace {

struct Checker {
    SuiteResult r;

    explicit Checker(std::string name) { r.name = std::move(name); }

    void expect(bool ok, const std::string& counterexample) {
        r.cases++;
        if (!ok) {
            r.failures++;
            if (r.first_counterexample.empty()) r.first_counterexample = counterexample;
        }
    }
};

std::string desc(const std::string& what, int a, int b = -1, int c = -1) {
    std::ostringstream os;
    os << what << " (";
    os << a;
    if (b >= 0) os << "," << b;
    if (c >= 0) os << "," << c;
    os << ")";
    return os.str();
}

// ---- exactnum ----------------------------------------------------------

SuiteResult suite_field_axioms(const VerifyOptions& o) {
    Checker ck("field-axioms");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        Rational a = random_rational(rng), b = random_rational(rng),
                 c = random_rational(rng);
        ck.expect((a + b) + c == a + (b + c), desc("rational associativity", t));
        ck.expect(a * (b + c) == a * b + a * c, desc("rational distributivity", t));
        if (!a.is_zero())
            ck.expect(a * a.inverse() == Rational(1), desc("rational inverse", t));
        GaussRational x = random_gauss(rng), y = random_gauss(rng),
                      z = random_gauss(rng);
        ck.expect((x * y) * z == x * (y * z), desc("gauss associativity", t));
        ck.expect(x * (y + z) == x * y + x * z, desc("gauss distributivity", t));
        if (!x.is_zero())
            ck.expect(x * x.inverse() == GaussRational(1), desc("gauss inverse", t));
    }
    return ck.r;
}

SuiteResult suite_gauss_conj(const VerifyOptions& o) {
    Checker ck("gauss-conj");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        GaussRational z = random_gauss(rng), w = random_gauss(rng);
        ck.expect(gauss_conj(gauss_conj(z)) == z, desc("involution", t));
        ck.expect(gauss_conj(z * w) == gauss_conj(z) * gauss_conj(w),
                  desc("multiplicativity", t));
        ck.expect((gauss_conj(z) == z) == z.is_real(), desc("fixed field", t));
    }
    return ck.r;
}

SuiteResult suite_quat_sigma(const VerifyOptions& o) {
    Checker ck("quat-sigma");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        Quaternion x = random_quaternion(rng), y = random_quaternion(rng);
        ck.expect(quat_sigma(quat_sigma(x)) == x, desc("involution", t));
        ck.expect(quat_sigma(x * y) == quat_sigma(y) * quat_sigma(x),
                  desc("anti-multiplicativity", t));
        ck.expect(quat_sigma(x) * x == Quaternion(x.norm()), desc("norm identity", t));
        ck.expect((quat_sigma(x) == x) == x.is_central(), desc("fixed center", t));
    }
    return ck.r;
}

SuiteResult suite_unity_roots(const VerifyOptions&) {
    Checker ck("unity-roots");
    for (unsigned n = 1; n <= 12; ++n) {
        CycloElement z = primitive_unity_root(n);
        ck.expect(has_multiplicative_order(z, n), desc("exact order", (int)n));
        CycloElement one = CycloElement::from_rational(z.order(), Rational(1));
        ck.expect(z * z.conj() == one, desc("unit modulus", (int)n));
    }
    return ck.r;
}

// ---- matrix ------------------------------------------------------------

SuiteResult suite_structured_identities(const VerifyOptions& o) {
    Checker ck("structured-identities");
    for (int n = 2; n <= std::max(o.max_n, 10); n += 2) {
        auto a = symplectic_unit_matrix<Rational>(n);
        auto id = ExactMatrix<Rational>::identity(n, Rational(1));
        ck.expect(a * a == -id, desc("A^2 = -Id", n));
        ck.expect(a.transposed() == -a, desc("A^t = -A", n));
        ck.expect(a.inverse() == -a, desc("A^-1 = -A", n));
    }
    for (int n = 1; n <= o.max_n; ++n)
        for (int q = 0; q <= n; ++q) {
            auto jq = signature_root_matrix(n, q);
            auto iq = signature_matrix_gauss(n, q);
            auto id = ExactMatrix<GaussRational>::identity(n, GaussRational(1));
            ck.expect(jq * iq * jq == id, desc("J_q I_q J_q = Id", n, q));
            ck.expect(star(jq) * jq == id, desc("star(J) J = Id", n, q));
            ck.expect(jq * jq == iq, desc("J^2 = I", n, q));
        }
    return ck.r;
}

SuiteResult suite_det_multiplicative(const VerifyOptions& o) {
    Checker ck("det-multiplicative");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        std::size_t n = 2 + t % 3;
        auto m = random_matrix<Rational>(rng, n, n);
        auto k = random_matrix<Rational>(rng, n, n);
        ck.expect(exact_det(m * k) == exact_det(m) * exact_det(k),
                  desc("rational det", t));
        auto mg = random_matrix<GaussRational>(rng, n, n);
        auto kg = random_matrix<GaussRational>(rng, n, n);
        ck.expect(exact_det(mg * kg) == exact_det(mg) * exact_det(kg),
                  desc("gauss det", t));
    }
    return ck.r;
}

SuiteResult suite_cayley_membership(const VerifyOptions& o) {
    Checker ck("cayley-membership");
    for (int t = 0; t < std::min(o.samples, 25); ++t) {
        std::uint64_t seed = o.seed + t;
        int n = 2 + t % 3;
        int p = t % (n + 1);
        auto s = signature_matrix<Rational>(n, p);
        auto m = cayley_sample(QuadraticForm(s), seed);
        ck.expect(m.transposed() * s * m == s, desc("orthogonal membership", t));
        ck.expect(exact_det(m) == Rational(1), desc("orthogonal det 1", t));

        auto sh = signature_matrix_gauss(n, p);
        auto mh = cayley_sample(HermitianForm(sh), seed);
        ck.expect(star(mh) * sh * mh == sh, desc("unitary membership", t));
        ck.expect(exact_det(mh) == GaussRational(1), desc("unitary det 1", t));

        int qn = 1 + t % 2;
        auto sq = signature_matrix<Quaternion>(qn, qn);
        auto mq = cayley_sample(QuatHermitianForm(sq), seed);
        ck.expect(sigma_star(mq) * sq * mq == sq, desc("quat membership", t));
        ck.expect(exact_det(mu_embed(mq)) == GaussRational(1),
                  desc("quat embedded det 1", t));
    }
    return ck.r;
}

// ---- quatlin -----------------------------------------------------------

SuiteResult suite_mu_embedding(const VerifyOptions& o) {
    Checker ck("mu-embedding");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        std::size_t n = 1 + t % 3;
        auto m = random_matrix<Quaternion>(rng, n, n);
        auto k = random_matrix<Quaternion>(rng, n, n);
        ck.expect(mu_embed(m + k) == mu_embed(m) + mu_embed(k), desc("additivity", t));
        ck.expect(mu_embed(m * k) == mu_embed(m) * mu_embed(k),
                  desc("multiplicativity", t));
    }
    auto one = ExactMatrix<Quaternion>::identity(2, Quaternion(1));
    ck.expect(mu_embed(one).is_identity(), "unit maps to unit");
    return ck.r;
}

SuiteResult suite_quaternionic_image(const VerifyOptions& o) {
    Checker ck("quaternionic-image");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        std::size_t n = 1 + t % 3;
        auto m = random_matrix<Quaternion>(rng, n, n);
        auto k = random_matrix<Quaternion>(rng, n, n);
        ck.expect(in_quaternionic_image(mu_embed(m)), desc("mu image", t));
        ck.expect(in_quaternionic_image(mu_embed(m) * mu_embed(k)),
                  desc("product stability", t));
    }
    ExactMatrix<GaussRational> witness(2, 2, GaussRational());
    witness(0, 0) = GaussRational::i();
    witness(1, 1) = GaussRational::i();
    ck.expect(!in_quaternionic_image(witness), "diag(i,i) excluded");
    return ck.r;
}

SuiteResult suite_sigma_transpose(const VerifyOptions& o) {
    Checker ck("sigma-transpose");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        std::size_t n = 1 + t % 3;
        auto m = random_matrix<Quaternion>(rng, n, n);
        auto k = random_matrix<Quaternion>(rng, n, n);
        ck.expect(sigma_transpose_compat(m), desc("compatibility", t));
        ck.expect(sigma_star(m * k) == sigma_star(k) * sigma_star(m),
                  desc("anti-multiplicativity", t));
    }
    return ck.r;
}

SuiteResult suite_embedded_forms(const VerifyOptions& o) {
    Checker ck("embedded-forms");
    for (int t = 0; t < std::min(o.samples, 25); ++t) {
        std::uint64_t seed = o.seed + t;
        int m = 1 + t % 2;
        int p = t % (m + 1);
        QuatHermitianForm h(signature_matrix<Quaternion>(m, p));
        auto th = embedded_form_matrix(h);
        ck.expect(th.transposed() == -th, desc("hermitian gives antisymmetric", t));
        auto sample = cayley_sample(h, seed);
        auto n = mu_embed(sample);
        ck.expect(n.transposed() * th * n == th, desc("hermitian transport", t));

        ExactMatrix<Quaternion> anti(m, m, Quaternion());
        for (int i = 0; i < m; ++i) anti(i, i) = Quaternion::unit_i();
        QuatAntiHermitianForm ha(anti);
        auto ta = embedded_form_matrix(ha);
        ck.expect(ta.transposed() == ta, desc("anti-hermitian gives symmetric", t));
        auto sa = cayley_sample(ha, seed);
        auto na = mu_embed(sa);
        ck.expect(na.transposed() * ta * na == ta, desc("anti-hermitian transport", t));
    }
    return ck.r;
}

SuiteResult suite_quat_canonicalization(const VerifyOptions& o) {
    Checker ck("quat-canonicalization");
    Lcg64 rng(o.seed);
    for (int t = 0; t < std::min(o.samples, 25); ++t) {
        int m = 1 + t % 3;
        int p = t % (m + 1);
        auto gram = signature_matrix<Quaternion>(m, p);
        auto u = random_invertible<Quaternion>(rng, m);
        auto twisted = sigma_star(u) * gram * u;
        QuatHermitianForm h(twisted);
        auto canon = canonicalize_quat_hermitian(h);
        ck.expect(canon.index == p, desc("congruence-invariant index", t, m, p));
        auto w = canon.witness;
        auto d = sigma_star(w) * twisted * w;
        bool diag_ok = true;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && !d(i, j).is_zero()) diag_ok = false;
        ck.expect(diag_ok, desc("witness diagonalizes", t, m, p));
    }
    for (int t = 0; t < std::min(o.samples, 10); ++t) {
        int m = 1 + t % 2;
        ExactMatrix<Quaternion> anti(m, m, Quaternion());
        for (int i = 0; i < m; ++i) anti(i, i) = Quaternion::unit_j();
        auto u = random_invertible<Quaternion>(rng, m);
        auto twisted = sigma_star(u) * anti * u;
        QuatAntiHermitianForm h(twisted);
        auto canon = canonicalize_quat_antihermitian(h);
        bool pure_ok = true;
        for (const auto& dd : canon.diagonal)
            if (!dd.is_pure() || dd.is_zero()) pure_ok = false;
        ck.expect(pure_ok, desc("pure diagonal", t, m));
        ck.expect(canon.rank == m, desc("full rank", t, m));
    }
    return ck.r;
}

// ---- forms -------------------------------------------------------------

SuiteResult suite_signature_properties(const VerifyOptions& o) {
    Checker ck("signature-properties");
    Lcg64 rng(o.seed);
    for (int t = 0; t < o.samples; ++t) {
        std::size_t n = 2 + t % 3;
        auto u = random_invertible<Rational>(rng, n);
        auto base = signature_matrix<Rational>(static_cast<int>(n),
                                               static_cast<int>(t % (n + 1)));
        auto gram = u.transposed() * base * u;
        auto d = congruence_diagonalize(gram);
        ck.expect(d.positives + d.negatives == static_cast<int>(n),
                  desc("positives+negatives=rank", t));
        ck.expect(d.positives == static_cast<int>(t % (n + 1)),
                  desc("congruence invariance", t));
        auto wt = d.transform;
        auto diag = wt.transposed() * gram * wt;
        bool off_zero = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !diag(i, j).is_zero()) off_zero = false;
        ck.expect(off_zero, desc("witness diagonalizes", t));

        auto ug = random_invertible<GaussRational>(rng, n);
        auto hbase = signature_matrix_gauss(static_cast<int>(n),
                                            static_cast<int>(t % (n + 1)));
        auto hgram = star(ug) * hbase * ug;
        ck.expect(signature_index(HermitianForm(hgram)) ==
                      static_cast<int>(t % (n + 1)),
                  desc("hermitian congruence invariance", t));
    }
    // B_q·I_p has index exactly q on parity-matched pairs.
    for (int n = 1; n <= o.max_n; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = p % 2; q <= n; q += 2) {
                auto b = signature_matrix_gauss(n, q) * signature_matrix_gauss(n, p);
                auto h = b * signature_matrix_gauss(n, p);
                ck.expect(signature_index(HermitianForm(h)) == q,
                          desc("B_q I_p index", n, p, q));
            }
    return ck.r;
}

SuiteResult suite_pfister(const VerifyOptions&) {
    Checker ck("pfister");
    for (int mask = 0; mask < 8; ++mask) {
        Rational a(mask & 1 ? 1 : -1), b(mask & 2 ? 1 : -1), c(mask & 4 ? 1 : -1);
        auto cls = pfister3_class(Pfister3(a, b, c));
        bool all_pos = (mask == 7);
        ck.expect(cls == (all_pos ? PfisterClass::definite : PfisterClass::split),
                  desc("sign pattern", mask));
    }
    std::vector<Rational> heights;
    for (int num = -3; num <= 3; ++num)
        for (int den = 1; den <= 3; ++den) {
            if (num == 0) continue;
            Rational r(num, den);
            if (std::find(heights.begin(), heights.end(), r) == heights.end())
                heights.push_back(r);
        }
    for (const auto& a : heights)
        for (const auto& b : heights)
            for (const auto& c : heights) {
                auto d = congruence_diagonalize(pfister3_expand(Pfister3(a, b, c)).gram);
                int sig = d.positives - d.negatives;
                bool all_pos = a.sign() > 0 && b.sign() > 0 && c.sign() > 0;
                ck.expect(sig == (all_pos ? 8 : 0),
                          "triple " + a.str() + "," + b.str() + "," + c.str());
                ck.expect(pfister3_class(Pfister3(a, b, c)) ==
                              (all_pos ? PfisterClass::definite : PfisterClass::split),
                          "class " + a.str() + "," + b.str() + "," + c.str());
            }
    return ck.r;
}

// ---- cohomology --------------------------------------------------------

SuiteResult suite_twist_identities(const VerifyOptions& o) {
    Checker ck("twist-identities");
    for (int n = 1; n <= o.max_n; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                auto d = twist_matrix(n, p, q);
                auto ip = signature_matrix_gauss(n, p);
                auto iq = signature_matrix_gauss(n, q);
                ck.expect(d.transposed() * iq * d == ip, desc("D^t I_q D = I_p", n, p, q));
                ck.expect(star(d) * ip * d == ip, desc("star(D) I_p D = I_p", n, p, q));
                Cocycle x{ConjAction::unitary_twist(n, p), iq * ip};
                ck.expect(verify_cocycle(x), desc("B_q c(B_q) = Id", n, p, q));
            }
    return ck.r;
}

SuiteResult suite_rep_cocycles(const VerifyOptions& o) {
    Checker ck("rep-cocycles");
    for (int n = 1; n <= o.max_n; ++n)
        for (int p = 0; p <= n; ++p) {
            std::set<int> seen_su, seen_so;
            for (int q = p % 2; q <= n; q += 2) {
                auto su = rep_cocycle(RepFamily::special_unitary, n, p, q);
                auto so = rep_cocycle(RepFamily::special_orthogonal, n, p, q);
                ck.expect(verify_cocycle(su), desc("su rep verifies", n, p, q));
                ck.expect(verify_cocycle(so), desc("so rep verifies", n, p, q));
                int isu = cocycle_index(su);
                int iso = cocycle_index(so, p);
                ck.expect(isu == q, desc("su rep index", n, p, q));
                ck.expect(iso == q, desc("so rep index", n, p, q));
                seen_su.insert(isu);
                seen_so.insert(iso);
            }
            int expected = 0;
            for (int q = p % 2; q <= n; q += 2) ++expected;
            ck.expect(static_cast<int>(seen_su.size()) == expected,
                      desc("su reps pairwise distinct", n, p));
            ck.expect(static_cast<int>(seen_so.size()) == expected,
                      desc("so reps pairwise distinct", n, p));
        }
    int quat_max = std::min(o.max_n, 4);
    for (int n = 1; n <= quat_max; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                auto x = rep_cocycle(RepFamily::quaternion_hermitian, n, p, q);
                ck.expect(verify_cocycle(x), desc("quat rep verifies", n, p, q));
                ck.expect(cocycle_index(x, p) == q, desc("quat rep index", n, p, q));
            }
    return ck.r;
}

SuiteResult suite_hilbert90(const VerifyOptions& o) {
    Checker ck("hilbert90");
    for (int t = 0; t < o.samples; ++t) {
        std::uint64_t seed = o.seed + t;
        Lcg64 rng(seed * 977 + 1);
        // plain action coboundary
        int n = 2 + t % 3;
        auto m = random_invertible<GaussRational>(rng, n);
        Cocycle xp{ConjAction::plain(n), m.inverse() * conj(m)};
        ck.expect(verify_cocycle(xp), desc("plain coboundary is cocycle", t));
        auto p = hilbert90_solve(xp, seed);
        ck.expect(p * xp.action.apply(p).inverse() == xp.B,
                  desc("plain substitution", t));
        // quaternion twist coboundary
        int nq = 2 + 2 * (t % 2);
        auto action = ConjAction::quaternion_twist(nq);
        auto mq = random_invertible<GaussRational>(rng, nq);
        Cocycle xq{action, mq.inverse() * action.apply(mq)};
        ck.expect(verify_cocycle(xq), desc("twisted coboundary is cocycle", t));
        auto pq = hilbert90_solve(xq, seed);
        ck.expect(pq * action.apply(pq).inverse() == xq.B,
                  desc("twisted substitution", t));
    }
    return ck.r;
}

SuiteResult suite_sl_class(const VerifyOptions& o) {
    Checker ck("sl-class");
    // +1 on determinant-one coboundaries
    for (int t = 0; t < std::min(o.samples, 25); ++t) {
        std::uint64_t seed = o.seed + t;
        Lcg64 rng(seed * 1277 + 3);
        int n = 2 + 2 * (t % 2);
        auto action = ConjAction::quaternion_twist(n);
        auto m = random_invertible<GaussRational>(rng, n);
        // scale a column so det m is real, making the coboundary land in SL
        GaussRational dm = exact_det(m);
        for (int i = 0; i < n; ++i) m(i, 0) = m(i, 0) * dm.conj();
        Cocycle x{action, m.inverse() * action.apply(m)};
        ck.expect(exact_det(x.B) == GaussRational(1), desc("coboundary in SL", t));
        ck.expect(sl_quaternionic_class(x, seed) == 1, desc("coboundary trivial", t));
    }
    // -1 on the root-of-unity cocycles
    {
        auto mid = GaussRational(-1) *
                   ExactMatrix<GaussRational>::identity(2, GaussRational(1));
        Cocycle x{ConjAction::quaternion_twist(2), mid};
        ck.expect(sl_quaternionic_class(x, o.seed) == -1, "zeta=-1, n=2 nontrivial");
        auto iid = GaussRational::i() *
                   ExactMatrix<GaussRational>::identity(4, GaussRational(1));
        Cocycle y{ConjAction::quaternion_twist(4), iid};
        ck.expect(sl_quaternionic_class(y, o.seed) == -1, "zeta=i, n=4 nontrivial");
        // stability across seeds
        for (int s = 0; s < 10; ++s) {
            ck.expect(sl_quaternionic_class(x, o.seed + 17 * s + 1) == -1,
                      desc("seed stability -1", s));
            Cocycle triv{ConjAction::quaternion_twist(2),
                         ExactMatrix<GaussRational>::identity(2, GaussRational(1))};
            ck.expect(sl_quaternionic_class(triv, o.seed + 17 * s + 1) == 1,
                      desc("seed stability +1", s));
        }
    }
    return ck.r;
}

SuiteResult suite_det_positivity(const VerifyOptions& o) {
    Checker ck("det-positivity");
    int made = 0;
    std::uint64_t seed = o.seed;
    while (made < o.samples) {
        Lcg64 rng(seed++);
        int n = 2 + 2 * (made % 3);
        auto action = ConjAction::quaternion_twist(n);
        auto nmat = random_matrix<GaussRational>(rng, n, n);
        auto m = nmat + action.apply(nmat);
        if (!m.try_inverse()) continue;  // resample to invertibility
        ++made;
        ck.expect(action.apply(m) == m, desc("fixed by twist", made));
        GaussRational d = exact_det(m);
        ck.expect(d.is_real() && d.re().sign() > 0, desc("det positive", made));
    }
    return ck.r;
}

SuiteResult suite_so_transport(const VerifyOptions& o) {
    Checker ck("so-transport");
    int made = 0;
    for (int t = 0; made < std::min(o.samples, 25); ++t) {
        int n = 2 + t % std::max(1, o.max_n - 1);
        int p = t % (n + 1);
        int q = p % 2 + 2 * (t % (1 + (n - p % 2) / 2));
        if (q > n) continue;
        ++made;
        auto s = signature_matrix<Rational>(n, p);
        auto m = cayley_sample(QuadraticForm(s), o.seed + t);
        auto d = twist_matrix(n, p, q);
        auto nmat = d * to_gauss(m) * d.inverse();
        auto iq = signature_matrix_gauss(n, q);
        ck.expect(nmat.transposed() * iq * nmat == iq,
                  desc("conjugate lands in O(I_q)", n, p, q));
    }
    return ck.r;
}

SuiteResult suite_symplectic_transport(const VerifyOptions& o) {
    Checker ck("symplectic-transport");
    int made = 0;
    for (int t = 0; made < std::min(o.samples, 25); ++t) {
        int n = 1 + t % 3;  // quaternionic size
        int p = t % (n + 1);
        int q = (t / 2) % (n + 1);
        ++made;
        auto a = symplectic_unit_matrix<Rational>(2 * n);
        auto sp = (-a) * signature_matrix<Rational>(2 * n, 2 * p);
        auto sq = (-a) * signature_matrix<Rational>(2 * n, 2 * q);
        auto m = cayley_sample_bilinear(sp, o.seed + t);
        ck.expect(m.transposed() * sp * m == sp, desc("sample preserves form", n, p, q));
        auto d = twist_matrix(2 * n, 2 * p, 2 * q);
        auto pm = d * to_gauss(m) * d.inverse();
        auto sqg = to_gauss(sq);
        ck.expect(pm.transposed() * sqg * pm == sqg,
                  desc("conjugate preserves twisted form", n, p, q));
    }
    return ck.r;
}

// ---- classify ----------------------------------------------------------

int closed_form_count(const GroupDescriptor& g) {
    switch (g.family) {
        case GroupFamily::sl_k:
        case GroupFamily::sp_k:
        case GroupFamily::su_h_antihermitian:
            return 1;
        case GroupFamily::sl_h:
            return 2;
        case GroupFamily::su:
            return (g.n % 2 == 1 || g.p % 2 == 0) ? g.n / 2 + 1 : g.n / 2;
        case GroupFamily::so_odd:
            return (g.n + 1) / 2;
        case GroupFamily::su_h_hermitian:
            return g.n + 1;
        case GroupFamily::so_even:
            return g.p % 2 == 0 ? g.n / 2 + 1 : g.n / 2;
        case GroupFamily::g2:
            return 2;
        case GroupFamily::f4:
        case GroupFamily::e8:
            return 3;
    }
    return -1;
}

int enumeration_count(const GroupDescriptor& g) {
    // brute-force count of admissible labels
    switch (g.family) {
        case GroupFamily::su:
        case GroupFamily::so_odd:
        case GroupFamily::so_even: {
            int c = 0;
            for (int q = 0; q <= g.n; ++q)
                if ((q - g.p) % 2 == 0) ++c;
            return c;
        }
        case GroupFamily::su_h_hermitian: {
            int c = 0;
            for (int q = 0; q <= g.n; ++q) ++c;
            return c;
        }
        default:
            return closed_form_count(g);
    }
}

SuiteResult suite_counts(const VerifyOptions& o) {
    Checker ck("counts");
    auto check_group = [&](const GroupDescriptor& g, const std::string& what) {
        auto r = classify(g);
        ck.expect(r.count == closed_form_count(g), what + " closed form");
        ck.expect(r.count == enumeration_count(g), what + " enumeration");
        ck.expect(r.count == static_cast<int>(r.classes.size()), what + " list length");
    };
    for (int n = 2; n <= o.max_n; ++n) check_group(make_sl(n), desc("sl_k", n));
    for (int m = 1; m <= o.max_n; ++m) check_group(make_sl_h(m), desc("sl_h", m));
    for (int n = 1; n <= o.max_n; ++n)
        for (int p = 0; p <= n; ++p) check_group(make_su(n, p), desc("su", n, p));
    for (int n = 1; n <= o.max_n; n += 2)
        for (int p = 0; p <= n; ++p) check_group(make_so(n, p), desc("so_odd", n, p));
    for (int n = 1; n <= o.max_n; ++n) check_group(make_sp(n), desc("sp_k", n));
    for (int n = 1; n <= o.max_n; ++n)
        for (int p = 0; p <= n; ++p)
            check_group(make_su_h(n, p), desc("su_h_hermitian", n, p));
    for (int n = 2; n <= o.max_n; n += 2)
        for (int p = 0; p <= n; ++p) check_group(make_so(n, p), desc("so_even", n, p));
    for (int m = 1; m <= o.max_n; ++m)
        check_group(make_su_h_anti(m), desc("su_h_antihermitian", m));
    check_group(make_g2(kG2Compact), "g2 compact");
    check_group(make_g2(kG2Split), "g2 split");
    for (int f = 0; f < 3; ++f) {
        check_group(make_f4(f), desc("f4", f));
        check_group(make_e8(f), desc("e8", f));
    }
    return ck.r;
}

SuiteResult suite_cohomology_consistency(const VerifyOptions& o) {
    Checker ck("cohomology-consistency");
    int bound = std::min(o.max_n, 6);
    for (int n = 1; n <= bound; ++n)
        for (int p = 0; p <= n; ++p) {
            // labels of classify coincide with indexes of representatives
            auto check_family = [&](const GroupDescriptor& g, RepFamily fam) {
                auto r = classify(g);
                std::set<std::string> labels;
                for (const auto& c : r.classes) labels.insert(c.label);
                std::set<std::string> indexes;
                int cp = r.input.p;
                for (int q = (fam == RepFamily::quaternion_hermitian) ? 0 : cp % 2;
                     q <= n;
                     q += (fam == RepFamily::quaternion_hermitian) ? 1 : 2) {
                    auto x = rep_cocycle(fam, n, cp, q);
                    int idx = fam == RepFamily::special_unitary
                                  ? cocycle_index(x)
                                  : cocycle_index(x, cp);
                    indexes.insert(std::to_string(idx));
                }
                ck.expect(labels == indexes,
                          std::string(family_name(g.family)) + " labels " +
                              desc("", n, p));
            };
            check_family(make_su(n, p), RepFamily::special_unitary);
            if (n % 2 == 1) check_family(make_so(n, p), RepFamily::special_orthogonal);
            if (n % 2 == 0) check_family(make_so(n, p), RepFamily::special_orthogonal);
            check_family(make_su_h(n, p), RepFamily::quaternion_hermitian);
        }
    return ck.r;
}

SuiteResult suite_classification_invariants(const VerifyOptions& o) {
    Checker ck("classification-invariants");
    std::vector<GroupDescriptor> all;
    for (int n = 2; n <= o.max_n; ++n) all.push_back(make_sl(n));
    for (int m = 1; m <= o.max_n; ++m) all.push_back(make_sl_h(m));
    for (int n = 1; n <= o.max_n; ++n)
        for (int p = 0; p <= n; ++p) {
            all.push_back(make_su(n, p));
            all.push_back(make_so(n, p));
            all.push_back(make_su_h(n, p));
        }
    for (int n = 1; n <= o.max_n; ++n) {
        all.push_back(make_sp(n));
        all.push_back(make_su_h_anti(n));
    }
    all.push_back(make_g2(kG2Compact));
    all.push_back(make_g2(kG2Split));
    for (int f = 0; f < 3; ++f) {
        all.push_back(make_f4(f));
        all.push_back(make_e8(f));
    }
    for (const auto& g : all) {
        auto r = classify(g);
        auto canon = canonical_group(g);
        std::string triv = trivial_label(g);
        int trivial_hits = 0;
        for (const auto& c : r.classes)
            if (c.label == triv) {
                ++trivial_hits;
                ck.expect(c.galois_group == canon,
                          "trivial class group " + descriptor_str(g));
            }
        ck.expect(trivial_hits == 1, "exactly one trivial class " + descriptor_str(g));
        ck.expect(classify(canon).count == r.count,
                  "canonical agreement " + descriptor_str(g));
        ck.expect(canonical_group(canon) == canon,
                  "canonicalization idempotent " + descriptor_str(g));
    }
    // so_odd: the canonical indexes of the classes are pairwise distinct and
    // exhaust the (n+1)/2 real forms.
    for (int n = 1; n <= o.max_n; n += 2)
        for (int p = 0; p <= n; ++p) {
            auto r = classify(make_so(n, p));
            std::set<int> groups;
            for (const auto& c : r.classes) groups.insert(c.galois_group.p);
            ck.expect(static_cast<int>(groups.size()) == (n + 1) / 2,
                      desc("so_odd group spread", n, p));
        }
    return ck.r;
}

SuiteResult suite_exceptional_lists(const VerifyOptions&) {
    Checker ck("exceptional-lists");
    for (int f : {kG2Compact, kG2Split}) {
        auto r = classify(make_g2(f));
        ck.expect(r.count == 2, desc("g2 count", f));
        ck.expect(r.classes[0].galois_group.form == f, desc("g2 trivial keeps form", f));
        ck.expect(r.classes[1].galois_group.form == (f == kG2Compact ? kG2Split
                                                                     : kG2Compact),
                  desc("g2 nontrivial is the other form", f));
    }
    auto expect_full = [&](const GroupDescriptor& g, const std::string& what) {
        auto r = classify(g);
        std::multiset<int> forms;
        for (const auto& c : r.classes) forms.insert(c.galois_group.form);
        ck.expect(forms == std::multiset<int>{0, 1, 2}, what + " every form once");
        ck.expect(r.classes[0].galois_group == canonical_group(g), what + " trivial first");
    };
    for (int f = 0; f < 3; ++f) {
        expect_full(make_f4(f), desc("f4", f));
        expect_full(make_e8(f), desc("e8", f));
    }
    return ck.r;
}

}  // namespace

const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"field-axioms", suite_field_axioms},
        {"gauss-conj", suite_gauss_conj},
        {"quat-sigma", suite_quat_sigma},
        {"unity-roots", suite_unity_roots},
        {"structured-identities", suite_structured_identities},
        {"det-multiplicative", suite_det_multiplicative},
        {"cayley-membership", suite_cayley_membership},
        {"mu-embedding", suite_mu_embedding},
        {"quaternionic-image", suite_quaternionic_image},
        {"sigma-transpose", suite_sigma_transpose},
        {"embedded-forms", suite_embedded_forms},
        {"quat-canonicalization", suite_quat_canonicalization},
        {"signature-properties", suite_signature_properties},
        {"pfister", suite_pfister},
        {"twist-identities", suite_twist_identities},
        {"rep-cocycles", suite_rep_cocycles},
        {"hilbert90", suite_hilbert90},
        {"sl-class", suite_sl_class},
        {"det-positivity", suite_det_positivity},
        {"so-transport", suite_so_transport},
        {"symplectic-transport", suite_symplectic_transport},
        {"counts", suite_counts},
        {"cohomology-consistency", suite_cohomology_consistency},
        {"classification-invariants", suite_classification_invariants},
        {"exceptional-lists", suite_exceptional_lists},
    };
    return reg;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opts) {
    std::vector<SuiteResult> out;
    if (names.empty()) {
        for (const auto& [name, fn] : suite_registry()) out.push_back(fn(opts));
        return out;
    }
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& name : sorted) {
        auto it = suite_registry().find(name);
        if (it == suite_registry().end())
            throw std::invalid_argument("unknown suite '" + name + "'");
        out.push_back(it->second(opts));
    }
    return out;
}

}  // namespace realforms
