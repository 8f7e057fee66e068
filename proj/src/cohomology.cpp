#include "realforms/cohomology.hpp"

#include "realforms/forms.hpp"
#include "realforms/lcg.hpp"
#include "realforms/sampling.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace realforms {

const char* conj_action_name(ConjActionTag t) {
    switch (t) {
        case ConjActionTag::plain: return "plain";
        case ConjActionTag::quaternion_twist: return "quaternion_twist";
        case ConjActionTag::unitary_twist: return "unitary_twist";
    }
    return "?";
}

ConjAction ConjAction::plain(int n) {
    if (n <= 0) throw std::invalid_argument("ConjAction: n must be positive");
    return {ConjActionTag::plain, n, 0};
}

ConjAction ConjAction::quaternion_twist(int n) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("ConjAction: quaternion twist needs even n");
    return {ConjActionTag::quaternion_twist, n, 0};
}

ConjAction ConjAction::unitary_twist(int n, int p) {
    if (n <= 0 || p < 0 || p > n)
        throw std::invalid_argument("ConjAction: unitary twist needs 0 <= p <= n");
    return {ConjActionTag::unitary_twist, n, p};
}

ExactMatrix<GaussRational> ConjAction::apply(const ExactMatrix<GaussRational>& m) const {
    if (!m.is_square() || m.rows() != static_cast<std::size_t>(n))
        throw std::invalid_argument("ConjAction: size mismatch");
    switch (tag) {
        case ConjActionTag::plain:
            return conj(m);
        case ConjActionTag::quaternion_twist: {
            auto a = symplectic_unit_matrix<GaussRational>(n);
            return a * conj(m) * (-a);  // A^{-1} = -A
        }
        case ConjActionTag::unitary_twist: {
            auto ip = signature_matrix_gauss(n, p);
            auto inv = star(m).try_inverse();
            if (!inv)
                throw std::domain_error("ConjAction: unitary twist of singular matrix");
            return ip * *inv * ip;
        }
    }
    throw std::logic_error("ConjAction: unknown tag");
}

bool verify_cocycle(const Cocycle& x) {
    if (!x.B.is_square() || x.B.rows() != static_cast<std::size_t>(x.action.n))
        throw std::invalid_argument("verify_cocycle: size mismatch");
    if (!x.B.try_inverse()) return false;
    return (x.B * x.action.apply(x.B)).is_identity();
}

Cocycle rep_cocycle(RepFamily family, int n, int p, int q) {
    if (n <= 0 || p < 0 || p > n || q < 0 || q > n)
        throw std::invalid_argument("rep_cocycle: need 0 <= p,q <= n");
    switch (family) {
        case RepFamily::special_unitary:
        case RepFamily::special_orthogonal: {
            if ((p - q) % 2 != 0)
                throw std::invalid_argument("rep_cocycle: q must have the parity of p");
            auto b = signature_matrix_gauss(n, q) * signature_matrix_gauss(n, p);
            ConjAction action = family == RepFamily::special_unitary
                                    ? ConjAction::unitary_twist(n, p)
                                    : ConjAction::plain(n);
            return Cocycle{action, b};
        }
        case RepFamily::quaternion_hermitian: {
            auto b = signature_matrix_gauss(2 * n, 2 * q) *
                     signature_matrix_gauss(2 * n, 2 * p);
            return Cocycle{ConjAction::quaternion_twist(2 * n), b};
        }
    }
    throw std::invalid_argument("rep_cocycle: unknown family");
}

int cocycle_index(const Cocycle& x, int p) {
    if (!verify_cocycle(x))
        throw std::invalid_argument("cocycle_index: cocycle condition violated");
    const int n = x.action.n;
    if (x.action.tag == ConjActionTag::unitary_twist && p != x.action.p)
        throw std::invalid_argument("cocycle_index: p differs from the action's p");
    const bool quat = x.action.tag == ConjActionTag::quaternion_twist;
    const int cols = quat ? 2 * p : p;
    if (cols < 0 || cols > n)
        throw std::invalid_argument("cocycle_index: index out of range");
    auto h = x.B * signature_matrix_gauss(n, cols);
    if (star(h) != h)
        throw std::invalid_argument("cocycle_index: B·I_p is not hermitian");
    int sig = signature_index(HermitianForm(h));
    if (!quat) return sig;
    if (sig % 2 != 0)
        throw std::logic_error("cocycle_index: odd signature under quaternion twist");
    return sig / 2;
}

int cocycle_index(const Cocycle& x) {
    if (x.action.tag != ConjActionTag::unitary_twist)
        throw std::invalid_argument("cocycle_index: action does not carry p");
    return cocycle_index(x, x.action.p);
}

ExactMatrix<GaussRational> hilbert90_average(const Cocycle& x,
                                             const ExactMatrix<GaussRational>& n) {
    return n + x.B * x.action.apply(n);
}

ExactMatrix<GaussRational> hilbert90_solve(const Cocycle& x, std::uint64_t seed) {
    if (x.action.tag == ConjActionTag::unitary_twist)
        throw std::invalid_argument(
            "hilbert90_solve: averaging applies to plain and quaternion-twist "
            "actions only");
    if (!verify_cocycle(x))
        throw std::invalid_argument("hilbert90_solve: cocycle condition violated");
    const std::size_t n = x.B.rows();
    for (std::uint64_t t = 0; t < 32; ++t) {
        Lcg64 rng(seed + t);
        auto cand = random_matrix<GaussRational>(rng, n, n);
        auto p = hilbert90_average(x, cand);
        auto pinv = p.try_inverse();
        if (!pinv) continue;
        if (p * x.action.apply(p).inverse() != x.B)
            throw std::logic_error("hilbert90_solve: substitution identity failed");
        return p;
    }
    throw SamplingError(seed, "hilbert90_solve: no invertible average found");
}

int sl_quaternionic_class(const Cocycle& x, std::uint64_t seed) {
    if (x.action.tag != ConjActionTag::quaternion_twist)
        throw std::invalid_argument(
            "sl_quaternionic_class: quaternion-twist action required");
    if (exact_det(x.B) != GaussRational(1))
        throw std::invalid_argument("sl_quaternionic_class: det B must be 1");
    auto p = hilbert90_solve(x, seed);
    GaussRational d = exact_det(p);
    if (!d.is_real())
        throw std::logic_error("sl_quaternionic_class: det P not fixed by conjugation");
    int s = d.re().sign();
    if (s == 0) throw std::logic_error("sl_quaternionic_class: det P vanished");
    return s;
}

ExactMatrix<GaussRational> twist_matrix(int n, int p, int q) {
    return signature_root_matrix(n, q) * signature_root_matrix(n, p);
}

namespace {

// alpha with alpha·conj(alpha) = r for positive rational r, when r is a norm
// from k(i): with r = u/v in lowest terms, search x² + y² = u·v. Bounded so
// pathological pivots simply skip normalization.
std::optional<GaussRational> norm_preimage(const Rational& r) {
    if (r.sign() <= 0) return std::nullopt;
    Int target = r.num() * r.den();
    if (target > 1000000) return std::nullopt;
    for (Int x = 0; x * x <= target; ++x) {
        Int rest = target - x * x;
        Int y = boost::multiprecision::sqrt(rest);
        if (y * y == rest)
            return GaussRational(Rational(x, r.den()), Rational(y, r.den()));
    }
    return std::nullopt;
}

}  // namespace

CoboundaryWitness coboundary_witness(const Cocycle& x) {
    if (x.action.tag != ConjActionTag::unitary_twist)
        throw std::invalid_argument("coboundary_witness: unitary-twist action required");
    if (!verify_cocycle(x))
        throw std::invalid_argument("coboundary_witness: cocycle condition violated");
    const int n = x.action.n;
    const int p = x.action.p;
    auto ip = signature_matrix_gauss(n, p);
    auto h = x.B * ip;  // hermitian by the cocycle condition
    if (star(h) != h)
        throw std::invalid_argument("coboundary_witness: B·I_p is not hermitian");

    auto diag = congruence_diagonalize(h);
    if (diag.rank != n)
        throw std::domain_error("coboundary_witness: degenerate hermitian matrix");
    ExactMatrix<GaussRational> w = diag.transform;
    std::vector<Rational> d = diag.diagonal;

    // Rescale each pivot that is a norm from k(i) to ±1.
    for (int j = 0; j < n; ++j) {
        Rational mag = abs(d[j]);
        if (mag == Rational(1)) continue;
        auto alpha = norm_preimage(mag);
        if (!alpha) continue;
        GaussRational beta = alpha->inverse();
        for (int i = 0; i < n; ++i) w(i, j) = w(i, j) * beta;
        d[j] = Rational(d[j].sign());
    }

    // Sort positives first so a fully normalized D is exactly I_r.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[a].sign() > d[b].sign(); });
    ExactMatrix<GaussRational> ws(n, n, GaussRational());
    ExactMatrix<Rational> dm(n, n, Rational(0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) ws(i, j) = w(i, order[j]);
        dm(j, j) = d[order[j]];
    }

    CoboundaryWitness out{star(ws).inverse(), dm, 0, Rational(0), false, false};
    for (int j = 0; j < n; ++j)
        if (dm(j, j).sign() > 0) out.index++;

    GaussRational det_m = exact_det(out.transform);
    GaussRational cert = det_m * det_m.conj();
    out.det_certificate = cert.re();
    out.certificate_is_one = cert == GaussRational(1);

    if (det_m == GaussRational(1)) {
        out.det_normalized = true;
    } else if (out.certificate_is_one) {
        // det(ζM) = ζ^n·det M; the roots of unity of k(i) are the only
        // candidates available without factoring Gaussian integers.
        const GaussRational units[4] = {GaussRational(1), GaussRational(-1),
                                        GaussRational::i(), -GaussRational::i()};
        for (const auto& zeta : units) {
            GaussRational zn(1);
            for (int k = 0; k < n; ++k) zn = zn * zeta;
            if (zn * det_m == GaussRational(1)) {
                out.transform = zeta * out.transform;
                out.det_normalized = true;
                break;
            }
        }
    }
    return out;
}

}  // namespace realforms
