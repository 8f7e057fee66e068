#include "realforms/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace realforms {

namespace {

using Poly = std::vector<Rational>;  // little-endian, no trailing zeros except [0]

void trim(Poly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.size() == 1 && b[0].is_zero())
        throw std::domain_error("poly_divmod: division by zero polynomial");
    if (a.size() < b.size()) return {Poly{Rational(0)}, a};
    Poly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        Rational f = a[k] / lead;
        if (!f.is_zero()) {
            q[k - b.size() + 1] = f;
            for (std::size_t j = 0; j < b.size(); ++j)
                a[k - b.size() + 1 + j] -= f * b[j];
        }
        if (k == 0) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool poly_is_zero(const Poly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

// Extended Euclid: returns (g, u) with u*a ≡ g (mod b), g the monic gcd.
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly b) {
    Poly u0{Rational(1)}, u1{Rational(0)};
    trim(a);
    trim(b);
    while (!poly_is_zero(b)) {
        auto [q, r] = poly_divmod(a, b);
        // u0 - q*u1
        Poly t = poly_mul(q, u1);
        Poly nu(std::max(u0.size(), t.size()), Rational(0));
        for (std::size_t i = 0; i < nu.size(); ++i) {
            Rational x = i < u0.size() ? u0[i] : Rational(0);
            Rational y = i < t.size() ? t[i] : Rational(0);
            nu[i] = x - y;
        }
        trim(nu);
        u0 = u1;
        u1 = nu;
        a = b;
        b = r;
    }
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    return {a, u0};
}

std::vector<unsigned> divisors_of(unsigned m) {
    std::vector<unsigned> d;
    for (unsigned k = 1; k <= m; ++k)
        if (m % k == 0) d.push_back(k);
    return d;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::map<unsigned, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    std::function<const Poly&(unsigned)> get = [&](unsigned k) -> const Poly& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        Poly xm(k + 1, Rational(0));
        xm[0] = Rational(-1);
        xm[k] = Rational(1);
        Poly rest{Rational(1)};
        for (unsigned d : divisors_of(k))
            if (d < k) rest = poly_mul(rest, get(d));
        auto [q, r] = poly_divmod(xm, rest);
        if (!poly_is_zero(r))
            throw std::logic_error("cyclotomic_polynomial: non-exact division");
        return cache.emplace(k, std::move(q)).first->second;
    };
    return get(m);
}

unsigned euler_phi(unsigned m) {
    if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

CycloElement::CycloElement(unsigned m) : order_(m) {
    if (m == 0) throw std::invalid_argument("CycloElement: order must be positive");
    coeffs_.assign(euler_phi(m), Rational(0));
}

CycloElement CycloElement::zeta(unsigned m) {
    CycloElement z(m);
    if (z.coeffs_.size() < 2) {
        // φ(m) = 1 only for m ∈ {1, 2}; ζ is then ±1.
        Poly x{Rational(0), Rational(1)};
        Poly r = poly_mod(x, cyclotomic_polynomial(m));
        z.coeffs_[0] = r.empty() ? Rational(0) : r[0];
    } else {
        z.coeffs_[1] = Rational(1);
    }
    return z;
}

CycloElement CycloElement::from_rational(unsigned m, const Rational& r) {
    CycloElement z(m);
    z.coeffs_[0] = r;
    return z;
}

CycloElement CycloElement::imaginary_unit(unsigned m) {
    if (m % 4 != 0)
        throw std::invalid_argument("CycloElement: i requires 4 | order");
    return zeta(m).pow(m / 4);
}

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycloElement::rational_value() const {
    if (!is_rational())
        throw std::domain_error("CycloElement: not a rational element");
    return coeffs_[0];
}

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

static void require_same_order(const CycloElement& a, const CycloElement& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("CycloElement: mixed cyclotomic orders");
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same_order(a, b);
    CycloElement r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same_order(a, b);
    CycloElement r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_order(a, b);
    Poly prod = poly_mul(a.coeffs_, b.coeffs_);
    Poly red = poly_mod(prod, cyclotomic_polynomial(a.order_));
    CycloElement r(a.order_);
    for (std::size_t i = 0; i < red.size() && i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = red[i];
    return r;
}

CycloElement operator/(const CycloElement& a, const CycloElement& b) {
    return a * b.inverse();
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElement: inverse of zero");
    auto [g, u] = poly_half_ext_gcd(coeffs_, cyclotomic_polynomial(order_));
    if (g.size() != 1)
        throw std::logic_error("CycloElement: cyclotomic modulus not coprime");
    Poly red = poly_mod(u, cyclotomic_polynomial(order_));
    CycloElement r(order_);
    for (std::size_t i = 0; i < red.size() && i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = red[i];
    return r;
}

CycloElement CycloElement::pow(unsigned long long e) const {
    CycloElement result = from_rational(order_, Rational(1));
    CycloElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

CycloElement CycloElement::conj() const {
    // p(ζ) ↦ p(ζ^{m-1}) = p(ζ^{-1}), evaluated by Horner in ζ^{m-1}.
    CycloElement t = zeta(order_).pow(order_ - 1);
    CycloElement acc(order_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * t + from_rational(order_, coeffs_[i]);
    }
    return acc;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string CycloElement::str() const {
    std::ostringstream os;
    os << order_ << ":";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].str();
    }
    return os.str();
}

CycloElement CycloElement::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("CycloElement: missing ':' in '" + s + "'");
    unsigned m = static_cast<unsigned>(std::stoul(s.substr(0, colon)));
    CycloElement z(m);
    std::string rest = s.substr(colon + 1);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = rest.find(',', pos);
        parts.push_back(rest.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (parts.size() != z.coeffs_.size())
        throw std::invalid_argument("CycloElement: expected " +
                                    std::to_string(z.coeffs_.size()) + " coefficients");
    for (std::size_t i = 0; i < parts.size(); ++i) z.coeffs_[i] = Rational::parse(parts[i]);
    return z;
}

CycloElement primitive_unity_root(unsigned n) {
    if (n == 0) throw std::invalid_argument("primitive_unity_root: n must be positive");
    unsigned m = std::lcm(n, 4u);
    return CycloElement::zeta(m).pow(m / n);
}

bool has_multiplicative_order(const CycloElement& z, unsigned n) {
    CycloElement one = CycloElement::from_rational(z.order(), Rational(1));
    if (z.pow(n) != one) return false;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0 && z.pow(d) == one) return false;
    return true;
}

}  // namespace realforms
