#include "realforms/forms.hpp"

#include "realforms/quatlin.hpp"

#include <stdexcept>

namespace realforms {

const char* form_kind_name(FormKind k) {
    switch (k) {
        case FormKind::quadratic: return "quadratic";
        case FormKind::hermitian: return "hermitian";
        case FormKind::quat_hermitian: return "quat_hermitian";
        case FormKind::quat_antihermitian: return "quat_antihermitian";
    }
    return "?";
}

FormKind kind_of(const FormSpec& f) {
    switch (f.index()) {
        case 0: return FormKind::quadratic;
        case 1: return FormKind::hermitian;
        case 2: return FormKind::quat_hermitian;
        default: return FormKind::quat_antihermitian;
    }
}

std::size_t form_size(const FormSpec& f) {
    return std::visit([](const auto& g) { return g.gram.rows(); }, f);
}

namespace {

template <class T>
int signature_of(const ExactMatrix<T>& gram, const char* what) {
    auto diag = congruence_diagonalize(gram);
    if (diag.rank != static_cast<int>(gram.rows()))
        throw std::domain_error(std::string(what) + ": degenerate form, rank " +
                                std::to_string(diag.rank) + " < " +
                                std::to_string(gram.rows()));
    return diag.positives;
}

}  // namespace

int signature_index(const QuadraticForm& f) {
    return signature_of(f.gram, "signature_index(quadratic)");
}

int signature_index(const HermitianForm& f) {
    return signature_of(f.gram, "signature_index(hermitian)");
}

int signature_index(const FormSpec& f) {
    if (const auto* q = std::get_if<QuadraticForm>(&f)) return signature_index(*q);
    if (const auto* h = std::get_if<HermitianForm>(&f)) return signature_index(*h);
    if (const auto* qh = std::get_if<QuatHermitianForm>(&f))
        return canonicalize_quat_hermitian(*qh).index;
    throw std::domain_error(
        "signature_index: anti-hermitian forms carry no index; rank is the "
        "complete invariant");
}

namespace {

// (rank, positives) pair tolerating degeneracy, for equivalence tests.
template <class T>
std::pair<int, int> rank_and_index(const ExactMatrix<T>& gram) {
    auto d = congruence_diagonalize(gram);
    return {d.rank, d.positives};
}

}  // namespace

bool equivalent(const FormSpec& f, const FormSpec& g) {
    if (kind_of(f) != kind_of(g))
        throw std::invalid_argument("equivalent: form kinds differ");
    if (form_size(f) != form_size(g))
        throw std::invalid_argument("equivalent: form sizes differ");
    switch (kind_of(f)) {
        case FormKind::quadratic:
            return rank_and_index(std::get<QuadraticForm>(f).gram) ==
                   rank_and_index(std::get<QuadraticForm>(g).gram);
        case FormKind::hermitian:
            return rank_and_index(std::get<HermitianForm>(f).gram) ==
                   rank_and_index(std::get<HermitianForm>(g).gram);
        case FormKind::quat_hermitian: {
            auto a = canonicalize_quat_hermitian(std::get<QuatHermitianForm>(f));
            auto b = canonicalize_quat_hermitian(std::get<QuatHermitianForm>(g));
            return a.rank == b.rank && a.index == b.index;
        }
        case FormKind::quat_antihermitian: {
            auto a = canonicalize_quat_antihermitian(std::get<QuatAntiHermitianForm>(f));
            auto b = canonicalize_quat_antihermitian(std::get<QuatAntiHermitianForm>(g));
            return a.rank == b.rank;
        }
    }
    return false;
}

QuadraticForm pfister3_expand(const Pfister3& p) {
    const Rational one(1);
    Rational entries[8] = {one,
                           p.a,
                           p.b,
                           p.a * p.b,
                           p.c,
                           p.a * p.c,
                           p.b * p.c,
                           p.a * p.b * p.c};
    ExactMatrix<Rational> gram(8, 8, Rational(0));
    for (int i = 0; i < 8; ++i) gram(i, i) = entries[i];
    return QuadraticForm(gram);
}

PfisterClass pfister3_class(const Pfister3& p) {
    // Sylvester signature (positives - negatives) of the 8-dimensional
    // expansion; a 3-Pfister form over a real closed field is definite
    // (signature 8) or split (signature 0), nothing else.
    auto d = congruence_diagonalize(pfister3_expand(p).gram);
    int sig = d.positives - d.negatives;
    if (sig == 8) return PfisterClass::definite;
    if (sig == 0) return PfisterClass::split;
    throw std::logic_error("pfister3_class: signature " + std::to_string(sig) +
                           " is impossible for a 3-Pfister form");
}

}  // namespace realforms
