#pragma once

#include "realforms/exact_matrix.hpp"
#include "realforms/structured.hpp"

#include <cstdint>
#include <string>

namespace realforms {

/// The three involutive twisted conjugations of the two-element Galois group
/// on matrices over k(i):
///   plain             c(M) = M̄
///   quaternion_twist  c(M) = A·M̄·A^{-1}          (even size)
///   unitary_twist(p)  c(M) = I_p·(M̄^t)^{-1}·I_p   (invertible M only)
enum class ConjActionTag { plain, quaternion_twist, unitary_twist };

struct ConjAction {
    ConjActionTag tag;
    int n = 0;
    int p = 0;  // unitary twist only

    static ConjAction plain(int n);
    static ConjAction quaternion_twist(int n);
    static ConjAction unitary_twist(int n, int p);

    ExactMatrix<GaussRational> apply(const ExactMatrix<GaussRational>& m) const;
};

const char* conj_action_name(ConjActionTag t);

/// A 1-cocycle of Gal(k(i)|k) is a single matrix B with B·c(B) = Id under
/// the chosen action; never a map object.
struct Cocycle {
    ConjAction action;
    ExactMatrix<GaussRational> B;
};

/// Exact check of B·c(B) = Id.
bool verify_cocycle(const Cocycle& x);

enum class RepFamily { special_unitary, special_orthogonal, quaternion_hermitian };

/// The standard representative with label q:
///   special_unitary      B_q = I_q·I_p (size n), unitary twist, q ≡ p (mod 2)
///   special_orthogonal   B_q = I_q·I_p (size n), plain action, q ≡ p (mod 2)
///   quaternion_hermitian B_q = I_{2q}·I_{2p} (size 2n), quaternion twist,
///                        any 0 ≤ q ≤ n
Cocycle rep_cocycle(RepFamily family, int n, int p, int q);

/// Complete class invariant: the signature index of B·I_p (hermitian by the
/// cocycle condition). For the quaternion twist B·I_{2p} is used and the
/// index is halved. Equals q on every rep_cocycle output.
int cocycle_index(const Cocycle& x, int p);

/// Convenience overload taking p from a unitary-twist action.
int cocycle_index(const Cocycle& x);

/// The averaging step P = N + B·c(N) of constructive Hilbert 90. Exposed so
/// the formula can be driven with chosen N; P need not be invertible.
ExactMatrix<GaussRational> hilbert90_average(const Cocycle& x,
                                             const ExactMatrix<GaussRational>& n);

/// Invertible P with B = P·c(P)^{-1}, built by averaging over seeded random
/// N with the deterministic retry schedule seed, seed+1, ... Plain and
/// quaternion-twist actions only.
ExactMatrix<GaussRational> hilbert90_solve(const Cocycle& x, std::uint64_t seed = 0);

/// Class of a determinant-one cocycle under the quaternion twist in
/// k*/k*₊ ≅ {±1}: solves Hilbert 90 and returns the sign of det P, which the
/// twisted conjugation pins to a nonzero rational independent of N.
/// +1 exactly on trivial classes.
int sl_quaternionic_class(const Cocycle& x, std::uint64_t seed = 0);

/// D_q = J_q·J_p, the diagonal twist with D^t·I_q·D = I_p and
/// star(D)·I_p·D = I_p; conjugation by it transports membership between the
/// orthogonal (or unitary) groups of I_p and I_q.
ExactMatrix<GaussRational> twist_matrix(int n, int p, int q);

struct CoboundaryWitness {
    ExactMatrix<GaussRational> transform;  // M with M^{-1}·B·c(M) = D·I_p
    ExactMatrix<Rational> diag;            // real diagonal D, positives first
    int index = 0;                         // positive entries of D
    Rational det_certificate;              // det M · conj(det M)
    bool certificate_is_one = false;
    bool det_normalized = false;           // det M scaled to exactly 1
};

/// Constructive form of the classification of unitary-twist cocycles:
/// diagonalizes the hermitian matrix B·I_p, sorts positives first, rescales
/// every pivot that is a norm from k(i) to ±1, and attempts the final
/// determinant normalization over the roots of unity of k(i).
CoboundaryWitness coboundary_witness(const Cocycle& x);

}  // namespace realforms
