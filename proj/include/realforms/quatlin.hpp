#pragma once

#include "realforms/exact_matrix.hpp"
#include "realforms/forms.hpp"

#include <vector>

namespace realforms {

using QuatMatrix = ExactMatrix<Quaternion>;

/// Entrywise 2×2-block embedding of a quaternion matrix into the matrices
/// over k(i):  a+bI+cJ+dK ↦ [[a+bi, c+di], [-c+di, a-bi]]. An exact ring
/// homomorphism onto the matrices commuting with the twisted conjugation.
ExactMatrix<GaussRational> mu_embed(const QuatMatrix& m);

/// True iff N equals its twisted conjugate A·N̄·A^{-1} (A the symplectic unit
/// of matching size); holds exactly on the image of mu_embed. Odd size is
/// rejected.
bool in_quaternionic_image(const ExactMatrix<GaussRational>& n);

/// Checks mu(sigma_star(M)) = A·mu(M)^t·A^{-1}; the compatibility of the
/// quaternionic adjoint with transposition through the embedding. Used as a
/// library self-check and test oracle.
bool sigma_transpose_compat(const QuatMatrix& m);

/// The Gram matrix A^{-1}·mu([h]) of the embedded form. Antisymmetric when h
/// is sigma-hermitian (symplectic case), symmetric when h is
/// sigma-anti-hermitian (orthogonal case). Every M preserving h maps to
/// mu(M) preserving the result.
ExactMatrix<GaussRational> embedded_form_matrix(const QuatHermitianForm& h);
ExactMatrix<GaussRational> embedded_form_matrix(const QuatAntiHermitianForm& h);
ExactMatrix<GaussRational> embedded_form_matrix(const FormSpec& h);

struct QuatHermitianCanonical {
    int index = 0;                  // number of positive pivots
    int rank = 0;
    QuatMatrix witness;             // W with sigma_star(W)·[h]·W diagonal
    std::vector<Rational> diagonal; // central pivots
};

/// σ-congruence diagonalization of a σ-hermitian form; the diagonal entries
/// are central, hence rational, and the positive count is the complete
/// invariant at real-closed level.
QuatHermitianCanonical canonicalize_quat_hermitian(const QuatHermitianForm& h);

struct QuatAntiHermitianCanonical {
    int rank = 0;
    QuatMatrix witness;               // W with sigma_star(W)·[h]·W diagonal
    std::vector<Quaternion> diagonal; // nonzero pure entries
};

/// σ-congruence diagonalization of a σ-anti-hermitian form; stops at a
/// diagonal with nonzero pure entries. Rank is the only invariant at
/// real-closed level; full reduction to a fixed pure unit would need square
/// roots, which the rational model does not have.
QuatAntiHermitianCanonical canonicalize_quat_antihermitian(const QuatAntiHermitianForm& h);

/// For a pure quaternion v whose norm is a perfect rational square r², a
/// quaternion q with q·v·q^{-1} = r·I. Throws when v is not pure or the norm
/// has no rational square root.
Quaternion rotate_pure_to_axis(const Quaternion& v);

}  // namespace realforms
