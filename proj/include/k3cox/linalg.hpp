#pragma once

#include "k3cox/numeric.hpp"

#include <optional>
#include <vector>

namespace k3cox {

Int det(const IMat& m);
Rat det(const QMat& m);

int rank(const QMat& m);
int rank(const IMat& m);

/// Gauss-Jordan inverse; throws invariant_error on a singular matrix.
QMat inverse(const QMat& m);

/// Adjugate matrix: adj(m) * m = det(m) * I.
IMat adjugate(const IMat& m);

/// Unique solution of a square nonsingular system A x = b.
QVec solve(const QMat& a, const QVec& b);

/// Smith normal form A = U * S * V with U, V unimodular and S diagonal,
/// diagonal entries nonnegative with d1 | d2 | ... Also carries V^{-1}.
struct Smith {
    IMat u, s, v, vinv;
};
Smith smith_normal_form(const IMat& a);

/// Columns form a saturated basis of the lattice {x in Z^n : A x = 0}.
IMat kernel_basis(const IMat& a);

/// Columns form a basis of Z^m ∩ span_Q(columns of A).
IMat saturated_span_basis(const IMat& a);

/// Integral solutions of a · x = m: x = particular + kernel * t.
struct AffineLattice {
    IVec particular;
    IMat kernel;
};
std::optional<AffineLattice> solve_dot_equation(const IVec& a, const Int& m);

bool is_positive_definite(const QMat& g);
bool is_positive_semidefinite(const QMat& g);

/// All x in Z^n with x^T G x + 2 b^T x + c == value, for G negative definite.
std::vector<IVec> enumerate_quadric(const QMat& g, const QVec& b, const Rat& c, const Rat& value);

}  // namespace k3cox
