#pragma once

#include "k3cox/linalg.hpp"

namespace k3cox {

/// A nondegenerate integral symmetric bilinear form of signature (1, n-1).
/// Divisor classes are integer coordinate vectors in the basis e_1..e_n.
class Lattice {
public:
    Lattice(IMat gram);

    Eigen::Index rank() const { return gram_.rows(); }
    const IMat& gram() const { return gram_; }

    Int pairing(const IVec& u, const IVec& v) const;
    Int square(const IVec& v) const { return pairing(v, v); }

    /// Q * v, the functional "pair with v" expressed in the dual basis.
    IVec form_dual(const IVec& v) const;

private:
    IMat gram_;
};

/// Congruence diagonalization Dg = B Q B^T with B integral of nonzero
/// determinant, Dg(0,0) > 0 and Dg(i,i) < 0 for i >= 1.
struct Diagonalization {
    QMat dg;
    IMat b;
};
Diagonalization diagonalize(const Lattice& l);

/// True iff M Q M^T = Q, for M whose rows are the images of the basis vectors.
bool is_isometry(const Lattice& l, const IMat& m);

/// Image of a class under the isometry M (rows = images of basis vectors).
IVec apply_isometry(const IMat& m, const IVec& v);

}  // namespace k3cox
