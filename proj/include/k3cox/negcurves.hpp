#pragma once

#include "k3cox/cones.hpp"

namespace k3cox {

/// All integral v with square(v) = -2 lying on the slice (B^{-T} v)_1 = t.
/// Fixing the first diagonal coordinate leaves a negative definite form, so
/// the slice is finite; the result is complete and lexicographically sorted.
std::vector<IVec> pts(const Lattice& l, const Diagonalization& d, const Rat& t);

/// Roots with positive pairing against h that are not sums of two such roots.
/// Throws input_error when h is orthogonal to one of the roots.
std::vector<IVec> simple_roots(const Lattice& l, const std::vector<IVec>& roots,
                               const IVec& h);

/// True iff every facet of cone(vs) carries a negative semidefinite set of
/// generators. Returns false when the cone is not full-dimensional.
bool cone_test(const Lattice& l, const std::vector<IVec>& vs);

struct FindCurvesOptions {
    int max_slices = 200;
};

/// The set of (-2)-curve classes of a Mori dream K3 lattice, enumerated
/// slice by slice until the facet stopping test certifies the cone.
std::vector<IVec> find_neg_curves(const Lattice& l, const FindCurvesOptions& opts = {});

/// True iff some bijection between the two class lists preserves all
/// pairwise pairings.
bool match_curve_sets(const Lattice& l, const std::vector<IVec>& s1,
                      const std::vector<IVec>& s2);

}  // namespace k3cox
