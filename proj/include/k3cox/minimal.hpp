#pragma once

#include "k3cox/linsys.hpp"

#include <chrono>
#include <optional>

namespace k3cox {

/// All w >= 0 integral with M w = v. The solution set must be bounded, which
/// holds exactly when the columns are nonzero and span a pointed cone;
/// otherwise a compute_error is thrown.
std::vector<IVec> nonneg_solutions(const IMat& m, const IVec& v);

/// The ways to write d as a nonnegative integer combination of classes of g
/// other than d itself whose complement in d stays effective.
struct WritingSet {
    std::vector<IVec> support;               // the admissible classes, sorted
    std::vector<std::vector<Int>> writings;  // coefficient rows over support
};
WritingSet writings(const K3Surface& s, const IVec& d, const std::vector<IVec>& g);

/// Hypotheses of the three-curve non-surjectivity lemma: d = e1+e2+e3 with
/// curve classes whose pairwise sums have vanishing h1, and |d| base point free.
bool lemma_l2_applies(const K3Surface& s, const IVec& e1, const IVec& e2,
                      const IVec& e3, const IVec& d);

struct MinimalityEvidence {
    enum class Kind { NoWritings, BaseCurve, CurvePair, CurveTriple, RayGenerator, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::vector<IVec> b1;                              // curves used in every writing
    std::vector<std::pair<IVec, IVec>> b2;             // meeting pairs covering all writings
    std::vector<std::array<IVec, 3>> b3;               // lemma-l2 triples covering all writings
    std::vector<IVec> ray_witness;                     // the square-2 class A when D = 3A
    size_t writing_count = 0;
};

/// Certifies that a degree is necessary in every generating set. A false
/// result is inconclusive, never a proof of redundancy.
std::pair<bool, MinimalityEvidence> is_minimal_degree(const K3Surface& s, const IVec& d,
                                                      const std::vector<IVec>& g);

/// Covering-involution elimination of generators in degree 3A for a nef base
/// point free class A of square 2 fixed by the involution.
bool lemma_l1_eliminates(const K3Surface& s, const IVec& a, const IVec& e, const IMat& iota);

}  // namespace k3cox
