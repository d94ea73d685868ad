#pragma once

#include "k3cox/lattice.hpp"

#include <vector>

namespace k3cox {

/// A pointed rational polyhedral cone in Z^n, canonically represented by its
/// primitive extreme rays and an irredundant list of primitive facet normals
/// (both lexicographically sorted). Cones of lower dimension than the ambient
/// space carry +-pairs of normals that pin down their linear span.
struct RationalCone {
    Eigen::Index ambient = 0;
    int dim = 0;
    std::vector<IVec> rays;
    std::vector<IVec> facet_normals;
};

/// Canonical cone generated by the given vectors; throws invariant_error
/// ("contains a line") when the generated cone is not pointed.
RationalCone cone_from_generators(Eigen::Index n, const std::vector<IVec>& gens);

/// Dual under the standard dot product. Requires a full-dimensional cone
/// (the dual of a lower-dimensional cone is not pointed).
RationalCone dual_cone(const RationalCone& c);

bool contains(const RationalCone& c, const IVec& v);

/// Minimal generating set of the monoid C ∩ Z^n, lexicographically ascending.
std::vector<IVec> hilbert_basis(const RationalCone& c);

/// True iff the Gram matrix [pairing(v_i, v_j)] has no positive eigenvalue.
bool is_negative_semidefinite(const Lattice& l, const std::vector<IVec>& vs);

namespace detail {
/// Extreme rays and lineality basis of {x : a·x >= 0 for all a in constraints}.
struct HalfspaceIntersection {
    std::vector<IVec> lineality;
    std::vector<IVec> rays;
};
HalfspaceIntersection extreme_rays(Eigen::Index n, const std::vector<IVec>& constraints);

/// Simplicial subcones (ray lists) covering the cone, fanned out from the
/// lexicographically least ray.
std::vector<std::vector<IVec>> triangulate(const RationalCone& c);

/// Lattice points of the half-open parallelepiped spanned by the columns.
std::vector<IVec> parallelepiped_points(const std::vector<IVec>& rays, Eigen::Index n);
}  // namespace detail

}  // namespace k3cox
