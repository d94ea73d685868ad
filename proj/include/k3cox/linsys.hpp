#pragma once

#include "k3cox/cones.hpp"
#include "k3cox/negcurves.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace k3cox {

/// A Mori dream K3 surface: an even hyperbolic lattice together with the
/// finite set of (-2)-curve classes generating its effective cone. Divisor
/// cohomology, cones and elliptic fiber classes are derived and memoized.
///
/// Thread-safety: all query methods may be called concurrently; the h0 memo
/// table takes a shared lock for reads and performs idempotent inserts.
class K3Surface {
public:
    K3Surface(Lattice lattice, std::vector<IVec> neg_curves);
    K3Surface(Lattice lattice, std::vector<IVec> neg_curves, IVec ample);

    K3Surface(const K3Surface&) = delete;
    K3Surface& operator=(const K3Surface&) = delete;

    const Lattice& lattice() const { return lattice_; }
    Eigen::Index rank() const { return lattice_.rank(); }
    const std::vector<IVec>& neg() const { return neg_; }
    const IVec& ample() const { return ample_; }

    const RationalCone& eff_cone() const { return eff_; }
    const RationalCone& nef_cone() const { return nef_; }
    const std::vector<IVec>& beff() const;
    const std::vector<IVec>& bnef() const;

    /// All primitive isotropic nef classes (fiber classes of the elliptic
    /// fibrations), deduplicated and sorted.
    const std::vector<IVec>& elliptic_classes() const;

    bool is_nef(const IVec& d) const;
    bool is_effective(const IVec& d) const { return h0(d) > 0; }

    Int h0(const IVec& d) const;
    Int h1(const IVec& d) const;
    Int h2(const IVec& d) const { return h0(IVec(-d)); }

    /// Base point freeness of |D| for nef effective nonzero D.
    bool is_bpf(const IVec& d) const;

    /// Hyperellipticity of |D| for nef D with positive square.
    bool is_hyperelliptic(const IVec& d) const;

    /// Primitive isotropic nef classes F with pairing(D, F) = k.
    std::vector<IVec> isotropic_slice(const IVec& d, const Int& k) const;

    bool is_very_ample(const IVec& d) const;

    Int pairing(const IVec& u, const IVec& v) const { return lattice_.pairing(u, v); }
    Int square(const IVec& v) const { return lattice_.square(v); }

private:
    void validate_and_derive();

    Lattice lattice_;
    std::vector<IVec> neg_;
    std::vector<IVec> neg_dual_;  // Q*c for c in neg, aligned with neg_
    IVec ample_;
    RationalCone eff_, nef_;

    mutable std::once_flag beff_once_, bnef_once_, elliptic_once_;
    mutable std::vector<IVec> beff_cache_, bnef_cache_, elliptic_cache_;

    mutable std::shared_mutex h0_mutex_;
    mutable std::unordered_map<IVec, Int, IVecHash, IVecEq> h0_memo_;
};

}  // namespace k3cox
