#include "k3cox/linsys.hpp"

#include <algorithm>
#include <set>

namespace k3cox {

K3Surface::K3Surface(Lattice lattice, std::vector<IVec> neg_curves)
    : lattice_(std::move(lattice)), neg_(std::move(neg_curves)) {
    validate_and_derive();
    std::vector<IVec> rays = nef_.rays;
    ample_ = IVec::Zero(rank());
    for (const IVec& r : rays) ample_ += r;
    if (square(ample_) <= 0)
        throw invariant_error("surface: derived ample class has nonpositive square");
}

K3Surface::K3Surface(Lattice lattice, std::vector<IVec> neg_curves, IVec ample)
    : lattice_(std::move(lattice)), neg_(std::move(neg_curves)), ample_(std::move(ample)) {
    validate_and_derive();
    if (square(ample_) <= 0) throw invariant_error("surface: ample class must have positive square");
    for (const IVec& c : neg_)
        if (pairing(ample_, c) <= 0)
            throw invariant_error("surface: ample class not positive on a curve class");
}

void K3Surface::validate_and_derive() {
    const Eigen::Index n = lattice_.rank();
    for (Eigen::Index i = 0; i < n; ++i)
        if (lattice_.gram()(i, i) % 2 != 0)
            throw invariant_error("surface: K3 Picard lattices are even");
    if (neg_.empty()) throw invariant_error("surface: empty curve class list");
    for (const IVec& c : neg_)
        if (square(c) != -2)
            throw invariant_error("surface: curve class " + to_string(c) + " has square != -2");
    sort_classes(neg_);
    neg_.erase(std::unique(neg_.begin(), neg_.end()), neg_.end());

    eff_ = cone_from_generators(n, neg_);
    if (eff_.dim != static_cast<int>(n))
        throw invariant_error("surface: curve classes do not span a full-dimensional cone");
    neg_dual_.clear();
    for (const IVec& c : neg_) neg_dual_.push_back(lattice_.form_dual(c));
    nef_ = dual_cone(cone_from_generators(n, neg_dual_));
}

const std::vector<IVec>& K3Surface::beff() const {
    std::call_once(beff_once_, [&] { beff_cache_ = hilbert_basis(eff_); });
    return beff_cache_;
}

const std::vector<IVec>& K3Surface::bnef() const {
    std::call_once(bnef_once_, [&] { bnef_cache_ = hilbert_basis(nef_); });
    return bnef_cache_;
}

const std::vector<IVec>& K3Surface::elliptic_classes() const {
    std::call_once(elliptic_once_, [&] {
        const Eigen::Index n = rank();
        std::set<IVec, LexLess> found;
        for (const IVec& r : nef_.rays)
            if (square(r) == 0) found.insert(primitive(r));
        if (n == 3) {
            // each facet of Nef lies in the plane orthogonal to a curve class,
            // a signature (1,1) plane with at most two rational isotropic rays
            for (const IVec& c : neg_) {
                IMat row(1, n);
                row.row(0) = lattice_.form_dual(c).transpose();
                IMat ker = kernel_basis(row);  // n x 2
                IMat g = ker.transpose() * lattice_.gram() * ker;
                Int g00 = g(0, 0), g01 = g(0, 1), g11 = g(1, 1);
                std::vector<std::pair<Int, Int>> dirs;
                if (g00 == 0) {
                    dirs.emplace_back(1, 0);
                    if (g01 != 0) dirs.emplace_back(-g11, 2 * g01);
                } else {
                    Int disc = g01 * g01 - g00 * g11;
                    if (disc >= 0) {
                        Int s = boost::multiprecision::sqrt(disc);
                        if (s * s == disc) {
                            dirs.emplace_back(-g01 + s, g00);
                            dirs.emplace_back(-g01 - s, g00);
                        }
                    }
                }
                for (const auto& [a, b] : dirs) {
                    IVec dir(2);
                    dir << a, b;
                    if (content(dir) == 0) continue;
                    IVec f = primitive(IVec(ker * dir));
                    for (const IVec& cand : {f, IVec(-f)})
                        if (is_nef(cand)) found.insert(cand);
                }
            }
        } else if (n > 3) {
            throw compute_error("elliptic_classes: facet planes only enumerable in rank 3");
        }
        elliptic_cache_.assign(found.begin(), found.end());
    });
    return elliptic_cache_;
}

bool K3Surface::is_nef(const IVec& d) const {
    for (const IVec& qc : neg_dual_)
        if (qc.dot(d) < 0) return false;
    return true;
}

Int K3Surface::h0(const IVec& d) const {
    if (d.size() != rank()) throw input_error("h0: dimension mismatch");
    {
        std::shared_lock lock(h0_mutex_);
        auto it = h0_memo_.find(d);
        if (it != h0_memo_.end()) return it->second;
    }
    IVec cur = d;
    Int result;
    for (;;) {
        if (content(cur) == 0) { result = 1; break; }
        if (pairing(cur, ample_) < 0) { result = 0; break; }
        // subtract a base-locus curve component if one obstructs
        bool reduced = false;
        for (size_t i = 0; i < neg_.size(); ++i) {
            if (neg_dual_[i].dot(cur) < 0) {
                cur -= neg_[i];
                reduced = true;
                break;
            }
        }
        if (reduced) continue;
        // cur is nef
        Int s = square(cur);
        if (s > 0) { result = 2 + s / 2; break; }
        if (s == 0) { result = content(cur) + 1; break; }
        throw invariant_error("h0: nef class of negative square, inconsistent surface data");
    }
    std::unique_lock lock(h0_mutex_);
    h0_memo_.emplace(d, result);
    return result;
}

Int K3Surface::h1(const IVec& d) const {
    Int chi = 2 + square(d) / 2;
    Int v = h0(d) + h0(IVec(-d)) - chi;
    if (v < 0) throw invariant_error("h1: negative value, inconsistent surface data");
    return v;
}

bool K3Surface::is_bpf(const IVec& d) const {
    if (!is_nef(d) || content(d) == 0 || !is_effective(d))
        throw input_error("is_bpf: requires a nef, effective, nonzero class");
    const auto& fibers = elliptic_classes();
    if (fibers.empty()) return true;
    std::set<IVec, LexLess> fiber_set(fibers.begin(), fibers.end());
    for (const IVec& e : neg_) {
        IVec diff = d - e;
        Int k = content(diff);
        if (k < 2) continue;
        IVec f = diff;
        for (Eigen::Index i = 0; i < f.size(); ++i) f[i] /= k;
        if (fiber_set.count(f) && pairing(f, e) == 1) return false;
    }
    return true;
}

bool K3Surface::is_hyperelliptic(const IVec& d) const {
    if (!is_nef(d) || square(d) <= 0)
        throw input_error("is_hyperelliptic: requires a nef class of positive square");
    Int s = square(d);
    if (s == 2) return true;
    for (const IVec& f : elliptic_classes())
        if (pairing(d, f) == 2) return true;
    if (s == 8) {
        bool halves = true;
        for (Eigen::Index i = 0; i < d.size(); ++i) halves &= (d[i] % 2 == 0);
        if (halves) return true;  // d = 2B with B^2 = 2
    }
    return false;
}

std::vector<IVec> K3Surface::isotropic_slice(const IVec& d, const Int& k) const {
    if (square(d) <= 0) throw input_error("isotropic_slice: requires positive square");
    std::vector<IVec> out;
    for (const IVec& f : elliptic_classes())
        if (pairing(d, f) == k) out.push_back(f);
    return out;
}

bool K3Surface::is_very_ample(const IVec& d) const {
    if (!is_nef(d)) return false;
    Int s = square(d);
    if (s < 4) return false;
    if (!isotropic_slice(d, 1).empty()) return false;
    if (!isotropic_slice(d, 2).empty()) return false;
    for (const IVec& qc : neg_dual_)
        if (qc.dot(d) == 0) return false;
    if (s == 8) {
        bool halves = true;
        for (Eigen::Index i = 0; i < d.size(); ++i) halves &= (d[i] % 2 == 0);
        if (halves) return false;  // d = 2B with B^2 = 2
    }
    return true;
}

}  // namespace k3cox
