#include "k3cox/negcurves.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace k3cox {

namespace {

void check_sign_pattern(const Diagonalization& d) {
    if (d.dg(0, 0) <= 0) throw invariant_error("pts: Dg(0,0) must be positive");
    for (Eigen::Index i = 1; i < d.dg.rows(); ++i)
        if (d.dg(i, i) >= 0) throw invariant_error("pts: Dg(i,i) must be negative for i >= 1");
}

// first integral combination of the roots, in graded-lex order over
// nonnegative exponents, with nonzero pairing against every root
IVec pick_chamber_class(const Lattice& l, const std::vector<IVec>& roots) {
    const Eigen::Index n = l.rank();
    const size_t k = roots.size();
    std::vector<int> expo(k, 0);
    auto good = [&]() -> bool {
        IVec h = IVec::Zero(n);
        for (size_t i = 0; i < k; ++i)
            if (expo[i] != 0) h += Int(expo[i]) * roots[i];
        for (const IVec& r : roots)
            if (l.pairing(h, r) == 0) return false;
        return true;
    };
    for (int degree = 1; degree <= 12; ++degree) {
        std::function<bool(size_t, int)> walk = [&](size_t pos, int left) -> bool {
            if (pos + 1 == k) {
                expo[pos] = left;
                return good();
            }
            for (int c = left; c >= 0; --c) {
                expo[pos] = c;
                if (walk(pos + 1, left - c)) return true;
            }
            expo[pos] = 0;
            return false;
        };
        if (walk(0, degree)) {
            IVec h = IVec::Zero(n);
            for (size_t i = 0; i < k; ++i)
                if (expo[i] != 0) h += Int(expo[i]) * roots[i];
            return h;
        }
    }
    throw compute_error("find_neg_curves: no chamber class separates the roots");
}

}  // namespace

std::vector<IVec> pts(const Lattice& l, const Diagonalization& d, const Rat& t) {
    check_sign_pattern(d);
    Int detb = det(d.b);
    IMat adj = adjugate(d.b);
    IVec a = adj.col(0);  // (B^{-T} v)_1 = (a . v) / det(B)

    Rat m_rat = t * Rat(detb);
    if (den(m_rat) != 1) return {};
    auto line = solve_dot_equation(a, num(m_rat));
    if (!line) return {};

    const IVec& v0 = line->particular;
    const IMat& ker = line->kernel;
    QMat g = (ker.transpose() * l.gram() * ker).cast<Rat>();
    QVec b = (ker.transpose() * l.gram() * v0).cast<Rat>();
    Rat c0 = Rat(l.square(v0));

    std::vector<IVec> out;
    for (const IVec& c : enumerate_quadric(g, b, c0, Rat(-2)))
        out.push_back(v0 + ker * c);
    sort_classes(out);
    return out;
}

std::vector<IVec> simple_roots(const Lattice& l, const std::vector<IVec>& roots,
                               const IVec& h) {
    std::vector<IVec> positive;
    for (const IVec& r : roots) {
        Int p = l.pairing(h, r);
        if (p == 0)
            throw input_error("simple_roots: chamber class orthogonal to a root, pick another");
        if (p > 0) positive.push_back(r);
    }
    std::set<IVec, LexLess> pos_set(positive.begin(), positive.end());
    std::vector<IVec> simple;
    for (const IVec& r : positive) {
        bool is_sum = false;
        for (const IVec& p : positive) {
            IVec q = r - p;
            if (pos_set.count(q)) { is_sum = true; break; }
        }
        if (!is_sum) simple.push_back(r);
    }
    sort_classes(simple);
    return simple;
}

bool cone_test(const Lattice& l, const std::vector<IVec>& vs) {
    if (vs.empty()) throw input_error("cone_test: empty class list");
    RationalCone c = cone_from_generators(l.rank(), vs);
    if (c.dim != static_cast<int>(l.rank())) return false;
    for (const IVec& f : c.facet_normals) {
        std::vector<IVec> on_facet;
        for (const IVec& v : vs)
            if (f.dot(v) == 0) on_facet.push_back(v);
        if (on_facet.empty()) continue;
        if (!is_negative_semidefinite(l, on_facet)) return false;
    }
    return true;
}

std::vector<IVec> find_neg_curves(const Lattice& l, const FindCurvesOptions& opts) {
    Diagonalization d = diagonalize(l);
    std::vector<IVec> roots = pts(l, d, Rat(0));

    std::vector<IVec> acc;
    if (roots.size() >= 2) {
        IVec h = pick_chamber_class(l, roots);
        acc = simple_roots(l, roots, h);
    } else {
        acc = roots;
    }

    Int slice_den = abs(det(d.b));
    for (int i = 1; i <= opts.max_slices; ++i) {
        std::vector<IVec> slice = pts(l, d, Rat(i) / Rat(slice_den));
        for (const IVec& v : slice) {
            bool compatible = true;
            for (const IVec& w : acc)
                if (l.pairing(v, w) < 0) { compatible = false; break; }
            if (compatible) acc.push_back(v);
        }
        if (!acc.empty() && cone_test(l, acc)) {
            sort_classes(acc);
            return acc;
        }
    }
    throw compute_error("find_neg_curves: finiteness not certified within the slice cap");
}

bool match_curve_sets(const Lattice& l, const std::vector<IVec>& s1,
                      const std::vector<IVec>& s2) {
    if (s1.size() != s2.size()) return false;
    const Eigen::Index k = static_cast<Eigen::Index>(s1.size());
    IMat g1(k, k), g2(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            g1(i, j) = l.pairing(s1[i], s1[j]);
            g2(i, j) = l.pairing(s2[i], s2[j]);
        }
    std::vector<Eigen::Index> perm(k, -1);
    std::vector<bool> used(k, false);
    std::function<bool(Eigen::Index)> assign = [&](Eigen::Index i) -> bool {
        if (i == k) return true;
        for (Eigen::Index c = 0; c < k; ++c) {
            if (used[c] || g1(i, i) != g2(c, c)) continue;
            bool ok = true;
            for (Eigen::Index j = 0; j < i; ++j)
                if (g1(i, j) != g2(c, perm[j])) { ok = false; break; }
            if (!ok) continue;
            perm[i] = c;
            used[c] = true;
            if (assign(i + 1)) return true;
            used[c] = false;
            perm[i] = -1;
        }
        return false;
    };
    return assign(0);
}

}  // namespace k3cox
