#include "k3cox/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace k3cox {

namespace detail {

namespace {

struct TrackedRay {
    IVec v;
    std::vector<uint8_t> tight;  // one flag per processed constraint
};

int tight_rank(const std::vector<IVec>& constraints, const std::vector<uint8_t>& mask,
               Eigen::Index n) {
    std::vector<const IVec*> sel;
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) sel.push_back(&constraints[i]);
    if (sel.empty()) return 0;
    QMat m(static_cast<Eigen::Index>(sel.size()), n);
    for (size_t i = 0; i < sel.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = sel[i]->transpose().cast<Rat>();
    return rank(m);
}

}  // namespace

HalfspaceIntersection extreme_rays(Eigen::Index n, const std::vector<IVec>& raw) {
    // drop zero constraints, primitivize
    std::vector<IVec> constraints;
    for (const IVec& a : raw) {
        if (a.size() != n) throw input_error("extreme_rays: dimension mismatch");
        IVec p = primitive(a);
        if (content(p) != 0) constraints.push_back(std::move(p));
    }

    std::vector<IVec> lin;
    for (Eigen::Index i = 0; i < n; ++i) {
        IVec e = IVec::Zero(n);
        e[i] = 1;
        lin.push_back(e);
    }
    std::vector<TrackedRay> rays;

    for (size_t t = 0; t < constraints.size(); ++t) {
        const IVec& a = constraints[t];

        // a lineality direction not contained in the hyperplane becomes a ray
        Eigen::Index hit = -1;
        for (size_t i = 0; i < lin.size(); ++i)
            if (a.dot(lin[i]) != 0) { hit = static_cast<Eigen::Index>(i); break; }
        if (hit >= 0) {
            IVec l0 = lin[hit];
            if (a.dot(l0) < 0) l0 = -l0;
            lin.erase(lin.begin() + hit);
            Int al0 = a.dot(l0);
            for (IVec& l : lin) {
                Int al = a.dot(l);
                if (al != 0) l = primitive(IVec(al0 * l - al * l0));
            }
            for (TrackedRay& r : rays) {
                Int ar = a.dot(r.v);
                if (ar != 0) r.v = primitive(IVec(al0 * r.v - ar * l0));
                r.tight.push_back(1);
            }
            TrackedRay nr;
            nr.v = std::move(l0);
            nr.tight.assign(t, 1);
            nr.tight.push_back(0);
            rays.push_back(std::move(nr));
            continue;
        }

        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rays.size(); ++i) {
            Int ar = a.dot(rays[i].v);
            if (ar > 0) pos.push_back(i);
            else if (ar < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (TrackedRay& r : rays) r.tight.push_back(a.dot(r.v) == 0 ? 1 : 0);
            continue;
        }

        const int want = static_cast<int>(n) - static_cast<int>(lin.size()) - 2;
        std::vector<TrackedRay> created;
        for (size_t p : pos) {
            for (size_t m : neg) {
                std::vector<uint8_t> common(t, 0);
                for (size_t i = 0; i < t; ++i)
                    common[i] = rays[p].tight[i] && rays[m].tight[i];
                if (want < 0 || tight_rank(constraints, common, n) != want) continue;
                Int ap = a.dot(rays[p].v), am = a.dot(rays[m].v);
                TrackedRay nr;
                nr.v = primitive(IVec(ap * rays[m].v - am * rays[p].v));
                nr.tight = std::move(common);
                nr.tight.push_back(1);
                created.push_back(std::move(nr));
            }
        }
        std::vector<TrackedRay> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            Int ar = a.dot(rays[i].v);
            if (ar < 0) continue;
            rays[i].tight.push_back(ar == 0 ? 1 : 0);
            next.push_back(std::move(rays[i]));
        }
        std::set<IVec, LexLess> seen;
        for (TrackedRay& r : next) seen.insert(r.v);
        for (TrackedRay& r : created) {
            if (seen.insert(r.v).second) next.push_back(std::move(r));
        }
        rays = std::move(next);
    }

    HalfspaceIntersection out;
    out.lineality = std::move(lin);
    for (TrackedRay& r : rays) out.rays.push_back(std::move(r.v));
    return out;
}

}  // namespace detail

namespace {

// canonical representative modulo the span of the lineality basis
IVec reduce_mod_lineality(IVec v, const std::vector<IVec>& lin, Eigen::Index n) {
    if (lin.empty()) return v;
    QMat l(n, static_cast<Eigen::Index>(lin.size()));
    for (size_t j = 0; j < lin.size(); ++j) l.col(static_cast<Eigen::Index>(j)) = lin[j].cast<Rat>();
    QVec w = v.cast<Rat>();
    // column echelon elimination of w against l
    std::vector<bool> used(lin.size(), false);
    for (Eigen::Index r = 0; r < n; ++r) {
        Eigen::Index pc = -1;
        for (Eigen::Index c = 0; c < l.cols(); ++c)
            if (!used[c] && l(r, c) != 0) { pc = c; break; }
        if (pc < 0) continue;
        used[pc] = true;
        for (Eigen::Index c = 0; c < l.cols(); ++c) {
            if (c == pc || l(r, c) == 0) continue;
            Rat f = l(r, c) / l(r, pc);
            l.col(c) -= f * l.col(pc);
        }
        if (w[r] != 0) {
            Rat f = w[r] / l(r, pc);
            w -= f * l.col(pc);
        }
    }
    Int scale = 1;
    for (Eigen::Index i = 0; i < n; ++i) scale = ilcm(scale, den(w[i]));
    IVec out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = num(w[i] * scale);
    return primitive(out);
}

}  // namespace

RationalCone cone_from_generators(Eigen::Index n, const std::vector<IVec>& gens) {
    if (gens.empty()) throw input_error("cone_from_generators: no generators");
    std::set<IVec, LexLess> uniq;
    for (const IVec& g : gens) {
        if (g.size() != n) throw input_error("cone_from_generators: dimension mismatch");
        IVec p = primitive(g);
        if (content(p) != 0) uniq.insert(std::move(p));
    }
    RationalCone c;
    c.ambient = n;
    if (uniq.empty()) {  // the zero cone
        c.dim = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            IVec e = IVec::Zero(n);
            e[i] = 1;
            c.facet_normals.push_back(e);
            c.facet_normals.push_back(IVec(-e));
        }
        sort_classes(c.facet_normals);
        return c;
    }
    std::vector<IVec> gv(uniq.begin(), uniq.end());

    auto dual = detail::extreme_rays(n, gv);
    c.dim = static_cast<int>(n - dual.lineality.size());

    // pointedness certificate: the sum of the dual rays must be strictly
    // positive on every generator
    {
        IVec y = IVec::Zero(n);
        for (const IVec& r : dual.rays) y += r;
        for (const IVec& g : gv)
            if (y.dot(g) <= 0)
                throw invariant_error("cone_from_generators: cone contains a line");
    }

    std::set<IVec, LexLess> facets;
    for (const IVec& r : dual.rays)
        facets.insert(reduce_mod_lineality(r, dual.lineality, n));
    for (const IVec& l : dual.lineality) {
        facets.insert(l);
        facets.insert(IVec(-l));
    }
    c.facet_normals.assign(facets.begin(), facets.end());

    // a generator is an extreme ray iff its tight facet normals span a
    // hyperplane of the ambient space
    for (const IVec& g : gv) {
        std::vector<const IVec*> tight;
        for (const IVec& f : c.facet_normals)
            if (f.dot(g) == 0) tight.push_back(&f);
        QMat m(static_cast<Eigen::Index>(tight.size()), n);
        for (size_t i = 0; i < tight.size(); ++i)
            m.row(static_cast<Eigen::Index>(i)) = tight[i]->transpose().cast<Rat>();
        if (tight.size() >= static_cast<size_t>(n - 1) && rank(m) == static_cast<int>(n) - 1)
            c.rays.push_back(g);
    }
    sort_classes(c.rays);
    return c;
}

RationalCone dual_cone(const RationalCone& c) {
    if (c.dim != static_cast<int>(c.ambient))
        throw invariant_error("dual_cone: cone not full-dimensional, dual would contain a line");
    RationalCone d;
    d.ambient = c.ambient;
    d.dim = c.dim;
    d.rays = c.facet_normals;
    d.facet_normals = c.rays;
    sort_classes(d.rays);
    sort_classes(d.facet_normals);
    return d;
}

bool contains(const RationalCone& c, const IVec& v) {
    if (v.size() != c.ambient) throw input_error("contains: dimension mismatch");
    for (const IVec& f : c.facet_normals)
        if (f.dot(v) < 0) return false;
    return true;
}

namespace detail {

std::vector<std::vector<IVec>> triangulate(const RationalCone& c) {
    std::vector<std::vector<IVec>> out;
    if (c.rays.empty()) return out;
    if (c.rays.size() == static_cast<size_t>(c.dim)) {
        out.push_back(c.rays);
        return out;
    }
    const IVec& r0 = c.rays.front();  // rays are sorted, so this is lex-least
    for (const IVec& f : c.facet_normals) {
        if (f.dot(r0) == 0) continue;  // facet contains r0 (or is a span normal)
        std::vector<IVec> on_facet;
        for (const IVec& r : c.rays)
            if (f.dot(r) == 0) on_facet.push_back(r);
        if (on_facet.empty()) continue;
        RationalCone sub = cone_from_generators(c.ambient, on_facet);
        for (auto& simplex : triangulate(sub)) {
            simplex.push_back(r0);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

std::vector<IVec> parallelepiped_points(const std::vector<IVec>& rays, Eigen::Index n) {
    const Eigen::Index d = static_cast<Eigen::Index>(rays.size());
    IMat r(n, d);
    for (Eigen::Index j = 0; j < d; ++j) r.col(j) = rays[j];

    IMat w;      // basis of the saturated span lattice
    IMat rsq;    // rays in w-coordinates, a square d x d matrix
    if (d == n) {
        w = IMat::Identity(n, n);
        rsq = r;
    } else {
        w = saturated_span_basis(r);
        if (w.cols() != d)
            throw invariant_error("parallelepiped_points: rays not linearly independent");
        // solve w * rsq = r exactly via d independent rows of w
        QMat wq = w.cast<Rat>();
        std::vector<Eigen::Index> rows;
        {
            QMat acc(0, d);
            for (Eigen::Index i = 0; i < n && static_cast<Eigen::Index>(rows.size()) < d; ++i) {
                QMat test(acc.rows() + 1, d);
                test.topRows(acc.rows()) = acc;
                test.row(acc.rows()) = wq.row(i);
                if (rank(test) > rank(acc)) {
                    acc = test;
                    rows.push_back(i);
                }
            }
        }
        QMat sub(d, d);
        IMat rsub(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            sub.row(i) = wq.row(rows[i]);
            rsub.row(i) = r.row(rows[i]);
        }
        QMat sol = inverse(sub) * rsub.cast<Rat>();
        rsq.resize(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) {
                if (den(sol(i, j)) != 1)
                    throw invariant_error("parallelepiped_points: non-integral coordinates");
                rsq(i, j) = num(sol(i, j));
            }
    }

    Smith f = smith_normal_form(rsq);
    Int vol = 1;
    for (Eigen::Index i = 0; i < d; ++i) vol *= f.s(i, i);
    if (vol == 0) throw invariant_error("parallelepiped_points: degenerate simplex");
    if (vol > 10000000) throw compute_error("parallelepiped_points: index too large");

    QMat rinv = inverse(rsq.cast<Rat>());
    std::vector<IVec> out;
    IVec y = IVec::Zero(d);
    for (;;) {
        IVec x = f.u * y;
        QVec lam = rinv * x.cast<Rat>();
        for (Eigen::Index i = 0; i < d; ++i) lam[i] -= Rat(rat_floor(lam[i]));
        // point = rsq * frac(lambda), integral by construction
        QVec pq = rsq.cast<Rat>() * lam;
        IVec p(d);
        for (Eigen::Index i = 0; i < d; ++i) p[i] = num(pq[i]);
        if (content(p) != 0) out.push_back(w * p);

        // advance the mixed-radix counter over the diagonal of s
        Eigen::Index i = 0;
        while (i < d) {
            ++y[i];
            if (y[i] < f.s(i, i)) break;
            y[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    return out;
}

}  // namespace detail

std::vector<IVec> hilbert_basis(const RationalCone& c) {
    std::vector<IVec> out;
    if (c.rays.empty()) return out;

    std::set<IVec, LexLess> cand(c.rays.begin(), c.rays.end());
    for (const auto& simplex : detail::triangulate(c))
        for (IVec& p : detail::parallelepiped_points(simplex, c.ambient))
            cand.insert(std::move(p));

    IVec grading = IVec::Zero(c.ambient);
    for (const IVec& f : c.facet_normals) grading += f;

    std::vector<IVec> ordered(cand.begin(), cand.end());
    std::sort(ordered.begin(), ordered.end(), [&](const IVec& a, const IVec& b) {
        Int ga = grading.dot(a), gb = grading.dot(b);
        if (ga != gb) return ga < gb;
        return lex_less(a, b);
    });

    // x is reducible iff x - b stays in the cone for some smaller basis element
    for (const IVec& x : ordered) {
        bool reducible = false;
        for (const IVec& b : out) {
            IVec diff = x - b;
            if (contains(c, diff)) { reducible = true; break; }
        }
        if (!reducible) out.push_back(x);
    }
    sort_classes(out);
    return out;
}

bool is_negative_semidefinite(const Lattice& l, const std::vector<IVec>& vs) {
    if (vs.empty()) throw input_error("is_negative_semidefinite: empty list");
    const Eigen::Index k = static_cast<Eigen::Index>(vs.size());
    QMat g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = i; j < k; ++j)
            g(i, j) = g(j, i) = Rat(l.pairing(vs[i], vs[j]));
    return is_positive_semidefinite(QMat(-g));
}

}  // namespace k3cox
