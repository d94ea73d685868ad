#include "k3cox/minimal.hpp"

#include "k3cox/cones.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace k3cox {

std::vector<IVec> nonneg_solutions(const IMat& m, const IVec& v) {
    const Eigen::Index cols = m.cols();
    if (m.rows() != v.size()) throw input_error("nonneg_solutions: dimension mismatch");
    if (cols == 0) {
        std::vector<IVec> out;
        if (content(v) == 0) out.push_back(IVec(0));
        return out;
    }
    std::vector<IVec> columns;
    for (Eigen::Index j = 0; j < cols; ++j) {
        if (content(IVec(m.col(j))) == 0)
            throw compute_error("nonneg_solutions: zero column makes the system unbounded");
        columns.push_back(m.col(j));
    }
    RationalCone cone = [&] {
        try {
            return cone_from_generators(m.rows(), columns);
        } catch (const invariant_error&) {
            throw compute_error("nonneg_solutions: columns span a line, system unbounded");
        }
    }();

    // a strictly positive functional on the columns, used for coefficient bounds
    IVec grading = IVec::Zero(m.rows());
    for (const IVec& f : cone.facet_normals) grading += f;
    std::vector<Int> colweight(cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        colweight[j] = grading.dot(columns[j]);
        if (colweight[j] <= 0)
            throw compute_error("nonneg_solutions: no positive grading, system unbounded");
    }

    // branch on columns of largest weight first
    std::vector<Eigen::Index> order(cols);
    for (Eigen::Index j = 0; j < cols; ++j) order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return colweight[a] > colweight[b]; });

    std::vector<IVec> out;
    IVec coeff = IVec::Zero(cols);
    std::function<void(size_t, IVec)> rec = [&](size_t pos, IVec residual) {
        if (!contains(cone, residual)) return;  // residual must stay expressible
        if (pos == static_cast<size_t>(cols)) {
            if (content(residual) == 0) out.push_back(coeff);
            return;
        }
        Eigen::Index j = order[pos];
        Int bound = floor_div(grading.dot(residual), colweight[j]);
        for (Int t = bound; t >= 0; --t) {
            coeff[j] = t;
            rec(pos + 1, IVec(residual - t * columns[j]));
        }
        coeff[j] = 0;
    };
    rec(0, v);
    return out;
}

WritingSet writings(const K3Surface& s, const IVec& d, const std::vector<IVec>& g) {
    WritingSet ws;
    for (const IVec& w : g) {
        if (w == d) continue;
        if (s.is_effective(IVec(d - w))) ws.support.push_back(w);
    }
    sort_classes(ws.support);
    if (ws.support.empty()) return ws;
    IMat m(d.size(), static_cast<Eigen::Index>(ws.support.size()));
    for (size_t j = 0; j < ws.support.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = ws.support[j];
    for (const IVec& sol : nonneg_solutions(m, d)) {
        std::vector<Int> row(sol.data(), sol.data() + sol.size());
        ws.writings.push_back(std::move(row));
    }
    return ws;
}

bool lemma_l2_applies(const K3Surface& s, const IVec& e1, const IVec& e2,
                      const IVec& e3, const IVec& d) {
    std::set<IVec, LexLess> curves(s.neg().begin(), s.neg().end());
    if (!curves.count(e1) || !curves.count(e2) || !curves.count(e3)) return false;
    if (IVec(e1 + e2 + e3) != d) return false;
    if (!s.is_nef(d) || content(d) == 0 || !s.is_effective(d)) return false;
    if (!s.is_bpf(d)) return false;
    return s.h1(IVec(e1 + e2)) == 0 && s.h1(IVec(e1 + e3)) == 0 && s.h1(IVec(e2 + e3)) == 0;
}

std::pair<bool, MinimalityEvidence> is_minimal_degree(const K3Surface& s, const IVec& d,
                                                      const std::vector<IVec>& g) {
    if (std::find(g.begin(), g.end(), d) == g.end())
        throw input_error("is_minimal_degree: degree not in the generating set");

    MinimalityEvidence ev;
    WritingSet ws = writings(s, d, g);
    ev.writing_count = ws.writings.size();
    if (ws.writings.empty()) {
        ev.kind = MinimalityEvidence::Kind::NoWritings;
        return {true, ev};
    }

    // the base-locus arguments below need |d| base point free
    if (!s.is_nef(d) || content(d) == 0 || !s.is_effective(d) || !s.is_bpf(d)) {
        ev.kind = MinimalityEvidence::Kind::Inconclusive;
        return {false, ev};
    }

    std::set<IVec, LexLess> curves(s.neg().begin(), s.neg().end());
    std::vector<size_t> curve_cols;
    for (size_t j = 0; j < ws.support.size(); ++j)
        if (curves.count(ws.support[j])) curve_cols.push_back(j);

    // B1: curve classes used in every writing
    std::vector<IVec> b1;
    for (size_t j : curve_cols) {
        bool everywhere = true;
        for (const auto& w : ws.writings)
            if (w[j] == 0) { everywhere = false; break; }
        if (everywhere) b1.push_back(ws.support[j]);
    }

    // B2: meeting curve pairs with one member in every writing
    std::vector<std::pair<IVec, IVec>> b2;
    for (size_t a = 0; a < curve_cols.size(); ++a) {
        for (size_t b = a + 1; b < curve_cols.size(); ++b) {
            size_t ja = curve_cols[a], jb = curve_cols[b];
            if (s.pairing(ws.support[ja], ws.support[jb]) <= 0) continue;
            bool covers = true;
            for (const auto& w : ws.writings)
                if (w[ja] == 0 && w[jb] == 0) { covers = false; break; }
            if (covers) b2.emplace_back(ws.support[ja], ws.support[jb]);
        }
    }

    // B3: lemma-l2 triples of curve classes with one member in every writing
    std::vector<std::array<IVec, 3>> b3;
    const auto& neg = s.neg();
    for (size_t i = 0; i < neg.size(); ++i)
        for (size_t j = i + 1; j < neg.size(); ++j)
            for (size_t k = j + 1; k < neg.size(); ++k) {
                if (IVec(neg[i] + neg[j] + neg[k]) != d) continue;
                if (!lemma_l2_applies(s, neg[i], neg[j], neg[k], d)) continue;
                bool covers = true;
                for (size_t w = 0; w < ws.writings.size() && covers; ++w) {
                    bool used = false;
                    for (const IVec& e : {neg[i], neg[j], neg[k]}) {
                        auto it = std::lower_bound(ws.support.begin(), ws.support.end(), e, LexLess{});
                        if (it != ws.support.end() && *it == e) {
                            size_t col = static_cast<size_t>(it - ws.support.begin());
                            if (ws.writings[w][col] > 0) { used = true; break; }
                        }
                    }
                    covers = used;
                }
                if (covers) b3.push_back({neg[i], neg[j], neg[k]});
            }

    ev.b1 = std::move(b1);
    ev.b2 = std::move(b2);
    ev.b3 = std::move(b3);

    // Ray certificate: for D = 3A with A^2 = 2 the ray subalgebra needs a
    // degree-three generator, since cubes of the degree-A sections span a
    // codimension-one subspace of H^0(3A). When every writing stays on the
    // ray of A, no product from outside the ray can fill the gap either.
    if (ev.b1.empty() && ev.b2.empty() && ev.b3.empty()) {
        bool div3 = true;
        for (Eigen::Index i = 0; i < d.size(); ++i) div3 &= (d[i] % 3 == 0);
        if (div3) {
            IVec a = d;
            for (Eigen::Index i = 0; i < a.size(); ++i) a[i] /= 3;
            if (s.square(a) == 2 && s.is_nef(a) && s.is_bpf(a)) {
                bool on_ray = true;
                for (const auto& w : ws.writings) {
                    for (size_t j = 0; j < ws.support.size() && on_ray; ++j) {
                        if (w[j] == 0) continue;
                        const IVec& u = ws.support[j];
                        on_ray = (u == a) || (u == IVec(2 * a));
                    }
                    if (!on_ray) break;
                }
                if (on_ray) ev.ray_witness = {a};
            }
        }
    }

    if (!ev.b1.empty()) ev.kind = MinimalityEvidence::Kind::BaseCurve;
    else if (!ev.b2.empty()) ev.kind = MinimalityEvidence::Kind::CurvePair;
    else if (!ev.b3.empty()) ev.kind = MinimalityEvidence::Kind::CurveTriple;
    else if (!ev.ray_witness.empty()) ev.kind = MinimalityEvidence::Kind::RayGenerator;
    else ev.kind = MinimalityEvidence::Kind::Inconclusive;
    bool minimal = ev.kind != MinimalityEvidence::Kind::Inconclusive;
    return {minimal, ev};
}

bool lemma_l1_eliminates(const K3Surface& s, const IVec& a, const IVec& e, const IMat& iota) {
    if (!s.is_nef(a)) throw input_error("lemma_l1: class is not nef");
    if (s.square(a) != 2) throw input_error("lemma_l1: class must have square 2");
    if (!s.is_bpf(a)) throw input_error("lemma_l1: class is not base point free");
    if (!is_isometry(s.lattice(), iota)) throw input_error("lemma_l1: not an isometry");
    if (IMat(iota * iota) != IMat(IMat::Identity(iota.rows(), iota.cols())))
        throw input_error("lemma_l1: matrix does not square to the identity");
    if (apply_isometry(iota, a) != a)
        throw input_error("lemma_l1: involution does not fix the class");

    bool is_curve = false;
    for (const IVec& c : s.neg()) is_curve |= (c == e);
    if (!is_curve) return false;
    if (apply_isometry(iota, e) == e) return false;
    IVec rest = 3 * a - e;
    if (!s.is_nef(rest) || !s.is_effective(rest)) return false;
    return s.is_bpf(rest);
}

}  // namespace k3cox
