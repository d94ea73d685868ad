#include "k3cox/coxgen.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace k3cox {

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::NegCurve: return "neg-curve";
        case Tier::HilbertBasis: return "hb";
        case Tier::Sum2: return "sum2";
        case Tier::Sum3: return "sum3";
        case Tier::Special2FF: return "special-2FF'";
    }
    return "?";
}

namespace {

struct Pool {
    std::vector<IVec> members;       // curve classes first, then BNef
    size_t curve_count = 0;
    std::vector<bool> bpf;           // meaningful for nef members only

    bool is_curve(size_t i) const { return i < curve_count; }
};

Pool build_pool(const K3Surface& s) {
    Pool p;
    for (const IVec& c : s.neg()) p.members.push_back(c);
    p.curve_count = p.members.size();
    for (const IVec& b : s.bnef()) p.members.push_back(b);
    p.bpf.assign(p.members.size(), false);
    for (size_t i = p.curve_count; i < p.members.size(); ++i)
        p.bpf[i] = s.is_bpf(p.members[i]);
    return p;
}

// usable as a Koszul witness: curve classes always, nef classes when bpf
bool witness_ok(const Pool& p, size_t i) { return p.is_curve(i) || p.bpf[i]; }

struct PipelineData {
    TSets ts;
    std::map<IVec, std::vector<IVec>, LexLess> t4_witness;
    std::map<IVec, std::pair<IVec, IVec>, LexLess> t3_by_sum;
    // curve pairs summing to an isotropic class, keyed by the class
    std::map<IVec, std::vector<std::pair<IVec, IVec>>, LexLess> fiber_splits;
};

PipelineData build_pipeline_data(const K3Surface& s, const Pool& p) {
    PipelineData d;
    const size_t m = p.members.size();

    for (size_t i = 0; i < m; ++i) {
        if (!witness_ok(p, i)) continue;
        for (size_t j = i; j < m; ++j) {
            if (!witness_ok(p, j)) continue;
            if (i == j) {
                // a class may pair with itself only as two members of a pencil
                if (p.is_curve(i) || s.square(p.members[i]) != 0) continue;
            }
            if (s.pairing(p.members[i], p.members[j]) == 0)
                d.ts.t1.emplace_back(p.members[i], p.members[j]);
        }
    }

    for (size_t i = 0; i < m; ++i) {
        if (!witness_ok(p, i)) continue;
        for (size_t j = i + 1; j < m; ++j) {
            if (!witness_ok(p, j)) continue;
            for (size_t k = j + 1; k < m; ++k) {
                if (!witness_ok(p, k)) continue;
                if (p.is_curve(i) && p.is_curve(j) && p.is_curve(k)) continue;
                d.ts.t2.push_back({p.members[i], p.members[j], p.members[k]});
            }
        }
    }

    const auto& hb = s.bnef();
    for (const IVec& a : hb) {
        if (s.h1(a) != 0) continue;
        for (const IVec& b : hb) {
            if (!s.is_bpf(b)) continue;
            if (s.h1(IVec(a - b)) != 0) continue;
            if (s.h0(IVec(2 * b - a)) != 0) continue;
            d.ts.t3.emplace_back(a, b);
            IVec sum = a + b;
            d.t3_by_sum.emplace(sum, std::make_pair(a, b));
        }
    }

    for (const IVec& a : hb) {
        Int sq = s.square(a);
        if (sq != 2) {
            IVec tri = 3 * a;
            d.ts.t4.push_back(tri);
            d.t4_witness[tri] = {a};
        }
        bool two_dies = false;
        if (sq == 2 || sq == 0) {
            two_dies = true;
        } else if (sq > 2) {
            two_dies = !s.is_hyperelliptic(a);
        }
        if (two_dies) {
            IVec dbl = 2 * a;
            d.ts.t4.push_back(dbl);
            d.t4_witness[dbl] = {a};
        }
    }
    sort_classes(d.ts.t4);
    d.ts.t4.erase(std::unique(d.ts.t4.begin(), d.ts.t4.end()), d.ts.t4.end());

    for (const IVec& f : s.elliptic_classes()) {
        const auto& neg = s.neg();
        for (size_t i = 0; i < neg.size(); ++i)
            for (size_t j = i + 1; j < neg.size(); ++j)
                if (IVec(neg[i] + neg[j]) == f)
                    d.fiber_splits[f].emplace_back(neg[i], neg[j]);
    }
    return d;
}

struct Candidate {
    IVec degree;
    bool in_hb = false;
    std::vector<std::pair<int, int>> sum2;     // bnef index pairs, i <= j
    std::vector<std::array<int, 3>> sum3;      // bnef index triples, i <= j <= k
    std::vector<int> special;                  // indices into the special pair list
};

std::vector<Candidate> build_candidates(const K3Surface& s,
                                        const std::vector<std::pair<IVec, IVec>>& specials) {
    const auto& hb = s.bnef();
    const int n = static_cast<int>(hb.size());
    std::map<IVec, Candidate, LexLess> by_degree;
    auto slot = [&](const IVec& deg) -> Candidate& {
        auto it = by_degree.find(deg);
        if (it == by_degree.end()) {
            Candidate c;
            c.degree = deg;
            it = by_degree.emplace(deg, std::move(c)).first;
        }
        return it->second;
    };
    for (int i = 0; i < n; ++i) slot(hb[i]).in_hb = true;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) slot(IVec(hb[i] + hb[j])).sum2.emplace_back(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k)
                slot(IVec(hb[i] + hb[j] + hb[k])).sum3.push_back({i, j, k});
    for (size_t t = 0; t < specials.size(); ++t) {
        IVec deg = 2 * (specials[t].first + specials[t].second);
        slot(deg).special.push_back(static_cast<int>(t));
    }
    std::vector<Candidate> out;
    out.reserve(by_degree.size());
    for (auto& [deg, c] : by_degree) out.push_back(std::move(c));
    return out;
}

bool run_test1(const K3Surface& s, const PipelineData& pd, const IVec& d,
               std::vector<IVec>* witness) {
    for (const auto& [a, b] : pd.ts.t1) {
        // a witness equal to d would factor a degree-d section through itself
        if (a == d || b == d) continue;
        if (s.h1(IVec(d - a - b)) == 0) {
            if (witness) *witness = {a, b};
            return true;
        }
    }
    return false;
}

bool run_test2(const K3Surface& s, const PipelineData& pd, const IVec& d,
               std::vector<IVec>* witness) {
    for (const auto& t : pd.ts.t2) {
        if (t[0] == d || t[1] == d || t[2] == d) continue;
        if (s.h1(IVec(d - t[0] - t[1])) != 0) continue;
        if (s.h1(IVec(d - t[0] - t[2])) != 0) continue;
        if (s.h1(IVec(d - t[1] - t[2])) != 0) continue;
        if (s.h2(IVec(d - t[0] - t[1] - t[2])) != 0) continue;
        if (witness) *witness = {t[0], t[1], t[2]};
        return true;
    }
    return false;
}

bool run_test3(const PipelineData& pd, const IVec& d, std::vector<IVec>* witness) {
    auto it = pd.t3_by_sum.find(d);
    if (it == pd.t3_by_sum.end()) return false;
    if (witness) *witness = {it->second.first, it->second.second};
    return true;
}

bool run_test4(const PipelineData& pd, const IVec& d, std::vector<IVec>* witness) {
    auto it = pd.t4_witness.find(d);
    if (it == pd.t4_witness.end()) return false;
    if (witness) *witness = it->second;
    return true;
}

// Lemma va: D = F + D' with D' very ample and F an elliptic class splitting
// into two curves; eliminate when the section pairs span a codimension-2 space
bool run_test5(const K3Surface& s, const PipelineData& pd, const IVec& d,
               const std::vector<std::pair<int, int>>& sum2, std::vector<IVec>* witness) {
    const auto& hb = s.bnef();
    for (const auto& [i, j] : sum2) {
        for (const auto& [fi, di] : {std::pair(i, j), std::pair(j, i)}) {
            const IVec& f = hb[fi];
            const IVec& dprime = hb[di];
            if (s.square(f) != 0) continue;
            auto split = pd.fiber_splits.find(f);
            if (split == pd.fiber_splits.end()) continue;
            if (!s.is_very_ample(dprime)) continue;
            for (const auto& [e1, e2] : split->second) {
                Int dim_im = s.h0(IVec(d - e1)) + s.h0(IVec(d - e2)) - s.h0(dprime);
                if (s.h0(d) - dim_im == 2) {
                    if (witness) *witness = {f, dprime, e1, e2};
                    return true;
                }
            }
        }
    }
    return false;
}

// Ottem test with A a sum of two Hilbert-basis elements and B a third one
bool run_test6(const K3Surface& s, const IVec& d,
               const std::vector<std::array<int, 3>>& sum3, std::vector<IVec>* witness) {
    const auto& hb = s.bnef();
    for (const auto& t : sum3) {
        for (int pos = 0; pos < 3; ++pos) {
            IVec b = hb[t[pos]];
            IVec a = d - b;
            if (!s.is_bpf(b)) continue;
            if (s.h1(a) != 0) continue;
            if (s.h1(IVec(a - b)) != 0) continue;
            if (s.h0(IVec(2 * b - a)) != 0) continue;
            if (witness) *witness = {a, b};
            return true;
        }
    }
    return false;
}

void require_candidate(const K3Surface& s, const IVec& d) {
    if (!s.is_nef(d) || content(d) == 0 || !s.is_effective(d))
        throw input_error("test: candidate degree must be nef, effective and nonzero");
}

DegreeVerdict shared_verdict(const K3Surface& s, const PipelineData& pd, const IVec& d) {
    DegreeVerdict v;
    v.degree = d;
    std::vector<IVec> w;
    if (run_test4(pd, d, &w)) {
        v.kept = false;
        v.eliminated_by = 4;
        v.witness = w;
    } else if (run_test1(s, pd, d, &w)) {
        v.kept = false;
        v.eliminated_by = 1;
        v.witness = w;
    } else if (run_test3(pd, d, &w)) {
        v.kept = false;
        v.eliminated_by = 3;
        v.witness = w;
    } else if (run_test2(s, pd, d, &w)) {
        v.kept = false;
        v.eliminated_by = 2;
        v.witness = w;
    }
    return v;
}

}  // namespace

TSets t_sets(const K3Surface& s) {
    Pool p = build_pool(s);
    return build_pipeline_data(s, p).ts;
}

std::vector<std::pair<IVec, IVec>> special_pairs(const K3Surface& s) {
    std::vector<std::pair<IVec, IVec>> out;
    const auto& fibers = s.elliptic_classes();
    for (size_t i = 0; i < fibers.size(); ++i)
        for (size_t j = i + 1; j < fibers.size(); ++j)
            if (s.pairing(fibers[i], fibers[j]) == 2)
                out.emplace_back(fibers[i], fibers[j]);
    return out;
}

std::vector<IVec> candidate_degrees(const K3Surface& s) {
    std::vector<IVec> out;
    for (const Candidate& c : build_candidates(s, special_pairs(s)))
        out.push_back(c.degree);
    return out;  // already sorted: candidates are keyed lexicographically
}

DegreeVerdict test1(const K3Surface& s, const IVec& d) {
    require_candidate(s, d);
    Pool p = build_pool(s);
    PipelineData pd = build_pipeline_data(s, p);
    DegreeVerdict v;
    v.degree = d;
    std::vector<IVec> w;
    if (run_test1(s, pd, d, &w)) { v.kept = false; v.eliminated_by = 1; v.witness = w; }
    return v;
}

DegreeVerdict test2(const K3Surface& s, const IVec& d) {
    require_candidate(s, d);
    Pool p = build_pool(s);
    PipelineData pd = build_pipeline_data(s, p);
    DegreeVerdict v;
    v.degree = d;
    std::vector<IVec> w;
    if (run_test2(s, pd, d, &w)) { v.kept = false; v.eliminated_by = 2; v.witness = w; }
    return v;
}

DegreeVerdict test3(const K3Surface& s, const IVec& d) {
    require_candidate(s, d);
    Pool p = build_pool(s);
    PipelineData pd = build_pipeline_data(s, p);
    DegreeVerdict v;
    v.degree = d;
    std::vector<IVec> w;
    if (run_test3(pd, d, &w)) { v.kept = false; v.eliminated_by = 3; v.witness = w; }
    return v;
}

DegreeVerdict test4(const K3Surface& s, const IVec& d) {
    require_candidate(s, d);
    Pool p = build_pool(s);
    PipelineData pd = build_pipeline_data(s, p);
    DegreeVerdict v;
    v.degree = d;
    std::vector<IVec> w;
    if (run_test4(pd, d, &w)) { v.kept = false; v.eliminated_by = 4; v.witness = w; }
    return v;
}

DegreeVerdict test5(const K3Surface& s, const IVec& d) {
    require_candidate(s, d);
    Pool p = build_pool(s);
    PipelineData pd = build_pipeline_data(s, p);
    const auto& hb = s.bnef();
    std::vector<std::pair<int, int>> sum2;
    for (int i = 0; i < static_cast<int>(hb.size()); ++i)
        for (int j = i; j < static_cast<int>(hb.size()); ++j)
            if (IVec(hb[i] + hb[j]) == d) sum2.emplace_back(i, j);
    if (sum2.empty()) throw input_error("test5: degree is not a sum of two Hilbert-basis elements");
    DegreeVerdict v;
    v.degree = d;
    v.tier = Tier::Sum2;
    std::vector<IVec> w;
    if (run_test5(s, pd, d, sum2, &w)) { v.kept = false; v.eliminated_by = 5; v.witness = w; }
    return v;
}

DegreeVerdict test6(const K3Surface& s, const IVec& d) {
    require_candidate(s, d);
    const auto& hb = s.bnef();
    const int n = static_cast<int>(hb.size());
    std::vector<std::array<int, 3>> sum3;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k)
                if (IVec(hb[i] + hb[j] + hb[k]) == d) sum3.push_back({i, j, k});
    if (sum3.empty()) throw input_error("test6: degree is not a sum of three Hilbert-basis elements");
    DegreeVerdict v;
    v.degree = d;
    v.tier = Tier::Sum3;
    std::vector<IVec> w;
    if (run_test6(s, d, sum3, &w)) { v.kept = false; v.eliminated_by = 6; v.witness = w; }
    return v;
}

GeneratorReport generators(const K3Surface& s, const std::vector<IMat>& involutions,
                           const GeneratorOptions& opts) {
    for (const IMat& m : involutions) {
        if (!is_isometry(s.lattice(), m))
            throw input_error("generators: involution is not an isometry");
        if (IMat(m * m) != IMat(IMat::Identity(m.rows(), m.cols())))
            throw input_error("generators: involution does not square to the identity");
    }

    Pool pool = build_pool(s);
    PipelineData pd = build_pipeline_data(s, pool);
    auto specials = special_pairs(s);
    std::vector<Candidate> cands = build_candidates(s, specials);

    auto check_deadline = [&] {
        if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
            throw compute_error("generators: timeout");
    };

    std::vector<DegreeVerdict> verdicts(cands.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cands.size()) return;
            try {
                check_deadline();
                const Candidate& c = cands[i];
                DegreeVerdict v = shared_verdict(s, pd, c.degree);
                if (v.kept) {
                    std::vector<IVec> w5, w6;
                    if (c.in_hb) {
                        v.tier = Tier::HilbertBasis;
                    } else if (!c.sum2.empty() && !run_test5(s, pd, c.degree, c.sum2, &w5)) {
                        v.tier = Tier::Sum2;
                    } else if (!c.sum3.empty() && !run_test6(s, c.degree, c.sum3, &w6)) {
                        v.tier = Tier::Sum3;
                    } else if (!c.special.empty()) {
                        v.tier = Tier::Special2FF;
                    } else if (!w5.empty()) {
                        v.kept = false;
                        v.eliminated_by = 5;
                        v.witness = w5;
                    } else {
                        v.kept = false;
                        v.eliminated_by = 6;
                        v.witness = w6;
                    }
                } else if (!c.in_hb && c.sum2.empty() && c.sum3.empty() && !c.special.empty()) {
                    v.tier = Tier::Special2FF;
                } else if (!c.in_hb && c.sum2.empty() && !c.sum3.empty()) {
                    v.tier = Tier::Sum3;
                } else if (!c.in_hb && !c.sum2.empty()) {
                    v.tier = Tier::Sum2;
                }
                verdicts[i] = std::move(v);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(cands.size());
                return;
            }
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // covering-involution pass for kept degrees of the form 3A, A^2 = 2
    for (DegreeVerdict& v : verdicts) {
        if (!v.kept) continue;
        bool div3 = true;
        for (Eigen::Index i = 0; i < v.degree.size(); ++i) div3 &= (v.degree[i] % 3 == 0);
        if (!div3) continue;
        IVec a = v.degree;
        for (Eigen::Index i = 0; i < a.size(); ++i) a[i] /= 3;
        if (s.square(a) != 2 || !s.is_nef(a)) continue;
        if (!s.is_bpf(a)) continue;  // the covering argument needs a free system
        if (!opts.apply_l1) {
            v.l1_unresolved = true;
            continue;
        }
        const IMat* match = nullptr;
        for (const IMat& m : involutions)
            if (apply_isometry(m, a) == a) { match = &m; break; }
        if (!match) {
            v.l1_unresolved = true;
            continue;
        }
        for (const IVec& e : s.neg()) {
            IVec moved = apply_isometry(*match, e);
            if (moved == e) continue;
            IVec rest = 3 * a - e;
            if (!s.is_nef(rest) || !s.is_effective(rest)) continue;
            if (!s.is_bpf(rest)) continue;
            v.kept = false;
            v.eliminated_by = 7;
            v.witness = {a, e};
            break;
        }
        if (v.kept) v.l1_unresolved = true;  // involution given but inconclusive
    }

    GeneratorReport report;
    for (const IVec& c : s.neg()) {
        DegreeVerdict v;
        v.degree = c;
        v.tier = Tier::NegCurve;
        v.kept = true;
        report.verdicts.push_back(std::move(v));
    }
    for (DegreeVerdict& v : verdicts) report.verdicts.push_back(std::move(v));
    std::sort(report.verdicts.begin(), report.verdicts.end(),
              [](const DegreeVerdict& a, const DegreeVerdict& b) {
                  return lex_less(a.degree, b.degree);
              });
    for (const DegreeVerdict& v : report.verdicts)
        if (v.kept) report.degrees.push_back(v.degree);
    sort_classes(report.degrees);
    return report;
}

}  // namespace k3cox
