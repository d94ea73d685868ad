#include "doctest.h"

#include "k3cox/coxgen.hpp"

#include <set>

using namespace k3cox;

namespace {

std::vector<IVec> vecs(std::initializer_list<std::initializer_list<long>> vs) {
    std::vector<IVec> out;
    for (auto& v : vs) out.push_back(vec_of(v));
    return out;
}

const K3Surface& surf_s1() {
    static K3Surface s(
        Lattice(mat_of(3, 3, {6, 0, 0, 0, -2, 0, 0, 0, -2})),
        vecs({{0, 1, 0}, {0, 0, 1}, {1, -2, 0}, {1, 0, -2}, {2, -3, -2}, {2, -2, -3}}));
    return s;
}

const K3Surface& surf_s411() {
    static K3Surface s(Lattice(mat_of(3, 3, {-32, 0, 4, 0, -2, 2, 4, 2, -2})),
                       vecs({{0, 1, 0}, {0, 0, 1}, {1, 3, 4}}));
    return s;
}

const K3Surface& surf_s112() {
    static K3Surface s(Lattice(mat_of(3, 3, {-2, 0, 2, 0, -2, 4, 2, 4, -8})),
                       vecs({{0, -1, -1}, {1, 2, 2}, {0, 3, 2}}));
    return s;
}

IMat s1_involution() { return mat_of(3, 3, {5, -6, -6, 2, -3, -2, 2, -2, -3}); }

}  // namespace

TEST_CASE("t_sets of S_1") {
    TSets ts = t_sets(surf_s1());

    bool pair_in_t1 = false;
    for (const auto& [a, b] : ts.t1)
        pair_in_t1 |= (a == vec_of({0, 0, 1}) && b == vec_of({0, 1, 0})) ||
                      (a == vec_of({0, 1, 0}) && b == vec_of({0, 0, 1}));
    CHECK(pair_in_t1);

    std::set<IVec, LexLess> t4(ts.t4.begin(), ts.t4.end());
    CHECK(t4.count(vec_of({2, -2, -2})) == 1);   // 2A for the square-2 class
    CHECK(t4.count(vec_of({3, -3, -3})) == 0);   // 3A survives when A^2 = 2
    CHECK(t4.count(vec_of({3, 0, 0})) == 1);     // 3A for A = (1,0,0), square 6

    // every T2 triple contains a nef member
    const auto& neg = surf_s1().neg();
    std::set<IVec, LexLess> curves(neg.begin(), neg.end());
    for (const auto& t : ts.t2) {
        int nef_members = 0;
        for (const IVec& e : t) nef_members += curves.count(e) ? 0 : 1;
        CHECK(nef_members >= 1);
    }
}

TEST_CASE("special pairs") {
    CHECK(special_pairs(surf_s1()).empty());
    CHECK(special_pairs(surf_s411()).empty());
    auto sp = special_pairs(surf_s112());
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].first == vec_of({0, 2, 1}));
    CHECK(sp[0].second == vec_of({1, 1, 1}));
}

TEST_CASE("candidate degrees") {
    auto cands = candidate_degrees(surf_s1());
    std::set<IVec, LexLess> cs(cands.begin(), cands.end());
    CHECK(cs.count(vec_of({3, -3, -3})) == 1);
    for (const IVec& d : cands) CHECK(surf_s1().is_nef(d));

    // |BNef| = 4 for S_411: 4 + 10 + 20 sums before deduplication
    auto c411 = candidate_degrees(surf_s411());
    CHECK(c411.size() <= 34);
    CHECK(c411.size() >= 20);
}

TEST_CASE("individual tests on S_1 degrees") {
    const K3Surface& s = surf_s1();
    DegreeVerdict v4 = test4(s, vec_of({2, -2, -2}));
    CHECK(!v4.kept);
    CHECK(v4.eliminated_by == 4);
    REQUIRE(v4.witness.size() == 1);
    CHECK(v4.witness[0] == vec_of({1, -1, -1}));

    // a single Hilbert-basis element passes all the shared tests
    IVec h = vec_of({1, -1, -1});
    CHECK(test1(s, h).kept);
    CHECK(test2(s, h).kept);
    CHECK(test3(s, h).kept);
    CHECK(test4(s, h).kept);
}

TEST_CASE("generators of S_1 reduce to the effective-cone Hilbert basis") {
    const K3Surface& s = surf_s1();
    GeneratorReport r = generators(s, {s1_involution()});
    CHECK(r.degrees == s.beff());
    CHECK(r.degrees.size() == 7);
    for (const DegreeVerdict& v : r.verdicts) {
        CHECK(!v.l1_unresolved);
        if (v.degree == vec_of({3, -3, -3})) CHECK(!v.kept);
    }
    // with or without the involution the answer agrees here: the Koszul
    // tests already dispose of the 3A degree
    GeneratorReport bare = generators(s, {});
    CHECK(bare.degrees == r.degrees);
}

TEST_CASE("generators of S_411: curve classes plus the nef Hilbert basis") {
    const K3Surface& s = surf_s411();
    GeneratorReport r = generators(s, {});
    std::vector<IVec> expected = s.neg();
    for (const IVec& b : s.bnef()) expected.push_back(b);
    sort_classes(expected);
    CHECK(r.degrees == expected);
    CHECK(r.degrees.size() == 7);
    for (const DegreeVerdict& v : r.verdicts) CHECK(!v.l1_unresolved);
}

TEST_CASE("pipeline output is schedule independent") {
    const K3Surface& s = surf_s411();
    GeneratorOptions serial;
    GeneratorOptions parallel;
    parallel.jobs = 4;
    GeneratorReport a = generators(s, {}, serial);
    GeneratorReport b = generators(s, {}, parallel);
    CHECK(a.degrees == b.degrees);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].degree == b.verdicts[i].degree);
        CHECK(a.verdicts[i].kept == b.verdicts[i].kept);
        CHECK(a.verdicts[i].eliminated_by == b.verdicts[i].eliminated_by);
    }
}

TEST_CASE("invalid involutions are rejected") {
    const K3Surface& s = surf_s1();
    CHECK_THROWS_AS(generators(s, {mat_of(3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1})}), input_error);
}

TEST_CASE("structural invariants of the kept set") {
    for (const K3Surface* s : {&surf_s1(), &surf_s411()}) {
        std::vector<IMat> invs;
        if (s == &surf_s1()) invs.push_back(s1_involution());
        GeneratorReport r = generators(*s, invs);
        // cone over the output degrees is the effective cone
        RationalCone c = cone_from_generators(3, r.degrees);
        CHECK(c.rays == s->eff_cone().rays);
        // the effective-cone Hilbert basis is contained in the output
        std::set<IVec, LexLess> kept(r.degrees.begin(), r.degrees.end());
        for (const IVec& b : s->beff()) CHECK(kept.count(b) == 1);
    }
}
