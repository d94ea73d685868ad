#include "doctest.h"

#include "k3cox/linsys.hpp"

#include <random>

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

const K3Surface& surf_s111() {
    static K3Surface s(Lattice(mat_of(3, 3, {-2, 0, 1, 0, -2, 2, 1, 2, -2})),
                       vecs({{-1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
    return s;
}

const K3Surface& surf_s112() {
    static K3Surface s(Lattice(mat_of(3, 3, {-2, 0, 2, 0, -2, 4, 2, 4, -8})),
                       vecs({{0, -1, -1}, {1, 2, 2}, {0, 3, 2}}));
    return s;
}

}  // namespace

TEST_CASE("cones of S_1 and S_411 match the published extremal data") {
    const K3Surface& s = surf_s1();
    CHECK(s.eff_cone().rays == vecs({{0, 0, 1}, {0, 1, 0}, {1, -2, 0}, {1, 0, -2},
                                     {2, -3, -2}, {2, -2, -3}}));
    CHECK(s.nef_cone().rays == vecs({{1, 0, 0}, {2, -3, 0}, {2, 0, -3}, {4, -6, -3},
                                     {4, -3, -6}, {5, -6, -6}}));
    CHECK(contains(s.nef_cone(), s.ample()));
    CHECK(s.square(s.ample()) > 0);

    const K3Surface& t = surf_s411();
    CHECK(t.nef_cone().rays == vecs({{0, 1, 1}, {1, 3, 5}, {1, 4, 4}}));
}

TEST_CASE("hilbert bases of S_1 reproduce the published rows") {
    const K3Surface& s = surf_s1();
    CHECK(s.beff() == vecs({{0, 0, 1}, {0, 1, 0}, {1, -2, 0}, {1, -1, -1}, {1, 0, -2},
                            {2, -3, -2}, {2, -2, -3}}));
    CHECK(s.bnef() == vecs({{1, -1, -1}, {1, -1, 0}, {1, 0, -1}, {1, 0, 0},
                            {2, -3, -1}, {2, -3, 0}, {2, -1, -3}, {2, 0, -3},
                            {3, -4, -3}, {3, -3, -4}, {4, -6, -3}, {4, -3, -6},
                            {5, -6, -6}}));
    for (const IVec& v : s.bnef()) {
        CHECK(s.is_nef(v));
        CHECK(s.is_effective(v));
    }
}

TEST_CASE("nefness") {
    CHECK(surf_s1().is_nef(vec_of({1, -1, -1})));
    CHECK(!surf_s1().is_nef(vec_of({0, 1, 0})));
    CHECK(surf_s411().is_nef(vec_of({0, 1, 1})));
}

TEST_CASE("h0 frozen values") {
    const K3Surface& s = surf_s1();
    CHECK(s.h0(vec_of({0, 1, 0})) == 1);
    CHECK(s.h0(vec_of({1, -1, -1})) == 3);
    CHECK(s.h0(vec_of({2, -3, 0})) == 5);
    CHECK(s.h0(vec_of({0, 0, 0})) == 1);
    CHECK(surf_s411().h0(vec_of({0, 2, 2})) == 3);
}

TEST_CASE("h2 and h1 frozen values") {
    const K3Surface& s = surf_s1();
    CHECK(s.h2(vec_of({1, -1, -1})) == 0);
    CHECK(s.h2(vec_of({0, 0, 0})) == 1);
    CHECK(s.h2(vec_of({0, -1, 0})) == 1);
    CHECK(s.h1(vec_of({1, -1, -1})) == 0);
    CHECK(s.h1(vec_of({0, 0, 0})) == 0);
    CHECK(surf_s411().h1(vec_of({0, 2, 2})) == 1);
}

TEST_CASE("effectivity matches cone membership") {
    const K3Surface& s = surf_s1();
    CHECK(s.is_effective(vec_of({1, -1, -1})));
    CHECK(!s.is_effective(vec_of({0, -1, 0})));
    CHECK(s.is_effective(vec_of({0, 0, 0})));

    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> d(-10, 10);
    for (int t = 0; t < 1000; ++t) {
        IVec v(3);
        for (int i = 0; i < 3; ++i) v[i] = d(rng);
        CHECK(s.is_effective(v) == contains(s.eff_cone(), v));
        // Riemann-Roch consistency, h1 nonnegative by construction
        Int chi = 2 + s.square(v) / 2;
        CHECK(s.h0(v) - s.h1(v) + s.h2(v) == chi);
    }
}

TEST_CASE("h0 invariant under base-component subtraction") {
    const K3Surface& s = surf_s1();
    std::mt19937 rng(999);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int t = 0; t < 300; ++t) {
        IVec v(3);
        for (int i = 0; i < 3; ++i) v[i] = d(rng);
        for (const IVec& c : s.neg())
            if (s.pairing(v, c) < 0) CHECK(s.h0(v) == s.h0(IVec(v - c)));
    }
}

TEST_CASE("elliptic classes") {
    CHECK(surf_s1().elliptic_classes().empty());
    CHECK(surf_s411().elliptic_classes() == vecs({{0, 1, 1}, {1, 3, 5}, {1, 4, 4}}));

    const auto& e112 = surf_s112().elliptic_classes();
    bool has_021 = false, has_111 = false;
    for (const IVec& f : e112) {
        has_021 |= (f == vec_of({0, 2, 1}));
        has_111 |= (f == vec_of({1, 1, 1}));
    }
    CHECK(has_021);
    CHECK(has_111);
    CHECK(surf_s112().pairing(vec_of({0, 2, 1}), vec_of({1, 1, 1})) == 2);

    // fiber classes are isotropic primitive nef, and distinct fibrations
    // never meet in one point
    for (const auto* s : {&surf_s411(), &surf_s112(), &surf_s111()}) {
        for (const IVec& f : s->elliptic_classes()) {
            CHECK(s->square(f) == 0);
            CHECK(content(f) == 1);
            CHECK(s->is_nef(f));
            for (const IVec& g : s->elliptic_classes())
                if (f != g) CHECK(s->pairing(f, g) >= 2);
        }
    }
}

TEST_CASE("base point freeness") {
    CHECK(surf_s1().is_bpf(vec_of({1, -1, -1})));
    CHECK(surf_s411().is_bpf(vec_of({0, 1, 1})));
    // (1,2,2) = 2(1,1,1) + (-1,0,0) with F.E = 1: the classic exception
    CHECK(!surf_s111().is_bpf(vec_of({1, 2, 2})));
    CHECK_THROWS_AS(surf_s1().is_bpf(vec_of({0, 1, 0})), input_error);
    CHECK_THROWS_AS(surf_s1().is_bpf(vec_of({0, 0, 0})), input_error);
}

TEST_CASE("hyperellipticity") {
    CHECK(surf_s1().is_hyperelliptic(vec_of({1, -1, -1})));
    CHECK(!surf_s1().is_hyperelliptic(vec_of({1, 0, 0})));
    CHECK(!surf_s411().is_hyperelliptic(vec_of({1, 4, 5})));
    CHECK_THROWS_AS(surf_s1().is_hyperelliptic(vec_of({0, 1, 0})), input_error);
}

TEST_CASE("isotropic slices") {
    CHECK(surf_s1().isotropic_slice(vec_of({1, 0, 0}), 2).empty());
    CHECK(surf_s411().isotropic_slice(vec_of({1, 4, 5}), 4) ==
          vecs({{0, 1, 1}, {1, 3, 5}, {1, 4, 4}}));
    CHECK(surf_s411().isotropic_slice(vec_of({1, 4, 5}), 1).empty());
    CHECK(surf_s411().isotropic_slice(vec_of({1, 4, 5}), 2).empty());
}

TEST_CASE("very ampleness") {
    CHECK(surf_s411().is_very_ample(vec_of({1, 4, 5})));
    CHECK(!surf_s1().is_very_ample(vec_of({1, -1, -1})));  // square 2
    CHECK(!surf_s1().is_very_ample(vec_of({2, -3, 0})));   // orthogonal curve
}

TEST_CASE("surface validation") {
    // a curve class of wrong square is rejected
    CHECK_THROWS_AS(K3Surface(Lattice(mat_of(3, 3, {6, 0, 0, 0, -2, 0, 0, 0, -2})),
                              vecs({{1, 0, 0}})),
                    invariant_error);
    // curve classes must span a full-dimensional cone
    CHECK_THROWS_AS(K3Surface(Lattice(mat_of(3, 3, {6, 0, 0, 0, -2, 0, 0, 0, -2})),
                              vecs({{0, 1, 0}, {0, 0, 1}})),
                    invariant_error);
}
