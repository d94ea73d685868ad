#include "doctest.h"

#include "k3cox/lattice.hpp"

#include <random>

using namespace k3cox;

namespace {

Lattice s1() { return Lattice(mat_of(3, 3, {6, 0, 0, 0, -2, 0, 0, 0, -2})); }
Lattice s411() { return Lattice(mat_of(3, 3, {-32, 0, 4, 0, -2, 2, 4, 2, -2})); }

std::mt19937 rng(777);

}  // namespace

TEST_CASE("pairing and square on S_1 and S_411") {
    Lattice l = s1();
    CHECK(l.pairing(vec_of({1, 0, 0}), vec_of({1, 0, 0})) == 6);
    CHECK(l.pairing(vec_of({0, 1, 0}), vec_of({0, 0, 1})) == 0);
    CHECK(l.pairing(vec_of({0, 0, 0}), vec_of({3, -1, 2})) == 0);
    CHECK(l.square(vec_of({2, -3, -2})) == -2);
    CHECK(l.square(vec_of({0, 0, 0})) == 0);

    Lattice m = s411();
    CHECK(m.square(vec_of({1, 4, 5})) == 6);
    CHECK_THROWS_AS(l.pairing(vec_of({1, 0}), vec_of({1, 0, 0})), input_error);
}

TEST_CASE("pairing is bilinear and symmetric") {
    Lattice l = s411();
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 200; ++t) {
        IVec u(3), v(3), w(3);
        for (int i = 0; i < 3; ++i) { u[i] = d(rng); v[i] = d(rng); w[i] = d(rng); }
        CHECK(l.pairing(u, v) == l.pairing(v, u));
        CHECK(l.pairing(IVec(u + w), v) == l.pairing(u, v) + l.pairing(w, v));
    }
}

TEST_CASE("diagonalize: already diagonal stays put") {
    Lattice l = s1();
    auto d = diagonalize(l);
    CHECK(d.b == IMat(IMat::Identity(3, 3)));
    CHECK(d.dg(0, 0) == 6);
    CHECK(d.dg(1, 1) == -2);
    CHECK(d.dg(2, 2) == -2);
}

TEST_CASE("diagonalize: congruence identity and sign pattern") {
    for (const IMat& q : {mat_of(3, 3, {-32, 0, 4, 0, -2, 2, 4, 2, -2}),
                          mat_of(3, 3, {-2, 0, 1, 0, -2, 2, 1, 2, -2}),
                          mat_of(3, 3, {-2, 0, 6, 0, -2, 12, 6, 12, -72})}) {
        Lattice l(q);
        auto d = diagonalize(l);
        IMat lhs = d.b * q * d.b.transpose();
        CHECK(lhs.cast<Rat>() == d.dg);
        CHECK(d.dg(0, 0) > 0);
        for (int i = 1; i < 3; ++i) CHECK(d.dg(i, i) < 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(d.dg(i, j) == 0);
        CHECK(det(d.b) != 0);
    }
}

TEST_CASE("diagonalize: hyperbolic plane needs the basis mix") {
    Lattice l(mat_of(2, 2, {0, 1, 1, 0}));
    auto d = diagonalize(l);
    CHECK(d.dg(0, 0) > 0);
    CHECK(d.dg(1, 1) < 0);
    CHECK(IMat(d.b * l.gram() * d.b.transpose()).cast<Rat>() == d.dg);
}

TEST_CASE("signature validation rejects wrong signatures") {
    CHECK_THROWS_AS(Lattice(mat_of(2, 2, {2, 0, 0, 2})), invariant_error);
    CHECK_THROWS_AS(Lattice(mat_of(2, 2, {-2, 0, 0, -2})), invariant_error);
    CHECK_THROWS_AS(Lattice(mat_of(2, 2, {1, 0, 0, 0})), invariant_error);
    CHECK_THROWS_AS(Lattice(mat_of(2, 2, {1, 2, 3, 4})), input_error);
}

TEST_CASE("isometries of S_1") {
    Lattice l = s1();
    IMat id = IMat::Identity(3, 3);
    CHECK(is_isometry(l, id));
    CHECK(is_isometry(l, IMat(-id)));

    // the double-cover involution: e1 -> (5,-6,-6), e2 -> (2,-3,-2), e3 -> (2,-2,-3)
    IMat m = mat_of(3, 3, {5, -6, -6, 2, -3, -2, 2, -2, -3});
    CHECK(is_isometry(l, m));
    CHECK(IMat(m * m) == id);
    // it swaps the curve pairs lying over the three conics
    CHECK(apply_isometry(m, vec_of({0, 1, 0})) == vec_of({2, -3, -2}));
    CHECK(apply_isometry(m, vec_of({1, -2, 0})) == vec_of({1, 0, -2}));
    CHECK(apply_isometry(m, vec_of({1, -1, -1})) == vec_of({1, -1, -1}));

    IMat bad = mat_of(3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    CHECK(!is_isometry(l, bad));
}

TEST_CASE("products of isometries are isometries") {
    Lattice l = s411();
    std::vector<IMat> isos = {IMat::Identity(3, 3), IMat(-IMat::Identity(3, 3))};
    for (const IMat& a : isos)
        for (const IMat& b : isos) CHECK(is_isometry(l, IMat(a * b)));
}
