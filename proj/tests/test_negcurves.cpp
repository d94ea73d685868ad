#include "doctest.h"

#include "k3cox/db.hpp"
#include "k3cox/negcurves.hpp"

#include <random>
#include <set>

using namespace k3cox;

namespace {

Lattice s1() { return Lattice(mat_of(3, 3, {6, 0, 0, 0, -2, 0, 0, 0, -2})); }

std::vector<IVec> vecs(std::initializer_list<std::initializer_list<long>> vs) {
    std::vector<IVec> out;
    for (auto& v : vs) out.push_back(vec_of(v));
    return out;
}

std::mt19937 rng(31007);

IMat random_hyperbolic_gram() {
    std::uniform_int_distribution<int> d(-4, 4);
    for (;;) {
        IMat q(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) q(i, j) = q(j, i) = d(rng);
        try {
            Lattice l(q);
            return q;
        } catch (const error&) {
            continue;
        }
    }
}

}  // namespace

TEST_CASE("pts on S_1: frozen slices") {
    Lattice l = s1();
    auto d = diagonalize(l);

    auto t0 = pts(l, d, Rat(0));
    REQUIRE(t0.size() == 4);
    CHECK(t0[0] == vec_of({0, -1, 0}));
    CHECK(t0[1] == vec_of({0, 0, -1}));
    CHECK(t0[2] == vec_of({0, 0, 1}));
    CHECK(t0[3] == vec_of({0, 1, 0}));

    auto t1 = pts(l, d, Rat(1));
    REQUIRE(t1.size() == 4);
    CHECK(t1[0] == vec_of({1, -2, 0}));
    CHECK(t1[1] == vec_of({1, 0, -2}));
    CHECK(t1[2] == vec_of({1, 0, 2}));
    CHECK(t1[3] == vec_of({1, 2, 0}));

    CHECK(pts(l, d, Rat(1, 2)).empty());
}

TEST_CASE("pts completeness against brute force on random lattices") {
    for (int trial = 0; trial < 12; ++trial) {
        Lattice l(random_hyperbolic_gram());
        auto d = diagonalize(l);
        Int detb = det(d.b);
        IVec a = adjugate(d.b).col(0);
        for (int slice = 0; slice <= 2; ++slice) {
            Rat t = Rat(slice) / Rat(abs(detb));
            auto found = pts(l, d, t);
            std::set<IVec, LexLess> found_set(found.begin(), found.end());
            // soundness
            for (const IVec& v : found) {
                CHECK(l.square(v) == -2);
                CHECK(Rat(a.dot(v)) == t * Rat(detb));
            }
            // completeness within a box covering everything the slice found
            Int bound = 12;
            for (const IVec& v : found)
                for (int i = 0; i < 3; ++i) bound = std::max(bound, Int(abs(v[i]) + 2));
            if (bound > 40) continue;  // keep the brute force affordable
            long b = static_cast<long>(bound);
            IVec x(3);
            for (long x0 = -b; x0 <= b; ++x0)
                for (long x1 = -b; x1 <= b; ++x1)
                    for (long x2 = -b; x2 <= b; ++x2) {
                        x[0] = x0; x[1] = x1; x[2] = x2;
                        if (l.square(x) != -2) continue;
                        if (Rat(a.dot(x)) != t * Rat(detb)) continue;
                        CHECK(found_set.count(x) == 1);
                    }
        }
    }
}

TEST_CASE("simple_roots on the A1 x A1 system of S_1") {
    Lattice l = s1();
    auto roots = vecs({{0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    IVec h = vec_of({0, -1, -1});
    CHECK(l.pairing(h, roots[0]) > 0);  // the form is negative definite there
    auto simple = simple_roots(l, roots, h);
    REQUIRE(simple.size() == 2);
    CHECK(simple[0] == vec_of({0, 0, 1}));
    CHECK(simple[1] == vec_of({0, 1, 0}));

    auto one = simple_roots(l, vecs({{0, 1, 0}, {0, -1, 0}}), vec_of({0, -5, 0}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == vec_of({0, 1, 0}));

    CHECK(simple_roots(l, {}, h).empty());
    CHECK_THROWS_AS(simple_roots(l, vecs({{0, 1, 0}, {0, 0, 1}}), vec_of({0, 1, 0})),
                    input_error);
}

TEST_CASE("cone_test on S_1 class sets") {
    Lattice l = s1();
    auto e_s1 = vecs({{0, 1, 0}, {0, 0, 1}, {1, -2, 0}, {1, 0, -2}, {2, -3, -2}, {2, -2, -3}});
    CHECK(cone_test(l, e_s1));
    CHECK(!cone_test(l, vecs({{0, 1, 0}, {0, 0, 1}})));
}

TEST_CASE("cone_test on S_411") {
    Lattice l(mat_of(3, 3, {-32, 0, 4, 0, -2, 2, 4, 2, -2}));
    CHECK(cone_test(l, vecs({{0, 1, 0}, {0, 0, 1}, {1, 3, 4}})));
}

TEST_CASE("find_neg_curves on S_1 matches the published curve set") {
    Lattice l = s1();
    auto found = find_neg_curves(l);
    auto expected = vecs({{0, 1, 0}, {0, 0, 1}, {1, -2, 0}, {1, 0, -2}, {2, -3, -2}, {2, -2, -3}});
    REQUIRE(found.size() == 6);
    for (const IVec& v : found) CHECK(l.square(v) == -2);
    CHECK(match_curve_sets(l, found, expected));

    // deterministic across reruns
    auto again = find_neg_curves(l);
    CHECK(found == again);

    // every output class spans an extreme ray of the generated cone
    RationalCone c = cone_from_generators(3, found);
    CHECK(c.rays.size() == found.size());

    // the cone has interior classes of positive square (an ample chamber)
    IVec interior = IVec::Zero(3);
    for (const IVec& v : found) interior += v;
    CHECK(l.square(interior) > 0);
}

TEST_CASE("find_neg_curves recovers the published curve sets on the database") {
    // every bundled lattice, each well under the 30 s budget
    for (const auto& rec : bundled_lattices()) {
        Lattice l(rec.gram);
        auto found = find_neg_curves(l);
        CHECK(found.size() == rec.neg_curves.size());
        CHECK(match_curve_sets(l, found, rec.neg_curves));
    }
}

TEST_CASE("match_curve_sets basics") {
    Lattice l = s1();
    auto a = vecs({{0, 1, 0}, {0, 0, 1}});
    auto b = vecs({{0, 0, 1}, {0, 1, 0}});
    CHECK(match_curve_sets(l, a, a));
    CHECK(match_curve_sets(l, a, b));
    CHECK(!match_curve_sets(l, a, vecs({{0, 1, 0}})));
    // orthogonal pair vs meeting pair
    auto meeting = vecs({{0, 1, 0}, {1, -2, 0}});
    CHECK(l.pairing(meeting[0], meeting[1]) != 0);
    CHECK(!match_curve_sets(l, a, meeting));
}
