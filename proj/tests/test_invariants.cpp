#include <random>
#include <vector>

#include "doctest.h"
#include "vk/codec.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"

using namespace vk;

TEST_CASE("arc labels of the virtual trefoil") {
    GaussCode c = parse("O1+O2+U1+U2+");
    ArcLabeling lab = cheng_labeling(c);
    // arcs after O1, O2, U1, U2
    CHECK(lab.labels == std::vector<int>{1, 0, 1, 2});
    CHECK(lab.at(0) == 1);
    CHECK(lab.before_pass(0) == 2);  // the arc entering the first pass
    CHECK(lab.before_pass(2) == 0);
}

TEST_CASE("arc labels of the empty code") {
    ArcLabeling lab = cheng_labeling(parse(""));
    CHECK(lab.labels == std::vector<int>{0});
}

TEST_CASE("the local rule reproduces every arc label") {
    // over-passes drop the label by the sign, under-passes raise it
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        GaussCode c = random_code(rng, 1 + static_cast<int>(bounded(rng, 7)));
        ArcLabeling lab = cheng_labeling(c);  // throws std::logic_error on violation
        for (int i = 0; i < c.size(); ++i) {
            const Pass& p = c.passes[i];
            int step = p.over ? -p.sign : p.sign;
            CHECK(lab.at(i) == lab.before_pass(i) + step);
        }
    }
}

TEST_CASE("indices of the virtual trefoil") {
    auto xs = index_crossings(parse("O1+O2+U1+U2+"));
    REQUIRE(xs.size() == 2);
    CHECK(xs[0].label == 1);
    CHECK(xs[0].sign == 1);
    CHECK(xs[0].index == 1);
    CHECK(xs[1].label == 2);
    CHECK(xs[1].sign == 1);
    CHECK(xs[1].index == -1);
}

TEST_CASE("indices of a classical diagram all vanish") {
    for (const auto& x : index_crossings(parse("O1+U2+O3+U1+O2+U3+"))) CHECK(x.index == 0);
}

TEST_CASE("indices of the two-writhe example diagram") {
    auto xs = index_crossings(parse("O1+U2-O3-U4-U1+O2-O4-U3-"));
    REQUIRE(xs.size() == 4);
    CHECK(xs[0].sign == 1);
    CHECK(xs[0].index == 1);
    CHECK(xs[1].sign == -1);
    CHECK(xs[1].index == 1);
    CHECK(xs[2].sign == -1);
    CHECK(xs[2].index == -2);
    CHECK(xs[3].sign == -1);
    CHECK(xs[3].index == 2);
}

TEST_CASE("a and b are the incoming strand labels in role order") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        GaussCode c = random_code(rng, 1 + static_cast<int>(bounded(rng, 7)));
        ArcLabeling lab = cheng_labeling(c);
        for (const auto& x : index_crossings(c)) {
            CHECK(x.index == x.sign * (x.a - x.b - 1));
            CrossingRef ref = find_crossing(c, x.label);
            int over_in = lab.before_pass(ref.over_pos);
            int under_in = lab.before_pass(ref.under_pos);
            if (x.sign > 0) {
                CHECK(x.a == over_in);
                CHECK(x.b == under_in);
            } else {
                CHECK(x.a == under_in);
                CHECK(x.b == over_in);
            }
        }
    }
}

TEST_CASE("writhe table of the virtual trefoil") {
    WritheTable w = writhe_table(parse("O1+O2+U1+U2+"));
    CHECK(w.writhe == 2);
    CHECK(w.support == std::set<int>{1});
    CHECK(w.J == std::map<int, int>{{1, 1}, {-1, 1}});
    CHECK(w.J_at(1) == 1);
    CHECK(w.J_at(-1) == 1);
    CHECK(w.J_at(2) == 0);
    CHECK(w.dwrithe_at(1) == 0);
}

TEST_CASE("writhe table keeps zero entries for occurring indices") {
    WritheTable w = writhe_table(parse("O1+U2-O3-U4-U1+O2-O4-U3-"));
    CHECK(w.writhe == -2);
    CHECK(w.support == std::set<int>{1, 2});
    // index 1 occurs with both signs and cancels, but stays listed
    REQUIRE(w.J.count(1) == 1);
    CHECK(w.J.at(1) == 0);
    CHECK(w.J.at(2) == -1);
    CHECK(w.J.at(-2) == -1);
    CHECK(w.J.count(-1) == 0);  // index -1 never occurs
    CHECK(w.dwrithe_at(1) == 0);
    CHECK(w.dwrithe_at(2) == 0);
    CHECK(w.dwrithe_at(5) == 0);
}

TEST_CASE("writhe table of a classical diagram is empty") {
    WritheTable w = writhe_table(parse("O1+U2+O3+U1+O2+U3+"));
    CHECK(w.J.empty());
    CHECK(w.support.empty());
    CHECK(w.writhe == 3);
}

TEST_CASE("writhe table of the empty code") {
    WritheTable w = writhe_table(parse(""));
    CHECK(w.J.empty());
    CHECK(w.writhe == 0);
}

TEST_CASE("affine index polynomial examples") {
    LaurentPoly2 trefoil_v;
    add_term(trefoil_v, 1, 0, 1);
    add_term(trefoil_v, -1, 0, 1);
    add_term(trefoil_v, 0, 0, -2);
    CHECK(affine_index_poly(parse("O1+O2+U1+U2+")) == trefoil_v);

    LaurentPoly2 two_writhe;
    add_term(two_writhe, 2, 0, -1);
    add_term(two_writhe, -2, 0, -1);
    add_term(two_writhe, 0, 0, 2);
    CHECK(affine_index_poly(parse("O1+U2-O3-U4-U1+O2-O4-U3-")) == two_writhe);

    CHECK(affine_index_poly(parse("O1+U2+O3+U1+O2+U3+")).is_zero());
    CHECK(affine_index_poly(parse("")).is_zero());
}

TEST_CASE("the writhe polynomial equals the affine index polynomial") {
    // both subtract the writhe from the index-weighted sign sum
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        GaussCode c = random_code(rng, static_cast<int>(bounded(rng, 8)));
        CHECK(writhe_poly(c) == affine_index_poly(c));
    }
    CHECK(writhe_poly(parse("")).is_zero());
}

TEST_CASE("one-variable invariants never mention l") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        GaussCode c = random_code(rng, 1 + static_cast<int>(bounded(rng, 7)));
        for (const auto& [m, coeff] : affine_index_poly(c).terms) CHECK(m.l_exp == 0);
    }
}

TEST_CASE("P evaluated at t=1 vanishes") {
    // each summand sgn * (t^i - 1) dies at t = 1
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        GaussCode c = random_code(rng, 1 + static_cast<int>(bounded(rng, 7)));
        Coeff at_one = 0;
        for (const auto& [m, coeff] : affine_index_poly(c).terms) at_one += coeff;
        CHECK(at_one == 0);
    }
}
