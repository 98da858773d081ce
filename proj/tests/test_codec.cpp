#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "vk/codec.hpp"
#include "vk/moves.hpp"

using namespace vk;

namespace {

Pass pass(int label, bool over, int sign) { return Pass{label, over, sign}; }

}  // namespace

TEST_CASE("parse reads tokens in order with shared signs") {
    GaussCode c = parse("O1+O2+U1+U2+");
    REQUIRE(c.size() == 4);
    CHECK(c.passes[0] == pass(1, true, 1));
    CHECK(c.passes[1] == pass(2, true, 1));
    CHECK(c.passes[2] == pass(1, false, 1));
    CHECK(c.passes[3] == pass(2, false, 1));
    CHECK(c.crossing_count() == 2);
}

TEST_CASE("parse accepts the empty word and whitespace/comma separators") {
    CHECK(parse("").size() == 0);
    CHECK(parse("   ").size() == 0);
    CHECK(parse("O1+,U2-,U1+,O2-") == parse("O1+U2-U1+O2-"));
    CHECK(parse(" O1+  U2-\tU1+ \n O2- ") == parse("O1+U2-U1+O2-"));
    CHECK(parse("O1+, U2-, U1+, O2-") == parse("O1+U2-U1+O2-"));
}

TEST_CASE("parse accepts multi-digit labels") {
    GaussCode c = parse("O12+U12+");
    CHECK(c.passes[0].label == 12);
    CHECK(serialize(c) == "O1+U1+");
}

TEST_CASE("malformed tokens are rejected") {
    for (const char* bad : {"X1+", "o1+", "O0+", "O-1+", "O1", "O1*", "O+", "1+",
                            "O1++U1+", "O1+U1+x", "O01+U1+", "O1+U1-+"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse(bad), code_error);
        try {
            parse(bad);
        } catch (const code_error& e) {
            CHECK(e.kind == CodeError::malformed_token);
            CHECK(std::string(e.what()).rfind("MalformedToken: ", 0) == 0);
        }
    }
}

TEST_CASE("labels too large to be crossing numbers are malformed") {
    CHECK_THROWS_AS(parse("O1000000001+U1000000001+"), code_error);
}

TEST_CASE("duplicate strand use is rejected") {
    for (const char* bad : {"O1+O1+U2+U2+", "U1+U1+O2+O2+"}) {
        CAPTURE(bad);
        try {
            parse(bad);
            FAIL("expected code_error");
        } catch (const code_error& e) {
            CHECK(e.kind == CodeError::duplicate_strand);
            CHECK(std::string(e.what()).rfind("DuplicateStrand: ", 0) == 0);
        }
    }
}

TEST_CASE("sign disagreement between the two passes is rejected") {
    try {
        parse("O1+U1-");
        FAIL("expected code_error");
    } catch (const code_error& e) {
        CHECK(e.kind == CodeError::sign_mismatch);
        CHECK(std::string(e.what()).rfind("SignMismatch: ", 0) == 0);
    }
}

TEST_CASE("labels must occur exactly twice") {
    for (const char* bad : {"O1+", "O1+U1+O2+", "O1+U1+O2+U2+O2+"}) {
        CAPTURE(bad);
        try {
            parse(bad);
            FAIL("expected code_error");
        } catch (const code_error& e) {
            // the triple-2 word trips the duplicate check first
            CHECK((e.kind == CodeError::odd_occurrence || e.kind == CodeError::duplicate_strand));
        }
    }
    try {
        parse("O1+U1+O2+");
        FAIL("expected code_error");
    } catch (const code_error& e) {
        CHECK(e.kind == CodeError::odd_occurrence);
        CHECK(std::string(e.what()).rfind("OddOccurrence: ", 0) == 0);
    }
}

TEST_CASE("crossings view is sorted by label and positions are exact") {
    GaussCode c = parse("O2-U1+O1+U2-");
    auto xs = crossings(c);
    REQUIRE(xs.size() == 2);
    CHECK(xs[0].label == 1);
    CHECK(xs[0].sign == 1);
    CHECK(xs[0].over_pos == 2);
    CHECK(xs[0].under_pos == 1);
    CHECK(xs[1].label == 2);
    CHECK(xs[1].sign == -1);
    CHECK(xs[1].over_pos == 0);
    CHECK(xs[1].under_pos == 3);

    CHECK(find_crossing(c, 2).sign == -1);
    CHECK_THROWS_AS(find_crossing(c, 3), unknown_crossing);
    try {
        find_crossing(c, 3);
    } catch (const unknown_crossing& e) {
        CHECK(std::string(e.what()) == "UnknownCrossing: no crossing labeled 3");
    }
}

TEST_CASE("canonical relabels by first appearance and minimizes over rotations") {
    CHECK(serialize(parse("U2+O1+O2+U1+")) == "O1+O2+U1+U2+");
    CHECK(serialize(parse("O7+O3+U7+U3+")) == "O1+O2+U1+U2+");
    CHECK(serialize(parse("")) == "");
}

TEST_CASE("canonical is invariant under rotation and relabeling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(bounded(rng, 6));
        GaussCode c = random_code(rng, k);
        std::string base = serialize(c);

        // any rotation serializes identically
        int r = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(c.size())));
        GaussCode rot;
        for (int i = 0; i < c.size(); ++i) rot.passes.push_back(c.passes[(i + r) % c.size()]);
        CHECK(serialize(rot) == base);

        // any injective relabeling serializes identically
        std::vector<int> map(static_cast<size_t>(k) + 1);
        for (int i = 1; i <= k; ++i) map[static_cast<size_t>(i)] = i + 10;
        std::shuffle(map.begin() + 1, map.end(), rng);
        GaussCode rel = c;
        for (auto& p : rel.passes) p.label = map[static_cast<size_t>(p.label)];
        CHECK(serialize(rel) == base);
    }
}

TEST_CASE("parse/serialize round-trips on random codes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        GaussCode c = random_code(rng, 1 + static_cast<int>(bounded(rng, 8)));
        std::string s = serialize(c);
        CHECK(serialize(parse(s)) == s);
        CHECK(parse(s) == canonical(c));
    }
}

TEST_CASE("to_token_string preserves stored order without normalizing") {
    GaussCode c = parse("U2+O1+O2+U1+");
    CHECK(to_token_string(c) == "U2+O1+O2+U1+");
}

TEST_CASE("writhe sums the crossing signs") {
    CHECK(writhe(parse("")) == 0);
    CHECK(writhe(parse("O1+O2+U1+U2+")) == 2);
    CHECK(writhe(parse("O1+U2-O3-U4-U1+O2-O4-U3-")) == -2);
}

TEST_CASE("validate rejects hand-built inconsistent codes") {
    GaussCode ok = parse("O1+O2+U1+U2+");
    CHECK_NOTHROW(validate(ok));

    GaussCode bad = ok;
    bad.passes[2].sign = -1;  // U1 now disagrees with O1
    CHECK_THROWS_AS(validate(bad), code_error);

    bad = ok;
    bad.passes[2].over = true;  // label 1 twice over
    CHECK_THROWS_AS(validate(bad), code_error);

    bad = ok;
    bad.passes.pop_back();  // label 2 only once
    CHECK_THROWS_AS(validate(bad), code_error);
}

TEST_CASE("random single-pass corruptions never validate silently") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        GaussCode c = random_code(rng, 2 + static_cast<int>(bounded(rng, 5)));
        GaussCode bad = c;
        auto pick = bounded(rng, static_cast<std::uint64_t>(c.size()));
        auto& p = bad.passes[static_cast<size_t>(pick)];
        switch (bounded(rng, 3)) {
            case 0: p.label = c.crossing_count() + 1; break;  // unpaired label
            case 1: p.over = !p.over; break;                  // strand clash
            default: p.sign = -p.sign; break;                 // sign clash
        }
        CHECK_THROWS_AS(validate(bad), code_error);
    }
}
