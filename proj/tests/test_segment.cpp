#include <doctest.h>

#include "helpers.hpp"
#include "parcaus/segment.hpp"

using namespace parcaus;
using testutil::random_segment;

static PlainSegment seg(std::vector<int> bits) {
    PlainSegment t;
    for (int b : bits) t.bits.push_back(b == 1);
    return t;
}

TEST_CASE("sum worked example") {
    PlainSegment t1 = seg({0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1});
    PlainSegment t2 = seg({1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0});
    CHECK(segment_sum(t1, t2) == seg({1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1}));
    CHECK(segment_sum(t1, zero_segment(12)) == t1);
    CHECK(segment_sum(t1, t1) == t1);
    CHECK_THROWS(segment_sum(t1, zero_segment(5)));
}

TEST_CASE("exactness") {
    CHECK(is_exact(seg({1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0}),
                   seg({0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1})));
    PlainSegment t = seg({0, 1, 0});
    CHECK_FALSE(is_exact(t, t));
    CHECK(is_exact(t, zero_segment(3)));
}

TEST_CASE("truncation and arrows") {
    CHECK(truncation(seg({0, 0, 1, 1, 1, 0, 1, 0, 1})) == std::vector<int>{3, 4, 5, 7, 9});
    CHECK(truncation(global_segment(4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(truncation(zero_segment(4)).empty());

    CHECK(arrow_exists(seg({1, 1, 1, 1, 1, 0, 1}), seg({0, 0, 0, 1, 0, 0, 1})));
    CHECK(arrow_exists(global_segment(6), seg({0, 1, 0, 1, 0, 0})));
    CHECK_FALSE(arrow_exists(zero_segment(3), seg({0, 1, 0})));

    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng() % 16);
        PlainSegment a = random_segment(rng, n), b = random_segment(rng, n);
        auto tr_sum = truncation(segment_sum(a, b));
        std::vector<int> expected;
        for (int i = 1; i <= n; ++i)
            if (a.at(i) || b.at(i)) expected.push_back(i);
        CHECK(tr_sum == expected);
        CHECK(segment_sum(a, b) == segment_sum(b, a));
        CHECK(segment_sum(segment_sum(a, b), a) == segment_sum(a, b));
    }
}

TEST_CASE("decompose") {
    CHECK(decompose(seg({1, 0, 1}), 1) ==
          std::vector<PlainSegment>{seg({1, 0, 0}), seg({0, 0, 1})});
    PlainSegment t = seg({1, 1, 0, 1, 1, 1});
    CHECK(decompose(t, 6) == std::vector<PlainSegment>{t});
    CHECK_THROWS(decompose(t, 0));

    std::mt19937_64 rng(22);
    for (int it = 0; it < 100; ++it) {
        int n = 1 + static_cast<int>(rng() % 20);
        int window = 1 + static_cast<int>(rng() % n);
        PlainSegment s = random_segment(rng, n);
        auto parts = decompose(s, window);
        PlainSegment acc = zero_segment(n);
        for (const auto& part : parts) {
            CHECK(is_exact(acc, part));
            CHECK(static_cast<int>(truncation(part).size()) <= window);
            acc = segment_sum(acc, part);
        }
        CHECK(acc == s);
    }
}

TEST_CASE("segment text round trip") {
    PlainSegment t = seg({0, 0, 1, 1, 1, 0, 1, 0, 1});
    CHECK(format_segment(t) == "support: 3,4,5,7,9");
    CHECK(parse_segment("support: 3,4,5,7,9", 9) == t);
    CHECK(parse_segment("0,0,1,1,1,0,1,0,1", 9) == t);
    CHECK(parse_segment(format_segment(t), 9) == t);
    CHECK_THROWS(parse_segment("0,1", 3));
    CHECK_THROWS(parse_segment("support: 12", 9));
    CHECK_THROWS(parse_segment("", 9));
}
