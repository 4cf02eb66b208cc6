#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "seaweed/biparabolic.hpp"

using namespace seaweed;

namespace {

// Independent brute-force classifier: enumerate the nonnegative spans of
// pi+ (positive roots) and pi- (negatives) directly.
struct Brute {
    std::set<Root> R, M;
    explicit Brute(const DoublePartition& dp) {
        for (const auto& r : dp.all_roots()) {
            std::uint64_t s = support_mask(r);
            bool pos = r.positive();
            bool inR = pos ? (s & ~dp.pi_plus()) == 0 : (s & ~dp.pi_minus()) == 0;
            bool negR = !pos ? (s & ~dp.pi_plus()) == 0 : (s & ~dp.pi_minus()) == 0;
            if (inR) R.insert(r);
            if (inR && negR) M.insert(r);
        }
    }
};

}  // namespace

TEST_CASE("double partition validation") {
    CHECK_THROWS_AS(DoublePartition(4, {{1, 2}, {4, 4}}, {{1, 4}}), invalid_input);
    CHECK_THROWS_AS(DoublePartition(4, {{1, 4}}, {{1, 4}}), invalid_input);  // q = g
    CHECK_THROWS_AS(DoublePartition(4, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}), invalid_input);
    DoublePartition dp = DoublePartition::from_sizes(8, {8}, {2, 4, 2});
    CHECK(dp.jminus.size() == 3);
    CHECK(dp.jminus[1] == Interval{3, 6});
    CHECK(dp.pi_plus() == dp.pi_all());
    CHECK(dp.hat_minus() == ((1u << 2) | (1u << 6)));
    CHECK(dp.parabolic());
}

TEST_CASE("classification agrees with brute force") {
    std::vector<DoublePartition> dps{
        DoublePartition::from_sizes(3, {3}, {2, 1}),
        DoublePartition::from_sizes(4, {2, 2}, {1, 2, 1}),
        DoublePartition::from_sizes(5, {3, 2}, {1, 4}),
        DoublePartition::from_sizes(8, {8}, {2, 4, 2}),
    };
    for (const auto& dp : dps) {
        Brute b(dp);
        for (const auto& r : dp.all_roots()) {
            RootClass c = classify(dp, r);
            CHECK(c.inR == (b.R.count(r) > 0));
            CHECK(c.inM == (b.M.count(r) > 0));
            CHECK(c.inK == !c.inR);
            CHECK(c.inNegK == (b.R.count(-r) == 0));
            CHECK(c.inRstar == (b.R.count(-r) > 0 && b.R.count(r) == 0));
            CHECK(c.inNegRstar == (b.R.count(r) > 0 && b.M.count(r) == 0));
            // K splits into K+ (positive) and K- (negative)
            if (c.inK) CHECK(c.inKplus != c.inKminus);
            CHECK(is_nil(dp, r) == (c.inK || c.inNegK));
        }
    }
}

TEST_CASE("n=3 parabolic with pi- = {a1}") {
    DoublePartition dp = DoublePartition::from_sizes(3, {3}, {2, 1});
    // -a2 lies in K-
    RootClass c = classify(dp, Root(3, 2));
    CHECK(c.inK);
    CHECK(c.inKminus);
    // -a1 lies in M (both a1 and -a1 belong to R)
    RootClass d = classify(dp, Root(2, 1));
    CHECK(d.inR);
    CHECK(d.inM);
    CHECK_FALSE(d.inNegRstar);
    // the big positive root is in R but not M
    RootClass e = classify(dp, Root(1, 3));
    CHECK(e.inR);
    CHECK(e.inNegRstar);
}

TEST_CASE("components, equicentral, linked") {
    DoublePartition dp = DoublePartition::from_sizes(8, {8}, {2, 4, 2});
    auto cs = components(dp);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].interval == Interval{1, 2});
    CHECK(cs[1].interval == Interval{3, 6});
    CHECK(cs[2].interval == Interval{7, 8});
    CHECK_FALSE(equicentral(dp, cs[0]));
    CHECK(equicentral(dp, cs[1]));  // centres of [1,8] and [3,6] coincide
    CHECK(linked(cs[0], cs[1]));    // same J+
    CHECK(component_of(dp, 4) == cs[1]);

    DoublePartition dp2 = DoublePartition::from_sizes(5, {2, 3}, {3, 2});
    auto cs2 = components(dp2);
    REQUIRE(cs2.size() == 3);
    CHECK_FALSE(linked(cs2[0], cs2[2]));
}
