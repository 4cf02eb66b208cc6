#include <doctest.h>

#include "seaweed/straighten.hpp"
#include "seaweed/sweep.hpp"

using namespace seaweed;

namespace {

const DoublePartition golden = DoublePartition::from_sizes(8, {8}, {2, 4, 2});

Edge golden_edge() {
    Edge E;
    E.phi = {4, 6, 2, 1, 8};
    E.eps = {-1, -1, 1, 1};
    E.above = {0, 1, 0, 1};
    return E;
}

Edge golden_short() {
    Edge F;
    F.phi = {5, 3, 7};
    F.eps = {1, 1};
    F.above = {0, 1};
    return F;
}

}  // namespace

TEST_CASE("turning points come from arrow sign changes") {
    Edge E = golden_edge();
    TurningData td = analyze_edge(E, golden);
    CHECK(td.T == std::vector<int>{1, 3, 5});
    CHECK(td.T0 == std::vector<int>{3});
    CHECK_FALSE(td.typeA[1]);  // eps_1 = -1: arrows arrive at the top point
    CHECK(td.typeA[3]);        // sign change -,+ : source
    CHECK_FALSE(td.typeA[5]);
    // beta_2 = (6,2) is nil, beta_3 = (2,1) is not: the non-nil one is marked
    CHECK(td.marked == std::set<int>{3});
    CHECK(td.sg.at(3) == -1);
}

TEST_CASE("edge without internal turning points straightens trivially") {
    Edge F = golden_short();
    TurningData td = analyze_edge(F, golden);
    CHECK(td.T0.empty());
    StraightenedEdge se = straighten(F, td, golden);
    CHECK(se.external.empty());
    CHECK(se.chain == PointChain{5, 3, 7});
    EdgeValue ev = edge_value(se, F, td, golden);
    CHECK(ev.value == Root(5, 7));
    CHECK(ev.unchanged);
}

TEST_CASE("golden edge straightening replaces beta_3 by (4,1)") {
    Edge E = golden_edge();
    TurningData td = analyze_edge(E, golden);
    StraightenedEdge se = straighten(E, td, golden);
    CHECK(se.altered == std::vector<char>{0, 0, 0, 1, 0});
    CHECK(se.piStar[1] == Root(6, 4));
    CHECK(se.piStar[2] == Root(2, 6));
    CHECK(se.piStar[3] == Root(4, 1));
    CHECK(se.piStar[4] == Root(1, 8));
    CHECK(se.chain == PointChain{2, 6, 4, 1, 8});
    REQUIRE(se.external.size() == 1);
    CHECK(se.external[0].value_idx == 3);
    CHECK(se.external[0].from == 4);
    CHECK(se.external[0].to == 1);
    CHECK(se.external[0].left);          // assigned to a source
    CHECK(se.external[0].crossed_pos == 1);
    EdgeValue ev = edge_value(se, E, td, golden);
    CHECK(ev.value == Root(2, 8));
    CHECK_FALSE(ev.unchanged);
    CHECK(classify(golden, Root(8, 2)).inKminus);
}

TEST_CASE("analysis rules across all small instances") {
    // every instance up to rank 6 under the default policy: the marking rules
    // must assign without falsifiers, and wherever both boundary values of a
    // singleton turning point are non-nil, the below override must flip it
    int two_sided = 0, runs = 0;
    for (int n = 3; n <= 6; ++n)
        for_each_instance(n, [&](std::vector<Interval> jp, std::vector<Interval> jm) {
            DoublePartition dp(n, std::move(jp), std::move(jm));
            ExtendedSimpleSystem ess = build_extended(dp);
            auto ms = halfint_meanders(ess);
            MarkingSet marks = select_markings(ess, ms);
            auto [sp, sm] = modified_involutions(dp, marks);
            auto [edges, fixed] = decompose(sp, sm, dp);
            for (const Edge& E : edges) {
                TurningData td = analyze_edge(E, dp);
                for (std::size_t k = 0; k < td.T0.size(); ++k) {
                    int t = td.T0[k];
                    bool in_run = (k > 0 && td.T0[k - 1] == t - 1) ||
                                  (k + 1 < td.T0.size() && td.T0[k + 1] == t + 1);
                    if (in_run) { ++runs; continue; }
                    if (!is_nil(dp, E.beta(t - 1)) && !is_nil(dp, E.beta(t))) {
                        ++two_sided;
                        CHECK(td.sg.at(t) == 1);  // default: mark above
                        StraightenPolicy pol;
                        pol.mark_below_at.insert(E.phi[t - 1]);
                        TurningData ovr = analyze_edge(E, dp, pol);
                        CHECK(ovr.sg.at(t) == -1);
                        straighten(E, ovr, dp);
                    }
                }
                straighten(E, td, dp);
            }
        });
    MESSAGE("two-sided choices seen: ", two_sided, ", run members seen: ", runs);
}

TEST_CASE("mutating a sign trips a falsifier") {
    Edge E = golden_edge();
    E.eps[3] = -1;  // now x81 would be drawn below: impossible arc pattern
    bool caught = false;
    try {
        TurningData td = analyze_edge(E, golden);
        StraightenedEdge se = straighten(E, td, golden);
        edge_value(se, E, td, golden);
    } catch (const falsifier&) {
        caught = true;
    }
    CHECK(caught);
}
