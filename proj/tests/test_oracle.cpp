#include <doctest.h>

#include <random>

#include "seaweed/oracle.hpp"
#include "seaweed/pipeline.hpp"
#include "seaweed/sweep.hpp"

using namespace seaweed;

TEST_CASE("orbit count and meander index of two involutions") {
    DoublePartition dp = DoublePartition::from_sizes(8, {8}, {2, 4, 2});
    auto sp = cascade(dp, true), sm = cascade(dp, false);
    // components {1,2,7,8}, {3,6}, {4,5}, all cycles
    CHECK(orbit_count(sp, sm, 8) == 3);
    CHECK(meander_index(sp, sm, 8) == 5);
}

TEST_CASE("sampled index matches the meander formula on small seaweeds") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 5; ++n)
        for_each_instance(n, [&](std::vector<Interval> jp, std::vector<Interval> jm) {
            DoublePartition dp(n, std::move(jp), std::move(jm));
            int mi = meander_index(cascade(dp, true), cascade(dp, false), n);
            CHECK(sampled_index(dp, rng) == mi);
        });
}

TEST_CASE("truncation certificate on the golden instance") {
    RunConfig cfg;
    cfg.n = 8;
    cfg.jplus = {{1, 8}};
    cfg.jminus = {{1, 2}, {3, 6}, {7, 8}};
    cfg.explicit_marks = {{true, 2, 7}, {true, 4, 5}, {false, 3, 6}, {false, 7, 8}};
    RunResult res = run(cfg);
    CHECK(res.cert.certified);
    CHECK(res.cert.candidate_dim == 6);
    CHECK(res.cert.expected_dim == 6);
    // stabilizer of eta = truncated index = dim of the truncated Cartan
    CHECK(res.stabilizerDim == 6);
    CHECK(res.regularConfirmed);
    // h itself lies in the certified truncated Cartan
    CHECK(h_in_truncation(res.cert, res.pair.h));
}

TEST_CASE("stabilizer dimension needs a certificate") {
    DoublePartition dp = DoublePartition::from_sizes(3, {3}, {2, 1});
    TruncationCertificate cert;  // not certified
    CHECK_THROWS_AS(eta_stabilizer_dim(dp, {Root(1, 3)}, cert), invalid_input);
}

TEST_CASE("interval laws accept the golden decomposition and reject corruption") {
    RunConfig cfg;
    cfg.n = 8;
    cfg.jplus = {{1, 8}};
    cfg.jminus = {{1, 2}, {3, 6}, {7, 8}};
    cfg.explicit_marks = {{true, 2, 7}, {true, 4, 5}, {false, 3, 6}, {false, 7, 8}};
    cfg.run_oracle = false;
    RunResult res = run(cfg);
    CHECK_NOTHROW(falsify_interval_laws(res.dp, res.edges, res.fullyFixed));
    // a second fully fixed point in a used component breaks the census
    auto edges = res.edges;
    edges[0].phi.pop_back();
    edges[0].eps.pop_back();
    edges[0].above.pop_back();
    CHECK_THROWS_AS(falsify_interval_laws(res.dp, edges, res.fullyFixed), falsifier);
}
