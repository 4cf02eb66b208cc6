#include <doctest.h>

#include <algorithm>

#include "seaweed/render.hpp"
#include "seaweed/report.hpp"
#include "seaweed/sweep.hpp"

using namespace seaweed;

namespace {

RunConfig golden_config() {
    RunConfig cfg;
    cfg.n = 8;
    cfg.jplus = {{1, 8}};
    cfg.jminus = {{1, 2}, {3, 6}, {7, 8}};
    cfg.explicit_marks = {{true, 2, 7}, {true, 4, 5}, {false, 3, 6}, {false, 7, 8}};
    return cfg;
}

}  // namespace

TEST_CASE("config JSON round trip") {
    RunConfig cfg = golden_config();
    cfg.mark_below_at = {2};
    cfg.fixed_chain = {3, 1, 4, 2};
    RunConfig back = config_from_json(config_json(cfg));
    CHECK(config_json(back) == config_json(cfg));
}

TEST_CASE("identical configs give identical reports and pictures") {
    RunConfig cfg = golden_config();
    RunResult a = run(cfg), b = run(cfg);
    CHECK(report_json(cfg, a).dump() == report_json(cfg, b).dump());
    auto pa = render_all(a), pb = render_all(b);
    CHECK(pa == pb);  // byte-for-byte
}

TEST_CASE("report carries the golden content") {
    RunConfig cfg = golden_config();
    json rep = report_json(cfg, run(cfg));
    CHECK(rep["chain"] == json::array({5, 3, 7, 2, 6, 4, 1, 8}));
    CHECK(rep["added_roots"] == json::array({{7, 2}}));
    CHECK(rep["oracle"]["half_integer_meanders"] == 4);
    CHECK(rep["oracle"]["certified"] == true);
    CHECK(rep["S"].size() == 6);
    // rationals appear as exact strings
    CHECK(rep["h"][0].contains("num"));
}

TEST_CASE("rendered arcs describe the modified involutions and marks") {
    RunConfig cfg = golden_config();
    RunResult res = run(cfg);
    auto arcs = arc_list(render_horizontal(res));
    auto has = [&](const std::string& s) {
        return std::find(arcs.begin(), arcs.end(), s) != arcs.end();
    };
    CHECK(has("above 1 8"));
    CHECK(has("above 2 6"));
    CHECK(has("above 3 7"));
    CHECK(has("below 3 5"));
    CHECK(has("below 4 6"));
    CHECK(has("mark above 2 7"));
    CHECK(has("mark below 7 8"));
    CHECK(has("half- 2 6 fict"));
    auto edge_arcs = arc_list(render_edge(res.edges[0], res.straightened[0]));
    bool ext = false;
    for (const auto& a : edge_arcs)
        if (a.rfind("ext-", 0) == 0) ext = true;
    CHECK((ext || res.straightened[0].external.empty()));
}

TEST_CASE("small sweep is clean") {
    auto rows = sweep(4, 99, 5);
    CHECK(rows.size() == 2 + 8 + 26);  // 3^{n-1} - 1 instances per n
    for (const auto& r : rows) {
        CHECK(r.ok);
        CHECK(r.error.empty());
    }
    std::string csv = sweep_csv(rows);
    CHECK(csv.rfind("n,jplus,jminus,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rows.size()) + 1);
}
