// JSON configuration parsing and run reports.  Conventions: intervals as
// [l,r] pairs, roots as [i,j] pairs, rationals as {"num": "...", "den": "..."}
// with decimal strings.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pipeline.hpp"

namespace seaweed {

using json = nlohmann::json;

namespace detail {

inline json intervals_json(const std::vector<Interval>& js) {
    json a = json::array();
    for (const auto& J : js) a.push_back({J.l, J.r});
    return a;
}

inline std::vector<Interval> intervals_from(const json& a) {
    std::vector<Interval> out;
    for (const auto& p : a) out.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    return out;
}

inline json roots_json(const std::vector<Root>& rs) {
    json a = json::array();
    for (const auto& r : rs) a.push_back({r.i, r.j});
    return a;
}

inline json rat_json(const Rat& x) {
    return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

inline json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

inline json chain_json(const PointChain& c) {
    json a = json::array();
    for (int p : c) a.push_back(p);
    return a;
}

}  // namespace detail

// Policy/config files and the --jplus/--jminus flags share this schema.
inline RunConfig config_from_json(const json& j) {
    RunConfig cfg;
    cfg.n = j.at("n").get<int>();
    cfg.jplus = detail::intervals_from(j.at("jplus"));
    cfg.jminus = detail::intervals_from(j.at("jminus"));
    if (j.contains("marks"))
        for (const auto& m : j["marks"])
            cfg.explicit_marks.push_back({m.at("above").get<bool>(), m.at("p").get<int>(),
                                          m.at("q").get<int>()});
    if (j.contains("shift")) cfg.shift = j["shift"].get<int>();
    if (j.contains("mark_below_at"))
        for (const auto& p : j["mark_below_at"]) cfg.mark_below_at.insert(p.get<int>());
    if (j.contains("fixed_chain"))
        for (const auto& p : j["fixed_chain"]) cfg.fixed_chain.push_back(p.get<int>());
    if (j.contains("prefer_first_cross"))
        cfg.prefer_first_cross = j["prefer_first_cross"].get<bool>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned long long>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("oracle")) cfg.run_oracle = j["oracle"].get<bool>();
    return cfg;
}

inline json config_json(const RunConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["jplus"] = detail::intervals_json(cfg.jplus);
    j["jminus"] = detail::intervals_json(cfg.jminus);
    json marks = json::array();
    for (const auto& m : cfg.explicit_marks)
        marks.push_back({{"above", m.above}, {"p", m.p}, {"q", m.q}});
    j["marks"] = marks;
    j["shift"] = cfg.shift;
    j["mark_below_at"] = json::array();
    for (int p : cfg.mark_below_at) j["mark_below_at"].push_back(p);
    j["fixed_chain"] = cfg.fixed_chain;
    j["prefer_first_cross"] = cfg.prefer_first_cross;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["oracle"] = cfg.run_oracle;
    return j;
}

inline json report_json(const RunConfig& cfg, const RunResult& res) {
    json j;
    j["config"] = config_json(cfg);
    json marks = json::array();
    for (const auto& m : res.marks.marks)
        marks.push_back({{"above", m.above}, {"p", m.p}, {"q", m.q}});
    j["marks"] = marks;
    j["marking_policy"] = res.marks.policy;
    j["sigma_plus"] = detail::roots_json(arcs_as_roots(res.sigmaPlus));
    j["sigma_minus"] = detail::roots_json(arcs_as_roots(res.sigmaMinus));
    json edges = json::array();
    for (std::size_t k = 0; k < res.edges.size(); ++k) {
        const Edge& E = res.edges[k];
        const StraightenedEdge& se = res.straightened[k];
        json je;
        je["phi"] = detail::chain_json(E.phi);
        je["eps"] = json::array();
        for (int x : E.eps) je["eps"].push_back(x);
        json values = json::array(), star = json::array(), altered = json::array();
        for (int i = 1; i < E.e(); ++i) {
            values.push_back({E.s_root(i).i, E.s_root(i).j});
            star.push_back({se.piStar[i].i, se.piStar[i].j});
            altered.push_back(se.altered[i] != 0);
        }
        je["values"] = values;
        je["values_star"] = star;
        je["altered"] = altered;
        je["chain"] = detail::chain_json(se.chain);
        json ext = json::array();
        for (const auto& a : se.external)
            ext.push_back({{"value_idx", a.value_idx}, {"from", a.from}, {"to", a.to},
                           {"left", a.left}});
        je["external_arcs"] = ext;
        edges.push_back(std::move(je));
    }
    j["edges"] = edges;
    j["fully_fixed"] = res.fullyFixed;
    j["S"] = detail::roots_json(res.pair.S);
    j["h"] = detail::qvec_json(res.pair.h);
    j["chain"] = detail::chain_json(res.assembly.chain);
    j["pi_star"] = detail::roots_json(res.assembly.piStar);
    j["added_roots"] = detail::roots_json(res.assembly.added);
    j["weyl_word"] = res.assembly.w.letters;
    j["weyl_perm"] = res.assembly.w.perm;
    j["y_roots"] = detail::roots_json(res.liftData.yRoots);
    json oracle;
    oracle["half_integer_meanders"] = res.halfIntMeanders;
    oracle["integer_orbits"] = res.integerOrbits;
    oracle["sampled_index_q"] = res.sampledIndexQ;
    oracle["certified"] = res.cert.certified;
    oracle["samples_used"] = res.cert.samples_used;
    oracle["candidate_dim"] = res.cert.candidate_dim;
    oracle["expected_dim"] = res.cert.expected_dim;
    oracle["note"] = res.cert.note;
    oracle["stabilizer_dim"] = res.stabilizerDim;
    oracle["regular_confirmed"] = res.regularConfirmed;
    j["oracle"] = oracle;
    return j;
}

}  // namespace seaweed
