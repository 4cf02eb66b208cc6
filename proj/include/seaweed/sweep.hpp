// Exhaustive sweep over every proper double partition of [1,n] (all pairs of
// compositions with pi+ u pi- = pi and pi+ n pi- proper), run through the full
// pipeline with the default policy.  Failures become rows, not aborts.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace seaweed {

struct SweepRow {
    int n = 0;
    std::string jplus, jminus;
    bool ok = false;            // no falsifier fired
    std::string error;          // falsifier message when !ok
    int sizeS = 0;
    int numEdges = 0;
    int truncatedIndex = -1;    // index of the canonical truncation, -1 if uncertified
    bool certified = false;
    bool regular = false;
};

namespace detail {

inline std::string partition_str(const std::vector<Interval>& js) {
    std::string s;
    for (const auto& J : js) s += J.str();
    return s;
}

// compositions of n as cut subsets of {1..n-1}; cut after k <=> alpha_k missing
inline std::vector<Interval> cuts_to_intervals(int n, std::uint64_t cuts) {
    std::vector<Interval> out;
    int l = 1;
    for (int k = 1; k < n; ++k)
        if (cuts >> k & 1) {
            out.push_back({l, k});
            l = k + 1;
        }
    out.push_back({l, n});
    return out;
}

}  // namespace detail

// All admissible instances for one n: pairs of disjoint cut sets, not both
// empty.  3^{n-1} - 1 instances, enumerated in a stable order.
template <typename F>
inline void for_each_instance(int n, F&& f) {
    std::uint64_t all = ((1ull << n) - 2);  // bits 1..n-1
    for (std::uint64_t cp = 0;; cp = (cp - all) & all) {  // subsets of all
        std::uint64_t rest = all & ~cp;
        for (std::uint64_t cm = 0;; cm = (cm - rest) & rest) {
            if (cp | cm)
                f(detail::cuts_to_intervals(n, cp), detail::cuts_to_intervals(n, cm));
            if (cm == rest) break;
        }
        if (cp == all) break;
    }
}

inline SweepRow sweep_one(const RunConfig& cfg) {
    SweepRow row;
    row.n = cfg.n;
    row.jplus = detail::partition_str(cfg.jplus);
    row.jminus = detail::partition_str(cfg.jminus);
    try {
        RunResult res = run(cfg);
        row.ok = true;
        row.sizeS = static_cast<int>(res.pair.S.size());
        row.numEdges = static_cast<int>(res.edges.size());
        row.truncatedIndex = res.stabilizerDim;
        row.certified = res.cert.certified;
        row.regular = res.regularConfirmed;
    } catch (const falsifier& f) {
        row.error = f.what();
    }
    return row;
}

inline std::vector<SweepRow> sweep(int nmax, unsigned long long seed = 12345,
                                   int samples = 5, bool run_oracle = true) {
    std::vector<SweepRow> rows;
    for (int n = 2; n <= nmax; ++n)
        for_each_instance(n, [&](std::vector<Interval> jp, std::vector<Interval> jm) {
            RunConfig cfg;
            cfg.n = n;
            cfg.jplus = std::move(jp);
            cfg.jminus = std::move(jm);
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.run_oracle = run_oracle;
            rows.push_back(sweep_one(cfg));
        });
    return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n,jplus,jminus,size_S,edges,truncated_index,regular,certified,ok,error\n";
    for (const auto& r : rows) {
        std::string err = r.error;
        for (auto& c : err)
            if (c == ',' || c == '\n') c = ';';
        os << r.n << ',' << r.jplus << ',' << r.jminus << ',' << r.sizeS << ','
           << r.numEdges << ',' << r.truncatedIndex << ',' << (r.regular ? 1 : 0) << ','
           << (r.certified ? 1 : 0) << ',' << (r.ok ? 1 : 0) << ',' << err << '\n';
    }
    return os.str();
}

}  // namespace seaweed
