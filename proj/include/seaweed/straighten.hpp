// Straightening of one non-trivial edge: turning-point classification,
// marking of boundary values, the left/right external-arc construction, and
// certification of the straightened edge E* (alignment, K-membership,
// positive-cone expression of the original values).
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "biparabolic.hpp"
#include "modinv.hpp"
#include "roots.hpp"

namespace seaweed {

struct TurningData {
    // indices are positions t in [1,e] on the vertical presentation
    std::vector<int> T;            // all turning points, top to bottom
    std::vector<int> T0;           // internal ones
    std::vector<char> typeA;       // typeA[t] : source?  (indexed by position)
    std::vector<char> turning;     // position is a turning point?
    std::map<int, int> assigned;   // internal turning position t -> marked value index
    std::map<int, int> sg;         // signature at t: +1 marked above (beta_{t-1}), -1 below
    std::set<int> marked;          // marked value indices
};

struct StraightenPolicy {
    // at a two-sided non-nil choice, mark below (beta_t) at these L-points
    std::set<int> mark_below_at;
};

// Turning-point detection only: no marking rules applied yet.
inline TurningData detect_turnings(const Edge& E) {
    int e = E.e();
    TurningData td;
    td.typeA.assign(e + 1, 0);
    td.turning.assign(e + 1, 0);
    auto mark_turn = [&](int t, bool isA) {
        td.turning[t] = 1;
        td.typeA[t] = isA ? 1 : 0;
        td.T.push_back(t);
    };
    mark_turn(1, E.eps[0] == 1);
    for (int t = 2; t <= e - 1; ++t) {
        // phi(t) is a turning point iff the arrows on its two lines agree in
        // departing (source) or arriving (sink), i.e. iff the sign changes
        bool sign_change = E.eps[t - 2] != E.eps[t - 1];
        if (!sign_change) continue;
        mark_turn(t, E.eps[t - 2] == -1 && E.eps[t - 1] == 1);
        td.T0.push_back(t);
    }
    mark_turn(e, E.eps[e - 2] == -1);
    for (std::size_t k = 0; k + 1 < td.T.size(); ++k)
        if (td.typeA[td.T[k]] == td.typeA[td.T[k + 1]])
            throw falsifier("sources and sinks fail to alternate");
    return td;
}

inline TurningData analyze_edge(const Edge& E, const DoublePartition& dp,
                                const StraightenPolicy& pol = {}) {
    int e = E.e();
    TurningData td = detect_turnings(E);

    auto nil_at = [&](int i) { return is_nil(dp, E.beta(i)); };  // value index i in [1,e-1]
    auto install = [&](int t, int value_idx) {
        if (td.marked.count(value_idx))
            throw falsifier("value marked twice");
        td.marked.insert(value_idx);
        td.assigned[t] = value_idx;
        td.sg[t] = (value_idx == t - 1) ? 1 : -1;
    };
    // maximal runs of neighbouring internal turning points
    for (std::size_t k = 0; k < td.T0.size();) {
        std::size_t kk = k;
        while (kk + 1 < td.T0.size() && td.T0[kk + 1] == td.T0[kk] + 1) ++kk;
        int t = td.T0[k], r = td.T0[kk] - t;  // run t .. t+r
        if (r == 0) {
            bool nlo = nil_at(t - 1), nhi = nil_at(t);
            if (nlo && nhi) install(t, t - 1);           // rule (M): above, sg = +1
            else if (nlo) install(t, t);
            else if (nhi) install(t, t - 1);
            else install(t, pol.mark_below_at.count(E.phi[t - 1]) ? t : t - 1);
        } else {
            // the values strictly inside the run are isolated, hence nil
            for (int j = 0; j <= r - 1; ++j)
                if (!nil_at(t + j)) throw falsifier("isolated value is not nil");
            for (int j = -1; j <= r - 2; ++j) install(t + j + 1, t + j);
            install(t + r, nil_at(t + r) ? t + r - 1 : t + r);
        }
        k = kk + 1;
    }
    for (auto& [t, v] : td.assigned)
        if (td.sg[t] == -1 && nil_at(v))
            throw falsifier("negative signature with a nil marked value");
    return td;
}

struct ExternalArc {
    int value_idx = 0;       // the replaced beta index
    int from = 0, to = 0;    // L-points; represents eps_from - eps_to
    bool left = false;       // side of V (left <=> assigned to type A)
    int crossed_pos = 0;     // position s crossed by the arc
    int assigned_pos = 0;    // internal turning point t it is assigned to
};

struct StraightenedEdge {
    std::vector<Root> piStar;        // beta*_1 .. beta*_{e-1}, by value index
    std::vector<char> altered;       // beta*_i != eps_i beta_i ?
    PointChain chain;                // aligned traversal of E*
    int aStar = 0, bStar = 0;
    std::vector<ExternalArc> external;
};

namespace detail {

// interval value iota_{I_{r,s}} = eps_{phi(r)} - eps_{phi(s)}, r < s
inline Root interval_value(const Edge& E, int r, int s) {
    return Root(E.phi[r - 1], E.phi[s - 1]);
}

}  // namespace detail

inline StraightenedEdge straighten(const Edge& E, const TurningData& td,
                                   const DoublePartition& dp) {
    int e = E.e();
    StraightenedEdge se;
    se.piStar.resize(e);          // 1-based by value index; slot 0 unused
    se.altered.assign(e, 0);
    for (int i = 1; i <= e - 1; ++i) se.piStar[i] = E.s_root(i);

    auto first_of_type = [&](bool wantA, int from, int dir) -> int {
        for (int s = from; s >= 1 && s <= e; s += dir)
            if (td.turning[s] && (td.typeA[s] != 0) == wantA) return s;
        return 0;
    };
    for (int t : td.T0) {
        bool isA = td.typeA[t] != 0;
        int sg = td.sg.at(t);
        ExternalArc arc;
        arc.left = isA;
        arc.assigned_pos = t;
        int s = 0;
        if (sg == -1) {
            // remove beta_t; climb to the nearest same-type negative-signature
            // point above (if any), cross the first opposite-type point below it
            int r = 0;
            for (int u = t - 1; u >= 1; --u)
                if (td.turning[u] && (td.typeA[u] != 0) == isA && td.assigned.count(u) &&
                    td.sg.at(u) == -1) { r = u; break; }
            s = r ? first_of_type(!isA, r + 1, +1) : first_of_type(!isA, 1, +1);
            if (!(s && s < t)) throw falsifier("negative-signature target not above");
            arc.value_idx = t;
            Root sum(E.phi[s - 1], E.phi[t]);  // eps_phi(s) - eps_phi(t+1)
            se.piStar[t] = E.eps[t - 1] == 1 ? sum : -sum;
            arc.from = E.eps[t - 1] == 1 ? E.phi[s - 1] : E.phi[t];
            arc.to = E.eps[t - 1] == 1 ? E.phi[t] : E.phi[s - 1];
            se.altered[t] = 1;
        } else {
            // remove beta_{t-1}; cross the first opposite-type point below t
            s = first_of_type(!isA, t + 1, +1);
            if (!s) throw falsifier("positive-signature target missing below");
            arc.value_idx = t - 1;
            Root sum(E.phi[t - 2], E.phi[s - 1]);  // eps_phi(t-1) - eps_phi(s)
            se.piStar[t - 1] = E.eps[t - 2] == 1 ? sum : -sum;
            arc.from = E.eps[t - 2] == 1 ? E.phi[t - 2] : E.phi[s - 1];
            arc.to = E.eps[t - 2] == 1 ? E.phi[s - 1] : E.phi[t - 2];
            se.altered[t - 1] = 1;
        }
        arc.crossed_pos = s;
        se.external.push_back(arc);
    }
    // altered values must land in K
    for (int i = 1; i <= e - 1; ++i)
        if (se.altered[i] && !classify(dp, se.piStar[i]).inK)
            throw falsifier("replaced value outside K: " + se.piStar[i].str());
    // at most two directed arcs meet a turning point, at most one crosses it
    for (int t : td.T) {
        int meet = 0, cross = 0;
        for (const auto& a : se.external) {
            if (a.crossed_pos == t) { ++cross; ++meet; }
            else if (a.from == E.phi[t - 1] || a.to == E.phi[t - 1]) ++meet;
        }
        if (cross > 1 || meet > 2)
            throw falsifier("external-arc incidence law violated at a turning point");
    }

    // assemble the directed arcs and extract the single aligned path
    std::vector<std::pair<int, int>> darcs;  // (from,to) as L-points
    for (int i = 1; i <= e - 1; ++i) {
        const Root& r = se.piStar[i];
        darcs.emplace_back(r.i, r.j);
    }
    std::map<int, int> next, indeg;
    for (auto& [u, v] : darcs) {
        if (next.count(u)) throw falsifier("straightened arcs branch at point " + std::to_string(u));
        next[u] = v;
        indeg[v]++;
        if (indeg[v] > 1) throw falsifier("straightened arcs merge at point " + std::to_string(v));
    }
    int start = 0;
    for (int p : E.phi)
        if (next.count(p) && !indeg.count(p)) {
            if (start) throw falsifier("straightened edge has two starting points");
            start = p;
        }
    if (!start) throw falsifier("straightened edge has no starting point");
    int cur = start;
    se.chain.push_back(cur);
    while (next.count(cur)) {
        cur = next[cur];
        se.chain.push_back(cur);
    }
    if (static_cast<int>(se.chain.size()) != e)
        throw falsifier("straightened arcs do not form a single edge");
    se.aStar = se.chain.front();
    se.bStar = se.chain.back();

    // condition a): every eps_i beta_i is a nonnegative combination of the
    // beta*, i.e. its source precedes its target along the chain
    std::map<int, int> pos;
    for (int k = 0; k < e; ++k) pos[se.chain[k]] = k;
    for (int i = 1; i <= e - 1; ++i) {
        Root g = E.s_root(i);
        if (pos[g.i] >= pos[g.j])
            throw falsifier("original value not in the positive cone of the new system");
    }
    // the change of basis is unitriangular in some order: unmarked elements
    // are fixed, and the dependency digraph on marked elements is acyclic
    {
        std::map<int, int> colour;  // 0 unvisited, 1 open, 2 done
        // coordinates of eps_i beta_i on beta*_k: chain segment [pos(g.i), pos(g.j))
        auto contributes = [&](int i, int k) {
            Root g = E.s_root(i);
            Root b = se.piStar[k];
            return pos[b.i] >= pos[g.i] && pos[b.j] <= pos[g.j];
        };
        std::vector<int> stack;
        std::function<void(int)> dfs = [&](int i) {
            colour[i] = 1;
            for (int k = 1; k <= e - 1; ++k) {
                if (k == i || !se.altered[k] || !contributes(i, k)) continue;
                if (colour[k] == 1) throw falsifier("triangular order is cyclic");
                if (colour[k] == 0) dfs(k);
            }
            colour[i] = 2;
        };
        for (int i = 1; i <= e - 1; ++i) {
            if (!contributes(i, i))
                throw falsifier("diagonal coefficient of the triangular order vanishes");
            if (se.altered[i] && colour[i] == 0) dfs(i);
        }
    }
    return se;
}

// Straightened edge value with its certificates.
struct EdgeValue {
    Root value{1, 2};
    bool unchanged = false;  // E == E*
};

inline EdgeValue edge_value(const StraightenedEdge& se, const Edge& E, const TurningData& td,
                            const DoublePartition& dp) {
    EdgeValue ev;
    ev.value = Root(se.aStar, se.bStar);
    ev.unchanged = se.external.empty();
    RootClass c = classify(dp, -ev.value);
    if (!c.inK) throw falsifier("straightened edge value outside -K: " + ev.value.str());
    if (ev.unchanged && !classify(dp, ev.value).inNegRstar)
        throw falsifier("unaltered edge value outside -R_*");
    // endpoint predictions
    auto predict = [&](bool wantA) {
        int last_neg = 0;
        for (int t : td.T0)
            if ((td.typeA[t] != 0) != wantA && td.sg.at(t) == -1) last_neg = t;
        for (int s = last_neg + 1; s <= E.e(); ++s)
            if (td.turning[s] && (td.typeA[s] != 0) == wantA) return s;
        throw falsifier("no endpoint candidate of the required type");
    };
    int sa = predict(true), sb = predict(false);
    if (E.phi[sa - 1] != se.aStar || E.phi[sb - 1] != se.bStar)
        throw falsifier("straightened endpoints disagree with the prediction");
    // the value is an interval value with the sign of its upper position
    int lo = std::min(sa, sb), hi = std::max(sa, sb);
    Root iv = detail::interval_value(E, lo, hi);
    Root as_interval = E.eps[lo - 1] == 1 ? iv : -iv;
    if (as_interval != ev.value)
        throw falsifier("edge value is not the predicted signed interval value");
    return ev;
}

}  // namespace seaweed
