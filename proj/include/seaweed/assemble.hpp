// Joining the straightened edges and the fully fixed points into a single
// aligned chain on [1,n], the resulting simple system Pi* and Weyl element,
// the regular nilpotent lift y with rho(y) = eta, and the index-one family.
#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "biparabolic.hpp"
#include "linalg.hpp"
#include "modinv.hpp"
#include "roots.hpp"
#include "straighten.hpp"

namespace seaweed {

// A straightened edge ready for joining.
struct EdgeStar {
    PointChain chain;
    Root value{1, 2};             // eps_aStar - eps_bStar, lies in -K
    std::vector<Root> sRoots;     // original values eps_i beta_i
    std::vector<Root> piStar;     // beta*_1 .. beta*_{e-1}
    int aStar() const { return chain.front(); }
    int bStar() const { return chain.back(); }
};

struct AssemblePolicy {
    std::vector<int> fixed_chain;   // explicit order of the fully fixed points
                                    // (only honoured when there are no edges)
    bool prefer_first_cross = true; // try b*_1 -> a'*_1 before b'*_s -> a*_r
};

struct Assembly {
    PointChain chain;               // visits every point of [1,n] once
    std::vector<Root> added;        // joining roots, all in K
    std::vector<Root> piStar;       // consecutive chain differences
    WeylWord w;
};

namespace detail {

inline void require_K(const DoublePartition& dp, const Root& r, const char* what) {
    if (!classify(dp, r).inK)
        throw falsifier(std::string(what) + " " + r.str() + " lies outside K");
}

// Order fully fixed points into a chain whose consecutive differences lie in
// K: scan in increasing order, append when possible, otherwise prepend.
inline std::deque<int> order_fixed(const std::vector<int>& fs, const DoublePartition& dp) {
    std::deque<int> c;
    std::vector<int> sorted = fs;
    std::sort(sorted.begin(), sorted.end());
    for (int f : sorted) {
        if (c.empty()) { c.push_back(f); continue; }
        if (classify(dp, Root(c.back(), f)).inK) c.push_back(f);
        else if (classify(dp, Root(f, c.front())).inK) c.push_front(f);
        else throw falsifier("fully fixed point " + std::to_string(f) +
                             " cannot extend the chain inside K");
    }
    return c;
}

inline bool same_component(const DoublePartition& dp, int u, int v) {
    return component_of(dp, u) == component_of(dp, v);
}

}  // namespace detail

inline Assembly assemble(std::vector<EdgeStar> stars, const std::vector<int>& fullyFixed,
                         const DoublePartition& dp, const AssemblePolicy& pol = {}) {
    Assembly out;
    auto cat = [&](PointChain& c, const PointChain& piece) {
        c.insert(c.end(), piece.begin(), piece.end());
    };

    // split by the side of the straightened value and sort by starting point
    std::vector<const EdgeStar*> fp, fm;  // values in -K^-, resp. -K^+
    for (const auto& e : stars) {
        RootClass c = classify(dp, -e.value);
        if (c.inKminus) fp.push_back(&e);
        else if (c.inKplus) fm.push_back(&e);
        else throw falsifier("straightened value " + e.value.str() + " outside -K");
    }
    auto by_start = [](const EdgeStar* a, const EdgeStar* b) { return a->aStar() < b->aStar(); };
    std::sort(fp.begin(), fp.end(), by_start);
    std::sort(fm.begin(), fm.end(), by_start);

    int r = static_cast<int>(fp.size()), s = static_cast<int>(fm.size());
    PointChain combined;
    if (r + s == 0) {
        // eta = 0: the truncation is commutative, every point is fully fixed
        if (static_cast<int>(fullyFixed.size()) != dp.n)
            throw falsifier("no edges but some points are not fully fixed");
        if (!pol.fixed_chain.empty()) {
            std::vector<int> check = pol.fixed_chain;
            std::sort(check.begin(), check.end());
            std::vector<int> want = fullyFixed;
            std::sort(want.begin(), want.end());
            if (check != want)
                throw invalid_input("fixed_chain must permute the fully fixed points");
            combined.assign(pol.fixed_chain.begin(), pol.fixed_chain.end());
        } else {
            std::deque<int> c = detail::order_fixed(fullyFixed, dp);
            combined.assign(c.begin(), c.end());
        }
    } else {
        PointChain upper, lower;
        for (int i = r; i >= 1; --i) cat(upper, fp[i - 1]->chain);
        for (int j = 1; j <= s; ++j) cat(lower, fm[j - 1]->chain);

        if (r == 0) combined = lower;
        else if (s == 0) combined = upper;
        else {
            int b1 = fp[0]->bStar(), a1p = fm[0]->aStar();
            int bsp = fm[s - 1]->bStar(), ar = fp[r - 1]->aStar();
            bool legal1 = !detail::same_component(dp, b1, a1p);
            bool legal2 = !detail::same_component(dp, bsp, ar);
            if (legal1 && (pol.prefer_first_cross || !legal2)) {
                combined = upper;
                cat(combined, lower);
            } else if (legal2) {
                combined = lower;
                cat(combined, upper);
            } else if (r > 1) {
                // rewire: E*_r feeds the lower family, which feeds E*_{r-1} .. E*_1
                combined = fp[r - 1]->chain;
                cat(combined, lower);
                for (int i = r - 1; i >= 1; --i) cat(combined, fp[i - 1]->chain);
            } else if (s > 1) {
                // mirror rewiring through the last lower edge
                combined.clear();
                for (int j = 1; j <= s - 1; ++j) cat(combined, fm[j - 1]->chain);
                cat(combined, upper);
                cat(combined, fm[s - 1]->chain);
            } else {
                throw falsifier("no legal cross join between the two edge families");
            }
        }
    }

    // attach the fully fixed points at the two ends of the combined chain
    if (r + s > 0 && !fullyFixed.empty()) {
        int aS = combined.front(), bS = combined.back();
        ComponentRef ca = component_of(dp, aS), cb = component_of(dp, bS);
        std::vector<int> Fa, Fb;
        auto split = [&](auto pred) {
            for (int f : fullyFixed) (pred(f) ? Fa : Fb).push_back(f);
        };
        if (ca == cb) {
            if (!equicentral(dp, ca))
                throw falsifier("chain ends share a non-equicentral component");
            bool minus_bigger = dp.jminus[ca.jm].len() > dp.jplus[ca.jp].len();
            // left fixed points go to the source when J- strictly contains J+
            split([&](int f) {
                bool left = f < ca.interval.l;
                return minus_bigger ? left : !left;
            });
        } else if (!linked(ca, cb)) {
            if (cb.interval.r < ca.interval.l)
                split([&](int f) { return dp.jp_index(f) <= cb.jp; });
            else
                split([&](int f) { return dp.jm_index(f) > ca.jm; });
        } else if (ca.jm == cb.jm) {
            split([&](int f) { return dp.jp_index(f) <= cb.jp; });
        } else {  // ca.jp == cb.jp
            split([&](int f) { return dp.jm_index(f) > ca.jm; });
        }
        for (int f : Fa) detail::require_K(dp, Root(f, aS), "source-side fixed point link");
        for (int f : Fb) detail::require_K(dp, Root(bS, f), "sink-side fixed point link");
        if (!Fa.empty()) {
            std::deque<int> c = detail::order_fixed(Fa, dp);
            combined.insert(combined.begin(), c.begin(), c.end());
        }
        if (!Fb.empty()) {
            std::deque<int> c = detail::order_fixed(Fb, dp);
            combined.insert(combined.end(), c.begin(), c.end());
        }
    }

    if (static_cast<int>(combined.size()) != dp.n)
        throw falsifier("assembled chain misses points of [1,n]");
    out.chain = combined;
    out.piStar = chain_to_simple_system(out.chain);
    // the joining roots are the chain differences not internal to any edge;
    // every one of them must lie in K
    std::set<Root> internal;
    for (const auto& e : stars) internal.insert(e.piStar.begin(), e.piStar.end());
    for (const auto& g : out.piStar)
        if (!internal.count(g)) {
            detail::require_K(dp, g, "joining root");
            out.added.push_back(g);
        }
    out.w = reduced_word(out.chain);  // chain in one-line notation is w itself
    return out;
}

// The regular nilpotent lift y: one entry per root of (union of S_E) u Pi*.
struct NilpotentLift {
    std::vector<Root> yRoots;
    IMat y;
    IMat eta;  // rho(y): the K-entries of y removed
};

inline NilpotentLift lift(const std::vector<Root>& S, const Assembly& as,
                          const DoublePartition& dp) {
    NilpotentLift out;
    std::set<Root> roots(S.begin(), S.end());
    roots.insert(as.piStar.begin(), as.piStar.end());
    out.yRoots.assign(roots.begin(), roots.end());
    out.y = roots_to_matrix(out.yRoots, dp.n);
    std::vector<Root> etaRoots;
    for (const auto& g : out.yRoots)
        if (classify(dp, g).inR) etaRoots.push_back(g);
    out.eta = roots_to_matrix(etaRoots, dp.n);
    // restriction must recover eta exactly: the extra roots all lie in K
    IMat want = roots_to_matrix(S, dp.n);
    if (out.eta != want)
        throw falsifier("restriction of y does not recover eta");
    if (!regular_nilpotent(out.y))
        throw falsifier("lift y is not regular nilpotent");
    return out;
}

// Index one: pi+ = pi, pi- = pi minus alpha_p, gcd(p,n) = 1.
struct IndexOneData {
    int n = 0, p = 0;
    Root exceptional{1, 2};       // eps_s beta_s
    std::vector<Root> S;          // the remaining cascade values
    std::vector<Root> yRoots;     // the lift (isolated one when p = 1)
    IMat y;
    bool regular_for_all_shifts = false;  // y + c x_exceptional regular for all c?
};

inline IMat shifted_matrix(const IndexOneData& d, const Int& c) {
    IMat m = roots_to_matrix(d.yRoots, d.n);
    m[d.exceptional.i - 1][d.exceptional.j - 1] += c;
    return m;
}

inline IndexOneData index_one(int n, int p) {
    if (p < 1 || p >= n) throw invalid_input("index one requires 1 <= p < n");
    if (std::gcd(p, n) != 1) throw invalid_input("index one requires gcd(p,n) = 1");
    DoublePartition dp(n, {{1, n}}, {{1, p}, {p + 1, n}});
    IndexOneData out;
    out.n = n;
    out.p = p;
    auto kp = cascade(dp, true), km = cascade(dp, false);
    auto [edges, fixed] = decompose(kp, km, dp);
    if (edges.size() != 1 || edges[0].e() != n || !fixed.empty())
        throw falsifier("unmodified index-one meander is not a single full edge");
    Edge E = edges[0];
    int s0 = 0;
    for (int i = 1; i <= n - 1; ++i) {
        Root g = E.s_root(i);
        if (g.j == g.i + 1 || g.i == g.j + 1) {
            if (s0) throw falsifier("two simple cascade values in the index-one meander");
            s0 = i;
        }
    }
    if (!s0) throw falsifier("no simple cascade value in the index-one meander");
    out.exceptional = E.s_root(s0);
    for (int i = 1; i <= n - 1; ++i)
        if (i != s0) out.S.push_back(E.s_root(i));

    // for p = 1 or p = n - 1 the edge is fully aligned, the exceptional line
    // sits at one of its ends and there is no turning point to mark
    if (!detect_turnings(E).T0.empty()) {
        // straighten the full meander, insisting that the exceptional value is
        // the one marked at its turning point
        StraightenPolicy sp;
        TurningData probe = analyze_edge(E, dp);
        if (!probe.marked.count(s0) && probe.turning[s0])
            sp.mark_below_at.insert(E.phi[s0 - 1]);
        TurningData td = analyze_edge(E, dp, sp);
        StraightenedEdge se = straighten(E, td, dp);
        if (!se.altered[s0])
            throw falsifier("exceptional value survives index-one straightening");
        std::set<Root> roots(out.S.begin(), out.S.end());
        for (int i = 1; i <= n - 1; ++i)
            if (se.altered[i]) roots.insert(se.piStar[i]);
        out.yRoots.assign(roots.begin(), roots.end());
        out.regular_for_all_shifts = true;
    } else {
        // artificial lift: negate the exceptional line (which sits at an end
        // of the already-aligned edge), mark it by fiat, straighten
        E.eps[s0 - 1] = -E.eps[s0 - 1];
        if (n == 2) {
            // one line only, nothing to straighten: the negated value is the lift
            out.yRoots = {E.s_root(1)};
        } else {
            TurningData td = detect_turnings(E);
            if (td.T0.size() != 1 || (td.T0[0] != s0 && td.T0[0] != s0 + 1))
                throw falsifier("negating the exceptional line did not create a single "
                                "turning point beside it");
            int t = td.T0[0];
            td.marked.insert(s0);
            td.assigned[t] = s0;
            td.sg[t] = (s0 == t - 1) ? 1 : -1;
            StraightenedEdge se = straighten(E, td, dp);
            std::set<Root> roots(out.S.begin(), out.S.end());
            for (int i = 1; i <= n - 1; ++i)
                if (se.altered[i]) roots.insert(se.piStar[i]);
            out.yRoots.assign(roots.begin(), roots.end());
        }
        out.regular_for_all_shifts = false;
    }
    out.y = roots_to_matrix(out.yRoots, n);
    if (!regular_nilpotent(out.y)) throw falsifier("index-one lift is not regular nilpotent");
    // restriction check: K-entries of y vanish, the rest is eta
    std::vector<Root> etaRoots;
    for (const auto& g : out.yRoots)
        if (classify(dp, g).inR) etaRoots.push_back(g);
    if (roots_to_matrix(etaRoots, n) != roots_to_matrix(out.S, n))
        throw falsifier("index-one restriction does not recover eta");
    return out;
}

inline DoublePartition index_one_partition(int n, int p) {
    return DoublePartition(n, {{1, n}}, {{1, p}, {p + 1, n}});
}

}  // namespace seaweed
