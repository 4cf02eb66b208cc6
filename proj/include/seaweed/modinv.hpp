// Integer involutions: Kostant cascades kappa+/-, their anti-Toeplitz /
// anti-Jordan modification on marked blocks (sigma+/-), decomposition of the
// modified meanders into edges, and the resulting data S, eta, h.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "biparabolic.hpp"
#include "halfint.hpp"
#include "linalg.hpp"
#include "roots.hpp"

namespace seaweed {

struct IntegerInvolution {
    bool above = true;
    std::vector<int> map;  // involution of [1,n]; index 0 unused

    int operator()(int p) const { return map[p]; }
    bool fixes(int p) const { return map[p] == p; }
};

// kappa on a single interval [l,r]: p -> l+r-p.
inline IntegerInvolution cascade(const DoublePartition& dp, bool above) {
    IntegerInvolution k;
    k.above = above;
    k.map.assign(dp.n + 1, 0);
    const auto& parts = above ? dp.jplus : dp.jminus;
    for (const auto& J : parts)
        for (int p = J.l; p <= J.r; ++p) k.map[p] = J.l + J.r - p;
    return k;
}

// Non-trivial arcs {p, inv(p)}, p < inv(p), as (side-signed) roots of R:
// above L the arc is the positive root (p, inv(p)), below L the negative one.
inline std::vector<Root> arcs_as_roots(const IntegerInvolution& inv) {
    std::vector<Root> out;
    for (int p = 1; p < static_cast<int>(inv.map.size()); ++p)
        if (inv.map[p] > p) out.push_back(inv.above ? Root(p, inv.map[p]) : Root(inv.map[p], p));
    return out;
}

namespace detail {

// Anti-Toeplitz replacement on one marked run inside a component of length N
// (local coordinates 1..N).  Marked arc left points form the run [r, s-1].
// Loop case (s-1 < floor(N/2)): block rows p = r+a, columns q = N+1-r-b,
// sigma(row a) = col((a+shift) mod m) with m = s-r+1, gcd(shift,m)=1.
// Edge (anti-Jordan) case (s-1 = floor(N/2)): arcs row a <-> col(a+1).
struct Block {
    int r = 0, s = 0;     // marked run [r, s-1]
    bool edge_case = false;
    int m = 0;
    std::vector<int> pts; // all points of the block, local coordinates
};

inline long long gcd_ll(long long a, long long b) { return b ? gcd_ll(b, a % b) : a; }

inline void apply_block(std::vector<int>& local_map, int N, int run_l, int run_r, int shift) {
    int r = run_l, s = run_r + 1;
    bool edge_case = (run_r == N / 2);
    int s_minus = edge_case ? (N % 2 == 0 ? s - 1 : s) : s;
    int m = s_minus - r + 1;
    auto row = [&](int a) { return r + a; };
    auto col = [&](int b) { return N + 1 - r - b; };
    // clear every kappa-arc whose endpoints lie in the block
    for (int a = 0; a < m; ++a) {
        local_map[row(a)] = row(a);
        local_map[col(a)] = col(a);
    }
    if (edge_case) {
        for (int a = 0; a + 1 < m; ++a) {
            local_map[row(a)] = col(a + 1);
            local_map[col(a + 1)] = row(a);
        }
    } else {
        if (gcd_ll(shift, m) != 1)
            throw invalid_input("anti-Toeplitz shift must be coprime to the block size " +
                                std::to_string(m));
        for (int a = 0; a < m; ++a) {
            int b = (a + shift) % m;
            local_map[row(a)] = col(b);
            local_map[col(b)] = row(a);
        }
    }
    // T(i): <kappa, sigma> restricted to the block is a single loop/edge.
    std::vector<int> pts;
    for (int a = 0; a < m; ++a) {
        pts.push_back(row(a));
        if (col(a) != row(m - 1) || N % 2 == 0) pts.push_back(col(a));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<char> seen(N + 1, 0);
    std::vector<int> stack{pts.front()};
    seen[pts.front()] = 1;
    int reached = 0;
    auto kap = [&](int p) { return N + 1 - p; };
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y : {kap(x), local_map[x]})
            if (std::find(pts.begin(), pts.end(), y) != pts.end() && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    if (reached != static_cast<int>(pts.size()))
        throw falsifier("modified block violates the single-meander property");
}

}  // namespace detail

// Build sigma for one side from the translated marks.
inline IntegerInvolution modified_involution(const DoublePartition& dp, bool above,
                                             const MarkingSet& marks, int shift) {
    IntegerInvolution sigma = cascade(dp, above);
    const auto& parts = above ? dp.jplus : dp.jminus;
    for (const auto& J : parts) {
        int N = J.len();
        // marked arc left points, local coordinates
        std::vector<int> lefts;
        for (const auto& mk : marks.marks) {
            if (mk.above != above) continue;
            if (!J.contains(mk.p)) continue;
            if (!J.contains(mk.q) || mk.q != J.l + J.r - mk.p)
                throw invalid_input("mark " + mk.str() + " is not a cascade arc of " + J.str());
            lefts.push_back(mk.p - J.l + 1);
        }
        if (lefts.empty()) continue;
        std::sort(lefts.begin(), lefts.end());
        std::vector<int> local(N + 1);
        for (int p = 1; p <= N; ++p) local[p] = sigma.map[J.l + p - 1] - J.l + 1;
        for (std::size_t k = 0; k < lefts.size();) {
            std::size_t e = k;
            while (e + 1 < lefts.size() && lefts[e + 1] == lefts[e] + 1) ++e;
            detail::apply_block(local, N, lefts[k], lefts[e], shift);
            k = e + 1;
        }
        for (int p = 1; p <= N; ++p) sigma.map[J.l + p - 1] = local[p] + J.l - 1;
    }
    return sigma;
}

inline std::pair<IntegerInvolution, IntegerInvolution> modified_involutions(
    const DoublePartition& dp, const MarkingSet& marks, int shift = 1) {
    return {modified_involution(dp, true, marks, shift),
            modified_involution(dp, false, marks, shift)};
}

// A non-trivial modified integer meander, traversed end to end.
struct Edge {
    std::vector<int> phi;        // phi[0..e-1] = phi(1..e)
    std::vector<int> eps;        // eps[0..e-2], +-1
    std::vector<char> above;     // arc t between phi(t),phi(t+1) above L?
    int e() const { return static_cast<int>(phi.size()); }
    Root beta(int t) const { return Root(phi[t - 1], phi[t]); }          // t in [1,e-1]
    Root s_root(int t) const { return eps[t - 1] == 1 ? beta(t) : -beta(t); }
    bool arc_above(int t) const { return above[t - 1] != 0; }
};

// Orbit decomposition of <sigma+, sigma->.  Every non-trivial orbit must be
// an edge; a loop aborts (it would contradict the independence of S).
inline std::pair<std::vector<Edge>, std::vector<int>> decompose(
    const IntegerInvolution& sp, const IntegerInvolution& sm, const DoublePartition& dp) {
    std::vector<Edge> edges;
    std::vector<int> fully_fixed;
    std::vector<char> seen(dp.n + 1, 0);
    for (int p = 1; p <= dp.n; ++p) {
        if (seen[p]) continue;
        if (sp.fixes(p) && sm.fixes(p)) {
            fully_fixed.push_back(p);
            seen[p] = 1;
            continue;
        }
        // endpoints of the orbit through p: points fixed by exactly one sigma
        std::vector<int> orbit{p};
        seen[p] = 1;
        std::vector<int> stack{p};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {sp(x), sm(x)})
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                    stack.push_back(y);
                }
        }
        std::vector<int> ends;
        for (int x : orbit)
            if (sp.fixes(x) != sm.fixes(x)) ends.push_back(x);
        if (ends.size() != 2) {
            std::string pts;
            for (int x : orbit) pts += std::to_string(x) + " ";
            throw falsifier("modified integer meander is a loop: { " + pts + "}");
        }
        // traversal start: the end fixed by sigma+ if exactly one such, else smaller
        int a;
        bool a0_plus = sp.fixes(ends[0]), a1_plus = sp.fixes(ends[1]);
        if (a0_plus != a1_plus) a = a0_plus ? ends[0] : ends[1];
        else a = std::min(ends[0], ends[1]);
        Edge E;
        E.phi.push_back(a);
        bool use_above = sm.fixes(a);  // start fixed by sigma-  => first move above
        int cur = a;
        while (true) {
            int nxt = use_above ? sp(cur) : sm(cur);
            if (nxt == cur) break;
            E.above.push_back(use_above ? 1 : 0);
            // sign so that eps_t * beta_t is the drawn root of R
            E.eps.push_back(((cur < nxt) == use_above) ? 1 : -1);
            E.phi.push_back(nxt);
            cur = nxt;
            use_above = !use_above;
        }
        if (static_cast<int>(E.phi.size()) != static_cast<int>(orbit.size()))
            throw falsifier("edge traversal did not cover its orbit");
        edges.push_back(std::move(E));
    }
    return {edges, fully_fixed};
}

struct AdaptedPairData {
    std::vector<Root> S;        // union of the S_E
    std::vector<int> fullyFixed;
    QVec h;                     // eps-coordinates, trace zero, gamma(h) = -1 on S;
                                // minimal-norm pick, later resolved inside the
                                // truncated Cartan once that space is certified
};

// gamma(h) for diagonal h in eps-coordinates.
inline Rat eval_root(const Root& g, const QVec& h) { return h[g.i - 1] - h[g.j - 1]; }

inline AdaptedPairData adapted_pair(const std::vector<Edge>& edges,
                                    const std::vector<int>& fullyFixed,
                                    const DoublePartition& dp) {
    AdaptedPairData out;
    out.fullyFixed = fullyFixed;
    for (const auto& E : edges)
        for (int t = 1; t < E.e(); ++t) out.S.push_back(E.s_root(t));
    std::sort(out.S.begin(), out.S.end());
    // S+ (resp. S-) arcs are pairwise disjoint: each comes from an involution
    for (std::size_t a = 0; a < out.S.size(); ++a)
        for (std::size_t b = a + 1; b < out.S.size(); ++b) {
            const Root &x = out.S[a], &y = out.S[b];
            if (x.positive() != y.positive()) continue;
            if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j)
                throw falsifier("two arcs of S on the same side share a point");
        }
    for (const auto& g : out.S)
        if (!classify(dp, g).inR) throw falsifier("element of S outside R: " + g.str());
    // minimal-norm trace-zero h with gamma(h) = -1 for all gamma in S
    out.h.assign(dp.n, 0);
    if (!out.S.empty()) {
        QMat A;
        QVec b;
        for (const auto& g : out.S) {
            QVec row(dp.n, 0);
            row[g.i - 1] = 1;
            row[g.j - 1] = -1;
            A.push_back(std::move(row));
            b.push_back(-1);
        }
        A.push_back(QVec(dp.n, 1));  // trace zero
        b.push_back(0);
        if (rank_rat(A) != static_cast<int>(A.size()))
            throw falsifier("S (with the trace form) is linearly dependent");
        out.h = min_norm_solve(A, b);
        for (const auto& g : out.S)
            if (eval_root(g, out.h) != -1) throw falsifier("h fails gamma(h) = -1");
    }
    return out;
}

// Sparse 0/1 matrix with a one at (i,j) per root eps_i - eps_j.
inline IMat roots_to_matrix(const std::vector<Root>& rs, int n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (const auto& r : rs) m[r.i - 1][r.j - 1] = 1;
    return m;
}

}  // namespace seaweed
