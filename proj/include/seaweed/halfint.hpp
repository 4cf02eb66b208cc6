// Half-integer arcs: the end-interchanging involutions iota+/iota- on the
// simple roots, their fictitious completion, the half-integer meanders, and
// the selection/translation of markings onto integer cascade arcs.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "biparabolic.hpp"
#include "roots.hpp"

namespace seaweed {

// Elements 1..n-1 are the simple roots alpha_i; fictitious elements get
// freshly allocated indices >= n.
struct ExtendedSimpleSystem {
    int n = 0;
    int total = 0;                      // elements are 1..total
    std::vector<int> iplus, iminus;     // involutions; index 0 unused
    std::vector<char> fict_plus, fict_minus;  // arc {x, iota(x)} fictitious?
    std::vector<char> fict_elem;        // element itself fictitious?

    bool real_elem(int x) const { return x >= 1 && x < n; }
};

namespace detail {

// iota restricted to each connected run of the simple-root subset: i -> l+r-i.
inline void diagram_involution(int n, std::uint64_t piset, std::vector<int>& io) {
    int i = 1;
    while (i < n) {
        if (!(piset >> i & 1)) { ++i; continue; }
        int l = i;
        while (i < n && (piset >> i & 1)) ++i;
        int r = i - 1;  // run of simple roots alpha_l .. alpha_r
        for (int k = l; k <= r; ++k) io[k] = l + r - k;
    }
}

}  // namespace detail

inline ExtendedSimpleSystem build_extended(const DoublePartition& dp) {
    ExtendedSimpleSystem ess;
    ess.n = dp.n;
    ess.total = dp.n - 1;
    ess.iplus.assign(dp.n, 0);
    ess.iminus.assign(dp.n, 0);
    detail::diagram_involution(dp.n, dp.pi_plus(), ess.iplus);
    detail::diagram_involution(dp.n, dp.pi_minus(), ess.iminus);
    ess.fict_plus.assign(dp.n, 0);
    ess.fict_minus.assign(dp.n, 0);
    ess.fict_elem.assign(dp.n, 0);

    auto io = [&](bool plus) -> std::vector<int>& { return plus ? ess.iplus : ess.iminus; };
    auto fict = [&](bool plus) -> std::vector<char>& {
        return plus ? ess.fict_plus : ess.fict_minus;
    };
    auto grow = [&](std::vector<int>& v) { v.resize(ess.total + 1, 0); };

    for (int a = 1; a < dp.n; ++a) {
        for (bool missing_plus : {false, true}) {
            bool defined_plus = !missing_plus;
            if (io(!defined_plus)[a] != 0) continue;  // already resolved
            if (io(defined_plus)[a] == 0) continue;   // walk starts on the defined side
            // follow a, iota a, iota' iota a, ... until we return to a or halt
            int x = a;
            bool side = defined_plus;
            for (;;) {
                int y = io(side)[x];
                if (y == a) {  // returned: fictitious self-arc on the missing side
                    io(!defined_plus)[a] = a;
                    fict(!defined_plus)[a] = 1;
                    break;
                }
                x = y;
                side = !side;
                if (io(side)[x] == 0) {
                    if (side == !defined_plus) {
                        // halts where the same involution is undefined: pair them
                        io(!defined_plus)[a] = x;
                        io(!defined_plus)[x] = a;
                        fict(!defined_plus)[a] = fict(!defined_plus)[x] = 1;
                    } else {
                        // halts where the *other* involution is undefined:
                        // adjoin a fictitious simple root in between
                        ++ess.total;
                        grow(ess.iplus); grow(ess.iminus);
                        ess.fict_plus.resize(ess.total + 1, 0);
                        ess.fict_minus.resize(ess.total + 1, 0);
                        ess.fict_elem.resize(ess.total + 1, 0);
                        int t = ess.total;
                        ess.fict_elem[t] = 1;
                        io(!defined_plus)[a] = t;
                        io(!defined_plus)[t] = a;
                        fict(!defined_plus)[a] = fict(!defined_plus)[t] = 1;
                        io(defined_plus)[t] = x;
                        io(defined_plus)[x] = t;
                        fict(defined_plus)[t] = fict(defined_plus)[x] = 1;
                    }
                    break;
                }
            }
        }
    }
    for (int x = 1; x <= ess.total; ++x)
        if (ess.iplus[x] == 0 || ess.iminus[x] == 0)
            throw falsifier("extended system left an involution undefined at element " +
                            std::to_string(x));
    return ess;
}

struct HalfIntMeander {
    std::vector<int> elems;        // orbit, in walk order
    bool is_edge = false;
    // ends of an edge: (element, side) with a self-arc there
    struct End { int elem; bool above; bool fictitious; };
    std::vector<End> ends;
};

inline std::vector<HalfIntMeander> halfint_meanders(const ExtendedSimpleSystem& ess) {
    std::vector<char> seen(ess.total + 1, 0);
    std::vector<HalfIntMeander> out;
    for (int s = 1; s <= ess.total; ++s) {
        if (seen[s]) continue;
        HalfIntMeander m;
        // collect orbit by breadth of the two involutions
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            m.elems.push_back(x);
            for (int y : {ess.iplus[x], ess.iminus[x]})
                if (!seen[y]) { seen[y] = 1; stack.push_back(y); }
        }
        std::sort(m.elems.begin(), m.elems.end());
        for (int x : m.elems) {
            if (ess.iplus[x] == x) m.ends.push_back({x, true, ess.fict_plus[x] != 0});
            if (ess.iminus[x] == x) m.ends.push_back({x, false, ess.fict_minus[x] != 0});
        }
        m.is_edge = !m.ends.empty();
        if (m.is_edge && m.ends.size() != 2)
            throw falsifier("half-integer edge without exactly two ends");
        out.push_back(std::move(m));
    }
    return out;
}

// A mark, already translated to an integer cascade arc {p,q}, p < q.
struct Mark {
    bool above = false;
    int p = 0, q = 0;
    friend bool operator==(const Mark& a, const Mark& b) {
        return a.above == b.above && a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const Mark& a, const Mark& b) {
        if (a.above != b.above) return a.above > b.above;
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
    std::string str() const {
        return std::string(above ? "above" : "below") + "{" + std::to_string(p) + "," +
               std::to_string(q) + "}";
    }
};

struct MarkingSet {
    std::vector<Mark> marks;   // one per half-integer meander
    std::string policy;
};

namespace detail {

// integer translate of the half-arc {x, iota(x)} (x a real simple root)
inline Mark translate(const ExtendedSimpleSystem& ess, int x, bool above) {
    int y = above ? ess.iplus[x] : ess.iminus[x];
    Mark m;
    m.above = above;
    m.p = std::min(x, y);
    m.q = std::max(x, y) + 1;
    return m;
}

}  // namespace detail

// Candidate marks of one meander: for an edge, its non-fictitious ends; for a
// loop, every non-fictitious arc between real elements.
inline std::vector<Mark> mark_candidates(const ExtendedSimpleSystem& ess,
                                         const HalfIntMeander& m) {
    std::vector<Mark> cand;
    if (m.is_edge) {
        for (const auto& e : m.ends)
            if (!e.fictitious) cand.push_back(detail::translate(ess, e.elem, e.above));
    } else {
        for (int x : m.elems) {
            if (!ess.real_elem(x)) continue;
            if (!ess.fict_plus[x] && ess.real_elem(ess.iplus[x])) {
                Mark c = detail::translate(ess, x, true);
                if (std::find(cand.begin(), cand.end(), c) == cand.end()) cand.push_back(c);
            }
            if (!ess.fict_minus[x] && ess.real_elem(ess.iminus[x])) {
                Mark c = detail::translate(ess, x, false);
                if (std::find(cand.begin(), cand.end(), c) == cand.end()) cand.push_back(c);
            }
        }
    }
    if (cand.empty())
        throw falsifier("meander admits no legal mark (all arcs fictitious)");
    std::sort(cand.begin(), cand.end(), [](const Mark& a, const Mark& b) {
        int sa = a.q - a.p, sb = b.q - b.p;          // support size of the translate
        if (sa != sb) return sa < sb;
        if (a.above != b.above) return a.above > b.above;  // above-L first
        return a.p < b.p;                             // leftmost
    });
    return cand;
}

// Default deterministic policy, or explicit per-orbit override.
inline MarkingSet select_markings(const ExtendedSimpleSystem& ess,
                                  const std::vector<HalfIntMeander>& ms,
                                  const std::vector<Mark>& explicit_marks = {}) {
    MarkingSet out;
    out.policy = explicit_marks.empty() ? "smallest-support/above/leftmost" : "explicit";
    for (const auto& m : ms) {
        std::vector<Mark> cand = mark_candidates(ess, m);
        if (explicit_marks.empty()) {
            out.marks.push_back(cand.front());
            continue;
        }
        std::vector<Mark> hit;
        for (const auto& em : explicit_marks)
            if (std::find(cand.begin(), cand.end(), em) != cand.end()) hit.push_back(em);
        if (hit.size() != 1)
            throw invalid_input("explicit marks must select exactly one legal arc per "
                                "half-integer meander (orbit with " +
                                std::to_string(hit.size()) + " hits)");
        out.marks.push_back(hit.front());
    }
    if (!explicit_marks.empty() && explicit_marks.size() != out.marks.size())
        throw invalid_input("explicit mark list has extraneous entries");
    // marking exclusion: one simple root never marked on both sides
    for (const auto& a : out.marks)
        for (const auto& b : out.marks)
            if (a.above && !b.above && a.p == b.p && a.q == b.q && a.q == a.p + 1)
                throw falsifier("simple root marked on both sides");
    std::sort(out.marks.begin(), out.marks.end());
    return out;
}

}  // namespace seaweed
