// Double partitions of [1,n], the simple-root subsets pi+/pi- and their gaps,
// and the classification of every root into R, M, K, K+, K-, R_* and -R_*.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roots.hpp"

namespace seaweed {

struct Interval {
    int l = 0, r = 0;
    int len() const { return r - l + 1; }
    int centre2() const { return l + r; }  // doubled centre, exact
    bool contains(int p) const { return l <= p && p <= r; }
    friend bool operator==(const Interval& a, const Interval& b) { return a.l == b.l && a.r == b.r; }
    std::string str() const { return "[" + std::to_string(l) + "," + std::to_string(r) + "]"; }
};

class DoublePartition {
  public:
    int n = 0;
    std::vector<Interval> jplus, jminus;

    DoublePartition(int n_, std::vector<Interval> jp, std::vector<Interval> jm)
        : n(n_), jplus(std::move(jp)), jminus(std::move(jm)) {
        if (n < 2 || n > 62) throw invalid_input("n out of supported range [2,62]");
        validate_cover(jplus, "jplus");
        validate_cover(jminus, "jminus");
        jp_of_.assign(n + 1, -1);
        jm_of_.assign(n + 1, -1);
        for (std::size_t k = 0; k < jplus.size(); ++k)
            for (int p = jplus[k].l; p <= jplus[k].r; ++p) jp_of_[p] = static_cast<int>(k);
        for (std::size_t k = 0; k < jminus.size(); ++k)
            for (int p = jminus[k].l; p <= jminus[k].r; ++p) jm_of_[p] = static_cast<int>(k);
        pi_plus_ = pi_of(jp_of_);
        pi_minus_ = pi_of(jm_of_);
        if ((pi_plus_ | pi_minus_) != pi_all())
            throw invalid_input("pi+ union pi- must equal pi (no two-sided gap)");
        if ((pi_plus_ & pi_minus_) == pi_all())
            throw invalid_input("pi+ intersect pi- must be proper (q = g rejected)");
    }

    // part sizes convenience (compositions of n)
    static DoublePartition from_sizes(int n, const std::vector<int>& plus,
                                      const std::vector<int>& minus) {
        return DoublePartition(n, sizes_to_intervals(n, plus), sizes_to_intervals(n, minus));
    }

    static std::vector<Interval> sizes_to_intervals(int n, const std::vector<int>& sizes) {
        std::vector<Interval> iv;
        int at = 1;
        for (int s : sizes) {
            if (s < 1) throw invalid_input("part size must be positive");
            iv.push_back({at, at + s - 1});
            at += s;
        }
        if (at != n + 1) throw invalid_input("part sizes must sum to n");
        return iv;
    }

    std::uint64_t pi_plus() const { return pi_plus_; }
    std::uint64_t pi_minus() const { return pi_minus_; }
    std::uint64_t pi_all() const { return ((std::uint64_t{1} << n) - 2); }  // bits 1..n-1
    std::uint64_t hat_plus() const { return pi_all() & ~pi_plus_; }
    std::uint64_t hat_minus() const { return pi_all() & ~pi_minus_; }

    int jp_index(int p) const { return jp_of_[p]; }
    int jm_index(int p) const { return jm_of_[p]; }
    const Interval& jp_of(int p) const { return jplus[jp_of_[p]]; }
    const Interval& jm_of(int p) const { return jminus[jm_of_[p]]; }

    bool parabolic() const { return pi_plus_ == pi_all() || pi_minus_ == pi_all(); }

    std::vector<Root> all_roots() const {
        std::vector<Root> v;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) v.emplace_back(i, j);
        return v;
    }

  private:
    std::vector<int> jp_of_, jm_of_;
    std::uint64_t pi_plus_ = 0, pi_minus_ = 0;

    void validate_cover(const std::vector<Interval>& iv, const char* name) const {
        int at = 1;
        for (const auto& J : iv) {
            if (J.l != at || J.r < J.l || J.r > n)
                throw invalid_input(std::string(name) + ": intervals must tile [1,n] in order");
            at = J.r + 1;
        }
        if (at != n + 1) throw invalid_input(std::string(name) + ": intervals do not cover [1,n]");
    }

    std::uint64_t pi_of(const std::vector<int>& of) const {
        std::uint64_t m = 0;
        for (int i = 1; i < n; ++i)
            if (of[i] == of[i + 1]) m |= (std::uint64_t{1} << i);
        return m;
    }
};

struct RootClass {
    bool inR = false, inM = false, inK = false, inNegK = false;
    bool inKplus = false, inKminus = false;
    bool inRstar = false, inNegRstar = false;
};

inline RootClass classify(const DoublePartition& dp, const Root& r) {
    std::uint64_t supp = support_mask(r);
    bool pos = r.positive();
    RootClass c;
    auto in_R = [&](bool positive, std::uint64_t s) {
        return positive ? (s & ~dp.pi_plus()) == 0 : (s & ~dp.pi_minus()) == 0;
    };
    c.inR = in_R(pos, supp);
    bool negInR = in_R(!pos, supp);  // -r in R
    c.inM = (supp & ~(dp.pi_plus() & dp.pi_minus())) == 0;
    c.inK = !c.inR;
    c.inNegK = !negInR;
    c.inKplus = pos && (supp & dp.hat_plus()) != 0;
    c.inKminus = !pos && (supp & dp.hat_minus()) != 0;
    c.inRstar = negInR && !c.inR;       // (R u -R) \ R
    c.inNegRstar = c.inR && !c.inM;     // R \ M = R n -K
    return c;
}

inline bool is_nil(const DoublePartition& dp, const Root& r) {
    return (support_mask(r) & (dp.hat_plus() | dp.hat_minus())) != 0;
}

// Component of the double partition: a nonempty J+ n J-.
struct ComponentRef {
    int jp = -1, jm = -1;
    Interval interval;
    friend bool operator==(const ComponentRef& a, const ComponentRef& b) {
        return a.jp == b.jp && a.jm == b.jm;
    }
};

inline ComponentRef component_of(const DoublePartition& dp, int p) {
    ComponentRef c;
    c.jp = dp.jp_index(p);
    c.jm = dp.jm_index(p);
    const Interval& a = dp.jplus[c.jp];
    const Interval& b = dp.jminus[c.jm];
    c.interval = {a.l > b.l ? a.l : b.l, a.r < b.r ? a.r : b.r};
    return c;
}

inline std::vector<ComponentRef> components(const DoublePartition& dp) {
    std::vector<ComponentRef> out;
    int p = 1;
    while (p <= dp.n) {
        ComponentRef c = component_of(dp, p);
        out.push_back(c);
        p = c.interval.r + 1;
    }
    return out;
}

inline bool equicentral(const DoublePartition& dp, const ComponentRef& c) {
    return dp.jplus[c.jp].centre2() == dp.jminus[c.jm].centre2();
}

inline bool linked(const ComponentRef& a, const ComponentRef& b) {
    return a.jp == b.jp || a.jm == b.jm;
}

}  // namespace seaweed
