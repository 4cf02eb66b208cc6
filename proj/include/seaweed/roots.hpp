// Type A root lattice primitives: roots as ordered point pairs, supports,
// point chains, simple systems and Weyl words for the symmetric group.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seaweed {

// Thrown on malformed user input (bad partitions, bad config).
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& m) : std::runtime_error(m) {}
};

// Thrown when a structural guarantee of the construction fails.  On valid
// inputs this never fires; it is the teeth of the verification layer.
struct falsifier : std::runtime_error {
    explicit falsifier(const std::string& m) : std::runtime_error(m) {}
};

// eps_i - eps_j with i != j.  Positive iff i < j.
struct Root {
    int i = 0, j = 0;

    Root() = default;
    Root(int a, int b) : i(a), j(b) {
        if (a == b) throw invalid_input("Root: i == j");
    }
    bool positive() const { return i < j; }
    Root operator-() const { return Root(j, i); }
    friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    friend bool operator<(const Root& a, const Root& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
    std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

inline Root simple_root(int i) { return Root(i, i + 1); }

// Support as a set of simple-root indices {min(i,j), ..., max(i,j)-1},
// packed into a bitmask (bit k <=> alpha_k).  n <= 62 is ample here.
inline std::uint64_t support_mask(const Root& r) {
    int lo = r.i < r.j ? r.i : r.j;
    int hi = r.i < r.j ? r.j : r.i;
    std::uint64_t m = 0;
    for (int k = lo; k < hi; ++k) m |= (std::uint64_t{1} << k);
    return m;
}

inline std::vector<int> support(const Root& r) {
    std::vector<int> s;
    int lo = r.i < r.j ? r.i : r.j;
    int hi = r.i < r.j ? r.j : r.i;
    for (int k = lo; k < hi; ++k) s.push_back(k);
    return s;
}

// (e_i - e_j, e_k - e_l) under the standard pairing.
inline int inner(const Root& a, const Root& b) {
    auto d = [](int x, int y) { return x == y ? 1 : 0; };
    return d(a.i, b.i) - d(a.i, b.j) - d(a.j, b.i) + d(a.j, b.j);
}

// Sum of two roots when the sum is again a root (shared middle point).
inline bool root_sum(const Root& a, const Root& b, Root& out) {
    if (a.j == b.i && a.i != b.j) { out = Root(a.i, b.j); return true; }
    if (b.j == a.i && b.i != a.j) { out = Root(b.i, a.j); return true; }
    return false;
}

// eps-coordinate vector of a root (size n, entries in {-1,0,1}).
inline std::vector<int> to_vector(const Root& r, int n) {
    std::vector<int> v(n, 0);
    v[r.i - 1] += 1;
    v[r.j - 1] -= 1;
    return v;
}

using PointChain = std::vector<int>;  // distinct points of [1,n]

// Consecutive differences of a chain; a simple system of type A_{m-1}.
inline std::vector<Root> chain_to_simple_system(const PointChain& c) {
    std::vector<Root> out;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) out.emplace_back(c[k], c[k + 1]);
    return out;
}

struct WeylWord {
    std::vector<int> letters;  // simple reflection indices, applied right to left
    std::vector<int> perm;     // one-line notation, perm[k-1] = image of k
};

// One-line product of a word (letters applied right to left).
inline std::vector<int> word_to_permutation(const std::vector<int>& letters, int n) {
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[k] = k + 1;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        int s = *it;
        if (s < 1 || s >= n) throw invalid_input("word letter out of range");
        // p <- s_i o p : swap the *values* i, i+1 in the image
        for (auto& v : p) {
            if (v == s) v = s + 1;
            else if (v == s + 1) v = s;
        }
    }
    return p;
}

inline int inversions(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inv;
    return inv;
}

// Reduced word for the permutation via adjacent-transposition (bubble) sorting.
inline WeylWord reduced_word(const std::vector<int>& perm) {
    WeylWord w;
    w.perm = perm;
    std::vector<int> p = perm;
    int n = static_cast<int>(p.size());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int k = 0; k + 1 < n; ++k) {
            if (p[k] > p[k + 1]) {
                std::swap(p[k], p[k + 1]);
                w.letters.push_back(k + 1);
                moved = true;
            }
        }
    }
    // bubble sort realizes p * s_{j1} * ... * s_{jk} = id with right actions,
    // hence p equals the letters multiplied in reverse order
    std::vector<int> rev(w.letters.rbegin(), w.letters.rend());
    w.letters = rev;
    if (word_to_permutation(w.letters, n) != perm)
        throw falsifier("reduced_word: product does not reproduce the permutation");
    if (static_cast<int>(w.letters.size()) != inversions(perm))
        throw falsifier("reduced_word: word is not reduced");
    return w;
}

// Recover the underlying chain of a full-rank simple system and validate the
// A_{n-1} pairing pattern.  target_k = eps_{p(k)} - eps_{p(k+1)}.
inline PointChain simple_system_to_chain(const std::vector<Root>& target, int n) {
    if (static_cast<int>(target.size()) != n - 1)
        throw invalid_input("simple_system_to_chain: need n-1 roots");
    for (std::size_t a = 0; a < target.size(); ++a)
        for (std::size_t b = a; b < target.size(); ++b) {
            int want = (a == b) ? 2 : (b == a + 1 ? -1 : 0);
            if (inner(target[a], target[b]) != want)
                throw invalid_input("not a type-A simple system: bad pairing at (" +
                                    std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
        }
    PointChain c;
    c.push_back(target[0].i);
    for (std::size_t k = 0; k < target.size(); ++k) {
        if (target[k].i != c.back())
            throw invalid_input("simple system roots are not chained");
        c.push_back(target[k].j);
    }
    std::vector<char> seen(n + 1, 0);
    for (int p : c) {
        if (p < 1 || p > n || seen[p]) throw invalid_input("chain is not a traversal of [1,n]");
        seen[p] = 1;
    }
    return c;
}

inline WeylWord weyl_word(const std::vector<Root>& target, int n) {
    return reduced_word(simple_system_to_chain(target, n));
}

}  // namespace seaweed
