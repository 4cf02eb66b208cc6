// Exact linear algebra over Z and Q (GMP-backed): fraction-free Bareiss rank
// for integer matrices, rational row reduction, kernels, spans, subspace
// intersection, and minimal-norm underdetermined solves.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "roots.hpp"

namespace seaweed {

using Int = mpz_class;
using Rat = mpq_class;
using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

// Bareiss fraction-free elimination; exact rank of an integer matrix.
inline int rank_int(IMat a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int k = r; k < rows; ++k)
            if (a[k][c] != 0) { piv = k; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int k = r + 1; k < rows; ++k) {
            for (int c2 = c + 1; c2 < cols; ++c2)
                a[k][c2] = (a[r][c] * a[k][c2] - a[k][c] * a[r][c2]) / prev;
            a[k][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// In-place reduced row echelon form; returns pivot column per row.
inline std::vector<int> rref(QMat& a) {
    std::vector<int> pivots;
    int rows = static_cast<int>(a.size());
    if (rows == 0) return pivots;
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int k = r; k < rows; ++k)
            if (a[k][c] != 0) { piv = k; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rat inv = 1 / a[r][c];
        for (int c2 = c; c2 < cols; ++c2) a[r][c2] *= inv;
        for (int k = 0; k < rows; ++k) {
            if (k == r || a[k][c] == 0) continue;
            Rat f = a[k][c];
            for (int c2 = c; c2 < cols; ++c2) a[k][c2] -= f * a[r][c2];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(pivots.size());
    return pivots;
}

inline int rank_rat(QMat a) { return static_cast<int>(rref(a).size()); }

// Basis of the null space {x : a x = 0}.
inline QMat kernel(QMat a, int cols) {
    std::vector<int> piv = rref(a);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    QMat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        QVec v(cols, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Row-span basis (rref rows).
inline QMat span_basis(QMat vecs) {
    rref(vecs);
    return vecs;
}

// Intersection of the row spans of two bases in Q^d (Zassenhaus-free direct
// method: solve for combinations of A-rows lying in span(B)).
inline QMat intersect_spans(const QMat& A, const QMat& B, int d) {
    if (A.empty() || B.empty()) return {};
    // x in span(A) and x in span(B)  <=>  x = s^T A with (A^T | B^T) null vector
    int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
    QMat m(d, QVec(na + nb, 0));
    for (int r = 0; r < na; ++r)
        for (int c = 0; c < d; ++c) m[c][r] = A[r][c];
    for (int r = 0; r < nb; ++r)
        for (int c = 0; c < d; ++c) m[c][na + r] = -B[r][c];
    QMat null = kernel(m, na + nb);
    QMat out;
    for (const auto& t : null) {
        QVec v(d, 0);
        for (int r = 0; r < na; ++r)
            for (int c = 0; c < d; ++c) v[c] += t[r] * A[r][c];
        bool nz = false;
        for (const auto& x : v) if (x != 0) { nz = true; break; }
        if (nz) out.push_back(std::move(v));
    }
    return span_basis(std::move(out));
}

// Solve the square system m x = b by elimination; m must be invertible.
inline QVec solve_square(QMat m, QVec b) {
    int n = static_cast<int>(m.size());
    for (int r = 0; r < n; ++r) m[r].push_back(b[r]);
    std::vector<int> piv = rref(m);
    if (static_cast<int>(piv.size()) != n || (n && piv.back() == n))
        throw falsifier("solve_square: singular system");
    QVec x(n);
    for (int r = 0; r < n; ++r) x[piv[r]] = m[r][n];
    return x;
}

// Minimal Euclidean norm solution of A x = b for independent rows of A:
// x = A^T (A A^T)^{-1} b.
inline QVec min_norm_solve(const QMat& A, const QVec& b) {
    int rows = static_cast<int>(A.size());
    int cols = rows ? static_cast<int>(A[0].size()) : 0;
    QMat gram(rows, QVec(rows, 0));
    for (int r = 0; r < rows; ++r)
        for (int s = 0; s < rows; ++s)
            for (int c = 0; c < cols; ++c) gram[r][s] += A[r][c] * A[s][c];
    QVec z = solve_square(std::move(gram), b);
    QVec x(cols, 0);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) x[c] += A[r][c] * z[r];
    return x;
}

// Rank of an integer matrix given as sparse (i,j)->1 support of size n x n.
inline IMat mat_mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    IMat c(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// rank(y^k) = n-k for k = 0..n characterizes a single Jordan block.
inline bool regular_nilpotent(const IMat& y) {
    int n = static_cast<int>(y.size());
    IMat p(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    for (int k = 0; k <= n; ++k) {
        if (rank_int(p) != n - k) return false;
        if (k < n) p = mat_mul(p, y);
    }
    return true;
}

}  // namespace seaweed
