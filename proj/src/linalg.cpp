#include "cutjoin/linalg.hpp"

#include <stdexcept>

namespace cutjoin {

RMatrix identity_matrix(int n) {
    RMatrix m(n, RVector(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
    int n = static_cast<int>(a.size()), k = static_cast<int>(b.size());
    int m = k ? static_cast<int>(b[0].size()) : 0;
    RMatrix out(n, RVector(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int l = 0; l < m; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

namespace {

// Forward elimination to row echelon form on [a | rhs columns]; returns rank.
int eliminate(RMatrix& a, RMatrix& rhs) {
    int n = static_cast<int>(a.size());
    int cols = n ? static_cast<int>(a[0].size()) : 0;
    int row = 0;
    for (int col = 0; col < cols && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        std::swap(rhs[piv], rhs[row]);
        Rational inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (auto& x : rhs[row]) x *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            for (size_t j = 0; j < rhs[i].size(); ++j) rhs[i][j] -= f * rhs[row][j];
        }
        ++row;
    }
    return row;
}

}  // namespace

RVector solve_linear(RMatrix a, RVector b) {
    int n = static_cast<int>(a.size());
    RMatrix rhs(n, RVector(1));
    for (int i = 0; i < n; ++i) rhs[i][0] = b[i];
    int rank = eliminate(a, rhs);
    if (rank < n) throw std::runtime_error("solve_linear: singular matrix");
    RVector x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i][0];
    return x;
}

RMatrix invert(const RMatrix& a) {
    int n = static_cast<int>(a.size());
    RMatrix m = a, rhs = identity_matrix(n);
    int rank = eliminate(m, rhs);
    if (rank < n) throw std::runtime_error("invert: singular matrix");
    return rhs;
}

Rational determinant(RMatrix a) {
    int n = static_cast<int>(a.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = 1 / a[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] * inv;
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

RVector charpoly(const RMatrix& a) {
    int n = static_cast<int>(a.size());
    // Faddeev-LeVerrier: M_0 = I, c_n = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    RVector c(n + 1, 0);
    c[n] = 1;
    RMatrix m(n, RVector(n, 0));  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        m = mat_mul(a, m);
        for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        RMatrix am = mat_mul(a, m);
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = -tr / k;
    }
    return c;
}

RVector poly_from_roots(const RVector& roots) {
    RVector c{1};
    for (const auto& r : roots) {
        RVector next(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    return c;
}

}  // namespace cutjoin
