#pragma once

#include <vector>

#include "ymick/error.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"

namespace ymick {

// Ring customization points for series coefficients. A coefficient ring
// supplies ring_add, ring_mul, ring_neg, ring_scale and (when leading terms
// must be inverted) ring_inverse. Zero elements are never required: sums are
// seeded with their first term.

inline Rational ring_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational ring_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational ring_neg(const Rational& a) { return -a; }
inline Rational ring_scale(const Rational& a, const Rational& s) { return a * s; }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_inverse(const Rational& a) {
    if (a == 0) throw NonInvertibleLeadingTerm("ring_inverse: zero rational");
    return Rational(1) / a;
}

inline QMatrix ring_add(const QMatrix& a, const QMatrix& b) { return qm_add(a, b); }
inline QMatrix ring_mul(const QMatrix& a, const QMatrix& b) { return qm_mul(a, b); }
inline QMatrix ring_neg(const QMatrix& a) { return qm_neg(a); }
inline QMatrix ring_scale(const QMatrix& a, const Rational& s) { return qm_scale(a, s); }
inline QMatrix ring_one(const QMatrix& a) { return qm_identity(a.rows); }
inline QMatrix ring_inverse(const QMatrix& a) {
    auto inv = qm_inverse(a);
    if (!inv) throw NonInvertibleLeadingTerm("ring_inverse: singular matrix");
    return *inv;
}

// Truncated series in u^{-1}: c[0] + c[1] u^{-1} + ... + c[S] u^{-S}.
// Arithmetic discards every power beyond u^{-S}.
template <class R>
struct TruncatedSeries {
    int order = 0;
    std::vector<R> c;

    const R& at(int s) const {
        if (s < 0 || s > order) throw IndexOutOfRange("TruncatedSeries::at");
        return c[s];
    }
};

template <class R>
TruncatedSeries<R> series_make(int order, std::vector<R> coeffs) {
    if (order < 0) throw IndexOutOfRange("series_make: negative order");
    if (coeffs.empty()) throw DimensionMismatch("series_make: no coefficients");
    if (static_cast<int>(coeffs.size()) > order + 1)
        coeffs.erase(coeffs.begin() + (order + 1), coeffs.end());
    while (static_cast<int>(coeffs.size()) < order + 1)
        coeffs.push_back(ring_scale(coeffs[0], Rational(0)));
    return TruncatedSeries<R>{order, std::move(coeffs)};
}

template <class R>
void series_check_orders(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    if (a.order != b.order)
        throw DimensionMismatch("series: mixed truncation orders");
}

template <class R>
TruncatedSeries<R> series_add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    series_check_orders(a, b);
    std::vector<R> c;
    for (int s = 0; s <= a.order; ++s) c.push_back(ring_add(a.c[s], b.c[s]));
    return TruncatedSeries<R>{a.order, std::move(c)};
}

template <class R>
TruncatedSeries<R> series_neg(const TruncatedSeries<R>& a) {
    std::vector<R> c;
    for (int s = 0; s <= a.order; ++s) c.push_back(ring_neg(a.c[s]));
    return TruncatedSeries<R>{a.order, std::move(c)};
}

template <class R>
TruncatedSeries<R> series_sub(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return series_add(a, series_neg(b));
}

template <class R>
TruncatedSeries<R> series_scale(const TruncatedSeries<R>& a, const Rational& s) {
    std::vector<R> c;
    for (int r = 0; r <= a.order; ++r) c.push_back(ring_scale(a.c[r], s));
    return TruncatedSeries<R>{a.order, std::move(c)};
}

template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    series_check_orders(a, b);
    std::vector<R> c;
    for (int s = 0; s <= a.order; ++s) {
        R acc = ring_mul(a.c[0], b.c[s]);
        for (int r = 1; r <= s; ++r)
            acc = ring_add(acc, ring_mul(a.c[r], b.c[s - r]));
        c.push_back(std::move(acc));
    }
    return TruncatedSeries<R>{a.order, std::move(c)};
}

template <class R>
bool series_eq(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    if (a.order != b.order) return false;
    for (int s = 0; s <= a.order; ++s)
        if (!(a.c[s] == b.c[s])) return false;
    return true;
}

// Multiplicative inverse: g_0 = c_0^{-1}, g_s = -c_0^{-1} sum_{r=1}^{s} c_r g_{s-r}.
template <class R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& a) {
    std::vector<R> g;
    g.push_back(ring_inverse(a.c[0]));
    for (int s = 1; s <= a.order; ++s) {
        R acc = ring_mul(a.c[1], g[s - 1]);
        for (int r = 2; r <= s; ++r)
            acc = ring_add(acc, ring_mul(a.c[r], g[s - r]));
        g.push_back(ring_neg(ring_mul(g[0], acc)));
    }
    return TruncatedSeries<R>{a.order, std::move(g)};
}

// Dense matrix over an arbitrary coefficient ring, used as a series
// coefficient. Entries are always materialized, so no ring zero is needed
// beyond scaling an existing element by 0.
template <class R>
struct RMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<R> e;

    RMatrix(int r, int c, std::vector<R> entries) : rows(r), cols(c), e(std::move(entries)) {
        if (r <= 0 || c <= 0 || static_cast<int>(e.size()) != r * c)
            throw DimensionMismatch("RMatrix: entry count mismatch");
    }

    const R& at(int i, int j) const {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw IndexOutOfRange("RMatrix::at");
        return e[i * cols + j];
    }

    R& at(int i, int j) {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw IndexOutOfRange("RMatrix::at");
        return e[i * cols + j];
    }

    bool operator==(const RMatrix& other) const {
        return rows == other.rows && cols == other.cols && e == other.e;
    }
};

// Series of the (i, j) entries of a matrix-valued series.
template <class R>
TruncatedSeries<R> series_entry(const TruncatedSeries<RMatrix<R>>& a, int i, int j) {
    std::vector<R> c;
    for (int s = 0; s <= a.order; ++s) c.push_back(a.at(s).at(i, j));
    return TruncatedSeries<R>{a.order, std::move(c)};
}

template <class R>
RMatrix<R> rm_scalar(int size, const R& diag_value, const R& off_value) {
    std::vector<R> e;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) e.push_back(i == j ? diag_value : off_value);
    return RMatrix<R>(size, size, std::move(e));
}

template <class R>
RMatrix<R> ring_add(const RMatrix<R>& a, const RMatrix<R>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionMismatch("RMatrix add: shape mismatch");
    std::vector<R> e;
    for (std::size_t i = 0; i < a.e.size(); ++i) e.push_back(ring_add(a.e[i], b.e[i]));
    return RMatrix<R>(a.rows, a.cols, std::move(e));
}

template <class R>
RMatrix<R> ring_mul(const RMatrix<R>& a, const RMatrix<R>& b) {
    if (a.cols != b.rows) throw DimensionMismatch("RMatrix mul: inner size mismatch");
    std::vector<R> e;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            R acc = ring_mul(a.at(i, 0), b.at(0, j));
            for (int k = 1; k < a.cols; ++k)
                acc = ring_add(acc, ring_mul(a.at(i, k), b.at(k, j)));
            e.push_back(std::move(acc));
        }
    return RMatrix<R>(a.rows, b.cols, std::move(e));
}

template <class R>
RMatrix<R> ring_neg(const RMatrix<R>& a) {
    std::vector<R> e;
    for (const auto& x : a.e) e.push_back(ring_neg(x));
    return RMatrix<R>(a.rows, a.cols, std::move(e));
}

template <class R>
RMatrix<R> ring_scale(const RMatrix<R>& a, const Rational& s) {
    std::vector<R> e;
    for (const auto& x : a.e) e.push_back(ring_scale(x, s));
    return RMatrix<R>(a.rows, a.cols, std::move(e));
}

template <class R>
RMatrix<R> ring_one(const RMatrix<R>& a) {
    if (a.rows != a.cols) throw DimensionMismatch("RMatrix one: not square");
    return rm_scalar(a.rows, ring_one(a.e[0]), ring_scale(a.e[0], Rational(0)));
}

// Gauss-Jordan with diagonal pivots and left row operations; no row swaps,
// so the matrix must have invertible diagonal entries in encounter order.
// All series leading terms inverted here are identity-like, which qualifies.
template <class R>
RMatrix<R> ring_inverse(const RMatrix<R>& a) {
    if (a.rows != a.cols) throw DimensionMismatch("RMatrix inverse: not square");
    int size = a.rows;
    R one = ring_one(a.e[0]);
    R zero = ring_scale(a.e[0], Rational(0));
    std::vector<std::vector<R>> rows;
    for (int i = 0; i < size; ++i) {
        std::vector<R> row;
        for (int j = 0; j < size; ++j) row.push_back(a.at(i, j));
        for (int j = 0; j < size; ++j) row.push_back(i == j ? one : zero);
        rows.push_back(std::move(row));
    }
    for (int c = 0; c < size; ++c) {
        R inv = ring_inverse(rows[c][c]);
        for (auto& x : rows[c]) x = ring_mul(inv, x);
        for (int i = 0; i < size; ++i) {
            if (i == c) continue;
            R f = rows[i][c];
            for (int j = 0; j < 2 * size; ++j)
                rows[i][j] = ring_add(rows[i][j], ring_neg(ring_mul(f, rows[c][j])));
        }
    }
    std::vector<R> e;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) e.push_back(rows[i][size + j]);
    return RMatrix<R>(size, size, std::move(e));
}

// Re-expands f(u - z) in powers of u^{-1}:
// c'_0 = c_0,  c'_s = sum_{r=1}^{s} binom(s-1, s-r) z^{s-r} c_r.
template <class R>
TruncatedSeries<R> series_substitute_shift(const TruncatedSeries<R>& a, const Rational& z) {
    std::vector<R> c;
    c.push_back(a.c[0]);
    for (int s = 1; s <= a.order; ++s) {
        R acc = ring_scale(a.c[1], Rational(binom(s - 1, s - 1)) * rat_pow(z, s - 1));
        for (int r = 2; r <= s; ++r)
            acc = ring_add(acc,
                           ring_scale(a.c[r], Rational(binom(s - 1, s - r)) * rat_pow(z, s - r)));
        c.push_back(std::move(acc));
    }
    return TruncatedSeries<R>{a.order, std::move(c)};
}

}  // namespace ymick
