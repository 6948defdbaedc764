#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ymick/error.hpp"
#include "ymick/rational.hpp"

namespace ymick {

// Sparse exact matrix: only nonzero entries are stored, indices 0-based.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Rational> entries;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c) {
        if (r < 0 || c < 0) throw DimensionMismatch("QMatrix: negative size");
    }

    void check_index(int i, int j) const {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw IndexOutOfRange("QMatrix: index (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside " +
                                  std::to_string(rows) + "x" + std::to_string(cols));
    }

    Rational get(int i, int j) const {
        check_index(i, j);
        auto it = entries.find({i, j});
        return it == entries.end() ? Rational(0) : it->second;
    }

    void set(int i, int j, const Rational& v) {
        check_index(i, j);
        if (v == 0)
            entries.erase({i, j});
        else
            entries[{i, j}] = v;
    }

    void add_to(int i, int j, const Rational& v) {
        check_index(i, j);
        auto it = entries.find({i, j});
        if (it == entries.end()) {
            if (v != 0) entries[{i, j}] = v;
        } else {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }

    bool is_zero() const { return entries.empty(); }

    bool operator==(const QMatrix& other) const {
        return rows == other.rows && cols == other.cols && entries == other.entries;
    }
};

inline QMatrix qm_zero(int r, int c) { return QMatrix(r, c); }

inline QMatrix qm_identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries[{i, i}] = 1;
    return m;
}

inline QMatrix qm_scale(const QMatrix& a, const Rational& s) {
    QMatrix out(a.rows, a.cols);
    if (s == 0) return out;
    for (const auto& [ij, v] : a.entries) out.entries[ij] = v * s;
    return out;
}

inline QMatrix qm_add(const QMatrix& a, const QMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionMismatch("qm_add: shape mismatch");
    QMatrix out = a;
    for (const auto& [ij, v] : b.entries) out.add_to(ij.first, ij.second, v);
    return out;
}

inline QMatrix qm_sub(const QMatrix& a, const QMatrix& b) {
    return qm_add(a, qm_scale(b, Rational(-1)));
}

inline QMatrix qm_neg(const QMatrix& a) { return qm_scale(a, Rational(-1)); }

inline QMatrix qm_mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("qm_mul: inner size mismatch");
    QMatrix out(a.rows, b.cols);
    for (const auto& [ij, v] : a.entries) {
        auto it = b.entries.lower_bound({ij.second, 0});
        for (; it != b.entries.end() && it->first.first == ij.second; ++it)
            out.add_to(ij.first, it->first.second, v * it->second);
    }
    return out;
}

inline QMatrix qm_pow(const QMatrix& a, int s) {
    if (a.rows != a.cols) throw DimensionMismatch("qm_pow: not square");
    if (s < 0) throw IndexOutOfRange("qm_pow: negative power");
    QMatrix acc = qm_identity(a.rows);
    for (int i = 0; i < s; ++i) acc = qm_mul(acc, a);
    return acc;
}

inline QMatrix qm_transpose(const QMatrix& a) {
    QMatrix out(a.cols, a.rows);
    for (const auto& [ij, v] : a.entries) out.entries[{ij.second, ij.first}] = v;
    return out;
}

inline Rational qm_trace(const QMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatch("qm_trace: not square");
    Rational t(0);
    for (const auto& [ij, v] : a.entries)
        if (ij.first == ij.second) t += v;
    return t;
}

// Kronecker product; the first factor owns the major index:
// (i1,i2) -> i1*b.rows + i2.
inline QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (const auto& [ij, v] : a.entries)
        for (const auto& [kl, w] : b.entries)
            out.entries[{ij.first * b.rows + kl.first,
                         ij.second * b.cols + kl.second}] = v * w;
    return out;
}

inline QMatrix qm_submatrix(const QMatrix& a, int r0, int r1, int c0, int c1) {
    if (r0 < 0 || r1 > a.rows || c0 < 0 || c1 > a.cols || r0 > r1 || c0 > c1)
        throw IndexOutOfRange("qm_submatrix: bad range");
    QMatrix out(r1 - r0, c1 - c0);
    for (const auto& [ij, v] : a.entries)
        if (ij.first >= r0 && ij.first < r1 && ij.second >= c0 && ij.second < c1)
            out.entries[{ij.first - r0, ij.second - c0}] = v;
    return out;
}

// Incremental exact row reduction. Rows may arrive in any order; the final
// pivot set is the unique RREF of the accumulated row space, so every
// derived answer (rank, nullspace) is deterministic.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    using SparseRow = std::map<int, Rational>;

    void add_row(SparseRow row) {
        reduce(row);
        if (row.empty()) return;
        int lead = row.begin()->first;
        Rational inv = Rational(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        for (auto& [p, prow] : pivots_) {
            auto it = prow.find(lead);
            if (it == prow.end()) continue;
            Rational f = it->second;
            axpy(prow, row, -f);
        }
        pivots_[lead] = std::move(row);
    }

    void add_matrix_rows(const QMatrix& m) {
        int current = -1;
        SparseRow row;
        for (const auto& [ij, v] : m.entries) {
            if (ij.first != current) {
                if (current >= 0) add_row(std::move(row));
                row.clear();
                current = ij.first;
            }
            row[ij.second] = v;
        }
        if (current >= 0) add_row(std::move(row));
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

    // Basis of the solution space of (row space) * x = 0, one column vector
    // per free column, free columns ascending, unit entry at the free column.
    std::vector<QMatrix> nullspace_basis() const {
        std::vector<QMatrix> out;
        for (int f = 0; f < cols_; ++f) {
            if (pivots_.count(f)) continue;
            QMatrix v(cols_, 1);
            v.set(f, 0, Rational(1));
            for (const auto& [p, prow] : pivots_) {
                auto it = prow.find(f);
                if (it != prow.end()) v.set(p, 0, -it->second);
            }
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    // Eliminates every pivot-column entry. Pivot rows carry no entries in
    // other pivot columns (full RREF invariant), so one ascending pass works.
    void reduce(SparseRow& row) const {
        auto it = row.begin();
        while (it != row.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            Rational f = it->second;
            axpy(row, p->second, -f);
            it = row.upper_bound(p->first);
        }
    }

    static void axpy(SparseRow& dst, const SparseRow& src, const Rational& f) {
        for (const auto& [c, v] : src) {
            auto it = dst.find(c);
            if (it == dst.end()) {
                Rational nv = f * v;
                if (nv != 0) dst[c] = nv;
            } else {
                it->second += f * v;
                if (it->second == 0) dst.erase(it);
            }
        }
    }

    int cols_;
    std::map<int, SparseRow> pivots_;
};

inline int qm_rank(const QMatrix& a) {
    RowReducer rr(a.cols);
    rr.add_matrix_rows(a);
    return rr.rank();
}

// Kernel basis as column vectors; defined by the RREF of the rows of a,
// with first-nonzero pivoting, so the answer is canonical.
inline std::vector<QMatrix> nullspace(const QMatrix& a) {
    RowReducer rr(a.cols);
    rr.add_matrix_rows(a);
    return rr.nullspace_basis();
}

namespace detail {

using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const QMatrix& a) {
    Dense d(a.rows, std::vector<Rational>(a.cols, Rational(0)));
    for (const auto& [ij, v] : a.entries) d[ij.first][ij.second] = v;
    return d;
}

// In-place RREF with first-nonzero row-major pivoting; returns the pivot
// columns in order.
inline std::vector<int> rref(Dense& d, int ncols) {
    std::vector<int> pivots;
    int nrows = static_cast<int>(d.size());
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (d[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(d[r], d[pr]);
        Rational inv = Rational(1) / d[r][c];
        for (auto& v : d[r]) v *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || d[i][c] == 0) continue;
            Rational f = d[i][c];
            for (std::size_t j = c; j < d[i].size(); ++j) d[i][j] -= f * d[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline Rational qm_det(const QMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatch("qm_det: not square");
    auto d = detail::to_dense(a);
    int n = a.rows;
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (d[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return Rational(0);
        if (pr != c) {
            std::swap(d[c], d[pr]);
            det = -det;
        }
        det *= d[c][c];
        Rational inv = Rational(1) / d[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (d[i][c] == 0) continue;
            Rational f = d[i][c] * inv;
            for (int j = c; j < n; ++j) d[i][j] -= f * d[c][j];
        }
    }
    return det;
}

inline std::optional<QMatrix> qm_inverse(const QMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatch("qm_inverse: not square");
    int n = a.rows;
    auto d = detail::to_dense(a);
    for (int i = 0; i < n; ++i) {
        d[i].resize(2 * n, Rational(0));
        d[i][n + i] = 1;
    }
    auto pivots = detail::rref(d, n);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    QMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][n + j] != 0) out.entries[{i, j}] = d[i][n + j];
    return out;
}

// Solves a * x = b column by column; free variables are set to zero.
// Returns nullopt when some column of b is outside the column space of a.
inline std::optional<QMatrix> qm_solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows != b.rows) throw DimensionMismatch("qm_solve: row mismatch");
    auto d = detail::to_dense(a);
    for (int i = 0; i < a.rows; ++i) {
        d[i].resize(a.cols + b.cols, Rational(0));
        for (int j = 0; j < b.cols; ++j) d[i][a.cols + j] = b.get(i, j);
    }
    auto pivots = detail::rref(d, a.cols);
    int r = static_cast<int>(pivots.size());
    for (int i = r; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            if (d[i][a.cols + j] != 0) return std::nullopt;
    QMatrix x(a.cols, b.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < b.cols; ++j)
            if (d[i][a.cols + j] != 0) x.entries[{pivots[i], j}] = d[i][a.cols + j];
    return x;
}

// Matrix of op on the span of the columns of basis: op * basis = basis * r.
// Requires basis to have full column rank and the span to be op-stable.
inline QMatrix restrict_to_span(const QMatrix& op, const QMatrix& basis) {
    if (op.rows != op.cols || op.cols != basis.rows)
        throw DimensionMismatch("restrict_to_span: shape mismatch");
    if (qm_rank(basis) != basis.cols)
        throw RankMismatch("restrict_to_span: basis columns are dependent");
    auto r = qm_solve(basis, qm_mul(op, basis));
    if (!r) throw RankMismatch("restrict_to_span: span is not stable under op");
    return *r;
}

// The pivot columns of a, taken verbatim, in ascending column order.
inline QMatrix column_space_basis(const QMatrix& a) {
    auto d = detail::to_dense(a);
    auto pivots = detail::rref(d, a.cols);
    QMatrix out(a.rows, static_cast<int>(pivots.size()));
    for (int k = 0; k < static_cast<int>(pivots.size()); ++k)
        for (int i = 0; i < a.rows; ++i) {
            Rational v = a.get(i, pivots[k]);
            if (v != 0) out.entries[{i, k}] = v;
        }
    return out;
}

inline QMatrix columns_to_matrix(const std::vector<QMatrix>& cols) {
    if (cols.empty()) return QMatrix(0, 0);
    QMatrix out(cols[0].rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        if (cols[j].cols != 1 || cols[j].rows != out.rows)
            throw DimensionMismatch("columns_to_matrix: ragged columns");
        for (const auto& [ij, v] : cols[j].entries) out.entries[{ij.first, j}] = v;
    }
    return out;
}

}  // namespace ymick
