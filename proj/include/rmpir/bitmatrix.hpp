#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rmpir/bitvec.hpp"

namespace rmpir {

// Dense matrix over GF(2), stored as bit-packed rows. Row XOR is the only
// elementary operation elimination needs, so rows are kept as BitVec.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_rows(std::vector<BitVec> rows) {
        BitMatrix m;
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        for (const BitVec& r : rows)
            if (r.size() != m.cols_) throw std::invalid_argument("BitMatrix rows of unequal length");
        m.rows_ = std::move(rows);
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    BitVec& row(std::size_t r) { return rows_[r]; }
    const BitVec& row(std::size_t r) const { return rows_[r]; }

    void append_row(BitVec r) {
        if (rows_.empty() && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix row length mismatch");
        rows_.push_back(std::move(r));
    }

    void swap_rows(std::size_t i, std::size_t j) { std::swap(rows_[i], rows_[j]); }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows());
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    // A (rows x cols) times B (cols x p).
    BitMatrix operator*(const BitMatrix& other) const {
        if (cols_ != other.rows()) throw std::invalid_argument("BitMatrix dimension mismatch");
        BitMatrix out(rows(), other.cols());
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) out.rows_[r].xor_with(other.rows_[c]);
        return out;
    }

    // A times column vector x.
    BitVec mul_vec(const BitVec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("BitMatrix/BitVec dimension mismatch");
        BitVec out(rows());
        for (std::size_t r = 0; r < rows(); ++r) out.set(r, rows_[r].dot(x));
        return out;
    }

    bool is_zero() const {
        for (const BitVec& r : rows_)
            if (!r.is_zero()) return false;
        return true;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

// Reduce to reduced row echelon form in place. Pivots are chosen lowest index
// first (leftmost column, then topmost remaining row), so the result and the
// returned pivot columns are reproducible.
inline std::vector<std::size_t> rref_in_place(BitMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t sel = BitVec::npos;
        for (std::size_t r = pivot_row; r < a.rows(); ++r) {
            if (a.get(r, c)) {
                sel = r;
                break;
            }
        }
        if (sel == BitVec::npos) continue;
        a.swap_rows(pivot_row, sel);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != pivot_row && a.get(r, c)) a.row(r).xor_with(a.row(pivot_row));
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

inline std::size_t rank(BitMatrix a) { return rref_in_place(a).size(); }

// Any x with A.x = b, free variables set to zero; nullopt if b is outside the
// column space.
inline std::optional<BitVec> solve(const BitMatrix& a, const BitVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    // Augment with b as an extra column that is never eligible for a pivot.
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVec row(a.cols() + 1);
        for (std::size_t c = 0; c < a.cols(); ++c) row.set(c, a.get(r, c));
        row.set(a.cols(), b.get(r));
        aug.row(r) = std::move(row);
    }
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < aug.rows(); ++c) {
        std::size_t sel = BitVec::npos;
        for (std::size_t r = pivot_row; r < aug.rows(); ++r) {
            if (aug.get(r, c)) {
                sel = r;
                break;
            }
        }
        if (sel == BitVec::npos) continue;
        aug.swap_rows(pivot_row, sel);
        for (std::size_t r = 0; r < aug.rows(); ++r)
            if (r != pivot_row && aug.get(r, c)) aug.row(r).xor_with(aug.row(pivot_row));
        pivots.push_back(c);
        ++pivot_row;
    }
    // Inconsistent iff a leftover row is zero on A but one on b.
    for (std::size_t r = pivot_row; r < aug.rows(); ++r)
        if (aug.get(r, a.cols())) return std::nullopt;
    BitVec x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], aug.get(i, a.cols()));
    return x;
}

// Greedy information set: the lexicographically first set of column indices
// whose submatrix is invertible. Requires full row rank.
inline std::vector<std::size_t> find_information_set(const BitMatrix& g) {
    BitMatrix work = g;
    std::vector<std::size_t> pivots = rref_in_place(work);
    if (pivots.size() < g.rows()) throw std::invalid_argument("find_information_set: rank deficient matrix");
    return pivots;
}

inline BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& cols) {
    BitMatrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t i = 0; i < cols.size(); ++i) out.set(r, i, m.get(r, cols[i]));
    return out;
}

// Inverse of the square submatrix formed by the given columns (Gauss-Jordan
// on [S | I]).
inline BitMatrix invert_on_columns(const BitMatrix& m, const std::vector<std::size_t>& cols) {
    if (cols.size() != m.rows()) throw std::invalid_argument("invert_on_columns: column set size must equal row count");
    const std::size_t n = cols.size();
    BitMatrix sub = select_columns(m, cols);
    BitMatrix inv = BitMatrix::identity(n);
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = BitVec::npos;
        for (std::size_t r = pivot_row; r < n; ++r) {
            if (sub.get(r, c)) {
                sel = r;
                break;
            }
        }
        if (sel == BitVec::npos) throw std::invalid_argument("invert_on_columns: singular submatrix");
        sub.swap_rows(pivot_row, sel);
        inv.swap_rows(pivot_row, sel);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != pivot_row && sub.get(r, c)) {
                sub.row(r).xor_with(sub.row(pivot_row));
                inv.row(r).xor_with(inv.row(pivot_row));
            }
        }
        ++pivot_row;
    }
    return inv;
}

// Basis of {x : A.x = 0}, one vector per row.
inline BitMatrix null_space(const BitMatrix& a) {
    BitMatrix work = a;
    std::vector<std::size_t> pivots = rref_in_place(work);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    BitMatrix basis(0, a.cols());
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(a.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i) v.set(pivots[i], work.get(i, f));
        basis.append_row(std::move(v));
    }
    return basis;
}

// Canonical form comparison: two matrices span the same row space iff their
// RREFs agree after dropping zero rows.
inline BitMatrix row_space_canonical(BitMatrix a) {
    std::size_t r = rref_in_place(a).size();
    BitMatrix out(0, a.cols());
    for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
    return out;
}

inline bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    return row_space_canonical(a) == row_space_canonical(b);
}

inline bool in_row_space(const BitMatrix& a, const BitVec& v) {
    BitMatrix ext = a;
    ext.append_row(v);
    return rank(ext) == rank(a);
}

}  // namespace rmpir
