#ifndef DG_LINALG_HPP
#define DG_LINALG_HPP

#include "dg/integer.hpp"

#include <optional>
#include <vector>

namespace dg {

using Vec = std::vector<Int>;

/// Dense integer matrix. Small sizes only (everything here is <= ~30x30).
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMat from_rows(const std::vector<Vec>& rows_in) {
        IntMat m(int(rows_in.size()), rows_in.empty() ? 0 : int(rows_in[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        return m;
    }

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    IntMat transpose() const;
    Vec row(int i) const { return Vec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols); }

    /// v * M for a row vector v.
    Vec apply_row(const Vec& v) const;
    /// M * v for a column vector v.
    Vec apply_col(const Vec& v) const;
};

/// Row-style Hermite normal form of the lattice spanned by the given rows:
/// echelon rows with positive pivots and entries above each pivot reduced
/// into [0, pivot). Zero rows are dropped.
std::vector<Vec> hermite_rows(std::vector<Vec> rows);

/// Reduce v by HNF rows in place; returns true if v reduces to zero.
bool hnf_reduce(const std::vector<Vec>& hnf, Vec& v);

/// Smith normal form: U*A*V = D with U,V unimodular and D diagonal with
/// d1 | d2 | ... >= 0. Also returns V^-1.
struct SmithResult {
    IntMat d, u, v, v_inv;
};
SmithResult smith_normal_form(const IntMat& a);

/// Integer kernel of A (solutions of A*x = 0, x a column vector); basis rows.
std::vector<Vec> int_kernel(const IntMat& a);

/// One solution of A*x = b over Z, if any.
std::optional<Vec> solve_int(const IntMat& a, const Vec& b);

} // namespace dg

#endif
