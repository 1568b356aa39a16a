#include "dg/linalg.hpp"

#include <algorithm>

namespace dg {

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw dg_error("matrix dimension mismatch");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows != o.rows || cols != o.cols) throw dg_error("matrix dimension mismatch");
    IntMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows != o.rows || cols != o.cols) throw dg_error("matrix dimension mismatch");
    IntMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec IntMat::apply_row(const Vec& v) const {
    if (int(v.size()) != rows) throw dg_error("vector dimension mismatch");
    Vec r(cols, 0);
    for (int i = 0; i < rows; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < cols; ++j) r[j] += v[i] * at(i, j);
    }
    return r;
}

Vec IntMat::apply_col(const Vec& v) const {
    if (int(v.size()) != cols) throw dg_error("vector dimension mismatch");
    Vec r(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<Vec> hermite_rows(std::vector<Vec> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Vec& v) {
                                  return std::all_of(v.begin(), v.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
    if (rows.empty()) return rows;
    size_t ncols = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        // gcd all entries in this column into rows[pivot_row] via row ops
        for (size_t i = pivot_row + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (rows[pivot_row][col] == 0) {
                std::swap(rows[pivot_row], rows[i]);
                continue;
            }
            // combine rows pivot_row and i so that entry (pivot_row,col) = gcd
            Int x, y;
            Int g = xgcd(rows[pivot_row][col], rows[i][col], x, y);
            Int p = rows[pivot_row][col] / g, q = rows[i][col] / g;
            for (size_t j = 0; j < ncols; ++j) {
                Int r0 = x * rows[pivot_row][j] + y * rows[i][j];
                Int r1 = -q * rows[pivot_row][j] + p * rows[i][j];
                rows[pivot_row][j] = r0;
                rows[i][j] = r1;
            }
        }
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (auto& v : rows[pivot_row]) v = -v;
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < pivot_row; ++i) {
            Int q = fdiv(rows[i][col], rows[pivot_row][col]);
            if (q == 0) continue;
            for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

bool hnf_reduce(const std::vector<Vec>& hnf, Vec& v) {
    for (const Vec& row : hnf) {
        size_t col = 0;
        while (col < row.size() && row[col] == 0) ++col;
        if (col == row.size()) continue;
        Int q = fdiv(v[col], row[col]);
        if (q == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

namespace {

struct SmithWork {
    IntMat a, u, v, v_inv;

    void row_swap(int i, int j) {
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void row_add(int i, int j, const Int& m) { // row i += m * row j
        for (int c = 0; c < a.cols; ++c) a.at(i, c) += m * a.at(j, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) += m * u.at(j, c);
    }
    void row_neg(int i) {
        for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < v_inv.cols; ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
    }
    void col_add(int i, int j, const Int& m) { // col i += m * col j; v_inv row j -= m * row i
        for (int r = 0; r < a.rows; ++r) a.at(r, i) += m * a.at(r, j);
        for (int r = 0; r < v.rows; ++r) v.at(r, i) += m * v.at(r, j);
        for (int c = 0; c < v_inv.cols; ++c) v_inv.at(j, c) -= m * v_inv.at(i, c);
    }
    void col_neg(int i) {
        for (int r = 0; r < a.rows; ++r) a.at(r, i) = -a.at(r, i);
        for (int r = 0; r < v.rows; ++r) v.at(r, i) = -v.at(r, i);
        for (int c = 0; c < v_inv.cols; ++c) v_inv.at(i, c) = -v_inv.at(i, c);
    }
};

} // namespace

SmithResult smith_normal_form(const IntMat& a_in) {
    SmithWork w{a_in, IntMat::identity(a_in.rows), IntMat::identity(a_in.cols),
                IntMat::identity(a_in.cols)};
    IntMat& a = w.a;
    int n = std::min(a.rows, a.cols);
    for (int t = 0; t < n; ++t) {
        // find a nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < a.rows && pi < 0; ++i)
            for (int j = t; j < a.cols; ++j)
                if (a.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != t) w.row_swap(pi, t);
        if (pj != t) w.col_swap(pj, t);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < a.rows; ++i) {
                while (a.at(i, t) != 0) {
                    Int q = fdiv(a.at(i, t), a.at(t, t));
                    w.row_add(i, t, -q);
                    if (a.at(i, t) != 0) { w.row_swap(i, t); dirty = true; }
                }
            }
            for (int j = t + 1; j < a.cols; ++j) {
                while (a.at(t, j) != 0) {
                    Int q = fdiv(a.at(t, j), a.at(t, t));
                    w.col_add(j, t, -q);
                    if (a.at(t, j) != 0) { w.col_swap(j, t); dirty = true; }
                }
            }
        }
        if (a.at(t, t) < 0) w.row_neg(t);
        // divisibility fix-up: ensure d_t | everything in the trailing block
        bool redo = false;
        for (int i = t + 1; i < a.rows && !redo; ++i)
            for (int j = t + 1; j < a.cols; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    w.row_add(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) { --t; continue; }
    }
    return {a, w.u, w.v, w.v_inv};
}

std::vector<Vec> int_kernel(const IntMat& a) {
    // Row-HNF the transpose with a transform U; rows of U landing on zero
    // rows of the echelon form are a kernel basis.
    int m = a.cols; // kernel vectors live in Z^cols
    IntMat bt = a.transpose();
    std::vector<Vec> work(m), uw(m);
    for (int i = 0; i < m; ++i) {
        work[i] = bt.row(i);
        uw[i] = Vec(m, 0);
        uw[i][i] = 1;
    }
    size_t pr = 0;
    for (int col = 0; col < bt.cols && pr < work.size(); ++col) {
        for (size_t i = pr + 1; i < work.size(); ++i) {
            if (work[i][col] == 0) continue;
            if (work[pr][col] == 0) {
                std::swap(work[pr], work[i]);
                std::swap(uw[pr], uw[i]);
                continue;
            }
            Int x, y;
            Int g = xgcd(work[pr][col], work[i][col], x, y);
            Int p = work[pr][col] / g, q = work[i][col] / g;
            for (size_t j = 0; j < work[0].size(); ++j) {
                Int n0 = x * work[pr][j] + y * work[i][j];
                Int n1 = -q * work[pr][j] + p * work[i][j];
                work[pr][j] = n0;
                work[i][j] = n1;
            }
            for (size_t j = 0; j < uw[0].size(); ++j) {
                Int n0 = x * uw[pr][j] + y * uw[i][j];
                Int n1 = -q * uw[pr][j] + p * uw[i][j];
                uw[pr][j] = n0;
                uw[i][j] = n1;
            }
        }
        if (work[pr][col] != 0) ++pr;
    }
    std::vector<Vec> kernel;
    for (size_t i = pr; i < work.size(); ++i) kernel.push_back(uw[i]);
    return hermite_rows(kernel);
}

std::optional<Vec> solve_int(const IntMat& a, const Vec& b) {
    SmithResult s = smith_normal_form(a);
    Vec ub = s.u.apply_col(b);
    Vec y(a.cols, 0);
    int n = std::min(a.rows, a.cols);
    for (int i = 0; i < int(ub.size()); ++i) {
        Int d = (i < n) ? s.d.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            if (i < a.cols) y[i] = ub[i] / d;
        }
    }
    return s.v.apply_col(y);
}

} // namespace dg
