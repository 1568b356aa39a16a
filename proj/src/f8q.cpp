#include "dg/knot_models.hpp"

namespace dg {

namespace {

// basis indices: 0 eps, then mu*nu with nu blocks 1/a/b/ab and mu in 1/w/d
// (eps,1,w,d,a,wa,da,b,wb,db,ab,wab,dab)
enum { EPS = 0 };
constexpr int kNuBase[4] = {1, 4, 7, 10}; // nu = 1, a, b, ab
constexpr int kMu1 = 0, kMuW = 1, kMuD = 2;

Vec v13(std::initializer_list<std::pair<int, int>> entries) {
    Vec v(13, 0);
    for (auto& [i, c] : entries) v[i] += c;
    return v;
}

Vec vadd(Vec a, const Vec& b, const Int& c = 1) {
    for (int i = 0; i < 13; ++i) a[i] += c * b[i];
    return a;
}

// w*d*nu for nu = 1, a, b, ab
Vec wd_nu(int nu) {
    switch (nu) {
    case 0: return v13({{EPS, 1}, {5, 1}, {8, 1}, {11, 2}});
    case 1: return v13({{EPS, 2}, {2, 1}, {5, -1}, {8, 2}, {11, -1}});
    case 2: return v13({{EPS, 2}, {2, 1}, {5, 2}, {8, -1}, {11, -1}});
    case 3: return v13({{EPS, -1}, {2, 2}, {5, -1}, {8, -1}});
    }
    throw dg_error("bad nu");
}

// multiply a vector by the central element w or d
Vec central_mul(bool by_w, const Vec& x) {
    Vec out(13, 0);
    if (x[EPS] != 0) out[EPS] += 2 * x[EPS];
    for (int nu = 0; nu < 4; ++nu) {
        int b = kNuBase[nu];
        const Int &c1 = x[b + kMu1], &cw = x[b + kMuW], &cd = x[b + kMuD];
        if (by_w) {
            out[b + kMuW] += c1 + 2 * cw;
            if (cd != 0) out = vadd(std::move(out), wd_nu(nu), cd);
        } else {
            out[b + kMuD] += c1 - cd;
            out[b + kMuW] += 3 * cd;
            if (cw != 0) out = vadd(std::move(out), wd_nu(nu), cw);
        }
    }
    return out;
}

// products of the nu part: nu x nu' -> 13-vector
Vec nu_prod(int n1, int n2) {
    if (n1 == 0) return v13({{kNuBase[n2], 1}});
    if (n2 == 0) return v13({{kNuBase[n1], 1}});
    if (n1 == 1 && n2 == 1) // a a
        return v13({{EPS, 1}, {1, -1}, {2, 1}, {4, -1}});
    if (n1 == 1 && n2 == 2) // a b
        return v13({{10, 1}});
    if (n1 == 1 && n2 == 3) // a ab = a^2 b
        return v13({{EPS, 2}, {7, -1}, {8, 1}, {10, -1}});
    if (n1 == 2 && n2 == 1) // b a
        return v13({{3, 1}, {4, -1}, {7, -1}, {10, -1}});
    if (n1 == 2 && n2 == 2) // b b
        return v13({{EPS, -1}, {1, -1}, {2, 1}, {7, -1}});
    if (n1 == 2 && n2 == 3) // b ab = bab
        return v13({{EPS, -2}, {1, 1}, {2, -1}, {4, 1}, {5, -1}, {7, 1}, {9, 1}});
    if (n1 == 3 && n2 == 1) // ab a = aba
        return v13({{EPS, 2}, {1, 1}, {2, -1}, {4, 1}, {6, 1}, {7, 1}, {8, -1}});
    if (n1 == 3 && n2 == 2) // ab b = ab^2
        return v13({{EPS, -2}, {4, -1}, {5, 1}, {10, -1}});
    // ab ab
    return v13({{1, -1}, {10, 1}, {12, 1}});
}

int eps_weight_mu(int mu) { return mu == kMu1 ? 1 : 2; }
int eps_weight_nu(int nu) { return nu == 0 ? 1 : (nu == 3 ? 4 : 2); }

// the two matrices quoted verbatim (first row taken modulo 5)
constexpr int kMatA[13][13] = {
    {2, 0, 0, 0, 1, 2, -2, 0, 0, 0, 2, -1, 1},
    {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 2},
    {0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1}};

constexpr int kMatB[13][13] = {
    {2, 0, 0, 0, 0, 1, 0, -1, -2, -1, -2, -2, -2},
    {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 3, 1, 1, 0, -1, 0, -1},
    {0, 0, 0, 0, 1, 0, -1, 0, 0, -1, 0, 0, 1},
    {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 0},
    {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1},
    {0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, -1, 0, 0, -1, 1, 0, 0},
    {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0}};

IntMat to_intmat(const int (&m)[13][13]) {
    IntMat out(13, 13);
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) out.at(i, j) = m[i][j];
    return out;
}

IntMat mod5_first_row(IntMat m) {
    for (int j = 0; j < m.cols; ++j) {
        m.at(0, j) %= 5;
        if (m.at(0, j) < 0) m.at(0, j) += 5;
    }
    return m;
}

} // namespace

IntMat f8q_matrix_a() { return to_intmat(kMatA); }
IntMat f8q_matrix_b() { return to_intmat(kMatB); }

FiniteRankRing build_f8q(bool reduce_mod5) {
    FiniteRankRing r;
    r.names = {"eps", "1", "w", "d",  "a",  "wa", "da",
               "b",   "wb", "db", "ab", "wab", "dab"};
    r.moduli.assign(13, 0);
    if (reduce_mod5) r.moduli[0] = 5;
    r.one = v13({{1, 1}});

    r.table.assign(13, std::vector<Vec>(13));
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) {
            Vec prod(13, 0);
            if (i == EPS && j == EPS) {
                // eps^2 = 0
            } else if (i == EPS || j == EPS) {
                int other = i == EPS ? j : i;
                int nu = (other - 1) / 3, mu = (other - 1) % 3;
                prod[EPS] = eps_weight_mu(mu) * eps_weight_nu(nu);
            } else {
                int nu1 = (i - 1) / 3, mu1 = (i - 1) % 3;
                int nu2 = (j - 1) / 3, mu2 = (j - 1) % 3;
                prod = nu_prod(nu1, nu2);
                if (mu1 == kMuW) prod = central_mul(true, prod);
                else if (mu1 == kMuD) prod = central_mul(false, prod);
                if (mu2 == kMuW) prod = central_mul(true, prod);
                else if (mu2 == kMuD) prod = central_mul(false, prod);
            }
            r.table[i][j] = r.reduce(std::move(prod));
        }

    // trace of each basis element: L(1)=2, L(a)=L(b)=-1, L(ab)=1+d,
    // extended linearly over the central subring (eps, w, d central)
    r.trace.assign(13, Vec(13, 0));
    Vec l_nu[4] = {v13({{1, 2}}), v13({{1, -1}}), v13({{1, -1}}),
                   v13({{1, 1}, {3, 1}})};
    for (int nu = 0; nu < 4; ++nu) {
        r.trace[kNuBase[nu] + kMu1] = r.reduce(l_nu[nu]);
        r.trace[kNuBase[nu] + kMuW] = r.reduce(central_mul(true, l_nu[nu]));
        r.trace[kNuBase[nu] + kMuD] = r.reduce(central_mul(false, l_nu[nu]));
    }
    r.trace[EPS] = r.reduce(v13({{EPS, 2}}));

    if (reduce_mod5) {
        // cross-check against the hardcoded matrices
        if (mod5_first_row(r.left_mul(r.basis(4))) != mod5_first_row(f8q_matrix_a()))
            throw dg_error("left multiplication by a disagrees with the matrix");
        if (mod5_first_row(r.left_mul(r.basis(7))) != mod5_first_row(f8q_matrix_b()))
            throw dg_error("left multiplication by b disagrees with the matrix");
    }
    return r;
}

} // namespace dg
