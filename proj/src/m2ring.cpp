#include "dg/m2ring.hpp"

namespace dg {

namespace {

void check_same(const M2Elem& e1, const M2Elem& e2) {
    if (e1.ring != e2.ring) throw dg_error("elements of different rings");
}

} // namespace

M2Ring M2Ring::generic() {
    M2Ring r;
    r.kring = PolyRing({"x", "y", "p", "q", "z"}, {false, false, false, false, false});
    r.x = MultiPoly::monomial(&r.kring, "x");
    r.y = MultiPoly::monomial(&r.kring, "y");
    r.p = MultiPoly::monomial(&r.kring, "p");
    r.q = MultiPoly::monomial(&r.kring, "q");
    return r;
}

M2Ring M2Ring::fig8() {
    M2Ring r;
    r.kring = PolyRing({"c", "z"}, {true, false});
    r.x = MultiPoly::constant(&r.kring, -1);
    r.y = r.x;
    r.p = MultiPoly::monomial(&r.kring, "c", 1, -1);
    r.q = MultiPoly::monomial(&r.kring, "c", -1, -1);
    return r;
}

bool M2Elem::is_zero() const {
    for (auto& u : c)
        if (!u.is_zero()) return false;
    return true;
}

bool M2Elem::is_central() const {
    return c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
}

const MultiPoly& M2Elem::scalar() const { return c[0]; }

std::string M2Elem::str() const {
    static const char* names[4] = {"1", "a", "b", "ab"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (c[i].is_zero()) continue;
        std::string s = c[i].str();
        bool neg = false;
        if (c[i].terms().size() > 1) {
            if (i > 0) s = "(" + s + ")";
        } else if (s[0] == '-') {
            neg = true;
            s = s.substr(1);
        }
        if (i > 0) s = s == "1" ? std::string(names[i]) : s + "*" + names[i];
        if (out.empty()) out = (neg ? "-" : "") + s;
        else out += (neg ? " - " : " + ") + s;
    }
    return out.empty() ? "0" : out;
}

M2Elem m2_element(const M2Ring& r, MultiPoly c0, MultiPoly c1, MultiPoly c2,
                  MultiPoly c3) {
    return {&r, {std::move(c0), std::move(c1), std::move(c2), std::move(c3)}};
}

M2Elem m2_const(const M2Ring& r, MultiPoly v) {
    MultiPoly o = MultiPoly::constant(&r.kring, 0);
    return m2_element(r, std::move(v), o, o, o);
}

M2Elem m2_one(const M2Ring& r) { return m2_const(r, r.k(1)); }

M2Elem m2_a(const M2Ring& r) {
    MultiPoly o = MultiPoly::constant(&r.kring, 0);
    return m2_element(r, o, r.k(1), o, o);
}

M2Elem m2_b(const M2Ring& r) {
    MultiPoly o = MultiPoly::constant(&r.kring, 0);
    return m2_element(r, o, o, r.k(1), o);
}

M2Elem m2_add(const M2Elem& e1, const M2Elem& e2) {
    check_same(e1, e2);
    M2Elem r = e1;
    for (int i = 0; i < 4; ++i) r.c[i] = r.c[i] + e2.c[i];
    return r;
}

M2Elem m2_sub(const M2Elem& e1, const M2Elem& e2) { return m2_add(e1, m2_neg(e2)); }

M2Elem m2_neg(const M2Elem& e) {
    M2Elem r = e;
    for (auto& u : r.c) u = -u;
    return r;
}

M2Elem m2_scale(const MultiPoly& u, const M2Elem& e) {
    M2Elem r = e;
    for (auto& v : r.c) v = u * v;
    return r;
}

/// Products of basis elements as 4-vectors; derived from a^2 = xa - p,
/// b^2 = yb - q and ba = -ab + ya + xb - z by reducing each word.
static std::array<std::array<M2Elem, 4>, 4> basis_table(const M2Ring& r) {
    const MultiPoly o = MultiPoly::constant(&r.kring, 0);
    const MultiPoly u = r.k(1);
    const MultiPoly z = r.z();
    const MultiPoly xy_z = r.x * r.y - z;
    auto e = [&](MultiPoly c0, MultiPoly c1, MultiPoly c2, MultiPoly c3) {
        return m2_element(r, std::move(c0), std::move(c1), std::move(c2), std::move(c3));
    };
    std::array<std::array<M2Elem, 4>, 4> t;
    M2Elem basis[4] = {m2_one(r), m2_a(r), m2_b(r),
                       e(o, o, o, u)};
    for (int i = 0; i < 4; ++i) {
        t[0][i] = basis[i];
        t[i][0] = basis[i];
    }
    t[1][1] = e(-r.p, r.x, o, o);              // a a
    t[1][2] = basis[3];                        // a b
    t[1][3] = e(o, o, -r.p, r.x);              // a ab
    t[2][1] = e(-z, r.y, r.x, -u);             // b a
    t[2][2] = e(-r.q, o, r.y, o);              // b b
    t[2][3] = e(-r.q * r.x, r.q, xy_z, o);     // b ab
    t[3][1] = e(-r.p * r.y, xy_z, r.p, o);     // ab a
    t[3][2] = e(o, -r.q, o, r.y);              // ab b
    t[3][3] = e(-r.p * r.q, o, o, xy_z);       // ab ab
    return t;
}

M2Elem m2_mul(const M2Elem& e1, const M2Elem& e2) {
    check_same(e1, e2);
    const M2Ring& r = *e1.ring;
    auto table = basis_table(r);
    M2Elem acc = m2_const(r, MultiPoly::constant(&r.kring, 0));
    for (int i = 0; i < 4; ++i) {
        if (e1.c[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (e2.c[j].is_zero()) continue;
            acc = m2_add(acc, m2_scale(e1.c[i] * e2.c[j], table[i][j]));
        }
    }
    return acc;
}

TraceData TraceData::symmetric(const M2Ring& r) {
    return {{r.k(2), r.x, r.y, r.x * r.y - r.z()}};
}

MultiPoly trace(const TraceData& t, const M2Elem& e) {
    MultiPoly acc = MultiPoly::constant(&e.ring->kring, 0);
    for (int i = 0; i < 4; ++i) acc = acc + e.c[i] * t.l[i];
    return acc;
}

M2Elem qform(const TraceData& t, const M2Elem& e) {
    return m2_sub(m2_scale(trace(t, e), e), m2_mul(e, e));
}

M2Elem bilinear(const TraceData& t, const M2Elem& e1, const M2Elem& e2) {
    return m2_sub(m2_sub(qform(t, m2_add(e1, e2)), qform(t, e1)), qform(t, e2));
}

Mat4 mat4_mul(const Mat4& m1, const Mat4& m2) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            MultiPoly acc = m1[i][0] * m2[0][j];
            for (int k = 1; k < 4; ++k) acc = acc + m1[i][k] * m2[k][j];
            r[i][j] = acc;
        }
    return r;
}

Mat4 mat4_add(const Mat4& m1, const Mat4& m2) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = m1[i][j] + m2[i][j];
    return r;
}

Mat4 mat4_scale(const MultiPoly& u, const Mat4& m) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = u * m[i][j];
    return r;
}

Mat4 mat4_identity(const M2Ring& r) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i][j] = MultiPoly::constant(&r.kring, i == j ? 1 : 0);
    return m;
}

Mat4 rep4(const M2Elem& e) {
    const M2Ring& r = *e.ring;
    const MultiPoly o = MultiPoly::constant(&r.kring, 0);
    const MultiPoly u = r.k(1);
    const MultiPoly z = r.z();
    Mat4 ma = {{{o, -r.p, o, o},
                {u, r.x, o, o},
                {o, o, o, -r.p},
                {o, o, u, r.x}}};
    Mat4 mb = {{{o, -z, -r.q, -r.q * r.x},
                {o, r.y, o, r.q},
                {u, r.x, r.y, r.x * r.y - z},
                {o, -u, o, o}}};
    Mat4 basis[4] = {mat4_identity(r), ma, mb, mat4_mul(ma, mb)};
    Mat4 acc = mat4_scale(e.c[0], basis[0]);
    for (int i = 1; i < 4; ++i) acc = mat4_add(acc, mat4_scale(e.c[i], basis[i]));
    return acc;
}

SymmetryReport check_symmetric(const M2Ring& r, const TraceData& t,
                               const std::vector<M2Elem>& samples) {
    SymmetryReport rep;
    for (auto& e : samples) {
        MultiPoly le = trace(t, e);
        if (trace(t, m2_const(r, le)) != r.k(2) * le) rep.trace_of_trace = false;
        M2Elem q = qform(t, e);
        if (!q.is_central()) rep.q_central = false;
        for (auto& f : samples) {
            M2Elem ef = m2_mul(e, f), fe = m2_mul(f, e);
            MultiPoly lf = trace(t, f);
            M2Elem pairing = bilinear(t, e, f);
            if (pairing != m2_const(r, le * lf - trace(t, ef)))
                rep.symmetric_identity = false;
            if (trace(t, ef) != trace(t, fe)) rep.trace_commutes = false;
            if (qform(t, ef) != m2_mul(q, qform(t, f))) rep.q_multiplicative = false;
            M2Elem lhs = m2_add(ef, fe);
            M2Elem rhs = m2_add(m2_neg(pairing),
                                m2_add(m2_scale(le, f), m2_scale(lf, e)));
            if (lhs != rhs) rep.anticommutator = false;
        }
    }
    return rep;
}

CentralityReport centrality_check(const M2Ring& r) {
    CentralityReport rep;
    M2Elem a = m2_a(r), b = m2_b(r);
    M2Elem p = m2_const(r, r.p), q = m2_const(r, r.q);
    // z as a word in a and b: ya + xb - ab - ba
    M2Elem zw = m2_sub(m2_add(m2_scale(r.y, a), m2_scale(r.x, b)),
                       m2_add(m2_mul(a, b), m2_mul(b, a)));
    auto comm = [](const M2Elem& u, const M2Elem& v) {
        return m2_sub(m2_mul(u, v), m2_mul(v, u));
    };
    rep.az_pb = comm(a, zw) == comm(p, b);
    rep.bz_qa = comm(b, zw) == comm(q, a);
    rep.z_central = zw == m2_const(r, r.z()) && comm(a, zw).is_zero() &&
                    comm(b, zw).is_zero();
    return rep;
}

} // namespace dg
