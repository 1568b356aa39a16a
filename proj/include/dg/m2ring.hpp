#ifndef DG_M2RING_HPP
#define DG_M2RING_HPP

#include "dg/poly.hpp"

#include <array>

namespace dg {

/// The K-algebra on a, b with a^2 = xa - p and b^2 = yb - q, free of rank 4
/// over K[z] on the basis (1, a, b, ab), where z = ya + xb - ab - ba is
/// central. Coefficients live in one polynomial ring holding the variables of
/// K together with z.
struct M2Ring {
    PolyRing kring; // variables of K plus "z"
    MultiPoly x, y, p, q;

    /// K = Z[x,y,p,q].
    static M2Ring generic();
    /// K = Z[c,c^-1], x = y = -1, p = -c, q = -c^-1 (the knot specialization).
    static M2Ring fig8();

    MultiPoly z() const { return MultiPoly::monomial(&kring, "z"); }
    MultiPoly k(Int n) const { return MultiPoly::constant(&kring, std::move(n)); }
};

struct M2Elem {
    const M2Ring* ring = nullptr;
    std::array<MultiPoly, 4> c; // coefficients of 1, a, b, ab

    bool operator==(const M2Elem& o) const { return c == o.c; }
    bool operator!=(const M2Elem& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_central() const; // lies in K[z]*1
    const MultiPoly& scalar() const; // coefficient of 1 (use with is_central)

    std::string str() const;
};

M2Elem m2_element(const M2Ring& r, MultiPoly c0, MultiPoly c1, MultiPoly c2,
                  MultiPoly c3);
M2Elem m2_const(const M2Ring& r, MultiPoly v);
M2Elem m2_one(const M2Ring& r);
M2Elem m2_a(const M2Ring& r);
M2Elem m2_b(const M2Ring& r);

M2Elem m2_add(const M2Elem& e1, const M2Elem& e2);
M2Elem m2_sub(const M2Elem& e1, const M2Elem& e2);
M2Elem m2_neg(const M2Elem& e);
M2Elem m2_scale(const MultiPoly& u, const M2Elem& e);
M2Elem m2_mul(const M2Elem& e1, const M2Elem& e2);

/// A trace function as data: the values of L on the basis (1, a, b, ab).
struct TraceData {
    std::array<MultiPoly, 4> l;

    /// The symmetric trace: L(1)=2, L(a)=x, L(b)=y, L(ab)=xy-z.
    static TraceData symmetric(const M2Ring& r);
};

MultiPoly trace(const TraceData& t, const M2Elem& e);
/// Q(e) = L(e) e - e^2 as an element (central when the trace is a trace).
M2Elem qform(const TraceData& t, const M2Elem& e);
/// (e1, e2) = Q(e1+e2) - Q(e1) - Q(e2).
M2Elem bilinear(const TraceData& t, const M2Elem& e1, const M2Elem& e2);

using Mat4 = std::array<std::array<MultiPoly, 4>, 4>;

Mat4 mat4_mul(const Mat4& m1, const Mat4& m2);
Mat4 mat4_add(const Mat4& m1, const Mat4& m2);
Mat4 mat4_scale(const MultiPoly& u, const Mat4& m);
Mat4 mat4_identity(const M2Ring& r);

/// The regular 4x4 representation over K[z]; faithful.
Mat4 rep4(const M2Elem& e);

struct SymmetryReport {
    bool trace_of_trace = true;   // L(L(e) 1) = 2 L(e)
    bool symmetric_identity = true; // (e1,e2) = L(e1)L(e2) - L(e1 e2)
    bool trace_commutes = true;   // L(e1 e2) = L(e2 e1)
    bool q_multiplicative = true; // Q(e1 e2) = Q(e1) Q(e2)
    bool anticommutator = true;   // e1 e2 + e2 e1 = -(e1,e2) + L(e1)e2 + L(e2)e1
    bool q_central = true;        // Q(e) lands in K[z]
    bool all_pass() const {
        return trace_of_trace && symmetric_identity && trace_commutes &&
               q_multiplicative && anticommutator && q_central;
    }
};

SymmetryReport check_symmetric(const M2Ring& r, const TraceData& t,
                               const std::vector<M2Elem>& samples);

struct CentralityReport {
    bool az_pb = false; // [a,z] = [p,b]
    bool bz_qa = false; // [b,z] = [q,a]
    bool z_central = false;
    bool all_pass() const { return az_pb && bz_qa && z_central; }
};

CentralityReport centrality_check(const M2Ring& r);

} // namespace dg

#endif
