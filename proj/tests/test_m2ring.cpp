#include "doctest.h"

#include "dg/m2ring.hpp"

#include <random>

using namespace dg;

namespace {

std::vector<M2Elem> basis(const M2Ring& r) {
    M2Elem ab = m2_mul(m2_a(r), m2_b(r));
    return {m2_one(r), m2_a(r), m2_b(r), ab};
}

// words in a, b of length <= 3, as (exponent-free) products
std::vector<M2Elem> words3(const M2Ring& r) {
    std::vector<M2Elem> out = {m2_one(r)};
    std::vector<M2Elem> layer = {m2_one(r)};
    for (int len = 1; len <= 3; ++len) {
        std::vector<M2Elem> next;
        for (auto& w : layer)
            for (auto* g : {&m2_a, &m2_b}) {
                next.push_back(m2_mul(w, (*g)(r)));
                out.push_back(next.back());
            }
        layer = std::move(next);
    }
    return out;
}

M2Elem random_elem(const M2Ring& r, std::mt19937& rng) {
    auto coeff = [&]() {
        std::uniform_int_distribution<int> d(-2, 2), v(0, int(r.kring.vars.size()) - 1);
        MultiPoly p = MultiPoly::constant(&r.kring, d(rng));
        p = p + MultiPoly::monomial(&r.kring, r.kring.vars[v(rng)], 1, d(rng));
        return p;
    };
    return m2_element(r, coeff(), coeff(), coeff(), coeff());
}

} // namespace

TEST_CASE("multiplication table and ring axioms") {
    M2Ring r = M2Ring::generic();
    M2Elem a = m2_a(r), b = m2_b(r), one = m2_one(r);
    M2Elem ab = m2_mul(a, b);

    // defining relations
    CHECK(m2_mul(a, a) == m2_sub(m2_scale(r.x, a), m2_const(r, r.p)));
    CHECK(m2_mul(b, b) == m2_sub(m2_scale(r.y, b), m2_const(r, r.q)));
    // ba = -ab + ya + xb - z
    M2Elem ba = m2_mul(b, a);
    M2Elem expect = m2_add(m2_neg(ab), m2_sub(m2_add(m2_scale(r.y, a), m2_scale(r.x, b)),
                                              m2_const(r, r.z())));
    CHECK(ba == expect);

    auto bs = basis(r);
    for (auto& e : bs) {
        CHECK(m2_mul(one, e) == e);
        CHECK(m2_mul(e, one) == e);
    }
    // associativity on all basis triples
    for (auto& e1 : bs)
        for (auto& e2 : bs)
            for (auto& e3 : bs)
                CHECK(m2_mul(m2_mul(e1, e2), e3) == m2_mul(e1, m2_mul(e2, e3)));

    // associativity and distributivity on random elements
    std::mt19937 rng(2024);
    for (int i = 0; i < 10; ++i) {
        M2Elem e1 = random_elem(r, rng), e2 = random_elem(r, rng),
               e3 = random_elem(r, rng);
        CHECK(m2_mul(m2_mul(e1, e2), e3) == m2_mul(e1, m2_mul(e2, e3)));
        CHECK(m2_mul(e1, m2_add(e2, e3)) == m2_add(m2_mul(e1, e2), m2_mul(e1, e3)));
        CHECK(m2_mul(m2_add(e1, e2), e3) == m2_add(m2_mul(e1, e3), m2_mul(e2, e3)));
    }
}

TEST_CASE("trace, quadratic form and pairing") {
    M2Ring r = M2Ring::generic();
    TraceData t = TraceData::symmetric(r);
    M2Elem a = m2_a(r), b = m2_b(r), one = m2_one(r);

    CHECK(trace(t, a) == r.x);
    CHECK(trace(t, b) == r.y);
    CHECK(trace(t, one) == r.k(2));
    CHECK(trace(t, m2_mul(a, b)) == r.x * r.y - r.z());

    // Q(1) = 1
    CHECK(qform(t, one) == one);
    // (a,b) = z
    CHECK(bilinear(t, a, b) == m2_const(r, r.z()));
    // L(e) = (e, 1) for all basis elements
    for (auto& e : basis(r)) {
        M2Elem p = bilinear(t, e, one);
        CHECK(p.is_central());
        CHECK(p.scalar() == trace(t, e));
        CHECK(qform(t, e).is_central());
    }
    // L is K[z]-linear: L(z e) = z L(e)
    CHECK(trace(t, m2_scale(r.z(), a)) == r.z() * r.x);
}

TEST_CASE("regular 4x4 representation is a homomorphism") {
    M2Ring r = M2Ring::generic();
    CHECK(rep4(m2_one(r)) == mat4_identity(r));
    Mat4 ma = rep4(m2_a(r));
    // second column of the a-matrix is (-p, x, 0, 0)
    CHECK(ma[0][1] == -r.p);
    CHECK(ma[1][1] == r.x);
    CHECK(ma[2][1].is_zero());
    CHECK(ma[3][1].is_zero());

    auto bs = basis(r);
    for (auto& e1 : bs)
        for (auto& e2 : bs)
            CHECK(rep4(m2_mul(e1, e2)) == mat4_mul(rep4(e1), rep4(e2)));

    std::mt19937 rng(99);
    for (int i = 0; i < 8; ++i) {
        M2Elem e1 = random_elem(r, rng), e2 = random_elem(r, rng);
        CHECK(rep4(m2_mul(e1, e2)) == mat4_mul(rep4(e1), rep4(e2)));
        CHECK(rep4(m2_add(e1, e2)) == mat4_add(rep4(e1), rep4(e2)));
        CHECK(rep4(m2_scale(r.z(), e1)) == mat4_scale(r.z(), rep4(e1)));
    }
}

TEST_CASE("representation separates normal forms of short words") {
    M2Ring r = M2Ring::generic();
    auto ws = words3(r);
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i; j < ws.size(); ++j) {
            bool same_nf = ws[i] == ws[j];
            bool same_mat = rep4(ws[i]) == rep4(ws[j]);
            CHECK(same_nf == same_mat);
        }
}

TEST_CASE("symmetry identities hold for the standard trace") {
    M2Ring r = M2Ring::generic();
    TraceData t = TraceData::symmetric(r);
    std::vector<M2Elem> samples = basis(r);
    // include z-multiples and a random element
    samples.push_back(m2_scale(r.z(), m2_one(r)));
    samples.push_back(m2_scale(r.z(), m2_a(r)));
    std::mt19937 rng(7);
    samples.push_back(random_elem(r, rng));
    SymmetryReport rep = check_symmetric(r, t, samples);
    CHECK(rep.trace_of_trace);
    CHECK(rep.symmetric_identity);
    CHECK(rep.trace_commutes);
    CHECK(rep.q_multiplicative);
    CHECK(rep.anticommutator);
    CHECK(rep.q_central);
    CHECK(rep.all_pass());
}

TEST_CASE("a corrupted trace table fails the symmetry check") {
    M2Ring r = M2Ring::generic();
    TraceData t = TraceData::symmetric(r);
    t.l[1] = r.x + r.k(1); // L(a) = x + 1
    SymmetryReport rep = check_symmetric(r, t, basis(r));
    CHECK(!rep.symmetric_identity);
    CHECK(!rep.all_pass());
}

TEST_CASE("centrality of the anticommutator defect") {
    M2Ring r = M2Ring::generic();
    CentralityReport rep = centrality_check(r);
    CHECK(rep.az_pb);
    CHECK(rep.bz_qa);
    CHECK(rep.z_central);
    CHECK(rep.all_pass());

    CHECK(centrality_check(M2Ring::fig8()).all_pass());
}

TEST_CASE("knot specialization: x = y = -1, p = -c, q = -c^-1") {
    M2Ring r = M2Ring::fig8();
    TraceData t = TraceData::symmetric(r);
    M2Elem a = m2_a(r), b = m2_b(r), one = m2_one(r);

    // a(a+1) = c and b(b+1) = c^-1, so a and b are invertible
    MultiPoly c = MultiPoly::monomial(&r.kring, "c");
    MultiPoly cinv = MultiPoly::monomial(&r.kring, "c", -1);
    CHECK(m2_mul(a, m2_add(a, one)) == m2_const(r, c));
    CHECK(m2_mul(b, m2_add(b, one)) == m2_const(r, cinv));

    // same fact through the representation
    Mat4 ma = rep4(a);
    CHECK(mat4_mul(ma, mat4_add(ma, mat4_identity(r))) ==
          mat4_scale(c, mat4_identity(r)));

    // the central element ab + ba + a + b equals -z
    M2Elem d = m2_add(m2_add(m2_mul(a, b), m2_mul(b, a)), m2_add(a, b));
    CHECK(d == m2_const(r, -r.z()));
    // and the trace of ab is 1 + that element: L(ab) = 1 - z
    CHECK(trace(t, m2_mul(a, b)) == r.k(1) - r.z());

    CHECK(check_symmetric(r, t, basis(r)).all_pass());
}
