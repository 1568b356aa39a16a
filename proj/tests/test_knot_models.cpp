#include "doctest.h"

#include "dg/knot_models.hpp"
#include "dg/ring_functors.hpp"
#include "dg/triangulation.hpp"

using namespace dg;

namespace {

struct FrrModel {
    const FiniteRankRing* r;
    using Elem = Vec;
    Elem from_int(const Int& n) const { return r->from_int(n); }
    Elem add(const Elem& a, const Elem& b) const { return r->add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return r->mul(a, b); }
    Elem neg(const Elem& a) const { return r->neg(a); }
    std::optional<Elem> inv(const Elem& a) const { return r->inv(a); }
};

const char* kFig8 = "tet x u y v\ntet y v x u\n";

void check_report(const Report& rep) {
    INFO(rep.str());
    CHECK(rep.all_pass());
}

} // namespace

TEST_CASE("13-dimensional model: rules match the quoted matrices") {
    FiniteRankRing r = build_f8q(); // throws on any rule/matrix mismatch
    REQUIRE(r.rank() == 13);
    CHECK(r.moduli[0] == 5);

    Vec eps = r.basis(0), one = r.basis(1), w = r.basis(2), d = r.basis(3);
    Vec a = r.basis(4), b = r.basis(7), ab = r.basis(10);
    // a^2 = eps - 1 + w - a
    CHECK(r.mul(a, a) == r.add(r.sub(r.add(eps, w), one), r.neg(a)));
    // ba = d - a - b - ab
    CHECK(r.mul(b, a) == r.sub(r.sub(r.sub(d, a), b), ab));
    // eps * ab = 4 eps
    CHECK(r.mul(eps, ab) == r.scale(4, eps));
    // w d = eps + wa + wb + 2 wab
    CHECK(r.mul(w, d) == r.add(r.add(eps, r.basis(5)),
                               r.add(r.basis(8), r.scale(2, r.basis(11)))));
    // 5 eps = 0
    CHECK(r.scale(5, eps) == r.zero());
    // eps^2 = 0
    CHECK(r.mul(eps, eps) == r.zero());
    // eps, w, d are central
    CHECK(r.commutes_with_all(eps));
    CHECK(r.commutes_with_all(w));
    CHECK(r.commutes_with_all(d));

    r.check_associative();

    // the same constants over Z (no mod-5 reduction) are not associative
    CHECK_THROWS_AS(build_f8q(false).check_associative(), dg_error);
}

TEST_CASE("6-dimensional model is associative and hosts the multiplicative relations") {
    FiniteRankRing r = build_f8a();
    REQUIRE(r.rank() == 6);
    r.check_associative();

    Vec one = r.one, s = r.basis(1), z = r.basis(2);
    Vec a = r.basis(3), g = r.basis(4);
    CHECK(r.commutes_with_all(s));
    CHECK(r.commutes_with_all(z));
    // a^2 - a = z - s, g^2 = z - 2
    CHECK(r.sub(r.mul(a, a), a) == r.sub(z, s));
    CHECK(r.mul(g, g) == r.sub(z, r.scale(2, one)));
    // ag + ga = 2 - z + g
    CHECK(r.add(r.mul(a, g), r.mul(g, a)) ==
          r.add(r.sub(r.scale(2, one), z), g));

    // the emitted multiplicative presentation holds under w_x = a, w_y = a+g
    RingPresentation pres = emit_a(
        reduce_presentation(delta_presentation(parse_diagram(kFig8)),
                            parse_diagram(kFig8)));
    std::map<std::string, Vec> atoms = {{"w_x", a}, {"w_y", r.add(a, g)}};
    VerifyReport vr = verify_in_model(pres, FrrModel{&r}, atoms);
    for (auto& rel : vr.relations) {
        CHECK(!rel.inversion_failure);
        CHECK(rel.pass);
    }
}

TEST_CASE("trefoil verification suites") {
    check_report(verify_trefoil_a());
    check_report(verify_trefoil_b());
    check_report(verify_trefoil());

    // a wrong assignment is detected
    Report bad = verify_trefoil_a(
        {{"w_x", EisensteinLoc::t()}, {"w_y", EisensteinLoc::t()}});
    CHECK(!bad.all_pass());
}

TEST_CASE("commutator of the figure-eight pair ring") {
    M2Ring r = M2Ring::fig8();
    F8Commutator fc = f8_commutator(r);
    MultiPoly c = MultiPoly::monomial(&r.kring, "c");
    MultiPoly cinv = MultiPoly::monomial(&r.kring, "c", -1);
    MultiPoly z = r.z();
    MultiPoly one = r.k(1);
    // q = (d+1)ab + (d+c^-1+1)a - cb - c - 1 with d = -z
    M2Elem expect = m2_element(r, -(c + one), one + cinv - z, -c, one - z);
    CHECK(fc.q == expect);
    // q + q^-1 = w, central
    CHECK(m2_add(fc.q, fc.q_inv) == m2_const(r, fc.w));
    CHECK(fc.w == z * z - z - c - cinv - r.k(2));
    CHECK(m2_mul(fc.q, fc.q_inv) == m2_one(r));
}

TEST_CASE("projection onto the 13-model") {
    M2Ring r = M2Ring::fig8();
    FiniteRankRing f8q = build_f8q();
    MultiPoly c = MultiPoly::monomial(&r.kring, "c");
    MultiPoly cinv = MultiPoly::monomial(&r.kring, "c", -1);

    CHECK(f8_project(f8q, m2_one(r)) == f8q.one);
    CHECK(f8_project(f8q, m2_a(r)) == f8q.basis(4));
    CHECK(f8_project(f8q, m2_const(r, c * cinv)) == f8q.one);
    // z maps to -d
    CHECK(f8_project(f8q, m2_const(r, r.z())) == f8q.neg(f8q.basis(3)));
    // additive and multiplicative on a couple of elements
    M2Elem e1 = m2_add(m2_scale(c, m2_a(r)), m2_b(r));
    M2Elem e2 = m2_sub(m2_mul(m2_a(r), m2_b(r)), m2_const(r, r.z()));
    CHECK(f8_project(f8q, m2_mul(e1, e2)) ==
          f8q.mul(f8_project(f8q, e1), f8_project(f8q, e2)));
    CHECK(f8_project(f8q, m2_add(e1, e2)) ==
          f8q.add(f8_project(f8q, e1), f8_project(f8q, e2)));
}

TEST_CASE("ideal elements, end-to-end pair relations, trace generators") {
    check_report(verify_ideal_elements());
    check_report(verify_f8_b_end_to_end());
    check_report(verify_trace_generators());
}

TEST_CASE("centers, quotients and the quaternion identification") {
    check_report(verify_centers_and_quotients());
    check_report(hurwitz_check());
    check_report(verify_fig8());
}

TEST_CASE("trace closure preconditions") {
    FiniteRankRing f8a = build_f8a();
    CHECK(!f8a.has_trace());
    CHECK_THROWS_AS(ideal_trace_closure(f8a, {f8a.one}), dg_error);
}

TEST_CASE("quotient projection and section are compatible") {
    FiniteRankRing f8q = build_f8q();
    QuotientDesc desc;
    FiniteRankRing q12 = quotient_ring(f8q, {f8q.basis(0)}, &desc);
    for (int i = 0; i < q12.rank(); ++i) {
        Vec ei(q12.rank(), 0);
        ei[i] = 1;
        CHECK(desc.project(f8q.reduce(desc.section(ei))) == ei);
    }
    // the projection is a ring map on a sample pair
    Vec x = f8q.add(f8q.basis(4), f8q.scale(3, f8q.basis(2)));
    Vec y = f8q.sub(f8q.basis(7), f8q.basis(10));
    CHECK(desc.project(f8q.mul(x, y)) ==
          q12.mul(desc.project(x), desc.project(y)));
}
