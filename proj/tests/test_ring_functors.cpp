#include "doctest.h"

#include "dg/delta_examples.hpp"
#include "dg/eisenstein.hpp"
#include "dg/modular.hpp"
#include "dg/ring_functors.hpp"

#include <cstdio>

using namespace dg;

namespace {

struct EisModel {
    using Elem = EisensteinLoc;
    Elem from_int(const Int& n) const { return EisensteinLoc::from_int(n); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    std::optional<Elem> inv(const Elem& a) const { return a.inverse(); }
};

DeltaPresentation reduced(const char* text) {
    Diagram d = parse_diagram(text);
    return reduce_presentation(delta_presentation(d), d);
}

const char* kTrefoil = "tet x u y v\ntet v y u x\n";
const char* kFig8 = "tet x u y v\ntet y v x u\n";

// the map sending w_x to t and w_y to (2-t)/3
std::map<std::string, EisensteinLoc> trefoil_assignment() {
    return {{"w_x", EisensteinLoc::t()}, {"w_y", EisensteinLoc(2, -1, 1)}};
}

} // namespace

TEST_CASE("expression construction and printing") {
    RingExpr w = RingExpr::make_atom("w_x");
    RingExpr e = RingExpr::inv(
        RingExpr::sum({RingExpr::constant(1), RingExpr::neg(RingExpr::inv(w))}));
    CHECK(e.str() == "(1-w_x^-1)^-1");
    CHECK(RingExpr::neg(RingExpr::neg(w)) == w);
    CHECK(RingExpr::inv(RingExpr::inv(w)) == w);
    CHECK(RingExpr::inv(RingExpr::neg(w)).str() == "-w_x^-1");
    CHECK(RingExpr::prod({RingExpr::neg(w), RingExpr::neg(w)}).str() == "w_xw_x");
    CHECK(RingExpr::prod({w, RingExpr::constant(1)}) == w);
    CHECK(RingExpr::prod({w, RingExpr::constant(0)}).str() == "0");
    CHECK(RingExpr::sum({RingExpr::constant(0), w}) == w);
}

TEST_CASE("multiplicative functor: figure-eight initial presentation") {
    RingPresentation a = emit_a(reduced(kFig8));
    REQUIRE(a.relations.size() == 2);
    std::set<std::string> rels;
    for (auto& [l, r] : a.relations) rels.insert(l.str() + "=" + r.str());
    CHECK(rels == std::set<std::string>{
                      "(1-(w_xw_y)^-1)^-1=(1-w_y)(1-w_x^-1)^-1",
                      "(1-(w_yw_x)^-1)^-1=(1-w_x)(1-w_y^-1)^-1"});
    // generators are invertible atoms; compound inverses become localizations
    REQUIRE(a.atoms.size() == 2);
    CHECK(a.atoms[0].invertible);
    CHECK(!a.localizations.empty());
}

TEST_CASE("multiplicative functor: empty and trivial input") {
    DeltaPresentation empty;
    RingPresentation a = emit_a(empty);
    CHECK(a.atoms.empty());
    CHECK(a.relations.empty());
    CHECK(verify_in_model(a, EisModel{}, {}).all_pass()); // vacuous

    DeltaPresentation one_gen;
    one_gen.generators = {"g"};
    RingPresentation b = emit_b(one_gen);
    CHECK(b.atoms.size() == 2);
    CHECK(b.atoms[0].name == "u_g");
    CHECK(b.atoms[1].name == "v_g");
    CHECK(b.relations.empty());
}

TEST_CASE("trefoil multiplicative relations hold in the cyclotomic model") {
    RingPresentation a = emit_a(reduced(kTrefoil));
    VerifyReport rep = verify_in_model(a, EisModel{}, trefoil_assignment());
    for (auto& r : rep.relations) {
        CHECK(!r.inversion_failure);
        CHECK(r.pass);
    }
    // sanity oracle for the assignment itself: w_y = (2-t)/3 and 3(2-t)^-1=1+t
    EisensteinLoc t = EisensteinLoc::t();
    EisensteinLoc wy = EisensteinLoc(2, -1, 1);
    CHECK(wy * EisensteinLoc::from_int(3) == EisensteinLoc::from_int(2) - t);
    CHECK(*wy.inverse() == EisensteinLoc::from_int(1) + t);

    // wrong assignment must fail at least one relation
    std::map<std::string, EisensteinLoc> bad = trefoil_assignment();
    bad["w_y"] = t;
    CHECK(!verify_in_model(a, EisModel{}, bad).all_pass());

    // missing atom is an error, not a failure
    std::map<std::string, EisensteinLoc> missing = {{"w_x", t}};
    CHECK_THROWS_AS(verify_in_model(a, EisModel{}, missing), dg_error);
}

TEST_CASE("pair functor: figure-eight presentation") {
    RingPresentation b = emit_b(reduced(kFig8));
    REQUIRE(b.relations.size() == 4);
    std::set<std::string> rels;
    for (auto& [l, r] : b.relations) rels.insert(l.str() + "=" + r.str());
    CHECK(rels == std::set<std::string>{
                      "(u_xv_y+v_x)^-1u_xu_y=v_yv_x^-1u_x",
                      "(u_xv_y+v_x)^-1=v_yv_x^-1+u_y",
                      "(u_yv_x+v_y)^-1u_yu_x=v_xv_y^-1u_y",
                      "(u_yv_x+v_y)^-1=v_xv_y^-1+u_x"});
}

TEST_CASE("alpha substitution") {
    RingExpr ux = RingExpr::make_atom("u_x");
    RingExpr vx = RingExpr::make_atom("v_x");
    CHECK(alpha_image(ux).str() == "w_x");
    CHECK(alpha_image(vx).str() == "1-w_x");
    // u_x + v_x - 1 evaluates to zero under alpha in any model
    RingExpr rel = RingExpr::sum({ux, vx, RingExpr::constant(-1)});
    RingExpr im = alpha_image(rel);
    std::map<std::string, EisensteinLoc> vals = {{"w_x", EisensteinLoc(3, 2)}};
    auto v = eval_ring_expr(im, EisModel{}, vals);
    REQUIRE(v.has_value());
    CHECK(v->is_zero());
    CHECK(alpha_image(RingExpr::constant(1)).str() == "1");
}

TEST_CASE("pair relations pushed through alpha agree with multiplicative relations") {
    for (const char* text : {kTrefoil, kFig8}) {
        RingPresentation b = emit_b(reduced(text));
        RingPresentation pushed;
        for (auto& [l, r] : b.relations)
            pushed.relations.emplace_back(alpha_image(l), alpha_image(r));
        // trefoil model: both the multiplicative relations and the pushed
        // pair relations hold under the same assignment (only defined for
        // the trefoil; the figure-eight assignment has no unit inverse here)
        if (text != kTrefoil) continue;
        VerifyReport rep = verify_in_model(pushed, EisModel{}, trefoil_assignment());
        for (auto& r : rep.relations) {
            CHECK(!r.inversion_failure);
            CHECK(r.pass);
        }
        std::map<std::string, EisensteinLoc> bad = trefoil_assignment();
        bad["w_y"] = EisensteinLoc::t();
        bool a_pass = verify_in_model(emit_a(reduced(text)), EisModel{}, bad).all_pass();
        bool b_pass = verify_in_model(pushed, EisModel{}, bad).all_pass();
        CHECK(a_pass == b_pass); // both fail together
    }
}

TEST_CASE("pair rules match the affine models exhaustively") {
    for (int n : {2, 3, 5, 7}) {
        DeltaModel m = build_br(n);
        int nm = int(m.g.morphisms.size());
        auto uv = [&](int idx) {
            int x, y;
            REQUIRE(std::sscanf(m.g.morphisms[idx].name.c_str(), "(%d,%d)", &x, &y) == 2);
            return std::pair<ModularInt, ModularInt>{ModularInt(y, n), ModularInt(x, n)};
        };
        for (int a = 0; a < nm; ++a) {
            auto [ua, va] = uv(a);
            // product rule
            for (int b = 0; b < nm; ++b) {
                auto [ub, vb] = uv(b);
                auto [up, vp] = uv(m.g.compose(a, b));
                CHECK(up == ua * ub);
                CHECK(vp == ua * vb + va);
            }
            // i-rule needs u invertible, true in this model by construction
            auto [ui, vi] = uv(m.g.inv[a]);
            auto uinv = ua.inverse();
            REQUIRE(uinv.has_value());
            CHECK(ui == *uinv);
            CHECK(vi == -(*uinv * va));
            if (!m.d.in_H[a]) continue;
            // k-rule: swap
            auto [uk, vk] = uv(k_of(m.g, m.d, a));
            CHECK(uk == va);
            CHECK(vk == ua);
            // j-rule: (-v^-1 u, v^-1)
            auto [uj, vj] = uv(m.d.j[a]);
            auto vinv = va.inverse();
            REQUIRE(vinv.has_value());
            CHECK(uj == -(*vinv * ua));
            CHECK(vj == *vinv);
        }
    }
}

TEST_CASE("presentation pretty printer is deterministic") {
    RingPresentation a = emit_a(reduced(kFig8));
    CHECK(a.str() == a.str());
    CHECK(a.str().find("gen w_x^+-1") != std::string::npos);
    CHECK(a.str().find("invert ") != std::string::npos);
}
