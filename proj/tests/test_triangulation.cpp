#include "doctest.h"

#include "dg/delta_examples.hpp"
#include "dg/triangulation.hpp"

#include <set>

using namespace dg;

static const char* kTrefoil = "tet x u y v\ntet v y u x\n";
static const char* kFig8 = "tet x u y v\ntet y v x u\n";

TEST_CASE("S3 normalization") {
    CHECK(s3_normalize("jij") == s3_normalize("iji"));
    CHECK(s3_normalize("jij") == S3::K);
    CHECK(s3_normalize("ii") == S3::E);
    CHECK(s3_normalize("jj") == S3::E);
    CHECK(s3_normalize("ijij") == S3::JI);
    CHECK(s3_normalize("") == S3::E);
    CHECK_THROWS_AS(s3_normalize("ix"), dg_error);

    // normalize is a morphism of monoids: exhaustive over words of length <= 6
    std::vector<std::string> words{""};
    for (int len = 1; len <= 6; ++len) {
        std::vector<std::string> next;
        for (auto& w : words)
            if (int(w.size()) == len - 1) {
                next.push_back(w + "i");
                next.push_back(w + "j");
            }
        words.insert(words.end(), next.begin(), next.end());
    }
    for (auto& u : words)
        for (auto& v : words) {
            if (u.size() + v.size() > 6) continue;
            CHECK(s3_normalize(u + v) == s3_mul(s3_normalize(u), s3_normalize(v)));
        }
    for (int s = 0; s < 6; ++s)
        CHECK(s3_mul(S3(s), s3_inverse(S3(s))) == S3::E);
}

TEST_CASE("diagram parsing") {
    Diagram d = parse_diagram(kTrefoil);
    REQUIRE(d.tets.size() == 2);
    CHECK(d.tets[0].g == std::array<std::string, 4>{"x", "u", "y", "v"});
    CHECK(d.tets[1].g == std::array<std::string, 4>{"v", "y", "u", "x"});

    CHECK(parse_diagram("# comment\n\ntet a b c d\n", true).tets.size() == 1);
    CHECK_THROWS_AS(parse_diagram("tet a b c d\n"), dg_error); // free faces
    CHECK_THROWS_AS(parse_diagram("tet a a a b\ntet b c c d\ntet d e e f\ntet f g g h\n"),
                    dg_error); // 'a' occurs three times
    CHECK_THROWS_WITH_AS(parse_diagram("tet a b c\n"), "line 1: tet needs four labels",
                         dg_error);
    CHECK_THROWS_AS(parse_diagram("quad a b c d\n"), dg_error);
    CHECK_THROWS_AS(parse_diagram("tet a b c 1d\n", true), dg_error);
}

TEST_CASE("presentations from diagrams") {
    DeltaPresentation p = delta_presentation(parse_diagram(kTrefoil));
    CHECK(p.generators == std::vector<std::string>{"x", "u", "y", "v"});
    CHECK(p.str() == "u=xy\nv=x*y\ny=vu\nx=v*u\n");

    DeltaPresentation q = delta_presentation(parse_diagram(kFig8));
    CHECK(q.generators.size() == 4);
    CHECK(q.str() == "u=xy\nv=x*y\nv=yx\nu=y*x\n");

    DeltaPresentation single =
        delta_presentation(parse_diagram("tet a b c d\n", true));
    CHECK(single.generators.size() == 4);
    CHECK(single.relations.size() == 2);
    CHECK(single.str() == "b=ac\nd=a*c\n");
}

TEST_CASE("generator elimination reproduces the reduced presentations") {
    DeltaPresentation p = delta_presentation(parse_diagram(kTrefoil));
    p = eliminate(p, "u");
    p = eliminate(p, "v");
    CHECK(p.generators == std::vector<std::string>{"x", "y"});
    CHECK(p.str() == "y=(x*y)xy\nx=(x*y)*(xy)\n");

    Diagram f8 = parse_diagram(kFig8);
    DeltaPresentation q = reduce_presentation(delta_presentation(f8), f8);
    CHECK(q.generators == std::vector<std::string>{"x", "y"});
    std::set<std::string> rels;
    for (auto& [lhs, rhs] : q.relations) rels.insert(lhs.str() + "=" + rhs.str());
    CHECK(rels == std::set<std::string>{"xy=y*x", "yx=x*y"});
}

TEST_CASE("elimination handles plain renaming") {
    DeltaPresentation p;
    p.generators = {"a", "b", "c"};
    p.relations.emplace_back(Term::make_gen("a"), Term::make_gen("b"));
    p.relations.emplace_back(Term::make_gen("c"),
                             Term::make_prod({Term::make_gen("a"), Term::make_gen("a")}));
    DeltaPresentation q = eliminate(p, "a");
    CHECK(q.generators == std::vector<std::string>{"b", "c"});
    CHECK(q.str() == "c=bb\n");
}

TEST_CASE("elimination without a defining relation fails") {
    DeltaPresentation p = delta_presentation(parse_diagram(kTrefoil));
    p = eliminate(p, "u");
    p = eliminate(p, "v");
    CHECK_THROWS_AS(eliminate(p, "x"), dg_error); // x appears on both sides everywhere
    CHECK_THROWS_AS(eliminate(p, "nope"), dg_error);
}

TEST_CASE("elimination preserves solution counts in finite models") {
    for (const char* text : {kTrefoil, kFig8}) {
        Diagram d = parse_diagram(text);
        DeltaPresentation p0 = delta_presentation(d);
        DeltaPresentation p1 = reduce_presentation(p0, d);
        for (const char* model : {"ar:5", "br:3", "triple:2", "coarse:z3"}) {
            DeltaModel m = build_example(model);
            CAPTURE(text);
            CAPTURE(model);
            CHECK(count_solutions(p0, m.g, m.d) == count_solutions(p1, m.g, m.d));
        }
    }
}

TEST_CASE("term printing") {
    Term x = Term::make_gen("x"), y = Term::make_gen("y");
    CHECK(Term::make_gen("x", S3::J).str() == "j(x)");
    CHECK(Term::make_gen("x", S3::IJ).str() == "ij(x)");
    CHECK(Term::make_app(S3::I, Term::make_prod({x, y})).str() == "i(xy)");
    CHECK(Term::make_star(x, y).str() == "x*y");
    CHECK(Term::make_star(Term::make_star(x, y), Term::make_prod({x, y})).str() ==
          "(x*y)*(xy)");
    CHECK(Term::make_prod({Term::make_star(x, y), x, y}).str() == "(x*y)xy");
    // composing S3 prefixes into generators
    CHECK(Term::make_app(S3::I, Term::make_gen("x", S3::J)).str() == "ij(x)");
    CHECK(Term::make_app(S3::J, Term::make_gen("x", S3::J)).str() == "x");
}

TEST_CASE("term evaluation against a model") {
    DeltaModel m = build_ar(5);
    std::vector<std::string> gens{"x", "y"};
    int two = m.g.morphism_index("2"), four = m.g.morphism_index("4");
    // x*y in the model equals the star operation
    Term st = Term::make_star(Term::make_gen("x"), Term::make_gen("y"));
    auto v = eval_term(st, m.g, m.d, gens, {two, four});
    REQUIRE(v.has_value());
    CHECK(*v == star(m.g, m.d, two, four));
    // undefined when the pair is not H-composable: 2*2 has 2*2=4, 2 j(2)=...
    Term prod = Term::make_prod({Term::make_gen("x"), Term::make_gen("y")});
    auto pv = eval_term(prod, m.g, m.d, gens, {two, four});
    REQUIRE(pv.has_value());
    CHECK(m.g.morphisms[*pv].name == "3"); // 2*4 = 8 = 3 mod 5
}
