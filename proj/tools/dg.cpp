#include "dg/delta_examples.hpp"
#include "dg/eisenstein.hpp"
#include "dg/knot_models.hpp"
#include "dg/m2ring.hpp"
#include "dg/ring_functors.hpp"
#include "dg/triangulation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;  // a verification or axiom failure
constexpr int kExitInput = 2; // input or parse error

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dg_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression grammar: identifiers, integers, + - * ^, parentheses, inv(...).
// ^ binds tightest, then unary minus, then *, then + and -.

struct Lexer {
    std::string src;
    size_t pos = 0;

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }
    char peek() {
        skip();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
};

RingExpr parse_sum(Lexer& lx);

RingExpr parse_atom(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        lx.eat('(');
        RingExpr e = parse_sum(lx);
        if (!lx.eat(')')) throw dg_error("expected ')'");
        return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (lx.pos < lx.src.size() &&
               std::isdigit(static_cast<unsigned char>(lx.src[lx.pos])))
            num += lx.src[lx.pos++];
        return RingExpr::constant(Int(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name;
        while (lx.pos < lx.src.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.src[lx.pos])) ||
                lx.src[lx.pos] == '_'))
            name += lx.src[lx.pos++];
        if (name == "inv") {
            if (!lx.eat('(')) throw dg_error("expected '(' after inv");
            RingExpr e = parse_sum(lx);
            if (!lx.eat(')')) throw dg_error("expected ')'");
            return RingExpr::inv(e);
        }
        return RingExpr::make_atom(name);
    }
    if (c == '\0') throw dg_error("unexpected end of input");
    throw dg_error(std::string("unexpected character '") + c + "'");
}

RingExpr parse_power(Lexer& lx) {
    RingExpr base = parse_atom(lx);
    if (!lx.eat('^')) return base;
    bool neg = lx.eat('-');
    char c = lx.peek();
    if (!std::isdigit(static_cast<unsigned char>(c)))
        throw dg_error("expected an integer exponent");
    std::string num;
    while (lx.pos < lx.src.size() &&
           std::isdigit(static_cast<unsigned char>(lx.src[lx.pos])))
        num += lx.src[lx.pos++];
    long k = std::stol(num);
    std::vector<RingExpr> factors(static_cast<size_t>(k), base);
    RingExpr p = RingExpr::prod(std::move(factors));
    return neg ? RingExpr::inv(p) : p;
}

RingExpr parse_unary(Lexer& lx) {
    if (lx.eat('-')) return RingExpr::neg(parse_unary(lx));
    return parse_power(lx);
}

RingExpr parse_product(Lexer& lx) {
    std::vector<RingExpr> factors = {parse_unary(lx)};
    while (lx.eat('*')) factors.push_back(parse_unary(lx));
    return factors.size() == 1 ? factors[0] : RingExpr::prod(std::move(factors));
}

RingExpr parse_sum(Lexer& lx) {
    std::vector<RingExpr> terms = {parse_product(lx)};
    for (;;) {
        if (lx.eat('+')) terms.push_back(parse_product(lx));
        else if (lx.eat('-')) terms.push_back(RingExpr::neg(parse_product(lx)));
        else break;
    }
    return terms.size() == 1 ? terms[0] : RingExpr::sum(std::move(terms));
}

RingExpr parse_expression(const std::string& text) {
    Lexer lx{text};
    RingExpr e = parse_sum(lx);
    if (lx.peek() != '\0') throw dg_error("trailing input after expression");
    return e;
}

// ---------------------------------------------------------------------------
// Model adapters for evaluation.

struct EisModel {
    using Elem = EisensteinLoc;
    Elem from_int(const Int& n) const { return EisensteinLoc::from_int(n); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    std::optional<Elem> inv(const Elem& a) const { return a.inverse(); }
};

struct FrrModel {
    const FiniteRankRing* r;
    using Elem = Vec;
    Elem from_int(const Int& n) const { return r->from_int(n); }
    Elem add(const Elem& a, const Elem& b) const { return r->add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return r->mul(a, b); }
    Elem neg(const Elem& a) const { return r->neg(a); }
    std::optional<Elem> inv(const Elem& a) const { return r->inv(a); }
};

struct M2Model {
    const M2Ring* r;
    using Elem = M2Elem;
    Elem from_int(const Int& n) const {
        return m2_const(*r, MultiPoly::constant(&r->kring, n));
    }
    Elem add(const Elem& a, const Elem& b) const { return m2_add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return m2_mul(a, b); }
    Elem neg(const Elem& a) const { return m2_neg(a); }

    // e (L(e) - e) = Q(e) is central, so e is invertible exactly when Q(e)
    // is a unit (+- a monomial in the Laurent variables) of the scalar ring
    std::optional<Elem> inv(const Elem& e) const {
        TraceData t = TraceData::symmetric(*r);
        M2Elem qf = qform(t, e);
        if (!qf.is_central()) return std::nullopt;
        const MultiPoly& det = qf.scalar();
        if (det.terms().size() != 1) return std::nullopt;
        const auto& [expo, coeff] = *det.terms().begin();
        if (coeff != 1 && coeff != -1) return std::nullopt;
        MultiPoly invdet = MultiPoly::constant(&r->kring, coeff);
        for (size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] == 0) continue;
            if (!r->kring.laurent[i]) return std::nullopt;
            invdet = invdet * MultiPoly::monomial(&r->kring, r->kring.vars[i],
                                                  -expo[i]);
        }
        M2Elem cand =
            m2_scale(invdet, m2_sub(m2_const(*r, trace(t, e)), e));
        if (m2_mul(e, cand) != m2_one(*r)) return std::nullopt;
        return cand;
    }
};

template <class M>
int eval_and_print(const M& m, const std::map<std::string, typename M::Elem>& atoms,
                   const RingExpr& expr,
                   const std::function<std::string(const typename M::Elem&)>& show) {
    auto v = eval_ring_expr(expr, m, atoms);
    if (!v) {
        std::cerr << "error: a subexpression is not invertible in this model\n";
        return kExitFail;
    }
    std::cout << show(*v) << "\n";
    return kExitOk;
}

int run_eval(const std::string& model, const std::string& expr_text) {
    RingExpr expr = parse_expression(expr_text);

    if (model == "trefoil-a") {
        EisensteinLoc t = EisensteinLoc::t();
        std::map<std::string, EisensteinLoc> atoms = {
            {"t", t},
            {"w_x", t},
            {"w_y", EisensteinLoc(2, -1, 1)},
        };
        return eval_and_print<EisModel>(
            EisModel{}, atoms, expr,
            [](const EisensteinLoc& v) { return v.str(); });
    }
    if (model == "f8-r") {
        static M2Ring r = M2Ring::fig8();
        MultiPoly c = MultiPoly::monomial(&r.kring, "c");
        MultiPoly cinv = MultiPoly::monomial(&r.kring, "c", -1);
        MultiPoly z = r.z();
        std::map<std::string, M2Elem> atoms = {
            {"a", m2_a(r)},
            {"b", m2_b(r)},
            {"c", m2_const(r, c)},
            {"z", m2_const(r, z)},
            {"d", m2_const(r, -z)},
            {"w", m2_const(r, z * z - z - c - cinv - r.k(2))},
        };
        return eval_and_print<M2Model>(M2Model{&r}, atoms, expr,
                                       [](const M2Elem& v) { return v.str(); });
    }
    if (model == "f8-b" || model == "f8-a") {
        static FiniteRankRing rq = build_f8q();
        static FiniteRankRing ra = build_f8a();
        const FiniteRankRing& r = model == "f8-b" ? rq : ra;
        std::map<std::string, Vec> atoms;
        for (int i = 0; i < r.rank(); ++i)
            if (r.names[size_t(i)] != "1") atoms[r.names[size_t(i)]] = r.basis(i);
        return eval_and_print<FrrModel>(
            FrrModel{&r}, atoms, expr,
            [&](const Vec& v) { return r.format(v, true); });
    }
    throw dg_error("unknown model " + model);
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json report_json(const Report& rep) {
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    for (auto& l : rep.lines) {
        nlohmann::ordered_json jl;
        jl["name"] = l.name;
        jl["pass"] = l.pass;
        if (!l.pass && !l.detail.empty()) jl["detail"] = l.detail;
        lines.push_back(jl);
    }
    nlohmann::ordered_json out;
    out["lines"] = lines;
    out["all_pass"] = rep.all_pass();
    return out;
}

int run_axioms(const std::string& family, int size, bool json) {
    std::string desc;
    if (family == "malnormal") desc = "malnormal:s3";
    else if (family == "coarse") desc = "coarse:z" + std::to_string(size);
    else desc = family + ":" + std::to_string(size);

    DeltaModel m = build_example(desc);
    AxiomReport ar = check_delta(m.g, m.d);

    Report rep;
    auto line = [&](const std::string& name, const AxiomCheck& c) {
        std::string detail;
        if (!c.pass && c.wx >= 0)
            detail = "counterexample " + m.g.morphisms[size_t(c.wx)].name +
                     (c.wy >= 0 ? ", " + m.g.morphisms[size_t(c.wy)].name : "");
        rep.add(name, c.pass, detail);
    };
    line("(i) inverse closure of H", ar.inv_closure);
    line("(ii) S3 action on H", ar.s3_action);
    line("(iii) composability transfer", ar.composability);
    line("(iv) product rule", ar.product_rule);
    line("H generates the groupoid", ar.generation);

    if (json) {
        nlohmann::ordered_json out;
        out["model"] = desc;
        out["objects"] = m.g.objects.size();
        out["morphisms"] = m.g.morphisms.size();
        out.update(report_json(rep));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "model " << desc << ": " << m.g.objects.size()
                  << " objects, " << m.g.morphisms.size() << " morphisms\n"
                  << rep.str();
    }
    return rep.all_pass() ? kExitOk : kExitFail;
}

int run_verify(const std::string& suite, bool json) {
    Report rep;
    if (suite == "trefoil") rep = verify_trefoil();
    else if (suite == "fig8") rep = verify_fig8();
    else if (suite == "all") {
        rep = verify_trefoil();
        rep.merge(verify_fig8());
    } else {
        throw dg_error("unknown suite " + suite);
    }
    if (json) std::cout << report_json(rep).dump(2) << "\n";
    else std::cout << rep.str();
    return rep.all_pass() ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for triangulation groupoids and their rings"};
    app.require_subcommand(1);

    auto* axioms = app.add_subcommand("axioms", "check the axioms of an example family");
    std::string family;
    int size = 3;
    bool axioms_json = false;
    axioms->add_option("--family", family, "coarse|triple|tetra|ar|br|malnormal")
        ->required();
    axioms->add_option("--size", size, "family size parameter");
    axioms->add_flag("--json", axioms_json, "machine-readable output");

    auto* present = app.add_subcommand("present", "print the presentation of a diagram");
    std::string present_file;
    bool do_reduce = false, free_faces = false;
    present->add_option("file", present_file, "diagram file")->required();
    present->add_flag("--reduce", do_reduce, "run the standard elimination schedule");
    present->add_flag("--allow-free-faces", free_faces, "accept labels used only once");

    auto* rings = app.add_subcommand("rings", "print a ring presentation of a diagram");
    std::string rings_file, functor;
    rings->add_option("file", rings_file, "diagram file")->required();
    rings->add_option("--functor", functor, "a|b")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    bool verify_json = false;
    verify->add_option("suite", suite, "trefoil|fig8|all")->required();
    verify->add_flag("--json", verify_json, "machine-readable output");

    auto* eval = app.add_subcommand("eval", "evaluate an expression in a model");
    std::string model, expr_text;
    eval->add_option("--model", model, "trefoil-a|f8-r|f8-b|f8-a")->required();
    eval->add_option("expr", expr_text, "expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*axioms) return run_axioms(family, size, axioms_json);
        if (*present) {
            Diagram d = parse_diagram(read_file(present_file), free_faces);
            DeltaPresentation p = delta_presentation(d);
            if (do_reduce) p = reduce_presentation(p, d);
            std::cout << p.str();
            return kExitOk;
        }
        if (*rings) {
            if (functor != "a" && functor != "b")
                throw dg_error("functor must be a or b");
            Diagram d = parse_diagram(read_file(rings_file), free_faces);
            DeltaPresentation p = reduce_presentation(delta_presentation(d), d);
            std::cout << (functor == "a" ? emit_a(p) : emit_b(p)).str();
            return kExitOk;
        }
        if (*verify) return run_verify(suite, verify_json);
        if (*eval) return run_eval(model, expr_text);
    } catch (const dg_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
