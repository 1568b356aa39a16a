#include "dg/ring_functors.hpp"

#include <algorithm>

namespace dg {

namespace {

RingExpr one() { return RingExpr::constant(1); }

RingExpr a_apply(S3 s, RingExpr e) {
    using R = RingExpr;
    switch (s) {
    case S3::E: return e;
    case S3::I: return R::inv(std::move(e));
    case S3::K: return R::sum({one(), R::neg(std::move(e))});
    case S3::J: return R::inv(R::sum({one(), R::neg(R::inv(std::move(e)))}));
    case S3::IJ: return R::sum({one(), R::neg(R::inv(std::move(e)))});
    case S3::JI: return R::inv(R::sum({one(), R::neg(std::move(e))}));
    }
    throw dg_error("bad S3 element");
}

using Pair = std::pair<RingExpr, RingExpr>;

Pair b_apply_i(Pair p) {
    RingExpr iu = RingExpr::inv(p.first);
    RingExpr v = RingExpr::neg(RingExpr::prod({iu, std::move(p.second)}));
    return {std::move(iu), std::move(v)};
}

Pair b_apply_j(Pair p) {
    RingExpr iv = RingExpr::inv(p.second);
    RingExpr u = RingExpr::neg(RingExpr::prod({iv, std::move(p.first)}));
    return {std::move(u), std::move(iv)};
}

Pair b_apply(S3 s, Pair p) {
    switch (s) {
    case S3::E: return p;
    case S3::I: return b_apply_i(std::move(p));
    case S3::J: return b_apply_j(std::move(p));
    case S3::K: return {std::move(p.second), std::move(p.first)};
    case S3::IJ: return b_apply_i(b_apply_j(std::move(p)));
    case S3::JI: return b_apply_j(b_apply_i(std::move(p)));
    }
    throw dg_error("bad S3 element");
}

Pair b_pair_prod(Pair a, Pair b) {
    RingExpr u = RingExpr::prod({a.first, b.first});
    RingExpr v = RingExpr::sum(
        {RingExpr::prod({std::move(a.first), std::move(b.second)}), std::move(a.second)});
    return {std::move(u), std::move(v)};
}

/// When exactly one side of a relation is a top-level j-application, move the
/// j to the other side (j is an involution), so the emitted relation carries
/// the expanded j-image of a plain word instead of nested star images.
std::pair<Term, Term> transpose_j(const Term& lhs, const Term& rhs) {
    auto is_j_app = [](const Term& t) {
        return t.kind == Term::Kind::App && t.sigma == S3::J;
    };
    if (is_j_app(rhs) && !is_j_app(lhs))
        return {Term::make_app(S3::J, lhs), rhs.sub[0]};
    if (is_j_app(lhs) && !is_j_app(rhs))
        return {lhs.sub[0], Term::make_app(S3::J, rhs)};
    return {lhs, rhs};
}

void cancel_negation(RingExpr& a, RingExpr& b) {
    if (a.kind == RingExpr::Kind::Neg && b.kind == RingExpr::Kind::Neg) {
        a = a.sub[0];
        b = b.sub[0];
    }
}

void record_localizations(const RingExpr& e, std::vector<RingExpr>& out) {
    if (e.kind == RingExpr::Kind::Inv && e.sub[0].kind != RingExpr::Kind::Atom) {
        if (std::find(out.begin(), out.end(), e.sub[0]) == out.end())
            out.push_back(e.sub[0]);
    }
    for (auto& s : e.sub) record_localizations(s, out);
}

} // namespace

RingExpr a_image(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Gen:
        return a_apply(t.sigma, RingExpr::make_atom("w_" + t.gen));
    case Term::Kind::Prod: {
        std::vector<RingExpr> factors;
        for (auto& f : t.sub) factors.push_back(a_image(f));
        return RingExpr::prod(std::move(factors));
    }
    case Term::Kind::App: return a_apply(t.sigma, a_image(t.sub[0]));
    }
    throw dg_error("bad term");
}

std::pair<RingExpr, RingExpr> b_image(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Gen:
        return b_apply(t.sigma, {RingExpr::make_atom("u_" + t.gen),
                                 RingExpr::make_atom("v_" + t.gen)});
    case Term::Kind::Prod: {
        Pair acc = b_image(t.sub[0]);
        for (size_t i = 1; i < t.sub.size(); ++i)
            acc = b_pair_prod(std::move(acc), b_image(t.sub[i]));
        return acc;
    }
    case Term::Kind::App: return b_apply(t.sigma, b_image(t.sub[0]));
    }
    throw dg_error("bad term");
}

RingPresentation emit_a(const DeltaPresentation& p) {
    RingPresentation out;
    for (auto& g : p.generators) out.atoms.push_back({"w_" + g, true});
    for (auto& [l, r] : p.relations) {
        auto [lhs, rhs] = transpose_j(l, r);
        RingExpr a = a_image(lhs), b = a_image(rhs);
        cancel_negation(a, b);
        record_localizations(a, out.localizations);
        record_localizations(b, out.localizations);
        out.relations.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

RingPresentation emit_b(const DeltaPresentation& p) {
    RingPresentation out;
    for (auto& g : p.generators) {
        out.atoms.push_back({"u_" + g, true});
        out.atoms.push_back({"v_" + g, true});
    }
    for (auto& [l, r] : p.relations) {
        auto [lhs, rhs] = transpose_j(l, r);
        Pair a = b_image(lhs), b = b_image(rhs);
        cancel_negation(a.first, b.first);
        cancel_negation(a.second, b.second);
        for (auto* e : {&a.first, &a.second, &b.first, &b.second})
            record_localizations(*e, out.localizations);
        out.relations.emplace_back(std::move(a.first), std::move(b.first));
        out.relations.emplace_back(std::move(a.second), std::move(b.second));
    }
    return out;
}

RingExpr alpha_image(const RingExpr& e) {
    std::vector<std::string> atoms;
    e.collect_atoms(atoms);
    std::map<std::string, RingExpr> images;
    for (auto& a : atoms) {
        if (a.rfind("u_", 0) == 0)
            images.emplace(a, RingExpr::make_atom("w_" + a.substr(2)));
        else if (a.rfind("v_", 0) == 0)
            images.emplace(a, RingExpr::sum({RingExpr::constant(1),
                                             RingExpr::neg(RingExpr::make_atom(
                                                 "w_" + a.substr(2)))}));
    }
    return e.substitute(images);
}

std::string RingPresentation::str() const {
    std::string out;
    for (auto& a : atoms) out += "gen " + a.name + (a.invertible ? "^+-1" : "") + "\n";
    for (auto& l : localizations) out += "invert " + l.str() + "\n";
    for (auto& [lhs, rhs] : relations) out += lhs.str() + "=" + rhs.str() + "\n";
    return out;
}

} // namespace dg
