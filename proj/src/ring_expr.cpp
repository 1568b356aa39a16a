#include "dg/ring_expr.hpp"

#include <algorithm>

namespace dg {

RingExpr RingExpr::constant(Int n) {
    RingExpr e;
    e.kind = Kind::Const;
    e.value = std::move(n);
    return e;
}

RingExpr RingExpr::make_atom(const std::string& name) {
    RingExpr e;
    e.kind = Kind::Atom;
    e.atom = name;
    return e;
}

RingExpr RingExpr::sum(std::vector<RingExpr> terms) {
    std::vector<RingExpr> flat;
    for (auto& t : terms) {
        if (t.kind == Kind::Sum)
            flat.insert(flat.end(), t.sub.begin(), t.sub.end());
        else if (!t.is_const(0))
            flat.push_back(std::move(t));
    }
    if (flat.empty()) return constant(0);
    if (flat.size() == 1) return flat[0];
    RingExpr e;
    e.kind = Kind::Sum;
    e.sub = std::move(flat);
    return e;
}

RingExpr RingExpr::prod(std::vector<RingExpr> factors) {
    std::vector<RingExpr> flat;
    bool negate = false;
    for (auto& f : factors) {
        RingExpr g = std::move(f);
        while (g.kind == Kind::Neg) {
            negate = !negate;
            g = g.sub[0];
        }
        if (g.is_const(0)) return constant(0);
        if (g.is_const(1)) continue;
        if (g.kind == Kind::Prod)
            flat.insert(flat.end(), g.sub.begin(), g.sub.end());
        else
            flat.push_back(std::move(g));
    }
    RingExpr e;
    if (flat.empty()) e = constant(1);
    else if (flat.size() == 1) e = flat[0];
    else {
        e.kind = Kind::Prod;
        e.sub = std::move(flat);
    }
    return negate ? neg(std::move(e)) : e;
}

RingExpr RingExpr::neg(RingExpr e) {
    if (e.kind == Kind::Neg) return e.sub[0];
    if (e.kind == Kind::Const) return constant(-e.value);
    RingExpr r;
    r.kind = Kind::Neg;
    r.sub.push_back(std::move(e));
    return r;
}

RingExpr RingExpr::inv(RingExpr e) {
    if (e.kind == Kind::Inv) return e.sub[0];
    if (e.kind == Kind::Neg) return neg(inv(e.sub[0]));
    if (e.is_const(1)) return e;
    RingExpr r;
    r.kind = Kind::Inv;
    r.sub.push_back(std::move(e));
    return r;
}

bool RingExpr::operator==(const RingExpr& o) const {
    return kind == o.kind && value == o.value && atom == o.atom && sub == o.sub;
}

std::string RingExpr::str() const {
    switch (kind) {
    case Kind::Const: return value.str();
    case Kind::Atom: return atom;
    case Kind::Sum: {
        std::string out;
        for (size_t i = 0; i < sub.size(); ++i) {
            const RingExpr* t = &sub[i];
            bool minus = t->kind == Kind::Neg;
            if (minus) t = &t->sub[0];
            if (t->kind == Kind::Const && t->value < 0) {
                // render negative constants with an explicit sign
                out += (minus ? (i ? "+" : "") : "-");
                out += Int(-t->value).str();
                continue;
            }
            if (i) out += minus ? "-" : "+";
            else if (minus) out += "-";
            out += t->str();
        }
        return out;
    }
    case Kind::Prod: {
        std::string out;
        for (auto& f : sub) {
            if (f.kind == Kind::Sum || f.kind == Kind::Const)
                out += "(" + f.str() + ")";
            else
                out += f.str();
        }
        return out;
    }
    case Kind::Neg: {
        const RingExpr& c = sub[0];
        if (c.kind == Kind::Sum) return "-(" + c.str() + ")";
        return "-" + c.str();
    }
    case Kind::Inv: {
        const RingExpr& c = sub[0];
        if (c.kind == Kind::Atom) return c.atom + "^-1";
        return "(" + c.str() + ")^-1";
    }
    }
    throw dg_error("bad expression");
}

void RingExpr::collect_atoms(std::vector<std::string>& out) const {
    if (kind == Kind::Atom) {
        if (std::find(out.begin(), out.end(), atom) == out.end()) out.push_back(atom);
        return;
    }
    for (auto& s : sub) s.collect_atoms(out);
}

RingExpr RingExpr::substitute(const std::map<std::string, RingExpr>& images) const {
    switch (kind) {
    case Kind::Const: return *this;
    case Kind::Atom: {
        auto it = images.find(atom);
        return it == images.end() ? *this : it->second;
    }
    case Kind::Sum:
    case Kind::Prod: {
        std::vector<RingExpr> parts;
        for (auto& s : sub) parts.push_back(s.substitute(images));
        return kind == Kind::Sum ? sum(std::move(parts)) : prod(std::move(parts));
    }
    case Kind::Neg: return neg(sub[0].substitute(images));
    case Kind::Inv: return inv(sub[0].substitute(images));
    }
    throw dg_error("bad expression");
}

} // namespace dg
