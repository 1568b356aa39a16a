#ifndef DG_RING_EXPR_HPP
#define DG_RING_EXPR_HPP

#include "dg/integer.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dg {

/// Expression in a noncommutative ring: integer constants, named atoms,
/// ordered products, sums, negation, and formal inverses. The smart
/// constructors keep a few normal forms: products and sums are flattened,
/// negations are hoisted out of products and inverses, and double
/// negation/inversion cancel.
struct RingExpr {
    enum class Kind { Const, Atom, Sum, Prod, Neg, Inv };
    Kind kind = Kind::Const;
    Int value;                 // Const
    std::string atom;          // Atom
    std::vector<RingExpr> sub; // Sum/Prod children, Neg/Inv single child

    static RingExpr constant(Int n);
    static RingExpr make_atom(const std::string& name);
    static RingExpr sum(std::vector<RingExpr> terms);
    static RingExpr prod(std::vector<RingExpr> factors);
    static RingExpr neg(RingExpr e);
    static RingExpr inv(RingExpr e);

    bool operator==(const RingExpr& o) const;
    bool is_const(const Int& n) const { return kind == Kind::Const && value == n; }

    std::string str() const;

    /// Atom names appearing anywhere in the expression.
    void collect_atoms(std::vector<std::string>& out) const;

    /// Substitute atoms by expressions (used by the B' -> A' map).
    RingExpr substitute(const std::map<std::string, RingExpr>& images) const;
};

/// Evaluate in a model ring M providing:
///   using Elem; Elem from_int(Int); Elem add(a,b); Elem mul(a,b); Elem neg(a);
///   std::optional<Elem> inv(a);
/// Returns nullopt if some inverse does not exist. Throws if an atom has no
/// assigned value.
template <class M>
std::optional<typename M::Elem> eval_ring_expr(
    const RingExpr& e, const M& m,
    const std::map<std::string, typename M::Elem>& atoms) {
    using Elem = typename M::Elem;
    switch (e.kind) {
    case RingExpr::Kind::Const: return m.from_int(e.value);
    case RingExpr::Kind::Atom: {
        auto it = atoms.find(e.atom);
        if (it == atoms.end()) throw dg_error("no value assigned to atom " + e.atom);
        return it->second;
    }
    case RingExpr::Kind::Sum: {
        Elem acc = m.from_int(0);
        for (auto& t : e.sub) {
            auto v = eval_ring_expr(t, m, atoms);
            if (!v) return std::nullopt;
            acc = m.add(acc, *v);
        }
        return acc;
    }
    case RingExpr::Kind::Prod: {
        std::optional<Elem> acc;
        for (auto& f : e.sub) {
            auto v = eval_ring_expr(f, m, atoms);
            if (!v) return std::nullopt;
            acc = acc ? m.mul(*acc, *v) : *v;
        }
        return acc ? acc : std::optional<Elem>(m.from_int(1));
    }
    case RingExpr::Kind::Neg: {
        auto v = eval_ring_expr(e.sub[0], m, atoms);
        if (!v) return std::nullopt;
        return m.neg(*v);
    }
    case RingExpr::Kind::Inv: {
        auto v = eval_ring_expr(e.sub[0], m, atoms);
        if (!v) return std::nullopt;
        return m.inv(*v);
    }
    }
    throw dg_error("bad expression");
}

} // namespace dg

#endif
