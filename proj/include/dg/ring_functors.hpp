#ifndef DG_RING_FUNCTORS_HPP
#define DG_RING_FUNCTORS_HPP

#include "dg/ring_expr.hpp"
#include "dg/triangulation.hpp"

namespace dg {

struct RingPresentation {
    struct AtomDecl {
        std::string name;
        bool invertible = false;
    };
    std::vector<AtomDecl> atoms;
    std::vector<RingExpr> localizations; // compound expressions inverted in relations
    std::vector<std::pair<RingExpr, RingExpr>> relations;

    std::string str() const; // deterministic pretty-print, one relation per line
};

/// Multiplicative ring presentation: one invertible atom w_g per generator;
/// S3 prefixes become w, w^-1, 1-w, (1-w^-1)^-1, 1-w^-1, (1-w)^-1. When one
/// side of a relation is j(T), the relation is transposed to j(lhs) = T
/// before emission so that presentations match their usual printed shape.
RingPresentation emit_a(const DeltaPresentation& p);

/// Pair-valued ring presentation: generators map to (u_g, v_g) and words to
/// pairs via (U1,V1)(U2,V2) = (U1U2, U1V2+V1), i:(U,V) -> (U^-1, -U^-1 V),
/// k: swap, j:(U,V) -> (-V^-1 U, V^-1); each relation yields two
/// component relations.
RingPresentation emit_b(const DeltaPresentation& p);

/// Image of a term under the multiplicative functor.
RingExpr a_image(const Term& t);

/// Image of a term under the pair functor.
std::pair<RingExpr, RingExpr> b_image(const Term& t);

/// Structural substitution u_g -> w_g, v_g -> 1 - w_g.
RingExpr alpha_image(const RingExpr& e);

struct RelationResult {
    bool pass = false;
    bool inversion_failure = false;
};

struct VerifyReport {
    std::vector<RelationResult> relations;
    bool all_pass() const {
        for (auto& r : relations)
            if (!r.pass) return false;
        return true;
    }
};

template <class M>
VerifyReport verify_in_model(const RingPresentation& p, const M& m,
                             const std::map<std::string, typename M::Elem>& atoms) {
    VerifyReport rep;
    for (auto& [lhs, rhs] : p.relations) {
        RelationResult r;
        auto a = eval_ring_expr(lhs, m, atoms);
        auto b = eval_ring_expr(rhs, m, atoms);
        if (!a || !b) r.inversion_failure = true;
        else r.pass = (*a == *b);
        rep.relations.push_back(r);
    }
    return rep;
}

} // namespace dg

#endif
