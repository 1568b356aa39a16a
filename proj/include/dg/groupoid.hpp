#ifndef DG_GROUPOID_HPP
#define DG_GROUPOID_HPP

#include "dg/integer.hpp"

#include <string>
#include <vector>

namespace dg {

/// A finite groupoid given by an explicit composition table. Identities and
/// inverses are derived from the table by finalize(), which also checks the
/// groupoid laws (associativity, identity, inverse) exhaustively.
struct FiniteGroupoid {
    struct Mor {
        std::string name;
        int dom = -1, cod = -1;
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<std::vector<int>> comp; // comp[x][y] = x*y, or -1 if not composable
    std::vector<int> inv;               // derived
    std::vector<int> id_of;             // object -> identity morphism, derived

    int add_object(const std::string& name);
    int add_morphism(const std::string& name, int dom, int cod);
    void set_compose(int x, int y, int xy);

    bool composable(int x, int y) const {
        return morphisms[x].cod == morphisms[y].dom;
    }
    int compose(int x, int y) const { return comp[x][y]; }

    int object_index(const std::string& name) const;
    int morphism_index(const std::string& name) const;

    /// Derive identities and inverses and verify all groupoid laws.
    /// Throws dg_error if the data is not a groupoid.
    void finalize();
};

/// The extra data of a delta structure: a distinguished generating subset H
/// and an involution j defined on H only.
struct DeltaData {
    std::vector<char> in_H; // indexed by morphism
    std::vector<int> j;     // indexed by morphism; -1 outside H
};

struct AxiomCheck {
    bool pass = true;
    int wx = -1, wy = -1; // first counterexample pair, morphism indices
};

struct AxiomReport {
    AxiomCheck inv_closure;    // (i)  i(H) = H
    AxiomCheck s3_action;      // (ii) j involutive and iji = jij on H
    AxiomCheck composability;  // (iii) composable => (k(x), j(y)) composable
    AxiomCheck product_rule;   // (iv) H-composable => same, and j(xy)=j(x)j(k(x)j(y))
    AxiomCheck generation;     // closure of H under product/inverse is everything
    bool all_pass() const {
        return inv_closure.pass && s3_action.pass && composability.pass &&
               product_rule.pass && generation.pass;
    }
};

/// Exhaustive axiom check. Malformed input (j undefined on some element of H,
/// j leaving H, or H not closed under the generated S3 action) throws
/// dg_error rather than producing an axiom failure.
AxiomReport check_delta(const FiniteGroupoid& g, const DeltaData& d);

/// k = i o j o i on H.
int k_of(const FiniteGroupoid& g, const DeltaData& d, int x);

bool h_composable(const FiniteGroupoid& g, const DeltaData& d, int x, int y);

/// x*y = j(k(x) j(y)); requires (x,y) H-composable.
int star(const FiniteGroupoid& g, const DeltaData& d, int x, int y);

/// A* = dom(j(x)) for any x in H with dom(x) = A; checks independence of the
/// choice over all witnesses. Throws if no witness exists or witnesses
/// disagree.
int object_dual(const FiniteGroupoid& g, const DeltaData& d, int a);

struct DeltaModel {
    FiniteGroupoid g;
    DeltaData d;
};

} // namespace dg

#endif
