#ifndef DG_KNOT_MODELS_HPP
#define DG_KNOT_MODELS_HPP

#include "dg/eisenstein.hpp"
#include "dg/finite_ring.hpp"

#include <map>

namespace dg {

/// The 13-dimensional quotient model of the figure-eight pair ring: basis
/// (eps, 1, w, d, a, wa, da, b, wb, db, ab, wab, dab) with the eps coordinate
/// in Z/5 and the rest free. Built from the multiplication rules and
/// cross-checked against the two hardcoded left-multiplication matrices;
/// throws on any mismatch. With reduce_mod5 = false the eps coordinate is
/// kept free, which breaks associativity (a designed tripwire).
FiniteRankRing build_f8q(bool reduce_mod5 = true);
IntMat f8q_matrix_a();
IntMat f8q_matrix_b();

/// The 6-dimensional multiplicative figure-eight model: basis
/// (1, s, z, a, g, ag) over Z with s, z central.
FiniteRankRing build_f8a();

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckLine> lines;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        lines.push_back({name, pass, detail});
    }
    void merge(const Report& o) {
        lines.insert(lines.end(), o.lines.begin(), o.lines.end());
    }
    bool all_pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::string str() const;
};

/// Multiplicative trefoil model over Z[t,1/3]/(t^2-t+1): checks the defining
/// relations under w_x = t, w_y = (2-t)/3 plus the inverse-image identities.
Report verify_trefoil_a();
Report verify_trefoil_a(const std::map<std::string, EisensteinLoc>& assignment);

/// Pair-ring trefoil model: u_x = t determines the rest; checks the value
/// chain, t^3 = -1, u+v = 1 for both generators, and all four emitted
/// pair relations.
Report verify_trefoil_b();

Report verify_trefoil(); // both of the above

struct F8Commutator {
    M2Elem q, q_inv, xi;
    MultiPoly w; // q + q^-1 as a central polynomial
};

/// q = a b a^-1 b^-1 in the figure-eight 4-dimensional ring, its inverse,
/// and xi = q^2 - c; asserts the two defining expressions of xi agree.
F8Commutator f8_commutator(const M2Ring& r);

/// Projection of the figure-eight 4-ring onto the 13-model:
/// a -> a, b -> b, z -> -d, c -> w - 1 + eps, c^-1 -> w - 1 - eps.
Vec f8_project(const FiniteRankRing& f8q, const M2Elem& e);

/// The ideal-membership suite: two exact bracket identities, the list of
/// elements that must project to zero in the 13-model, and the three exact
/// w-identities.
Report verify_ideal_elements();

/// Reconstructs u_x, v_x, u_y, v_y inside the 13-model and checks the four
/// emitted pair relations plus the commutator-square identity.
Report verify_f8_b_end_to_end();

/// The four trace values of xi, xi*a, xi*b, xi*ba against their closed forms.
Report verify_trace_generators();

/// Centers of the 13-model and its quotient by eps; quotient structure:
/// rank-12 symmetric quotient, the 6-dimensional correspondence, and the
/// rank-4 quotient feeding the quaternion check.
Report verify_centers_and_quotients();

/// Identifies build_f8a()/J (J generated by s-1 and z) with the Hurwitz
/// quaternions: bounded search for generator images, covolume comparison,
/// multiplication preserved on all basis pairs. Coordinates are searched
/// over half-integers with |2*coordinate| <= 2*bound.
Report hurwitz_check(int bound = 2);

Report verify_fig8(); // all figure-eight suites

} // namespace dg

#endif
