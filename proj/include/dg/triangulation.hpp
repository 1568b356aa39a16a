#ifndef DG_TRIANGULATION_HPP
#define DG_TRIANGULATION_HPP

#include "dg/term.hpp"

namespace dg {

/// One tetrahedron: the ordered face labels (g1, g2, g3, g4) encode the
/// relations g2 = g1 g3 and g4 = g1 * g3.
struct LotTet {
    std::array<std::string, 4> g;
};

struct Diagram {
    std::vector<LotTet> tets;
};

/// Text format: `tet L1 L2 L3 L4` per line, `#` comments. Each label must
/// occur exactly twice overall, or once when allow_free_faces is set.
Diagram parse_diagram(const std::string& text, bool allow_free_faces = false);

struct DeltaPresentation {
    std::vector<std::string> generators;
    std::vector<std::pair<Term, Term>> relations; // lhs = rhs

    std::string str() const; // one relation per line
};

DeltaPresentation delta_presentation(const Diagram& d);

/// Remove generator g using a defining relation g = W (W not mentioning g);
/// star-free defining relations are preferred. Throws if no defining relation
/// exists.
DeltaPresentation eliminate(const DeltaPresentation& p, const std::string& g);

/// The standard reduction schedule: walk the tetrahedra in diagram order and
/// eliminate the slot-2 and slot-4 labels whenever a defining relation is
/// available.
DeltaPresentation reduce_presentation(const DeltaPresentation& p, const Diagram& d);

/// Number of assignments of generators to elements of H satisfying every
/// relation (both sides defined and equal). Exhaustive; intended for small
/// models.
long count_solutions(const DeltaPresentation& p, const FiniteGroupoid& g,
                     const DeltaData& dd);

} // namespace dg

#endif
