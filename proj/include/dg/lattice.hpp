#ifndef DG_LATTICE_HPP
#define DG_LATTICE_HPP

#include "dg/linalg.hpp"

#include <functional>

namespace dg {

/// A finitely generated submodule of the mixed module Z^rank / <torsion
/// relations>. Canonical form is the Hermite echelon basis of the integer
/// lattice spanned by the generators together with the torsion relations,
/// so membership and equality are exact and decidable.
struct MixedLattice {
    int rank = 0;
    std::vector<Vec> torsion; // ambient relations, e.g. 5*e0
    std::vector<Vec> basis;   // canonical HNF rows (include torsion rows)

    static MixedLattice make(int rank, std::vector<Vec> torsion, std::vector<Vec> gens);

    bool member(Vec v) const { return hnf_reduce(basis, v); }
    bool contains(const MixedLattice& sub) const;
    bool operator==(const MixedLattice& o) const {
        return rank == o.rank && basis == o.basis;
    }

    /// Basis rows modulo the torsion span only (the "interesting" generators).
    MixedLattice with_extra(std::vector<Vec> more) const;
};

/// Smallest submodule containing `start` and closed under the given Z-linear
/// actions. Idempotent and monotone.
MixedLattice lattice_saturate(const MixedLattice& start,
                              const std::vector<std::function<Vec(const Vec&)>>& actions);

/// Description of (Z^rank / torsion) / sub as a new mixed module together
/// with the projection and a section.
struct QuotientDesc {
    int old_rank = 0;
    int new_rank = 0;           // number of surviving coordinates
    std::vector<Int> moduli;    // per new coordinate; 0 = free
    IntMat v, v_inv;            // change of basis: y = x * V (row vectors)
    std::vector<int> kept_cols; // columns of y that survive

    Vec project(const Vec& x) const;
    Vec section(const Vec& q) const;
};

QuotientDesc module_quotient(int rank, const std::vector<Vec>& torsion,
                             const MixedLattice& sub);

} // namespace dg

#endif
