#ifndef DG_FINITE_RING_HPP
#define DG_FINITE_RING_HPP

#include "dg/lattice.hpp"
#include "dg/m2ring.hpp"

#include <string>

namespace dg {

/// An associative ring whose additive group is Z^rank modulo per-coordinate
/// torsion, with multiplication given by structure constants. Elements are
/// coordinate vectors in the named basis.
struct FiniteRankRing {
    std::vector<std::string> names;
    std::vector<Int> moduli; // per coordinate; 0 = free
    std::vector<std::vector<Vec>> table; // table[i][j] = basis_i * basis_j
    Vec one;
    std::vector<Vec> trace; // trace of each basis element; empty if none

    int rank() const { return int(names.size()); }
    bool has_trace() const { return !trace.empty(); }

    Vec zero() const { return Vec(rank(), 0); }
    Vec basis(int i) const;
    Vec from_int(const Int& n) const;
    Vec reduce(Vec v) const;

    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec neg(const Vec& a) const;
    Vec scale(const Int& n, const Vec& a) const;
    Vec mul(const Vec& a, const Vec& b) const;

    /// Two-sided inverse, if one exists.
    std::optional<Vec> inv(const Vec& a) const;

    Vec trace_of(const Vec& a) const; // requires trace data

    /// Matrix of left multiplication by v: column j holds v * basis_j.
    IntMat left_mul(const Vec& v) const;

    std::vector<Vec> torsion_rows() const;

    /// Exhaustive associativity over all basis triples; throws with the
    /// offending triple on failure.
    void check_associative() const;

    bool commutes_with_all(const Vec& v) const;

    /// "2*w - a + eps" style; reverse prints highest basis index first.
    std::string format(const Vec& v, bool reverse = false) const;
};

/// Canonical basis (Hermite rows, torsion included) of the set of elements
/// commuting with every generator.
MixedLattice centralizer_of(const FiniteRankRing& r, const std::vector<Vec>& gens);

/// Smallest two-sided ideal containing the generators, as a mixed lattice.
MixedLattice two_sided_ideal(const FiniteRankRing& r, const std::vector<Vec>& gens);

/// Smallest subset containing the generators that is a two-sided ideal and is
/// closed under x*L(y) + L(x*y - L(x)*y) for basis x; contains L(I).
/// Requires trace data.
MixedLattice ideal_trace_closure(const FiniteRankRing& r, const std::vector<Vec>& gens);

/// Quotient by the two-sided ideal generated by `gens`, with induced
/// structure constants (checked for well-definedness) and induced trace when
/// the trace descends. If `desc` is non-null the projection data is returned.
FiniteRankRing quotient_ring(const FiniteRankRing& r, const std::vector<Vec>& gens,
                             QuotientDesc* desc = nullptr);

/// The symmetric-trace identity suite over all basis pairs.
SymmetryReport check_symmetric(const FiniteRankRing& r);

} // namespace dg

#endif
