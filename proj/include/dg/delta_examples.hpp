#ifndef DG_DELTA_EXAMPLES_HPP
#define DG_DELTA_EXAMPLES_HPP

#include "dg/groupoid.hpp"

namespace dg {

/// A finite group given by a Cayley table; element 0 is the unit.
struct Group {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;

    int size() const { return int(names.size()); }
    int inverse(int x) const;
    void validate() const; // group laws, exhaustively
};

Group cyclic_group(int n);
Group klein4();
Group sym3();
/// Lookup by name: z1..z12, klein4, s3.
Group group_by_name(const std::string& name);

/// One object per group element, morphisms are ordered pairs, H is everything,
/// j(f,g) = (f^-1, f^-1 g).
DeltaModel build_coarse(const Group& g);

/// Morphisms are triples over an n-element set, composed within a fixed first
/// coordinate; H is everything, j(a,b,c) = (b,a,c).
DeltaModel build_triple(int n);

/// Same triples but H restricted to triples with pairwise distinct entries
/// and morphisms to those with b,c != a; over 4 elements this is the
/// truncated-tetrahedron groupoid.
DeltaModel build_tetra(int n);

/// The multiplicative model over Z/n: subgroup of (Z/n)* generated by
/// H = (1 - (Z/n)*) ∩ (Z/n)*, with k(x) = 1 - x.
DeltaModel build_ar(int n);

/// The affine model over Z/n: subgroup of Z/n ⋊ (Z/n)* generated by
/// H = (Z/n)* × (Z/n)*, with k(x,y) = (y,x).
DeltaModel build_br(int n);

/// Action groupoid of B on the nontrivial left cosets of B in A, where B is
/// malnormal in A; H is the set of non-identity morphisms and
/// j: B(aB, a'B) -> B(a^-1 B, a^-1 a' B). Throws if B is not malnormal.
DeltaModel build_malnormal(const Group& a, const std::vector<int>& b);

/// Parse a model description like "coarse:z2", "triple:3", "tetra:4",
/// "ar:5", "br:3", "malnormal:s3".
DeltaModel build_example(const std::string& desc);

} // namespace dg

#endif
