#ifndef DG_TERM_HPP
#define DG_TERM_HPP

#include "dg/groupoid.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dg {

/// The six-element group generated by the involutions i and j with iji = jij.
/// Composition is functional: s3_mul(a, b) applies b first, then a.
/// IJ means i after j; K = iji.
enum class S3 { E, I, J, K, IJ, JI };

S3 s3_mul(S3 a, S3 b);
S3 s3_inverse(S3 a);
const char* s3_name(S3 a); // "", "i", "j", "k", "ij", "ji"

/// Reduce a word over the alphabet {i, j} to its canonical S3 element.
S3 s3_normalize(const std::string& word);

/// A symbolic word in the generators of a presentation. Gen carries an S3
/// prefix; Prod is a flattened composition; App applies an S3 element to a
/// compound subterm. The star x*y = j(k(x) j(y)) is represented structurally
/// as App(J, Prod(App(K,x), App(J,y))) and recognized again when printing.
struct Term {
    enum class Kind { Gen, Prod, App };
    Kind kind = Kind::Gen;
    S3 sigma = S3::E;      // Gen and App
    std::string gen;       // Gen
    std::vector<Term> sub; // Prod factors / App child

    static Term make_gen(const std::string& name, S3 s = S3::E);
    static Term make_prod(std::vector<Term> factors); // flattens nested products
    static Term make_app(S3 s, Term t); // composes into Gen, unwraps at E
    static Term make_star(Term a, Term b);

    bool mentions(const std::string& g) const;
    bool operator==(const Term& o) const;

    /// If this term is of the star shape, return its two arguments.
    std::optional<std::pair<Term, Term>> star_parts() const;

    std::string str() const;
};

/// Interpret a term in a finite model, given an assignment of generator names
/// to morphisms. Returns nullopt if some composition is undefined or an S3
/// application needs an element outside H.
std::optional<int> eval_term(const Term& t, const FiniteGroupoid& g, const DeltaData& d,
                             const std::vector<std::string>& gens,
                             const std::vector<int>& assignment);

} // namespace dg

#endif
