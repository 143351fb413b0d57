#ifndef DIVTOP_DIVISOR_COMPLEXES_HPP
#define DIVTOP_DIVISOR_COMPLEXES_HPP

#include <cstddef>
#include <vector>

#include "divtop/simplicial_complex.hpp"

namespace divtop {

/**
 * The input set X together with its normalization X* (1 removed,
 * duplicates collapsed, ascending). The raw multiset is kept only for
 * ingestion statistics.
 */
class IntegerSet {
public:
    /** Validates every value is >= 1. */
    static IntegerSet from_values(std::vector<Label> values);

    const std::vector<Label>& raw() const { return raw_; }
    const std::vector<Label>& star() const { return star_; }
    bool star_empty() const { return star_.empty(); }
    std::size_t ones_removed() const { return ones_removed_; }
    std::size_t duplicates_removed() const { return duplicates_removed_; }

    /** Smallest member of X* divisible by p, or 0 when none exists. */
    Label smallest_multiple(Label p) const;
    /** Smallest member of X* divisible by both p and q, or 0. */
    Label smallest_common_multiple(Label p, Label q) const;

private:
    std::vector<Label> raw_;
    std::vector<Label> star_;
    std::size_t ones_removed_ = 0;
    std::size_t duplicates_removed_ = 0;
};

/**
 * The common divisor complex G(X): vertices are X*, and a vertex set spans
 * a simplex exactly when its gcd exceeds 1. Facets are the inclusion-maximal
 * sets S_p = {v in X* : p | v}; this is equivalent to the subset criterion
 * because gcd(V) > 1 iff a single prime divides all of V.
 */
SimplicialComplex build_common(const IntegerSet& x);

/**
 * The prime divisor complex D(X): vertices are the primes dividing some
 * member of X*, and a prime set spans a simplex exactly when some member of
 * X* is divisible by all of them. Facets are the inclusion-maximal pi(v).
 */
SimplicialComplex build_prime(const IntegerSet& x);

/** A simplex of G(X) together with its image simplex in D(X). */
struct EtaImage {
    Simplex source;
    Simplex image;
};

/**
 * The simplex map eta: sends a simplex of G(X) to the simplex of D(X)
 * spanned by the primes dividing the gcd of its vertices. Throws InputError
 * when the argument is not a simplex of G(X).
 */
EtaImage eta(const IntegerSet& x, const Simplex& sigma);

/**
 * Exhaustively checks that eta reverses inclusions: sigma1 a face of sigma2
 * implies eta(sigma2) a face of eta(sigma1), over every simplex pair of
 * G(X). Throws InputError when |X*| exceeds the enumeration guard.
 */
bool check_subset_reversal(const IntegerSet& x, std::size_t guard = 12);

/** True iff G(X) and D(X) agree on connectivity. Throws on empty X*. */
bool check_connectivity_theorem(const IntegerSet& x);

/**
 * The near-surjectivity property of eta: every vertex of D(X) is a face of
 * the image of some vertex of G(X), and every facet of D(X) is a face of
 * such an image.
 */
bool check_near_surjectivity(const IntegerSet& x);

} // namespace divtop

#endif
