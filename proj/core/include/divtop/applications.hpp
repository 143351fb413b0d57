#ifndef DIVTOP_APPLICATIONS_HPP
#define DIVTOP_APPLICATIONS_HPP

#include <string>

#include "divtop/divisor_complexes.hpp"

namespace divtop {

/**
 * A character degree set cd(G), ingested as plain integers with a
 * provenance label. The analysis always runs on the star set, so the
 * ubiquitous degree 1 drops out as usual.
 */
struct DegreeSet {
    IntegerSet degrees;
    std::string source_label;
};

/**
 * The smallest k >= 1 such that every k distinct members of X* are
 * setwise relatively prime (vacuously true past |X*|). Computed from the
 * prime support counts: k-subsets sharing a prime exist exactly up to the
 * largest such count. Throws on empty X*.
 */
std::int64_t property_pk(const IntegerSet& x);

/**
 * Rank-bound report: k, the dimension n of G(X), the identity k = n + 2,
 * the bound k^2 - 3k + 1 on the rank of the fundamental group, and
 * whether betti1 respects it. The bound presumes the degree set of a
 * solvable group, so `satisfied` is reported, never asserted; a violation
 * certifies the input is no such degree set. Requires G(X) connected;
 * `applicable` additionally requires k >= 3.
 */
struct RankBoundReport {
    std::int64_t k = 0;
    std::int64_t dim_g = 0;
    bool dimension_identity = false; // k == dim_g + 2
    std::int64_t bound = 0;
    std::int64_t betti1 = 0;
    bool applicable = false;
    bool satisfied = false;
};

RankBoundReport rank_bound_report(const IntegerSet& x);

/**
 * The p-group shortcut: when every member of X* is a power of one prime p,
 * G(X) is a single solid simplex and D(X) a single vertex, so both
 * fundamental groups are trivial. The structural claims are verified, not
 * assumed.
 */
struct PGroupShortcut {
    bool applies = false;
    Label prime = 0;
};

PGroupShortcut p_group_shortcut(const IntegerSet& x);

} // namespace divtop

#endif
