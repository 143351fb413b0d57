#ifndef DIVTOP_NUMBER_THEORY_HPP
#define DIVTOP_NUMBER_THEORY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "divtop/errors.hpp"

namespace divtop {

/**
 * Integer label used for every domain object: elements of the input set,
 * vertices of both complexes, and primes. Values are positive and below
 * 2^63; all arithmetic on them is overflow-checked.
 */
using Label = std::int64_t;

/** Throws InputError unless 1 <= v. */
void require_positive(Label v);

/** Deterministic trial-division primality check. */
bool is_prime(Label v);

/**
 * A sorted set of distinct primes. The constructor validates strict
 * ascending order and primality of every member.
 */
class PrimeSet {
public:
    PrimeSet() = default;
    explicit PrimeSet(std::vector<Label> primes);

    const std::vector<Label>& primes() const { return primes_; }
    bool empty() const { return primes_.empty(); }
    std::size_t size() const { return primes_.size(); }
    bool contains(Label p) const;
    bool is_subset_of(const PrimeSet& other) const;

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

private:
    std::vector<Label> primes_;
};

/**
 * Distinct primes dividing v, multiplicity discarded. factorize(1) is the
 * empty set. Trial division up to sqrt(v); total for all v >= 1.
 */
PrimeSet factorize(Label v);

/** gcd of a nonempty collection; gcd({v}) = v. Throws InputError on empty input. */
Label gcd_set(std::span<const Label> values);

/** Prime support of the gcd: factorize(gcd_set(values)). */
PrimeSet pi_of_set(std::span<const Label> values);

} // namespace divtop

#endif
