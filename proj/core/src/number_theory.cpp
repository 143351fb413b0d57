#include "divtop/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace divtop {

void require_positive(Label v) {
    if (v < 1) {
        std::ostringstream msg;
        msg << "value " << v << " is not a positive integer";
        throw InputError(msg.str());
    }
}

bool is_prime(Label v) {
    if (v < 2) return false;
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (Label d = 3; d <= v / d; d += 2) {
        if (v % d == 0) return false;
    }
    return true;
}

PrimeSet::PrimeSet(std::vector<Label> primes) : primes_(std::move(primes)) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i > 0 && primes_[i - 1] >= primes_[i]) {
            throw InputError("prime set must be strictly ascending");
        }
        if (!is_prime(primes_[i])) {
            std::ostringstream msg;
            msg << "prime set member " << primes_[i] << " is not prime";
            throw InputError(msg.str());
        }
    }
}

bool PrimeSet::contains(Label p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
    return std::includes(other.primes_.begin(), other.primes_.end(),
                         primes_.begin(), primes_.end());
}

PrimeSet factorize(Label v) {
    require_positive(v);
    std::vector<Label> primes;
    Label rest = v;
    for (Label d = 2; d <= rest / d; ++d) {
        if (rest % d != 0) continue;
        primes.push_back(d);
        while (rest % d == 0) rest /= d;
    }
    if (rest > 1) primes.push_back(rest);
    return PrimeSet(std::move(primes));
}

Label gcd_set(std::span<const Label> values) {
    if (values.empty()) throw InputError("empty set has no gcd");
    Label g = 0;
    for (Label v : values) {
        require_positive(v);
        g = std::gcd(g, v);
    }
    return g;
}

PrimeSet pi_of_set(std::span<const Label> values) {
    return factorize(gcd_set(values));
}

} // namespace divtop
