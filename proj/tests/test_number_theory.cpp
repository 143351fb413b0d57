#include <doctest.h>

#include <algorithm>

#include "divtop/fuzz.hpp"
#include "divtop/number_theory.hpp"
#include "oracles.hpp"

using namespace divtop;

TEST_CASE("factorize drops multiplicity") {
    CHECK(factorize(20).primes() == std::vector<Label>{2, 5});
    CHECK(factorize(1).primes().empty());
    CHECK(factorize(210).primes() == std::vector<Label>{2, 3, 5, 7});
    CHECK(factorize(210).primes() == oracles::distinct_primes(210));
    CHECK(factorize(9973).primes() == std::vector<Label>{9973}); // prime
    CHECK_THROWS_AS(factorize(0), InputError);
}

TEST_CASE("factorize agrees with the divide-out oracle and divides its input") {
    for (Label v = 2; v <= 3000; ++v) {
        const PrimeSet support = factorize(v);
        CHECK(support.primes() == oracles::distinct_primes(v));
        Label product = 1;
        for (Label p : support.primes()) product *= p;
        CHECK(v % product == 0);
    }
}

TEST_CASE("gcd_set") {
    CHECK(gcd_set(std::vector<Label>{22, 33}) == 11);
    CHECK(gcd_set(std::vector<Label>{30}) == 30);
    CHECK(gcd_set(std::vector<Label>{6, 10, 15}) == 1);
    CHECK_THROWS_WITH_AS(gcd_set(std::vector<Label>{}), "empty set has no gcd", InputError);
}

TEST_CASE("gcd_set matches Euclid and ignores order and duplication") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Label> values;
        const std::size_t n = 1 + rng.below(6);
        for (std::size_t i = 0; i < n; ++i) values.push_back(1 + rng.below(5000));
        CHECK(gcd_set(values) == oracles::gcd_of(values));

        std::vector<Label> shuffled = values;
        for (std::size_t i = shuffled.size(); i > 1; --i) {
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        }
        shuffled.push_back(values[rng.below(values.size())]); // duplicate one
        CHECK(gcd_set(shuffled) == gcd_set(values));
    }
}

TEST_CASE("pi_of_set") {
    CHECK(pi_of_set(std::vector<Label>{22, 210}).primes() == std::vector<Label>{2});
    CHECK(pi_of_set(std::vector<Label>{210}).primes() == std::vector<Label>{2, 3, 5, 7});
    CHECK(pi_of_set(std::vector<Label>{6, 10, 15}).primes().empty());
}

TEST_CASE("pi_of_set reverses inclusion") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Label> sigma;
        const std::size_t n = 1 + rng.below(5);
        for (std::size_t i = 0; i < n; ++i) sigma.push_back(2 + rng.below(400));
        // random nonempty subset
        std::vector<Label> smaller;
        for (Label v : sigma) {
            if (rng.below(2) == 0) smaller.push_back(v);
        }
        if (smaller.empty()) smaller.push_back(sigma[0]);
        CHECK(pi_of_set(sigma).is_subset_of(pi_of_set(smaller)));
    }
}

TEST_CASE("PrimeSet validates its invariants") {
    CHECK_THROWS_AS(PrimeSet({3, 2}), InputError);   // not ascending
    CHECK_THROWS_AS(PrimeSet({2, 2}), InputError);   // duplicate
    CHECK_THROWS_AS(PrimeSet({2, 9}), InputError);   // 9 not prime
    CHECK(PrimeSet({2, 11}).contains(11));
    CHECK_FALSE(PrimeSet({2, 11}).contains(3));
}

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(999983));
    CHECK_FALSE(is_prime(999983LL * 3));
}
