#include <doctest.h>

#include "divtop/fuzz.hpp"
#include "divtop/int_matrix.hpp"
#include "oracles.hpp"

using namespace divtop;

namespace {

IntMatrix random_matrix(SplitMix64& rng, std::size_t max_dim, Label magnitude) {
    IntMatrix m(1 + rng.below(max_dim), 1 + rng.below(max_dim));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            m.at(r, c) = static_cast<Wide>(rng.below(2 * magnitude + 1)) - magnitude;
        }
    }
    return m;
}

void check_snf_contract(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    CHECK(multiply(snf.u, multiply(a, snf.v)) == snf.d);
    CHECK(multiply(snf.u, snf.u_inv).is_identity());
    CHECK(multiply(snf.v, snf.v_inv).is_identity());
    CHECK(oracles::bareiss_det(snf.u) * oracles::bareiss_det(snf.u) == 1);
    CHECK(oracles::bareiss_det(snf.v) * oracles::bareiss_det(snf.v) == 1);

    // diagonal, nonnegative, divisibility chain, zeros trailing
    for (std::size_t r = 0; r < snf.d.rows(); ++r) {
        for (std::size_t c = 0; c < snf.d.cols(); ++c) {
            if (r != c) CHECK(snf.d.at(r, c) == 0);
        }
    }
    const std::vector<Wide> factors = snf.invariant_factors();
    CHECK(factors.size() == snf.rank);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        CHECK(factors[i] > 0);
        if (i > 0) CHECK(factors[i] % factors[i - 1] == 0);
    }
    for (std::size_t i = snf.rank; i < std::min(snf.d.rows(), snf.d.cols()); ++i) {
        CHECK(snf.d.at(i, i) == 0);
    }
}

} // namespace

TEST_CASE("checked arithmetic traps overflow") {
    const Wide big = Wide(1) << 126;
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
    CHECK(checked_add(big, -big) == 0);
    CHECK(checked_neg(Wide(5)) == -5);
    CHECK(to_string(Wide(-1234)) == "-1234");
    CHECK(to_string(checked_mul(Wide(1) << 80, 1000)) == "1208925819614629174706176000");
}

TEST_CASE("SNF of simple matrices") {
    CHECK(smith_normal_form(IntMatrix::identity(3)).d.is_identity());

    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 4;
    a.at(1, 0) = 6;
    a.at(1, 1) = 8;
    SNFResult snf = smith_normal_form(a);
    CHECK(snf.invariant_factors() == std::vector<Wide>{2, 4});
    check_snf_contract(a);

    IntMatrix zero(3, 2);
    SNFResult zsnf = smith_normal_form(zero);
    CHECK(zsnf.rank == 0);
    CHECK(zsnf.d.is_zero());

    IntMatrix empty(0, 4);
    CHECK(smith_normal_form(empty).rank == 0);
}

TEST_CASE("SNF invariant factors match the determinantal-divisor oracle") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        IntMatrix a = random_matrix(rng, 5, 6);
        SNFResult snf = smith_normal_form(a);
        auto expected = oracles::invariant_factors_by_minors(a);
        REQUIRE(expected.has_value());
        CHECK(snf.invariant_factors() == *expected);
    }
}

TEST_CASE("SNF transform contract on random matrices") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 80; ++trial) {
        check_snf_contract(random_matrix(rng, 6, 9));
    }
}

TEST_CASE("SNF rank equals fraction-free rank") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        IntMatrix a = random_matrix(rng, 6, 9);
        CHECK(smith_normal_form(a).rank == oracles::bareiss_rank(a));
    }
}

TEST_CASE("multiply checks dimensions") {
    CHECK_THROWS_AS(multiply(IntMatrix(2, 3), IntMatrix(2, 3)), InvariantViolation);
}
