#ifndef DIVTOP_INT_MATRIX_HPP
#define DIVTOP_INT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "divtop/errors.hpp"

namespace divtop {

/**
 * Matrix entry type. Smith normal form can grow intermediate entries far
 * beyond the input magnitude, so entries are 128-bit and every arithmetic
 * operation is overflow-checked; leaving the range is a hard OverflowError,
 * never silent wraparound.
 */
using Wide = __int128;

Wide checked_add(Wide a, Wide b);
Wide checked_sub(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);
Wide checked_neg(Wide a);
std::string to_string(Wide v);

/** Dense row-major integer matrix. Zero-sized dimensions are legal. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Wide& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Wide& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Wide> entries_;
};

/** Overflow-checked matrix product. */
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/**
 * Smith normal form U * A * V = D. U and V are unimodular; the inverses
 * are tracked alongside so that cycle coordinates can be solved exactly.
 * The diagonal of D is nonnegative with d1 | d2 | ... | dr and trailing
 * zeros.
 */
struct SNFResult {
    IntMatrix d;
    IntMatrix u, u_inv;
    IntMatrix v, v_inv;
    std::size_t rank = 0;

    /** The nonzero diagonal entries d1..dr. */
    std::vector<Wide> invariant_factors() const;
};

/**
 * Deterministic SNF: pivots are chosen as the smallest absolute nonzero
 * entry of the working submatrix, ties broken row-major.
 */
SNFResult smith_normal_form(const IntMatrix& a);

} // namespace divtop

#endif
