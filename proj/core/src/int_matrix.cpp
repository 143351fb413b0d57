#include "divtop/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace divtop {

Wide checked_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
    return r;
}

Wide checked_sub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
    return r;
}

Wide checked_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
    return r;
}

Wide checked_neg(Wide a) {
    return checked_sub(0, a);
}

std::string to_string(Wide v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    std::string digits;
    while (v != 0) {
        Wide digit = v % 10;
        if (digit < 0) digit = -digit;
        digits.push_back(static_cast<char>('0' + static_cast<int>(digit)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Wide e) { return e == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InvariantViolation("matrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Wide ark = a.at(r, k);
            if (ark == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out.at(r, c) = checked_add(out.at(r, c), checked_mul(ark, b.at(k, c)));
            }
        }
    }
    return out;
}

std::vector<Wide> SNFResult::invariant_factors() const {
    std::vector<Wide> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// All elementary operations are mirrored into the transforms so that
// u * a * v = d and the inverses stay exact:
//   row op E on the working matrix:  u <- E u,  u_inv <- u_inv E^{-1}
//   col op C on the working matrix:  v <- v C,  v_inv <- C^{-1} v_inv
struct SNFWorker {
    IntMatrix w, u, u_inv, v, v_inv;

    explicit SNFWorker(const IntMatrix& a)
        : w(a),
          u(IntMatrix::identity(a.rows())),
          u_inv(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          v_inv(IntMatrix::identity(a.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w.at(i, c), w.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
        for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < w.rows(); ++r) std::swap(w.at(r, i), w.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
        for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
    }

    // row i += k * row j
    void add_row(std::size_t i, std::size_t j, Wide k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < w.cols(); ++c)
            w.at(i, c) = checked_add(w.at(i, c), checked_mul(k, w.at(j, c)));
        for (std::size_t c = 0; c < u.cols(); ++c)
            u.at(i, c) = checked_add(u.at(i, c), checked_mul(k, u.at(j, c)));
        for (std::size_t r = 0; r < u_inv.rows(); ++r)
            u_inv.at(r, j) = checked_sub(u_inv.at(r, j), checked_mul(k, u_inv.at(r, i)));
    }

    // col j += k * col i
    void add_col(std::size_t j, std::size_t i, Wide k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < w.rows(); ++r)
            w.at(r, j) = checked_add(w.at(r, j), checked_mul(k, w.at(r, i)));
        for (std::size_t r = 0; r < v.rows(); ++r)
            v.at(r, j) = checked_add(v.at(r, j), checked_mul(k, v.at(r, i)));
        for (std::size_t c = 0; c < v_inv.cols(); ++c)
            v_inv.at(i, c) = checked_sub(v_inv.at(i, c), checked_mul(k, v_inv.at(j, c)));
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < w.cols(); ++c) w.at(i, c) = checked_neg(w.at(i, c));
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = checked_neg(u.at(i, c));
        for (std::size_t r = 0; r < u_inv.rows(); ++r)
            u_inv.at(r, i) = checked_neg(u_inv.at(r, i));
    }

    // smallest |entry| != 0 in the submatrix from (t,t), ties row-major
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Wide best = 0;
        for (std::size_t r = t; r < w.rows(); ++r) {
            for (std::size_t c = t; c < w.cols(); ++c) {
                Wide e = w.at(r, c);
                if (e == 0) continue;
                if (e < 0) e = checked_neg(e);
                if (!found || e < best) {
                    found = true;
                    best = e;
                    pr = r;
                    pc = c;
                }
            }
        }
        return found;
    }

    bool clear_position(std::size_t t) {
        bool dirty = false;
        const Wide pivot = w.at(t, t);
        for (std::size_t r = t + 1; r < w.rows(); ++r) {
            if (w.at(r, t) == 0) continue;
            add_row(r, t, checked_neg(w.at(r, t) / pivot));
            if (w.at(r, t) != 0) dirty = true;
        }
        for (std::size_t c = t + 1; c < w.cols(); ++c) {
            if (w.at(t, c) == 0) continue;
            add_col(c, t, checked_neg(w.at(t, c) / pivot));
            if (w.at(t, c) != 0) dirty = true;
        }
        return !dirty;
    }

    // ensure w[t][t] divides the whole remaining block; if not, pull the
    // offending row up so the next pivot round shrinks the invariant
    bool enforce_divisibility(std::size_t t) {
        const Wide pivot = w.at(t, t);
        for (std::size_t r = t + 1; r < w.rows(); ++r) {
            for (std::size_t c = t + 1; c < w.cols(); ++c) {
                if (w.at(r, c) % pivot != 0) {
                    add_row(t, r, 1);
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t run() {
        const std::size_t steps = std::min(w.rows(), w.cols());
        std::size_t t = 0;
        for (; t < steps; ++t) {
            std::size_t pr = 0, pc = 0;
            if (!find_pivot(t, pr, pc)) break;
            while (true) {
                swap_rows(t, pr);
                swap_cols(t, pc);
                if (clear_position(t) && enforce_divisibility(t)) break;
                if (!find_pivot(t, pr, pc)) throw InvariantViolation("SNF lost its pivot");
            }
            if (w.at(t, t) < 0) negate_row(t);
        }
        return t;
    }
};

} // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    SNFWorker worker(a);
    const std::size_t rank = worker.run();
    return SNFResult{std::move(worker.w),    std::move(worker.u), std::move(worker.u_inv),
                     std::move(worker.v),    std::move(worker.v_inv), rank};
}

} // namespace divtop
