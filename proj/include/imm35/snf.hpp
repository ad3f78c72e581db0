#pragma once
// Smith normal form over Z with unimodular transforms: U * A * V = S,
// S diagonal with non-negative entries forming a divisor chain, zeros
// trailing. Pivot choice is minimal absolute value with lowest-row,
// lowest-column tie break, so results are reproducible across runs.

#include "imm35/matrix.hpp"

#include <optional>

namespace imm35 {

struct SnfOptions {
    bool with_u = true;
    bool with_u_inv = true;
    bool with_v = true;
    bool with_v_inv = true;
};

struct SnfResult {
    IntMatrix s;      // diagonal normal form, same shape as the input
    IntMatrix u;      // rows x rows, |det| = 1
    IntMatrix u_inv;  // u * u_inv = I
    IntMatrix v;      // cols x cols, |det| = 1
    IntMatrix v_inv;  // v * v_inv = I
    std::size_t rank = 0;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        std::size_t n = std::min(s.rows(), s.cols());
        d.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            d.push_back(s(i, i));
        return d;
    }
    // Diagonal entries >= 2 (the torsion part of coker).
    std::vector<Int> nontrivial_factors() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < rank; ++i)
            if (s(i, i) >= 2)
                d.push_back(s(i, i));
        return d;
    }
};

inline SnfResult smith_normal_form(const IntMatrix& a, const SnfOptions& opt = {}) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SnfResult r;
    r.s = a;
    if (opt.with_u)
        r.u = IntMatrix::identity(m);
    if (opt.with_u_inv)
        r.u_inv = IntMatrix::identity(m);
    if (opt.with_v)
        r.v = IntMatrix::identity(n);
    if (opt.with_v_inv)
        r.v_inv = IntMatrix::identity(n);

    IntMatrix& s = r.s;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        if (opt.with_u)
            r.u.swap_rows(i, j);
        if (opt.with_u_inv)
            r.u_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        if (opt.with_v)
            r.v.swap_cols(i, j);
        if (opt.with_v_inv)
            r.v_inv.swap_rows(i, j);
    };
    // row i += f * row j; inverse transform recorded on the columns of u_inv
    auto row_add = [&](std::size_t i, std::size_t j, const Int& f) {
        s.add_row_multiple(i, j, f);
        if (opt.with_u)
            r.u.add_row_multiple(i, j, f);
        if (opt.with_u_inv)
            r.u_inv.add_col_multiple(j, i, -f);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& f) {
        s.add_col_multiple(i, j, f);
        if (opt.with_v)
            r.v.add_col_multiple(i, j, f);
        if (opt.with_v_inv)
            r.v_inv.add_row_multiple(j, i, -f);
    };
    auto row_negate = [&](std::size_t i) {
        s.negate_row(i);
        if (opt.with_u)
            r.u.negate_row(i);
        if (opt.with_u_inv)
            r.u_inv.negate_col(i);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        // Locate the minimal-absolute-value nonzero entry of the trailing block.
        auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            Int best_abs = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int& x = s(i, j);
                    if (x == 0)
                        continue;
                    Int ax = abs(x);
                    if (!best || ax < best_abs) {
                        best = {i, j};
                        best_abs = ax;
                    }
                }
            return best;
        };

        auto pivot = find_pivot();
        if (!pivot)
            break;  // trailing block is zero, diagonal ends here

        bool settled = false;
        while (!settled) {
            row_swap(t, pivot->first);
            col_swap(t, pivot->second);

            // Clear column t, then row t, with round-toward-zero quotients.
            for (std::size_t i = t + 1; i < m; ++i)
                if (s(i, t) != 0)
                    row_add(i, t, -(s(i, t) / s(t, t)));
            for (std::size_t j = t + 1; j < n; ++j)
                if (s(t, j) != 0)
                    col_add(j, t, -(s(t, j) / s(t, t)));

            bool cleared = true;
            for (std::size_t i = t + 1; i < m && cleared; ++i)
                if (s(i, t) != 0)
                    cleared = false;
            for (std::size_t j = t + 1; j < n && cleared; ++j)
                if (s(t, j) != 0)
                    cleared = false;

            if (!cleared) {
                pivot = find_pivot();
                continue;  // a strictly smaller remainder exists; re-pivot
            }

            // The divisor-chain condition: the pivot must divide the block.
            settled = true;
            for (std::size_t i = t + 1; i < m && settled; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        row_add(t, i, 1);
                        pivot = find_pivot();
                        settled = false;
                        break;
                    }
        }
        if (s(t, t) < 0)
            row_negate(t);
        r.rank = t + 1;
    }

#ifdef IMM35_VERIFY_SNF
    if (opt.with_u && opt.with_v && !(r.u * a * r.v == r.s))
        throw std::logic_error("smith_normal_form: postcondition U*A*V = S failed");
    if (opt.with_u && opt.with_u_inv && !(r.u * r.u_inv == IntMatrix::identity(m)))
        throw std::logic_error("smith_normal_form: U inverse check failed");
    if (opt.with_v && opt.with_v_inv && !(r.v * r.v_inv == IntMatrix::identity(n)))
        throw std::logic_error("smith_normal_form: V inverse check failed");
#endif
    return r;
}

// Integer solution of A x = b, if one exists.
inline std::optional<std::vector<Int>> solve_integer(const SnfResult& snf_a,
                                                     const std::vector<Int>& b) {
    const IntMatrix& s = snf_a.s;
    if (snf_a.u.rows() != s.rows() || snf_a.v.cols() != s.cols())
        throw std::invalid_argument("solve_integer: need SNF with u and v transforms");
    std::vector<Int> y = snf_a.u * b;
    std::vector<Int> x(s.cols());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < snf_a.rank) {
            if (y[i] % s(i, i) != 0)
                return std::nullopt;
            x[i] = y[i] / s(i, i);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_a.v * x;
}

inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                                     const std::vector<Int>& b) {
    SnfOptions opt;
    opt.with_u_inv = opt.with_v_inv = false;
    return solve_integer(smith_normal_form(a, opt), b);
}

}  // namespace imm35
