#pragma once
// Linear algebra over GF(2) for mod-2 (co)homology dimensions and bases.
// Matrices are IntMatrix instances reduced mod 2 on entry; all outputs
// have 0/1 entries.

#include "imm35/matrix.hpp"

#include <vector>

namespace imm35 {

inline IntMatrix mod2(const IntMatrix& a) {
    IntMatrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            b(i, j) = mod_floor(a(i, j), 2);
    return b;
}

struct Gf2Kernel {
    IntMatrix basis;                      // n x g, columns span ker
    std::vector<std::size_t> free_cols;   // coordinates: y in ker is determined
                                          // by its entries at free_cols
};

inline Gf2Kernel gf2_kernel(const IntMatrix& a_in) {
    IntMatrix a = mod2(a_in);
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> col_is_pivot(n, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t i = row; i < m; ++i)
            if (a(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr == SIZE_MAX)
            continue;
        a.swap_rows(row, pr);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = mod_floor(a(i, j) + a(row, j), 2);
        }
        pivot_col.push_back(col);
        col_is_pivot[col] = true;
        ++row;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!col_is_pivot[c])
            free_cols.push_back(c);

    IntMatrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t p = 0; p < pivot_col.size(); ++p) {
            // reduced echelon: pivot rows read off the dependence directly
            basis(pivot_col[p], k) = a(p, fc);
        }
    }
    return {basis, free_cols};
}

inline std::size_t gf2_rank(const IntMatrix& a) {
    return a.cols() - gf2_kernel(a).basis.cols();
}

// ker(d_ker) / im(d_im) as a GF(2) vector space, with representative
// vectors and a linear coordinate map for classes.
struct Gf2Quotient {
    std::size_t dim = 0;
    IntMatrix representatives;  // ambient x dim
    IntMatrix coord_map;        // dim x ambient, applied mod 2 to kernel vectors
};

inline Gf2Quotient gf2_quotient(const IntMatrix& d_ker, const IntMatrix& d_im) {
    Gf2Kernel ker = gf2_kernel(d_ker);
    const std::size_t n = d_ker.cols();
    const std::size_t g = ker.basis.cols();

    // Kernel coordinates: restriction to the free columns.
    IntMatrix p(g, n);
    for (std::size_t k = 0; k < g; ++k)
        p(k, ker.free_cols[k]) = 1;

    IntMatrix q = mod2(p * d_im);  // image vectors in kernel coordinates, g x r

    // Column echelon of q: echelon[k] has leading 1 at pivot_rows[k].
    std::vector<std::vector<Int>> echelon;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t c = 0; c < q.cols(); ++c) {
        std::vector<Int> v = q.col(c);
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if (v[pivot_rows[k]] != 0)
                for (std::size_t i = 0; i < g; ++i)
                    v[i] = mod_floor(v[i] + echelon[k][i], 2);
        std::size_t lead = SIZE_MAX;
        for (std::size_t i = 0; i < g; ++i)
            if (v[i] != 0) {
                lead = i;
                break;
            }
        if (lead == SIZE_MAX)
            continue;
        echelon.push_back(v);
        pivot_rows.push_back(lead);
    }

    std::vector<bool> is_pivot(g, false);
    for (std::size_t r : pivot_rows)
        is_pivot[r] = true;
    std::vector<std::size_t> quotient_coords;
    for (std::size_t i = 0; i < g; ++i)
        if (!is_pivot[i])
            quotient_coords.push_back(i);

    Gf2Quotient out;
    out.dim = quotient_coords.size();
    out.representatives = IntMatrix(n, out.dim);
    for (std::size_t k = 0; k < out.dim; ++k) {
        auto colv = ker.basis.col(quotient_coords[k]);
        for (std::size_t i = 0; i < n; ++i)
            out.representatives(i, k) = colv[i];
    }

    // Reduce each kernel-coordinate basis vector modulo im(q), then read the
    // non-pivot entries; assembled as a matrix composed with p.
    IntMatrix reduce_matrix(out.dim, g);
    for (std::size_t basis_i = 0; basis_i < g; ++basis_i) {
        std::vector<Int> z(g);
        z[basis_i] = 1;
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if (z[pivot_rows[k]] != 0)
                for (std::size_t i = 0; i < g; ++i)
                    z[i] = mod_floor(z[i] + echelon[k][i], 2);
        for (std::size_t k = 0; k < out.dim; ++k)
            reduce_matrix(k, basis_i) = z[quotient_coords[k]];
    }
    out.coord_map = mod2(reduce_matrix * p);
    return out;
}

}  // namespace imm35
