#pragma once
// Cup products H^1 x H^2 -> H^3, evaluation against the fundamental class,
// and the subgroup index that realizes the fiber modulus 2d(chi).
//
// In triangulation mode the cochain-level product is the Alexander-Whitney
// front-face/back-face formula in the global ascending vertex order; only
// its cohomology-level output is contractual. In tensor mode a user-supplied
// cup tensor is contracted, and descent to cohomology is checked when the
// pairing is constructed: the product of a coboundary with any cocycle must
// again be a coboundary (exact membership in im of the coboundary map).

#include "imm35/homology.hpp"

namespace imm35 {

enum class CupMode { simplicial, tensor };

struct CupPairing {
    CupMode mode;
};

inline std::vector<Int> cup_cochain_1_2(const ChainPresentation& p, const CupPairing& pairing,
                                        const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != p.dim(1) || b.size() != p.dim(2))
        throw std::invalid_argument("cup_cochain_1_2: cochain dimensions do not match presentation");
    std::vector<Int> out(p.dim(3));
    if (pairing.mode == CupMode::simplicial) {
        const auto& aw = *p.aw_faces;
        for (std::size_t t = 0; t < aw.size(); ++t)
            out[t] = a[aw[t].front_edge] * b[aw[t].back_triangle];
    } else {
        for (const auto& e : p.cup_tensor)
            out[e.tet] += e.coefficient * a[e.edge] * b[e.triangle];
    }
    return out;
}

// The opposite-order product at cochain level (2-cochain first); available
// in simplicial mode only, where it supports the graded-symmetry check
// <x cup chi, [M]> = <chi cup x, [M]>.
inline std::vector<Int> cup_cochain_2_1(const ChainPresentation& p, const std::vector<Int>& b,
                                        const std::vector<Int>& a) {
    if (!p.aw_faces)
        throw std::invalid_argument("cup_cochain_2_1: requires a triangulation-mode presentation");
    if (a.size() != p.dim(1) || b.size() != p.dim(2))
        throw std::invalid_argument("cup_cochain_2_1: cochain dimensions do not match presentation");
    const auto& aw = *p.aw_faces;
    std::vector<Int> out(p.dim(3));
    for (std::size_t t = 0; t < aw.size(); ++t)
        out[t] = b[aw[t].front_triangle] * a[aw[t].back_edge];
    return out;
}

// <z, [M]> for a 3-cochain z: evaluation against the fundamental cycle.
inline Int pair_with_fundamental_cochain(const ChainPresentation& p, const std::vector<Int>& z) {
    if (z.size() != p.dim(3))
        throw std::invalid_argument("pair_with_fundamental: cochain dimension mismatch");
    Int sum = 0;
    for (std::size_t t = 0; t < z.size(); ++t)
        if (z[t] != 0 && p.fundamental_cycle[t] != 0)
            sum += z[t] * p.fundamental_cycle[t];
    return sum;
}

inline CupPairing cup_pairing(const ChainPresentation& p) {
    if (p.aw_faces)
        return CupPairing{CupMode::simplicial};
    if (!p.has_cup_tensor)
        throw std::invalid_argument("cup_pairing: presentation carries no cup data");

    CupPairing pairing{CupMode::tensor};

    // Descent check. delta^2 is precomputed once; every product of a
    // coboundary with a cocycle generator must solve as a coboundary.
    IntMatrix delta0 = p.coboundary(0);
    IntMatrix delta1 = p.coboundary(1);
    IntMatrix delta2 = p.coboundary(2);
    SnfOptions solve_opt;
    solve_opt.with_u_inv = solve_opt.with_v_inv = false;
    SnfResult delta2_snf = smith_normal_form(delta2, solve_opt);

    auto must_be_coboundary = [&](const std::vector<Int>& z) {
        if (!solve_integer(delta2_snf, z))
            throw std::invalid_argument(
                "cup_pairing: cup tensor does not descend to cohomology");
    };

    SnfOptions ker_opt;
    ker_opt.with_u = ker_opt.with_u_inv = ker_opt.with_v_inv = false;
    SnfResult d1_snf = smith_normal_form(delta1, ker_opt);  // kernel = 1-cocycles

    for (std::size_t u = 0; u < p.dim(0); ++u) {
        std::vector<Int> unit(p.dim(0));
        unit[u] = 1;
        std::vector<Int> a = delta0 * unit;
        // Columns of V past the rank span the 2-cocycles.
        for (std::size_t j = delta2_snf.rank; j < delta2_snf.v.cols(); ++j)
            must_be_coboundary(cup_cochain_1_2(p, pairing, a, delta2_snf.v.col(j)));
    }
    for (std::size_t j = d1_snf.rank; j < d1_snf.v.cols(); ++j) {
        std::vector<Int> a = d1_snf.v.col(j);
        for (std::size_t w = 0; w < p.dim(1); ++w) {
            std::vector<Int> unit(p.dim(1));
            unit[w] = 1;
            must_be_coboundary(cup_cochain_1_2(p, pairing, a, delta1 * unit));
        }
    }
    return pairing;
}

// Class-level product: representatives are taken from the groups' basis data,
// multiplied at cochain level, and projected back to H^3.
inline GroupClass cup_1_2(const ChainPresentation& p, const CupPairing& pairing,
                          const FgAbelianGroup& h1, const GroupClass& a,
                          const FgAbelianGroup& h2, const GroupClass& b,
                          const FgAbelianGroup& h3) {
    if (h1.ambient_dim != p.dim(1) || h2.ambient_dim != p.dim(2) || h3.ambient_dim != p.dim(3))
        throw std::invalid_argument("cup_1_2: groups do not belong to this presentation");
    std::vector<Int> ra = representative(h1, a);
    std::vector<Int> rb = representative(h2, b);
    // Representatives of computed cohomology classes are cocycles by
    // construction; coords_of enforces it again for the product.
    return coords_of(h3, cup_cochain_1_2(p, pairing, ra, rb));
}

inline Int pair_with_fundamental(const ChainPresentation& p, const FgAbelianGroup& h3,
                                 const GroupClass& cls) {
    return pair_with_fundamental_cochain(p, representative(h3, cls));
}

// The index of {<2 chi cup x, [M]> : x in H^1} inside Z: the gcd of the
// pairings over a generating set of H^1, with 0 for the trivial subgroup.
// This is the modulus of H^3 / (2 chi cup H^1).
inline Int index_two_chi_cup_h1(const ChainPresentation& p, const CupPairing& pairing,
                                const FgAbelianGroup& h1, const FgAbelianGroup& h2,
                                const GroupClass& chi) {
    std::vector<Int> two_chi = representative(h2, scale(h2, 2, chi));
    Int index = 0;
    for (std::size_t g = 0; g < h1.generator_count(); ++g) {
        std::vector<Int> coords(h1.generator_count());
        coords[g] = 1;
        std::vector<Int> x = representative(h1, class_from_coords(h1, coords));
        Int value = pair_with_fundamental_cochain(p, cup_cochain_1_2(p, pairing, x, two_chi));
        index = gcd(index, value);
    }
    return index;
}

}  // namespace imm35
