#pragma once
// (Co)homology of chain presentations over Z and Z_2, with the derived
// invariants the classification needs: the 2-torsion count alpha of H_1,
// divisibility of degree-2 classes, and the halving sets {c : 2c = chi}.

#include "imm35/abelian.hpp"
#include "imm35/presentation.hpp"

namespace imm35 {

enum class Coefficients { Z, Z2 };

inline FgAbelianGroup homology(const ChainPresentation& p, std::size_t k,
                               Coefficients coeffs = Coefficients::Z) {
    if (k > 3)
        throw std::out_of_range("homology: degree out of range");
    IntMatrix d_ker = p.boundary(k);
    IntMatrix d_im = p.boundary(k + 1);
    return coeffs == Coefficients::Z ? quotient_group(d_ker, d_im)
                                     : quotient_group_mod2(d_ker, d_im);
}

inline FgAbelianGroup cohomology(const ChainPresentation& p, std::size_t k,
                                 Coefficients coeffs = Coefficients::Z) {
    if (k > 3)
        throw std::out_of_range("cohomology: degree out of range");
    IntMatrix d_ker = p.coboundary(k);
    IntMatrix d_im = k == 0 ? IntMatrix(p.dim(0), 0) : p.coboundary(k - 1);
    return coeffs == Coefficients::Z ? quotient_group(d_ker, d_im)
                                     : quotient_group_mod2(d_ker, d_im);
}

// Number of even torsion coefficients of H_1, i.e. the Z_2 dimension of
// tau(H_1) tensor Z_2.
inline std::size_t alpha(const ChainPresentation& p) {
    FgAbelianGroup h1 = homology(p, 1);
    std::size_t count = 0;
    for (const auto& t : h1.torsion)
        if (is_even(t))
            ++count;
    return count;
}

// Divisibility of a class modulo torsion: the largest d >= 1 such that the
// class is d times a primitive class, 0 when its free part vanishes. In
// normal-form coordinates this is the gcd of the free coordinates.
inline Int divisibility(const FgAbelianGroup& group, const GroupClass& cls) {
    if (cls.torsion_coords.size() != group.torsion.size() ||
        cls.free_coords.size() != group.free_rank)
        throw std::invalid_argument("divisibility: class does not match group");
    Int d = 0;
    for (const auto& x : cls.free_coords)
        d = gcd(d, x);
    return d;
}

// The full solution set of 2c = chi, enumerated in lexicographic coordinate
// order. Multiplication by 2 is diagonal in normal form, so the equation
// splits per generator: free coordinates must be even with a unique half;
// a Z_t coordinate has one solution for odd t and, for even t and even
// residue, the two halves differing by t/2.
inline std::vector<GroupClass> halves(const FgAbelianGroup& group, const GroupClass& chi) {
    if (chi.torsion_coords.size() != group.torsion.size() ||
        chi.free_coords.size() != group.free_rank)
        throw std::invalid_argument("halves: class does not match group");

    std::vector<std::vector<Int>> per_coord;  // candidate values per generator
    for (std::size_t i = 0; i < group.torsion.size(); ++i) {
        const Int& t = group.torsion[i];
        const Int& a = chi.torsion_coords[i];
        std::vector<Int> sols;
        if (is_even(t)) {
            if (is_even(a)) {
                Int base = a / 2;
                sols = {base, mod_floor(base + t / 2, t)};
                std::sort(sols.begin(), sols.end());
            }
        } else {
            // 2 is invertible mod odd t: the half is a * (t+1)/2.
            sols = {mod_floor(a * ((t + 1) / 2), t)};
        }
        if (sols.empty())
            return {};
        per_coord.push_back(std::move(sols));
    }
    for (const auto& x : chi.free_coords) {
        if (!is_even(x))
            return {};
        per_coord.push_back({x / 2});
    }

    std::vector<GroupClass> out;
    std::vector<std::size_t> odometer(per_coord.size(), 0);
    while (true) {
        std::vector<Int> coords;
        coords.reserve(per_coord.size());
        for (std::size_t i = 0; i < per_coord.size(); ++i)
            coords.push_back(per_coord[i][odometer[i]]);
        out.push_back(class_from_coords(group, std::move(coords)));
        std::size_t i = per_coord.size();
        while (i > 0) {
            --i;
            if (++odometer[i] < per_coord[i].size())
                break;
            odometer[i] = 0;
            if (i == 0)
                return out;
        }
        if (per_coord.empty())
            return out;
    }
}

struct DualityReport {
    std::array<AbelianShape, 4> homology_shapes;
    std::array<AbelianShape, 4> cohomology_shapes;
    bool pass = false;
};

// Group-level Poincare duality: H_k and H^{3-k} agree as abstract groups.
inline DualityReport verify_duality(const ChainPresentation& p) {
    DualityReport r;
    for (std::size_t k = 0; k < 4; ++k) {
        r.homology_shapes[k] = homology(p, k).shape();
        r.cohomology_shapes[k] = cohomology(p, k).shape();
    }
    r.pass = true;
    for (std::size_t k = 0; k < 4; ++k)
        if (!(r.homology_shapes[k] == r.cohomology_shapes[3 - k]))
            r.pass = false;
    return r;
}

}  // namespace imm35
