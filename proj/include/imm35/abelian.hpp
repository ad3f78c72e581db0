#pragma once
// Finitely generated abelian groups in divisor-chain normal form, presented
// as subquotients ker(d_ker)/im(d_im) of a free ambient group. Every group
// carries change-of-basis data: representative chains for its generators and
// a coordinate map for arbitrary kernel elements, so classes can be moved
// between the normal form and the ambient chain/cochain basis exactly.

#include "imm35/gf2.hpp"
#include "imm35/snf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

namespace imm35 {

// Isomorphism type alone: rank plus divisor chain. Two groups are isomorphic
// iff their shapes are literally equal.
struct AbelianShape {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // t1 | t2 | ..., each >= 2

    bool operator==(const AbelianShape& o) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    std::string str() const {
        if (is_trivial())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& t : torsion) {
            if (!first)
                out << " + ";
            out << "Z_" << t;
            first = false;
        }
        if (free_rank > 0) {
            if (!first)
                out << " + ";
            if (free_rank == 1)
                out << "Z";
            else
                out << "Z^" << free_rank;
        }
        return out.str();
    }
};

// Renormalize a multiset of cyclic orders into a divisor chain.
inline std::vector<Int> divisor_chain(std::vector<Int> orders) {
    orders.erase(std::remove_if(orders.begin(), orders.end(),
                                [](const Int& t) { return t == 1; }),
                 orders.end());
    if (orders.empty())
        return {};
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        diag(i, i) = orders[i];
    SnfOptions opt;
    opt.with_u = opt.with_u_inv = opt.with_v = opt.with_v_inv = false;
    return smith_normal_form(diag, opt).nontrivial_factors();
}

inline AbelianShape direct_sum(const AbelianShape& a, const AbelianShape& b) {
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return AbelianShape{a.free_rank + b.free_rank, divisor_chain(std::move(orders))};
}

struct FgAbelianGroup {
    std::size_t ambient_dim = 0;
    Int coefficient_modulus = 0;  // 0 = integer coefficients, 2 = mod-2
    std::vector<Int> torsion;     // divisor chain, entries >= 2
    std::size_t free_rank = 0;
    IntMatrix representatives;  // ambient_dim x (torsion + free) generator chains
    IntMatrix coord_map;        // (torsion + free) x ambient_dim
    IntMatrix cycle_constraint; // the map whose kernel the classes live in

    std::size_t generator_count() const { return torsion.size() + free_rank; }
    AbelianShape shape() const { return {free_rank, torsion}; }
};

// An element of an FgAbelianGroup in normal-form coordinates: residues for
// the torsion generators followed by integers for the free generators.
struct GroupClass {
    std::vector<Int> torsion_coords;
    std::vector<Int> free_coords;

    bool operator==(const GroupClass& o) const = default;

    std::vector<Int> all_coords() const {
        std::vector<Int> c = torsion_coords;
        c.insert(c.end(), free_coords.begin(), free_coords.end());
        return c;
    }
    bool is_zero() const { return all_zero(torsion_coords) && all_zero(free_coords); }
};

inline GroupClass class_from_coords(const FgAbelianGroup& g, std::vector<Int> coords) {
    if (coords.size() != g.generator_count())
        throw std::invalid_argument("class_from_coords: coordinate count mismatch");
    GroupClass c;
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        c.torsion_coords.push_back(mod_floor(coords[i], g.torsion[i]));
    for (std::size_t i = g.torsion.size(); i < coords.size(); ++i) {
        Int x = coords[i];
        if (g.coefficient_modulus > 0)
            x = mod_floor(x, g.coefficient_modulus);
        c.free_coords.push_back(x);
    }
    return c;
}

inline GroupClass zero_class(const FgAbelianGroup& g) {
    return class_from_coords(g, std::vector<Int>(g.generator_count()));
}

inline GroupClass add(const FgAbelianGroup& g, const GroupClass& a, const GroupClass& b) {
    std::vector<Int> coords = a.all_coords();
    std::vector<Int> bc = b.all_coords();
    if (coords.size() != bc.size())
        throw std::invalid_argument("add: coordinate count mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] += bc[i];
    return class_from_coords(g, std::move(coords));
}

inline GroupClass scale(const FgAbelianGroup& g, const Int& n, const GroupClass& a) {
    std::vector<Int> coords = a.all_coords();
    for (auto& x : coords)
        x *= n;
    return class_from_coords(g, std::move(coords));
}

// Representative chain/cochain of a class in the ambient basis.
inline std::vector<Int> representative(const FgAbelianGroup& g, const GroupClass& c) {
    return g.representatives * c.all_coords();
}

// Normal-form coordinates of a chain/cochain, which must satisfy the cycle
// constraint of the group it is read in.
inline GroupClass coords_of(const FgAbelianGroup& g, const std::vector<Int>& chain) {
    if (chain.size() != g.ambient_dim)
        throw std::invalid_argument("coords_of: ambient dimension mismatch");
    std::vector<Int> image = g.cycle_constraint * chain;
    for (auto& x : image) {
        if (g.coefficient_modulus > 0)
            x = mod_floor(x, g.coefficient_modulus);
        if (x != 0)
            throw std::invalid_argument("coords_of: chain is not a cycle for this group");
    }
    return class_from_coords(g, g.coord_map * chain);
}

// ker(d_ker) / im(d_im) over Z with full basis data. Columns of d_im must lie
// in ker(d_ker); both matrices act on the same ambient space of dimension
// d_ker.cols() == d_im.rows().
inline FgAbelianGroup quotient_group(const IntMatrix& d_ker, const IntMatrix& d_im) {
    if (d_ker.cols() != d_im.rows())
        throw std::invalid_argument("quotient_group: ambient dimension mismatch");
    const std::size_t n = d_ker.cols();

    SnfOptions ker_opt;
    ker_opt.with_u = ker_opt.with_u_inv = false;
    SnfResult ker_snf = smith_normal_form(d_ker, ker_opt);
    const std::size_t rho = ker_snf.rank;
    const std::size_t g = n - rho;

    std::vector<std::size_t> tail(g);
    std::iota(tail.begin(), tail.end(), rho);
    std::vector<std::size_t> all_rows(n);
    std::iota(all_rows.begin(), all_rows.end(), 0);

    IntMatrix kernel_basis = ker_snf.v.select(all_rows, tail);   // n x g
    IntMatrix kernel_coords = ker_snf.v_inv.select(tail, all_rows);  // g x n

    IntMatrix q = kernel_coords * d_im;  // g x (im generators)
    SnfOptions q_opt;
    q_opt.with_v = q_opt.with_v_inv = false;
    SnfResult q_snf = smith_normal_form(q, q_opt);

    auto factor_at = [&](std::size_t i) -> Int {
        return i < q_snf.rank ? q_snf.s(i, i) : Int(0);
    };

    std::vector<std::size_t> torsion_idx, free_idx;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < g; ++i) {
        Int f = factor_at(i);
        if (f == 1)
            continue;
        if (f == 0) {
            free_idx.push_back(i);
        } else {
            torsion_idx.push_back(i);
            torsion.push_back(f);
        }
    }
    std::vector<std::size_t> selected = torsion_idx;
    selected.insert(selected.end(), free_idx.begin(), free_idx.end());

    std::vector<std::size_t> all_g(g);
    std::iota(all_g.begin(), all_g.end(), 0);

    FgAbelianGroup out;
    out.ambient_dim = n;
    out.torsion = std::move(torsion);
    out.free_rank = free_idx.size();
    out.representatives = (kernel_basis * q_snf.u_inv).select(all_rows, selected);
    out.coord_map = (q_snf.u * kernel_coords).select(selected, all_rows);
    out.cycle_constraint = d_ker;
    return out;
}

// Mod-2 variant; the result is a Z_2 vector space recorded as 2-torsion.
inline FgAbelianGroup quotient_group_mod2(const IntMatrix& d_ker, const IntMatrix& d_im) {
    if (d_ker.cols() != d_im.rows())
        throw std::invalid_argument("quotient_group_mod2: ambient dimension mismatch");
    Gf2Quotient q = gf2_quotient(d_ker, d_im);
    FgAbelianGroup out;
    out.ambient_dim = d_ker.cols();
    out.coefficient_modulus = 2;
    out.torsion.assign(q.dim, Int(2));
    out.free_rank = 0;
    out.representatives = q.representatives;
    out.coord_map = q.coord_map;
    out.cycle_constraint = mod2(d_ker);
    return out;
}

}  // namespace imm35
