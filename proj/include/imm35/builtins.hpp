#pragma once
// Builtin presentations of standard closed oriented 3-manifolds with their
// independently derived expected invariants.
//
//   S3       boundary of the 4-simplex, triangulation mode
//   S1xS2    product cell structure, direct presentation
//   L(p,q)   genus-1 Heegaard cell structure (one cell per degree, degree-2
//            differential = multiplication by p), direct presentation; the
//            in-scope invariants do not depend on q, which is validated for
//            coprimality and kept as metadata
//   T3       cube with identifications (one 0-cell, three 1-, three 2-cells,
//            one 3-cell, zero differentials), direct presentation with the
//            standard cup tensor
//
// kuhn_torus_triangulation() additionally provides an honest 27-vertex
// triangulation of the 3-torus for exercising the simplicial cup product on
// a manifold with nontrivial degree-1 cohomology.

#include "imm35/classify.hpp"

#include <optional>

namespace imm35 {

struct ExpectedInvariants {
    std::array<AbelianShape, 4> homology;
    std::array<AbelianShape, 4> cohomology;
    std::size_t alpha = 0;
    // (H^2 coordinates, expected divisibility) samples.
    std::vector<std::pair<std::vector<Int>, Int>> divisibility_samples;
    // <alpha_i cup beta_j, [M]> over the cell bases, when those are canonical.
    std::optional<IntMatrix> cup_pairing_table;
};

struct BuiltinManifold {
    std::string name;
    bool triangulated = false;
    std::optional<SimplicialComplex3> complex;
    ChainPresentation presentation;
    ExpectedInvariants expected;
};

// Boundary of the 4-simplex: five tetrahedra, each omitting one vertex,
// with alternating orientation signs.
inline SimplicialComplex3 boundary_four_simplex() {
    std::vector<std::array<std::size_t, 4>> tets;
    std::vector<int> signs;
    for (std::size_t omit = 0; omit < 5; ++omit) {
        std::array<std::size_t, 4> tet{};
        std::size_t k = 0;
        for (std::size_t v = 0; v < 5; ++v)
            if (v != omit)
                tet[k++] = v;
        tets.push_back(tet);
        signs.push_back(omit % 2 == 0 ? 1 : -1);
    }
    return make_complex(5, std::move(tets), std::move(signs));
}

// Kuhn subdivision of the 3x3x3 periodic cube grid: 27 vertices, 162
// tetrahedra. Each unit cube splits into six path tetrahedra, one per
// axis permutation; a tetrahedron's declared sign is the permutation sign,
// which makes the listed orders a coherent orientation.
inline SimplicialComplex3 kuhn_torus_triangulation() {
    constexpr std::size_t n = 3;
    auto vid = [&](std::size_t x, std::size_t y, std::size_t z) {
        return (x % n) * n * n + (y % n) * n + (z % n);
    };
    const std::array<std::array<std::size_t, 3>, 6> perms{{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto perm_sign = [](const std::array<std::size_t, 3>& p) {
        int inversions = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (p[j] < p[i])
                    ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    };

    std::vector<std::array<std::size_t, 4>> tets;
    std::vector<int> signs;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (const auto& p : perms) {
                    std::array<std::size_t, 3> pos{x, y, z};
                    std::array<std::size_t, 4> tet{};
                    tet[0] = vid(pos[0], pos[1], pos[2]);
                    for (std::size_t step = 0; step < 3; ++step) {
                        ++pos[p[step]];
                        tet[step + 1] = vid(pos[0], pos[1], pos[2]);
                    }
                    tets.push_back(tet);
                    signs.push_back(perm_sign(p));
                }
    return make_complex(n * n * n, std::move(tets), std::move(signs));
}

namespace detail {

inline ChainPresentation one_cell_per_degree(const Int& degree_two_map,
                                             std::vector<CupTensorEntry> cup = {}) {
    ChainPresentation p;
    p.boundary_1 = IntMatrix(1, 1);
    p.boundary_2 = IntMatrix{{degree_two_map}};
    p.boundary_3 = IntMatrix(1, 1);
    p.fundamental_cycle = {1};
    p.cup_tensor = std::move(cup);
    p.has_cup_tensor = true;
    check_presentation(p);
    return p;
}

inline AbelianShape z() { return AbelianShape{1, {}}; }
inline AbelianShape zero() { return AbelianShape{}; }
inline AbelianShape z_mod(const Int& p) {
    return p == 1 ? AbelianShape{} : AbelianShape{0, {p}};
}

}  // namespace detail

inline ChainPresentation s1xs2_presentation() {
    return detail::one_cell_per_degree(0, {{0, 0, 0, 1}});
}

inline ChainPresentation lens_presentation(const Int& p) {
    // H^1 = 0, so the degree (1,2) cup pairing vanishes identically and the
    // zero tensor is the descended product.
    return detail::one_cell_per_degree(p, {});
}

inline ChainPresentation t3_presentation() {
    ChainPresentation p;
    p.boundary_1 = IntMatrix(1, 3);
    p.boundary_2 = IntMatrix(3, 3);
    p.boundary_3 = IntMatrix(3, 1);
    p.fundamental_cycle = {1};
    // 2-cells are indexed as the tori dual to the 1-cells, so the pairing
    // table <alpha_i cup beta_j, [M]> is the identity.
    p.cup_tensor = {{0, 0, 0, 1}, {1, 1, 0, 1}, {2, 2, 0, 1}};
    p.has_cup_tensor = true;
    check_presentation(p);
    return p;
}

// name in {S3, S1xS2, T3, L(p,q)} with 0 < p, gcd(p, q) = 1.
inline BuiltinManifold builtin(const std::string& name) {
    using detail::z;
    using detail::z_mod;
    using detail::zero;

    BuiltinManifold m;
    m.name = name;
    if (name == "S3") {
        m.triangulated = true;
        m.complex = boundary_four_simplex();
        ValidationReport report = validate_closed_oriented(*m.complex);
        if (!report.fully_valid())
            throw std::logic_error("builtin S3: validation failed");
        m.presentation = chain_presentation(*m.complex, *report.orientation);
        m.expected.homology = {z(), zero(), zero(), z()};
        m.expected.cohomology = {z(), zero(), zero(), z()};
        m.expected.alpha = 0;
        m.expected.divisibility_samples = {{{}, 0}};
        return m;
    }
    if (name == "S1xS2") {
        m.presentation = s1xs2_presentation();
        m.expected.homology = {z(), z(), z(), z()};
        m.expected.cohomology = {z(), z(), z(), z()};
        m.expected.alpha = 0;
        m.expected.divisibility_samples = {{{Int(0)}, 0}, {{Int(1)}, 1}, {{Int(-6)}, 6}};
        m.expected.cup_pairing_table = IntMatrix{{Int(1)}};
        return m;
    }
    if (name == "T3") {
        m.presentation = t3_presentation();
        m.expected.homology = {z(), {3, {}}, {3, {}}, z()};
        m.expected.cohomology = {z(), {3, {}}, {3, {}}, z()};
        m.expected.alpha = 0;
        m.expected.divisibility_samples = {
            {{Int(0), Int(0), Int(0)}, 0}, {{Int(1), Int(2), Int(0)}, 1},
            {{Int(2), Int(2), Int(4)}, 2}, {{Int(3), Int(0), Int(0)}, 3}};
        m.expected.cup_pairing_table = IntMatrix::identity(3);
        return m;
    }
    if (name.rfind("L(", 0) == 0 && name.back() == ')') {
        auto comma = name.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("builtin: lens space name must be L(p,q)");
        Int p(name.substr(2, comma - 2));
        Int q(name.substr(comma + 1, name.size() - comma - 2));
        if (p <= 0)
            throw std::invalid_argument("builtin: lens space requires p > 0");
        if (gcd(p, q) != 1)
            throw std::invalid_argument("builtin: lens space requires gcd(p, q) = 1");
        m.presentation = lens_presentation(p);
        m.expected.homology = {z(), z_mod(p), zero(), z()};
        m.expected.cohomology = {z(), zero(), z_mod(p), z()};
        m.expected.alpha = is_even(p) && p > 1 ? 1 : 0;
        m.expected.divisibility_samples = p > 1
            ? std::vector<std::pair<std::vector<Int>, Int>>{{{Int(0)}, 0}, {{Int(1)}, 0}}
            : std::vector<std::pair<std::vector<Int>, Int>>{{{}, 0}};
        return m;
    }
    throw std::invalid_argument("builtin: unknown manifold name '" + name + "'");
}

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"S3", "S1xS2", "L(2,1)", "L(3,1)",
                                                "L(4,1)", "L(5,1)", "T3"};
    return names;
}

}  // namespace imm35
