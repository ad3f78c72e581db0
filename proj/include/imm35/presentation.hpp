#pragma once
// Chain presentations: the common algebraic substrate for both ingestion
// modes. A presentation is three integer boundary matrices with the
// fundamental cycle, plus cup data in one of two forms: Alexander-Whitney
// index pairs derived from a triangulation, or a user-supplied cup tensor.

#include "imm35/complex.hpp"
#include "imm35/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace imm35 {

struct CupTensorEntry {
    std::size_t edge = 0;      // 1-chain index
    std::size_t triangle = 0;  // 2-chain index
    std::size_t tet = 0;       // 3-chain index
    Int coefficient;
};

// Alexander-Whitney data of one tetrahedron with ascending vertices
// (w0,w1,w2,w3): front edge [w0,w1], back triangle [w1,w2,w3] for 1-2
// products, and front triangle [w0,w1,w2], back edge [w2,w3] for 2-1.
struct AwTetFaces {
    std::size_t front_edge = 0;
    std::size_t back_triangle = 0;
    std::size_t front_triangle = 0;
    std::size_t back_edge = 0;
};

struct ChainPresentation {
    IntMatrix boundary_1;  // vertices x edges
    IntMatrix boundary_2;  // edges x triangles
    IntMatrix boundary_3;  // triangles x tetrahedra
    std::vector<Int> fundamental_cycle;

    std::vector<CupTensorEntry> cup_tensor;
    bool has_cup_tensor = false;
    std::optional<std::vector<AwTetFaces>> aw_faces;  // present in triangulation mode

    std::size_t dim(std::size_t k) const {
        switch (k) {
            case 0: return boundary_1.rows();
            case 1: return boundary_1.cols();
            case 2: return boundary_2.cols();
            case 3: return boundary_3.cols();
            default: throw std::out_of_range("ChainPresentation::dim: degree out of range");
        }
    }
    bool has_cup_data() const { return has_cup_tensor || aw_faces.has_value(); }

    // Boundary map C_k -> C_{k-1}; degenerate degrees give empty matrices.
    IntMatrix boundary(std::size_t k) const {
        switch (k) {
            case 0: return IntMatrix(0, dim(0));
            case 1: return boundary_1;
            case 2: return boundary_2;
            case 3: return boundary_3;
            case 4: return IntMatrix(dim(3), 0);
            default: throw std::out_of_range("ChainPresentation::boundary: degree out of range");
        }
    }
    // Coboundary map C^k -> C^{k+1}.
    IntMatrix coboundary(std::size_t k) const { return boundary(k + 1).transposed(); }
};

// Structural checks shared by both ingestion modes; throws on failure.
inline void check_presentation(const ChainPresentation& p) {
    if (p.boundary_1.cols() != p.boundary_2.rows() ||
        p.boundary_2.cols() != p.boundary_3.rows())
        throw std::invalid_argument("presentation: boundary matrix shapes do not chain");
    if (!(p.boundary_1 * p.boundary_2).is_zero())
        throw std::invalid_argument("presentation: boundary_1 * boundary_2 != 0");
    if (!(p.boundary_2 * p.boundary_3).is_zero())
        throw std::invalid_argument("presentation: boundary_2 * boundary_3 != 0");
    if (p.fundamental_cycle.size() != p.dim(3))
        throw std::invalid_argument("presentation: fundamental cycle has wrong length");
    if (!all_zero(p.boundary_3 * p.fundamental_cycle))
        throw std::invalid_argument("presentation: fundamental cycle is not a cycle");
    for (const auto& e : p.cup_tensor)
        if (e.edge >= p.dim(1) || e.triangle >= p.dim(2) || e.tet >= p.dim(3))
            throw std::invalid_argument("presentation: cup tensor index out of range");
}

// Boundary matrices of a validated triangulation with the given chain signs
// as fundamental cycle. The signs must form a coherent orientation.
inline ChainPresentation chain_presentation(const SimplicialComplex3& c,
                                            const std::vector<int>& chain_signs) {
    if (chain_signs.size() != c.tetrahedra.size())
        throw std::invalid_argument("chain_presentation: one sign per tetrahedron required");

    ChainPresentation p;
    p.boundary_1 = IntMatrix(c.vertex_count, c.edges.size());
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        p.boundary_1(c.edges[e][1], e) = 1;
        p.boundary_1(c.edges[e][0], e) = -1;
    }
    p.boundary_2 = IntMatrix(c.edges.size(), c.triangles.size());
    for (std::size_t f = 0; f < c.triangles.size(); ++f) {
        const auto& tri = c.triangles[f];
        for (std::size_t omit = 0; omit < 3; ++omit) {
            std::array<std::size_t, 2> e{};
            std::size_t k = 0;
            for (std::size_t i = 0; i < 3; ++i)
                if (i != omit)
                    e[k++] = tri[i];
            p.boundary_2(c.edge_index.at(e), f) = omit % 2 == 0 ? 1 : -1;
        }
    }
    p.boundary_3 = IntMatrix(c.triangles.size(), c.tetrahedra.size());
    for (std::size_t t = 0; t < c.tetrahedra.size(); ++t) {
        auto s = c.sorted_tet(t);
        for (std::size_t omit = 0; omit < 4; ++omit) {
            std::array<std::size_t, 3> tri{};
            std::size_t k = 0;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != omit)
                    tri[k++] = s[i];
            p.boundary_3(c.triangle_index.at(tri), t) = omit % 2 == 0 ? 1 : -1;
        }
    }

    p.fundamental_cycle.assign(chain_signs.size(), 0);
    for (std::size_t t = 0; t < chain_signs.size(); ++t) {
        if (chain_signs[t] != 1 && chain_signs[t] != -1)
            throw std::invalid_argument("chain_presentation: orientation signs must be +-1");
        p.fundamental_cycle[t] = chain_signs[t];
    }
    if (!all_zero(p.boundary_3 * p.fundamental_cycle))
        throw std::invalid_argument("chain_presentation: orientation inconsistent with complex");

    std::vector<AwTetFaces> aw;
    aw.reserve(c.tetrahedra.size());
    for (std::size_t t = 0; t < c.tetrahedra.size(); ++t) {
        auto s = c.sorted_tet(t);
        AwTetFaces faces;
        faces.front_edge = c.edge_index.at({s[0], s[1]});
        faces.back_triangle = c.triangle_index.at({s[1], s[2], s[3]});
        faces.front_triangle = c.triangle_index.at({s[0], s[1], s[2]});
        faces.back_edge = c.edge_index.at({s[2], s[3]});
        aw.push_back(faces);
    }
    p.aw_faces = std::move(aw);

    check_presentation(p);
    return p;
}

}  // namespace imm35
