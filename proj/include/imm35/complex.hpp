#pragma once
// Tetrahedral triangulations of candidate closed oriented 3-manifolds.
//
// Conventions (artifact choices, stated here because no canonical simplicial
// model exists for this material):
//   * vertices are dense 0-based indices; the chain basis of every simplex
//     is its vertex set in ascending order;
//   * a tetrahedron listed as (v0,v1,v2,v3) carries chain sign equal to the
//     parity of the permutation sorting it ascending, times the sign declared
//     in the input file (default +);
//   * derived edges and triangles are deduplicated and ordered
//     lexicographically, so face indexing is a pure function of the input.
//
// File format: line oriented text. '#' starts a comment. A header line
// "vertices N" is followed by one line per tetrahedron:
//   tet v0 v1 v2 v3 [+|-]

#include "imm35/matrix.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace imm35 {

namespace detail {

// Parity of the permutation sorting a short sequence ascending: +1 even, -1 odd.
template <std::size_t N>
inline int sort_parity(std::array<std::size_t, N> a) {
    int sign = 1;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (a[j] < a[i]) {
                std::swap(a[i], a[j]);
                sign = -sign;
            }
    return sign;
}

template <std::size_t N>
inline std::array<std::size_t, N> sorted(std::array<std::size_t, N> a) {
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace detail

struct SimplicialComplex3 {
    std::size_t vertex_count = 0;
    std::vector<std::array<std::size_t, 4>> tetrahedra;  // as listed; order encodes orientation
    std::vector<int> declared_signs;                     // +1 / -1 per tetrahedron

    // Canonically ordered derived faces.
    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<std::array<std::size_t, 3>> triangles;

    std::map<std::array<std::size_t, 2>, std::size_t> edge_index;
    std::map<std::array<std::size_t, 3>, std::size_t> triangle_index;

    // Chain sign of tetrahedron t relative to its ascending-ordered basis.
    int chain_sign(std::size_t t) const {
        return detail::sort_parity(tetrahedra[t]) * declared_signs[t];
    }
    std::array<std::size_t, 4> sorted_tet(std::size_t t) const {
        return detail::sorted(tetrahedra[t]);
    }
};

inline SimplicialComplex3 make_complex(std::size_t vertex_count,
                                       std::vector<std::array<std::size_t, 4>> tetrahedra,
                                       std::vector<int> declared_signs = {}) {
    if (declared_signs.empty())
        declared_signs.assign(tetrahedra.size(), 1);
    if (declared_signs.size() != tetrahedra.size())
        throw std::invalid_argument("make_complex: one sign per tetrahedron required");

    SimplicialComplex3 c;
    c.vertex_count = vertex_count;
    c.tetrahedra = std::move(tetrahedra);
    c.declared_signs = std::move(declared_signs);

    std::map<std::array<std::size_t, 4>, std::size_t> seen;
    for (std::size_t t = 0; t < c.tetrahedra.size(); ++t) {
        const auto& tet = c.tetrahedra[t];
        for (std::size_t v : tet)
            if (v >= c.vertex_count)
                throw parse_error("tetrahedron vertex index out of range");
        auto key = detail::sorted(tet);
        for (std::size_t i = 0; i + 1 < 4; ++i)
            if (key[i] == key[i + 1])
                throw parse_error("repeated vertex in tetrahedron");
        if (!seen.emplace(key, t).second)
            throw parse_error("duplicate tetrahedron");
    }

    std::map<std::array<std::size_t, 2>, std::size_t> edge_set;
    std::map<std::array<std::size_t, 3>, std::size_t> tri_set;
    for (const auto& tet : c.tetrahedra) {
        auto s = detail::sorted(tet);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                edge_set.emplace(std::array<std::size_t, 2>{s[i], s[j]}, 0);
        for (std::size_t omit = 0; omit < 4; ++omit) {
            std::array<std::size_t, 3> tri{};
            std::size_t k = 0;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != omit)
                    tri[k++] = s[i];
            tri_set.emplace(tri, 0);
        }
    }
    for (auto& [e, idx] : edge_set) {
        idx = c.edges.size();
        c.edges.push_back(e);
    }
    for (auto& [f, idx] : tri_set) {
        idx = c.triangles.size();
        c.triangles.push_back(f);
    }
    c.edge_index = std::move(edge_set);
    c.triangle_index = std::move(tri_set);
    return c;
}

inline SimplicialComplex3 parse_complex(std::string_view text) {
    std::optional<std::size_t> vertex_count;
    std::vector<std::array<std::size_t, 4>> tets;
    std::vector<int> signs;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword))
            continue;
        auto fail = [&](const std::string& msg) -> parse_error {
            return parse_error("line " + std::to_string(line_no) + ": " + msg);
        };
        if (keyword == "vertices") {
            long long n;
            if (vertex_count)
                throw fail("duplicate vertices header");
            if (!(fields >> n) || n < 0)
                throw fail("expected 'vertices N' with N >= 0");
            vertex_count = static_cast<std::size_t>(n);
        } else if (keyword == "tet") {
            if (!vertex_count)
                throw fail("tetrahedron before vertices header");
            std::array<std::size_t, 4> tet{};
            for (auto& v : tet) {
                long long raw;
                if (!(fields >> raw) || raw < 0)
                    throw fail("expected four non-negative vertex indices");
                v = static_cast<std::size_t>(raw);
            }
            int sign = 1;
            std::string tail;
            if (fields >> tail) {
                if (tail == "+")
                    sign = 1;
                else if (tail == "-")
                    sign = -1;
                else
                    throw fail("trailing token must be + or -");
            }
            std::string extra;
            if (fields >> extra)
                throw fail("unexpected trailing token");
            tets.push_back(tet);
            signs.push_back(sign);
        } else {
            throw fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!vertex_count)
        throw parse_error("missing vertices header");
    return make_complex(*vertex_count, std::move(tets), std::move(signs));
}

inline std::string format_complex(const SimplicialComplex3& c) {
    std::ostringstream out;
    out << "vertices " << c.vertex_count << "\n";
    for (std::size_t t = 0; t < c.tetrahedra.size(); ++t) {
        out << "tet";
        for (std::size_t v : c.tetrahedra[t])
            out << " " << v;
        out << " " << (c.declared_signs[t] > 0 ? "+" : "-") << "\n";
    }
    return out.str();
}

enum class OrientationStatus {
    consistent,             // declared signs form a coherent orientation
    non_orientable,         // no sign assignment is coherent
    declared_inconsistent,  // a coherent assignment exists but differs from the input
};

struct ValidationReport {
    bool is_closed = false;
    bool is_connected = false;
    long long euler_characteristic = 0;
    OrientationStatus orientation_status = OrientationStatus::non_orientable;
    std::optional<std::vector<int>> orientation;  // chain signs when consistent
    bool link_check = false;

    bool fully_valid() const {
        return is_closed && is_connected &&
               orientation_status == OrientationStatus::consistent && link_check;
    }
};

namespace detail {

// Incidence sign of an ascending triangle inside an ascending tetrahedron:
// (-1)^position of the omitted vertex.
inline int face_incidence(const std::array<std::size_t, 4>& tet_sorted,
                          const std::array<std::size_t, 3>& tri) {
    for (std::size_t omit = 0; omit < 4; ++omit) {
        std::array<std::size_t, 3> face{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != omit)
                face[k++] = tet_sorted[i];
        if (face == tri)
            return omit % 2 == 0 ? 1 : -1;
    }
    throw std::logic_error("face_incidence: triangle is not a face of the tetrahedron");
}

}  // namespace detail

inline ValidationReport validate_closed_oriented(const SimplicialComplex3& c) {
    ValidationReport report;
    const std::size_t nt = c.tetrahedra.size();

    // Triangle -> coface list.
    std::vector<std::vector<std::size_t>> cofaces(c.triangles.size());
    for (std::size_t t = 0; t < nt; ++t) {
        auto s = c.sorted_tet(t);
        for (std::size_t omit = 0; omit < 4; ++omit) {
            std::array<std::size_t, 3> tri{};
            std::size_t k = 0;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != omit)
                    tri[k++] = s[i];
            cofaces[c.triangle_index.at(tri)].push_back(t);
        }
    }

    report.is_closed = !c.triangles.empty();
    for (const auto& cf : cofaces)
        if (cf.size() != 2)
            report.is_closed = false;

    report.euler_characteristic =
        static_cast<long long>(c.vertex_count) - static_cast<long long>(c.edges.size()) +
        static_cast<long long>(c.triangles.size()) - static_cast<long long>(nt);

    // Dual graph over triangles with exactly two cofaces.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> dual(nt);  // (neighbour, triangle)
    for (std::size_t f = 0; f < cofaces.size(); ++f)
        if (cofaces[f].size() == 2) {
            dual[cofaces[f][0]].push_back({cofaces[f][1], f});
            dual[cofaces[f][1]].push_back({cofaces[f][0], f});
        }

    // Connectivity and orientation propagation share one traversal scheme.
    std::vector<int> component(nt, -1);
    std::vector<int> propagated(nt, 0);
    int components = 0;
    bool orientable = true;
    for (std::size_t start = 0; start < nt; ++start) {
        if (component[start] != -1)
            continue;
        component[start] = components++;
        propagated[start] = c.chain_sign(start);
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t t = stack.back();
            stack.pop_back();
            auto ts = c.sorted_tet(t);
            for (auto [nb, f] : dual[t]) {
                int s_t = detail::face_incidence(ts, c.triangles[f]);
                int s_nb = detail::face_incidence(c.sorted_tet(nb), c.triangles[f]);
                // Coherence: the two induced orientations must cancel.
                int forced = -propagated[t] * s_t * s_nb;
                if (component[nb] == -1) {
                    component[nb] = component[t];
                    propagated[nb] = forced;
                    stack.push_back(nb);
                } else if (propagated[nb] != forced) {
                    orientable = false;
                }
            }
        }
    }
    report.is_connected = (components == 1);

    if (!orientable) {
        report.orientation_status = OrientationStatus::non_orientable;
    } else {
        bool matches = true;
        for (std::size_t t = 0; t < nt; ++t)
            if (propagated[t] != c.chain_sign(t))
                matches = false;
        if (matches) {
            report.orientation_status = OrientationStatus::consistent;
            std::vector<int> signs(nt);
            for (std::size_t t = 0; t < nt; ++t)
                signs[t] = c.chain_sign(t);
            report.orientation = std::move(signs);
        } else {
            report.orientation_status = OrientationStatus::declared_inconsistent;
        }
    }

    // Link conditions: vertex links are 2-spheres, edge links single circles.
    report.link_check = c.vertex_count > 0 && nt > 0;
    for (std::size_t v = 0; v < c.vertex_count && report.link_check; ++v) {
        std::map<std::array<std::size_t, 3>, std::size_t> link_tris;
        std::map<std::array<std::size_t, 2>, std::size_t> link_edges;
        std::map<std::size_t, std::size_t> link_verts;
        for (std::size_t t = 0; t < nt; ++t) {
            auto s = c.sorted_tet(t);
            if (std::find(s.begin(), s.end(), v) == s.end())
                continue;
            std::array<std::size_t, 3> opp{};
            std::size_t k = 0;
            for (std::size_t x : s)
                if (x != v)
                    opp[k++] = x;
            link_tris.emplace(opp, link_tris.size());
        }
        if (link_tris.empty()) {
            report.link_check = false;
            break;
        }
        for (const auto& [tri, idx] : link_tris)
            for (std::size_t omit = 0; omit < 3; ++omit) {
                std::array<std::size_t, 2> e{tri[(omit + 1) % 3], tri[(omit + 2) % 3]};
                if (e[0] > e[1])
                    std::swap(e[0], e[1]);
                link_edges.emplace(e, link_edges.size());
            }
        for (const auto& [e, idx] : link_edges) {
            link_verts.emplace(e[0], link_verts.size());
            link_verts.emplace(e[1], link_verts.size());
        }
        // Closed surface: each link edge borders exactly two link triangles.
        std::map<std::array<std::size_t, 2>, std::size_t> edge_use;
        for (const auto& [tri, idx] : link_tris)
            for (std::size_t omit = 0; omit < 3; ++omit) {
                std::array<std::size_t, 2> e{tri[(omit + 1) % 3], tri[(omit + 2) % 3]};
                if (e[0] > e[1])
                    std::swap(e[0], e[1]);
                ++edge_use[e];
            }
        for (const auto& [e, uses] : edge_use)
            if (uses != 2)
                report.link_check = false;
        // Connectivity of the link through its edges.
        std::map<std::size_t, std::vector<std::size_t>> adj;
        for (const auto& [e, idx] : link_edges) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        std::vector<std::size_t> stack{link_verts.begin()->first};
        std::map<std::size_t, bool> seen{{stack[0], true}};
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        if (seen.size() != link_verts.size())
            report.link_check = false;
        long long chi = static_cast<long long>(link_verts.size()) -
                        static_cast<long long>(link_edges.size()) +
                        static_cast<long long>(link_tris.size());
        if (chi != 2)
            report.link_check = false;
    }
    for (std::size_t e = 0; e < c.edges.size() && report.link_check; ++e) {
        std::size_t u = c.edges[e][0], v = c.edges[e][1];
        std::map<std::size_t, std::size_t> degree;
        std::size_t circle_edges = 0;
        for (std::size_t t = 0; t < nt; ++t) {
            auto s = c.sorted_tet(t);
            bool has_u = std::find(s.begin(), s.end(), u) != s.end();
            bool has_v = std::find(s.begin(), s.end(), v) != s.end();
            if (!has_u || !has_v)
                continue;
            std::array<std::size_t, 2> rest{};
            std::size_t k = 0;
            for (std::size_t x : s)
                if (x != u && x != v)
                    rest[k++] = x;
            ++degree[rest[0]];
            ++degree[rest[1]];
            ++circle_edges;
        }
        if (degree.empty()) {
            report.link_check = false;
            break;
        }
        for (const auto& [w, d] : degree)
            if (d != 2)
                report.link_check = false;
        if (degree.size() != circle_edges)
            report.link_check = false;
        // Connectivity of the circle.
        std::map<std::size_t, std::vector<std::size_t>> adj;
        for (std::size_t t = 0; t < nt; ++t) {
            auto s = c.sorted_tet(t);
            if (std::find(s.begin(), s.end(), u) == s.end() ||
                std::find(s.begin(), s.end(), v) == s.end())
                continue;
            std::array<std::size_t, 2> rest{};
            std::size_t k = 0;
            for (std::size_t x : s)
                if (x != u && x != v)
                    rest[k++] = x;
            adj[rest[0]].push_back(rest[1]);
            adj[rest[1]].push_back(rest[0]);
        }
        std::vector<std::size_t> stack{degree.begin()->first};
        std::map<std::size_t, bool> seen{{stack[0], true}};
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        if (seen.size() != degree.size())
            report.link_check = false;
    }

    return report;
}

}  // namespace imm35
