#pragma once
// The complete regular-homotopy classification of immersions of a closed
// oriented 3-manifold into 5-space, assembled from homology and cup data.
//
// Over a normal Euler class chi the classes form Gamma_2(chi) x Z_{2d(chi)},
// where Gamma_2(chi) = {c : 2c = chi} is the set of Wu invariants and d is
// divisibility; equivalently, over each Wu class c the fiber is Z_{4d(c)}.
// The fiber values i are labels in an explicitly presented torsor: the zero
// label per (manifold, c) row is an artifact choice, because pinning it
// requires basepoint data (a reference immersion and a spin structure) that
// no algebraic presentation determines; only differences of labels are
// canonical. Every table carries this note in its metadata.

#include "imm35/cup.hpp"
#include "imm35/cyclic.hpp"

#include <optional>
#include <string>

namespace imm35 {

inline constexpr const char* kFiberLabelNote =
    "fiber values are torsor labels: the zero label of each (manifold, c) row is a "
    "reported convention, only label differences are canonical";

// Everything the classification operations need, computed once per
// presentation.
struct ManifoldAnalysis {
    ChainPresentation presentation;
    std::array<FgAbelianGroup, 4> homology_z;
    std::array<FgAbelianGroup, 4> cohomology_z;
    std::array<std::size_t, 4> cohomology_z2_dim{};
    std::size_t alpha = 0;
    std::optional<CupPairing> cup;

    const FgAbelianGroup& h1() const { return cohomology_z[1]; }
    const FgAbelianGroup& h2() const { return cohomology_z[2]; }
    const FgAbelianGroup& h3() const { return cohomology_z[3]; }
};

inline ManifoldAnalysis analyze(const ChainPresentation& p) {
    check_presentation(p);
    ManifoldAnalysis a;
    a.presentation = p;
    for (std::size_t k = 0; k < 4; ++k) {
        a.homology_z[k] = homology(p, k);
        a.cohomology_z[k] = cohomology(p, k);
        a.cohomology_z2_dim[k] = cohomology(p, k, Coefficients::Z2).torsion.size();
    }
    a.alpha = 0;
    for (const auto& t : a.homology_z[1].torsion)
        if (is_even(t))
            ++a.alpha;
    if (p.has_cup_data())
        a.cup = cup_pairing(p);
    return a;
}

inline Int divisibility(const ManifoldAnalysis& m, const GroupClass& cls) {
    return divisibility(m.h2(), cls);
}

// One immersion class: the Wu invariant c together with the fiber label i,
// which lives in Z_{4 d(c)} (modulus 0 meaning Z).
struct ImmersionClass {
    GroupClass c;
    CyclicValue i;
};

inline ImmersionClass immersion_class(const ManifoldAnalysis& m, const GroupClass& c,
                                      const Int& i_label) {
    return ImmersionClass{c, CyclicValue(4 * divisibility(m, c), i_label)};
}

// Sweep of the classes of a group with free coordinates in [-bound, bound]
// and torsion coordinates in [0, min(t-1, bound)], lexicographic order.
inline std::vector<GroupClass> enumerate_classes(const FgAbelianGroup& g, const Int& bound) {
    if (bound < 0)
        throw std::invalid_argument("enumerate_classes: negative bound");
    std::vector<std::vector<Int>> ranges;
    for (const auto& t : g.torsion) {
        std::vector<Int> r;
        for (Int x = 0; x < t && x <= bound; ++x)
            r.push_back(x);
        ranges.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < g.free_rank; ++i) {
        std::vector<Int> r;
        for (Int x = -bound; x <= bound; ++x)
            r.push_back(x);
        ranges.push_back(std::move(r));
    }
    std::vector<GroupClass> out;
    std::vector<std::size_t> odo(ranges.size(), 0);
    while (true) {
        std::vector<Int> coords;
        coords.reserve(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i)
            coords.push_back(ranges[i][odo[i]]);
        out.push_back(class_from_coords(g, std::move(coords)));
        if (ranges.empty())
            return out;
        std::size_t i = ranges.size();
        while (i > 0) {
            --i;
            if (++odo[i] < ranges[i].size())
                break;
            odo[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

struct WuRow {
    GroupClass c;
    Int d;               // divisibility of c
    Int fiber_modulus;   // 4 d(c); 0 means Z
};

struct ChiRow {
    GroupClass chi;
    Int d;                          // divisibility of chi
    std::vector<GroupClass> gamma2; // all c with 2c = chi
    Int fiber_modulus;              // 2 d(chi); 0 means Z
    std::optional<Int> cup_index;   // modulus of H^3/(2 chi cup H^1) when cup data exists
};

struct ClassificationTable {
    AbelianShape h2;
    Int sweep_bound;
    std::vector<WuRow> wu_rows;
    std::vector<ChiRow> chi_rows;
    bool total_finite = false;       // the union always contains the Z fiber over c = 0
    std::string fiber_label_note = kFiberLabelNote;

    // Cross-consistency of the two enumerations on the swept window.
    bool consistent() const {
        for (const auto& row : chi_rows) {
            for (const auto& c : row.gamma2) {
                Int d_c = 0;
                for (const auto& x : c.free_coords)
                    d_c = gcd(d_c, x);
                if (4 * d_c != row.fiber_modulus)
                    return false;
            }
        }
        return true;
    }
};

inline ChiRow classify_chi(const ManifoldAnalysis& m, const GroupClass& chi) {
    ChiRow row;
    row.chi = chi;
    row.d = divisibility(m, chi);
    row.gamma2 = halves(m.h2(), chi);
    row.fiber_modulus = 2 * row.d;
    if (m.cup)
        row.cup_index =
            index_two_chi_cup_h1(m.presentation, *m.cup, m.h1(), m.h2(), chi);
    return row;
}

inline ClassificationTable classify(const ManifoldAnalysis& m, const Int& bound = 3) {
    ClassificationTable table;
    table.h2 = m.h2().shape();
    table.sweep_bound = bound;
    for (const auto& c : enumerate_classes(m.h2(), bound)) {
        Int d = divisibility(m, c);
        table.wu_rows.push_back(WuRow{c, d, 4 * d});
    }
    for (const auto& chi : enumerate_classes(m.h2(), bound))
        table.chi_rows.push_back(classify_chi(m, chi));
    table.total_finite = false;
    return table;
}

// Homotopy classes of maps to the 2-sphere: same fibers Z_{2d(chi)}, but chi
// ranges over all of H^2 with no evenness requirement.
struct S2Row {
    GroupClass chi;
    Int d;
    Int fiber_modulus;  // 2 d(chi)
};

struct S2Table {
    AbelianShape h2;
    Int sweep_bound;
    std::vector<S2Row> rows;
};

inline S2Table maps_to_s2(const ManifoldAnalysis& m, const Int& bound = 3) {
    S2Table table;
    table.h2 = m.h2().shape();
    table.sweep_bound = bound;
    for (const auto& chi : enumerate_classes(m.h2(), bound)) {
        Int d = divisibility(m, chi);
        table.rows.push_back(S2Row{chi, d, 2 * d});
    }
    return table;
}

// Term structures of the four-term exact sequence
//   H^2(M;Z_2) -> [M,S^2] -> Imm[M,R^5] -> Z_2 -> 0.
// Only the terms are computed; the connecting maps arise from Hirsch-theory
// identifications outside algebraic reach, so exactness is not machine
// checked here.
struct ExactSequenceReport {
    std::size_t h2_z2_dim = 0;
    S2Table s2_term;
    ClassificationTable immersion_term;
    AbelianShape final_term{0, {Int(2)}};
    std::string note =
        "term structures only; the maps of the sequence are not computed";
};

inline ExactSequenceReport exact_sequence_report(const ManifoldAnalysis& m,
                                                 const Int& bound = 3) {
    ExactSequenceReport r;
    r.h2_z2_dim = m.cohomology_z2_dim[2];
    r.s2_term = maps_to_s2(m, bound);
    r.immersion_term = classify(m, bound);
    return r;
}

}  // namespace imm35
