#pragma once
// The invariant-formula ledger. Rotation numbers, signatures and cusp counts
// of singular Seifert surfaces are INPUTS here, never computed from geometry:
// producing them requires generic-map constructions outside combinatorial
// reach. The ledger owns their arithmetic — residues, reductions between the
// Z_{4d} / Z_{2d} / Z_2 levels — and enforces every integrality, parity and
// consistency constraint those formulas must satisfy. A parity violation is a
// hard error, because each gate corresponds to an integrality theorem: data
// that trips one is realized by no generic map.

#include "imm35/cyclic.hpp"

#include <optional>
#include <string>

namespace imm35 {

// Census record for one singular Seifert surface F : W^4 -> R^5 bounding a
// fixed immersion: signature of W^4, algebraic cusp count, the boundary
// rotation at both available levels, plus the ambient invariants alpha and
// d = d(chi). rotation_r lives mod 2d, rotation_R mod 4d.
struct SeifertData {
    std::string label;
    Int d = 0;
    Int sigma = 0;
    Int cusps = 0;
    Int alpha = 0;
    std::optional<CyclicValue> rotation_r;
    std::optional<CyclicValue> rotation_R;
};

inline SeifertData make_seifert_data(std::string label, Int d, Int sigma, Int cusps, Int alpha,
                                     std::optional<Int> r = std::nullopt,
                                     std::optional<Int> big_r = std::nullopt) {
    if (d < 0 || alpha < 0)
        throw std::invalid_argument("seifert data: d and alpha must be non-negative");
    SeifertData s;
    s.label = std::move(label);
    s.d = std::move(d);
    s.sigma = std::move(sigma);
    s.cusps = std::move(cusps);
    s.alpha = std::move(alpha);
    if (r)
        s.rotation_r = CyclicValue(2 * s.d, *r);
    if (big_r)
        s.rotation_R = CyclicValue(4 * s.d, *big_r);
    if (s.rotation_r && s.rotation_R &&
        s.rotation_R->reduced_to(2 * s.d) != *s.rotation_r)
        throw consistency_error("seifert data '" + s.label + "': R does not reduce to r mod 2d");
    return s;
}

// A framed curve with its rotation recorded at up to three levels:
// r mod 2d, its mod-2 shadow r2, and optionally the lift R mod 4d.
struct FramedCurveRecord {
    std::string label;
    Int d = 0;
    CyclicValue r;                   // mod 2d
    CyclicValue r2;                  // mod 2
    std::optional<CyclicValue> R;    // mod 4d
};

inline FramedCurveRecord make_curve_record(std::string label, Int d, Int r, Int r2,
                                           std::optional<Int> big_r = std::nullopt) {
    if (d < 0)
        throw std::invalid_argument("curve record: d must be non-negative");
    FramedCurveRecord c;
    c.label = std::move(label);
    c.d = std::move(d);
    c.r = CyclicValue(2 * c.d, std::move(r));
    c.r2 = CyclicValue(2, std::move(r2));
    if (big_r)
        c.R = CyclicValue(4 * c.d, *big_r);
    return c;
}

// rd(x, y) = r(x) - r(y) in Z_{2d}; rotation differences form a cocycle:
// rd(x,y) + rd(y,z) = rd(x,z).
inline CyclicValue rotation_difference(const FramedCurveRecord& x, const FramedCurveRecord& y) {
    if (x.d != y.d)
        throw std::invalid_argument("rotation_difference: modulus mismatch");
    return x.r - y.r;
}

// True iff all supplied reduction levels are congruent: R -> r mod 2d and
// r -> r2 mod 2. With d = 0 the first comparison is equality in Z.
inline bool lift_check(const FramedCurveRecord& x) {
    if (x.R && x.R->reduced_to(2 * x.d) != x.r)
        return false;
    return x.r.reduced_to(2) == x.r2;
}

// The complete invariant of an immersed 3-sphere from a singular Seifert
// surface: (3 sigma + cusps) / 2. The total is even for every generic map.
inline Int smale_invariant(const Int& sigma, const Int& cusps) {
    Int total = 3 * sigma + cusps;
    if (!is_even(total))
        throw parity_error("smale_invariant: 3*sigma + cusps is odd; no generic map realizes this");
    return total / 2;
}

// For a generic map of a CLOSED oriented 4-manifold, 3 sigma + cusps = 0.
inline bool closed_cusp_check(const Int& sigma, const Int& cusps) {
    return 3 * sigma + cusps == 0;
}

// The trivial-normal-bundle invariant 3/2 (sigma - alpha) + 1/2 cusps,
// applicable when chi = 0; always an integer for realizable data.
inline Int takase_invariant(const Int& sigma, const Int& alpha, const Int& cusps) {
    if (alpha < 0)
        throw std::invalid_argument("takase_invariant: alpha must be non-negative");
    Int total = 3 * (sigma - alpha) + cusps;
    if (!is_even(total))
        throw parity_error("takase_invariant: 3(sigma - alpha) + cusps is odd");
    return total / 2;
}

// I = 3 sigma - 3 alpha + cusps + R in Z_{4d}; always even for realizable
// census data, odd totals are rejected.
inline CyclicValue invariant_I(const SeifertData& s) {
    if (!s.rotation_R)
        throw std::invalid_argument("invariant_I: rotation_R not supplied");
    CyclicValue value =
        CyclicValue(4 * s.d, 3 * s.sigma - 3 * s.alpha + s.cusps) + *s.rotation_R;
    if (!value.even())
        throw parity_error("invariant_I: odd result; census data is inconsistent");
    return value;
}

// The halving isomorphism 2 Z_{4d} -> Z_{2d}: I = 2k mod 4d maps to k mod 2d.
inline CyclicValue invariant_i_from_I(const CyclicValue& big_i) {
    if (big_i.modulus % 4 != 0)
        throw std::invalid_argument("invariant_i_from_I: modulus is not of the form 4d");
    if (!big_i.even())
        throw parity_error("invariant_i_from_I: I is odd");
    return big_i.half();
}

// j = 3 sigma - 3 alpha + cusps + r in Z_{2d}; always even, and equal to 2i
// whenever I is also computable.
inline CyclicValue invariant_j(const SeifertData& s) {
    if (!s.rotation_r)
        throw std::invalid_argument("invariant_j: rotation_r not supplied");
    CyclicValue value =
        CyclicValue(2 * s.d, 3 * s.sigma - 3 * s.alpha + s.cusps) + *s.rotation_r;
    if (!value.even())
        throw parity_error("invariant_j: odd result; census data is inconsistent");
    if (s.rotation_R) {
        CyclicValue i = invariant_i_from_I(invariant_I(s));
        CyclicValue twice_i = i + i;
        if (!(twice_i == value))
            throw consistency_error("invariant_j: j != 2i; rotation levels disagree");
    }
    return value;
}

// Two Seifert datasets for the SAME immersion must give the same total
// 3 sigma + cusps + r mod 2d (and mod 4d at the R level): gluing the two
// surfaces along the boundary produces a closed generic map, whose signature
// and cusp contributions cancel exactly.
inline bool seifert_consistency(const SeifertData& a, const SeifertData& b) {
    if (a.d != b.d)
        throw std::invalid_argument("seifert_consistency: datasets have different d");
    if (a.alpha != b.alpha)
        throw std::invalid_argument("seifert_consistency: datasets have different alpha");
    if (!a.rotation_r || !b.rotation_r)
        throw std::invalid_argument("seifert_consistency: rotation_r required on both sides");
    CyclicValue ta = CyclicValue(2 * a.d, 3 * a.sigma + a.cusps) + *a.rotation_r;
    CyclicValue tb = CyclicValue(2 * b.d, 3 * b.sigma + b.cusps) + *b.rotation_r;
    if (!(ta == tb))
        return false;
    if (a.rotation_R && b.rotation_R) {
        CyclicValue ra = CyclicValue(4 * a.d, 3 * a.sigma + a.cusps) + *a.rotation_R;
        CyclicValue rb = CyclicValue(4 * b.d, 3 * b.sigma + b.cusps) + *b.rotation_R;
        if (!(ra == rb))
            return false;
    }
    return true;
}

}  // namespace imm35
