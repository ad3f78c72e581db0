#pragma once
// Connected-sum arithmetic on immersion classes at the level of the complete
// invariant (c, i). Sums act on algebraic summaries only: degree-2 cohomology
// adds as a direct sum, Wu invariants concatenate, the new fiber modulus is
// 2 gcd(d_1, d_2), and fiber labels add after reduction. The sphere class
// with label 0 is neutral for both operations (the sum formulas force this;
// the source semigroup has no named identity).

#include "imm35/classify.hpp"

namespace imm35 {

struct SemigroupElement {
    std::vector<std::string> summands;  // display labels of the connected summands
    AbelianShape h1, h2, h3;
    std::vector<Int> c;  // concatenated Wu coordinates across summands
    Int d_chi;           // d(chi) for chi = 2c; gcd accumulates under sums
    CyclicValue i;       // fiber label, modulus 2 d(chi) = 4 d(c)

    bool operator==(const SemigroupElement& o) const = default;
};

inline SemigroupElement make_semigroup_element(std::vector<std::string> summands,
                                               AbelianShape h1, AbelianShape h2,
                                               AbelianShape h3, std::vector<Int> c,
                                               Int d_chi, Int i_label) {
    if (d_chi < 0)
        throw std::invalid_argument("semigroup element: d(chi) must be non-negative");
    SemigroupElement e;
    e.summands = std::move(summands);
    e.h1 = std::move(h1);
    e.h2 = std::move(h2);
    e.h3 = std::move(h3);
    e.c = std::move(c);
    e.d_chi = d_chi;
    e.i = CyclicValue(2 * d_chi, std::move(i_label));
    return e;
}

// The class of an immersion of the 3-sphere: trivial homology summary in the
// middle degrees, fiber Z.
inline SemigroupElement sphere_immersion(const Int& i_label, std::string label = "S3") {
    return make_semigroup_element({std::move(label)}, {}, {}, {0, {}}, {}, 0, i_label);
}

inline SemigroupElement from_manifold(const ManifoldAnalysis& m, std::string label,
                                      const GroupClass& c, const Int& i_label) {
    Int d_c = divisibility(m, c);
    return make_semigroup_element({std::move(label)}, m.h1().shape(), m.h2().shape(),
                                  m.homology_z[3].shape(), c.all_coords(), 2 * d_c, i_label);
}

inline SemigroupElement connected_sum(const SemigroupElement& a, const SemigroupElement& b) {
    SemigroupElement e;
    e.summands = a.summands;
    e.summands.insert(e.summands.end(), b.summands.begin(), b.summands.end());
    e.h1 = direct_sum(a.h1, b.h1);
    e.h2 = direct_sum(a.h2, b.h2);
    // Summaries record the summands, so H^3 direct-sums like the others; the
    // glued manifold itself of course has a single top class.
    e.h3 = direct_sum(a.h3, b.h3);
    e.c = a.c;
    e.c.insert(e.c.end(), b.c.begin(), b.c.end());
    e.d_chi = gcd(a.d_chi, b.d_chi);  // gcd(x, 0) = x, so d = 0 iff both are 0
    Int modulus = 2 * e.d_chi;
    e.i = a.i.reduced_to(modulus) + b.i.reduced_to(modulus);
    return e;
}

// Connected sum with an immersed sphere of label n: c and the summary are
// unchanged, the fiber label shifts by n reduced into the fiber.
inline SemigroupElement sum_with_sphere(const SemigroupElement& a, const Int& n) {
    SemigroupElement e = a;
    e.i = a.i + CyclicValue(a.i.modulus, n);
    return e;
}

}  // namespace imm35
