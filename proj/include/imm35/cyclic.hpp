#pragma once
// Residues in Z_m. Modulus 0 encodes the infinite cyclic group Z, so all
// formulas degrade to plain integer identities when a divisibility vanishes.

#include "imm35/integer.hpp"

#include <ostream>

namespace imm35 {

struct CyclicValue {
    Int modulus;  // >= 0; 0 means Z
    Int value;    // reduced into [0, modulus) when modulus > 0

    CyclicValue() : modulus(0), value(0) {}
    CyclicValue(Int m, Int v) : modulus(std::move(m)), value(std::move(v)) {
        if (modulus < 0)
            throw std::invalid_argument("CyclicValue: negative modulus");
        if (modulus > 0)
            value = mod_floor(value, modulus);
    }

    bool operator==(const CyclicValue& o) const = default;

    // Reduction Z_m -> Z_m', defined when m' | m (any m' when m = 0).
    CyclicValue reduced_to(const Int& new_modulus) const {
        if (new_modulus < 0)
            throw std::invalid_argument("reduced_to: negative modulus");
        if (new_modulus == 0) {
            if (modulus != 0)
                throw std::invalid_argument("reduced_to: cannot lift Z_m to Z");
            return *this;
        }
        if (modulus != 0 && modulus % new_modulus != 0)
            throw std::invalid_argument("reduced_to: target modulus does not divide source");
        return CyclicValue(new_modulus, value);
    }

    // Parity is well defined when the modulus is even or 0.
    bool even() const {
        if (modulus != 0 && !is_even(modulus))
            throw std::logic_error("CyclicValue::even: parity undefined for odd modulus");
        return is_even(value);
    }

    // The inverse of doubling 2Z_{2m} -> Z_m; requires an even value and
    // a modulus divisible by 4 (or 0).
    CyclicValue half() const {
        if (!even())
            throw parity_error("CyclicValue::half: value is odd");
        if (modulus != 0 && modulus % 4 != 0)
            throw std::logic_error("CyclicValue::half: modulus not divisible by 4");
        return CyclicValue(modulus / 2, value / 2);
    }

    friend CyclicValue operator+(const CyclicValue& a, const CyclicValue& b) {
        require_same_modulus(a, b);
        return CyclicValue(a.modulus, a.value + b.value);
    }
    friend CyclicValue operator-(const CyclicValue& a, const CyclicValue& b) {
        require_same_modulus(a, b);
        return CyclicValue(a.modulus, a.value - b.value);
    }
    friend CyclicValue operator-(const CyclicValue& a) { return CyclicValue(a.modulus, -a.value); }

    friend std::ostream& operator<<(std::ostream& out, const CyclicValue& a) {
        out << a.value;
        if (a.modulus > 0)
            out << " (mod " << a.modulus << ")";
        return out;
    }

private:
    static void require_same_modulus(const CyclicValue& a, const CyclicValue& b) {
        if (a.modulus != b.modulus)
            throw std::invalid_argument("CyclicValue: modulus mismatch");
    }
};

}  // namespace imm35
