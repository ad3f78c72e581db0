#pragma once
// Exact unbounded integer arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace imm35 {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline bool is_even(const Int& a) { return a % 2 == 0; }

// Least non-negative residue; m must be positive.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

// Raised when census data violates an integrality or parity theorem.
struct parity_error : std::domain_error {
    explicit parity_error(const std::string& what) : std::domain_error(what) {}
};

// Raised when two pieces of census data contradict each other.
struct consistency_error : std::domain_error {
    explicit consistency_error(const std::string& what) : std::domain_error(what) {}
};

// Raised on malformed input files.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace imm35
