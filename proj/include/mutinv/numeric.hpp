#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutinv {

// All integer arithmetic is exact and arbitrary precision; no floating
// point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Error taxonomy. Domain failures throw subclasses of `error`; the CLI maps
// them to exit code 1, usage problems to exit code 2.

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct shape_error : error { using error::error; };
struct index_error : error { using error::error; };
struct param_error : error { using error::error; };
struct validation_error : error { using error::error; };
struct parse_error : error { using error::error; };
struct divide_by_zero : error { using error::error; };
struct degree_error : error { using error::error; };
// Exchange produced a non-Laurent quotient; never expected on valid input.
struct laurent_violation : error { using error::error; };
// A Vieta jump left the integers; the input was off the invariant level set.
struct non_integral_result : error { using error::error; };
struct not_a_solution : error { using error::error; };
struct internal_error : error { using error::error; };

// ---------------------------------------------------------------------------

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw param_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// gcd of all entries, 0 for the zero vector
inline Int content(std::span<const Int> v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline std::string to_string(const Int& n) { return n.str(); }

// Exact rationals print as "p" or "p/q"; cpp_rational keeps q > 0 and
// gcd(p, q) = 1.
inline std::string to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace mutinv
