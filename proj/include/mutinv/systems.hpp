#pragma once

#include <string>
#include <vector>

#include "mutinv/numeric.hpp"

namespace mutinv {

// The three Diophantine systems plus the auxiliary tau coordinates used by
// the variant descent. Tuple entries are (a,b,c), (a,b,c), (A,B,C) and
// (a,b,c,d,e) respectively; the rank-4 entry e is frozen.
enum class System { markov, variant, variant_tau, rank4 };

inline int system_arity(System s) { return s == System::rank4 ? 5 : 3; }

// number of mutation maps mu_1..mu_m
inline int system_map_count(System s) { return s == System::rank4 ? 4 : 3; }

// value of T at the fundamental all-ones solution
inline Int system_constant(System s) {
    switch (s) {
        case System::markov: return 3;
        case System::variant: return 7;
        case System::variant_tau: return 7;
        case System::rank4: return 9;
    }
    throw internal_error("system_constant: bad system");
}

inline std::string system_name(System s) {
    switch (s) {
        case System::markov: return "markov";
        case System::variant: return "variant";
        case System::variant_tau: return "variant-tau";
        case System::rank4: return "rank4";
    }
    throw internal_error("system_name: bad system");
}

inline System parse_system(const std::string& name) {
    if (name == "markov") return System::markov;
    if (name == "variant") return System::variant;
    if (name == "variant-tau") return System::variant_tau;
    if (name == "rank4") return System::rank4;
    throw param_error("unknown system '" + name + "'");
}

// The closed-form mutation maps, applied to a tuple of any exact arithmetic
// type (rationals for the numeric layer, rational functions for the symbolic
// one). k is 0-based. The rank-4 maps are the composite maps including the
// relabeling, so mu_1 = mu_2^{-1} and mu_3 = mu_4^{-1} there; the others are
// componentwise involutions.
template <class T>
std::vector<T> apply_system_map(System sys, int k, const std::vector<T>& t) {
    if (static_cast<int>(t.size()) != system_arity(sys))
        throw shape_error("apply_system_map: tuple arity mismatch");
    if (k < 0 || k >= system_map_count(sys))
        throw index_error("apply_system_map: map index out of range");
    std::vector<T> r = t;
    switch (sys) {
        case System::markov: {
            const T &a = t[0], &b = t[1], &c = t[2];
            if (k == 0) r[0] = (b * b + c * c) / a;
            if (k == 1) r[1] = (c * c + a * a) / b;
            if (k == 2) r[2] = (a * a + b * b) / c;
            break;
        }
        case System::variant: {
            const T &a = t[0], &b = t[1], &c = t[2];
            if (k == 0) r[0] = (b * b * b * b + c * c * c * c) / a;
            if (k == 1) r[1] = (a + c * c) / b;
            if (k == 2) r[2] = (a + b * b) / c;
            break;
        }
        case System::variant_tau: {
            const T &a = t[0], &b = t[1], &c = t[2];
            if (k == 0) r[0] = (b * b + c * c) / a;
            if (k == 1) r[1] = ((a + c) * (a + c)) / b;
            if (k == 2) r[2] = ((a + b) * (a + b)) / c;
            break;
        }
        case System::rank4: {
            const T &a = t[0], &b = t[1], &c = t[2], &d = t[3], &e = t[4];
            if (k == 0) r = {b, (b * b + c * d) / a, c, d, e};
            if (k == 1) r = {(a * a + c * d) / b, a, c, d, e};
            if (k == 2) r = {d, a, b, (a * e + b * d) / c, e};
            if (k == 3) r = {b, c, (a * c + b * e) / d, a, e};
            break;
        }
    }
    return r;
}

// Index of the inverse map: mutations are involutive except for rank4 where
// mu_1 <-> mu_2 and mu_3 <-> mu_4.
inline int inverse_map_index(System sys, int k) {
    if (sys != System::rank4) return k;
    return k ^ 1;
}

}  // namespace mutinv
