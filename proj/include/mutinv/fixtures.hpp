#pragma once

#include <string>
#include <vector>

#include "mutinv/exmat.hpp"

namespace mutinv {

// Triangulation quiver of the once-punctured torus: double arrows
// 1 => 2 => 3 => 1.
inline Quiver markov_quiver() {
    Quiver q;
    q.frozen = {false, false, false};
    q.arrows = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}};
    return q;
}

// Triangulation quiver of the torus minus a disk with one boundary marked
// point: four mutable vertices plus the frozen boundary vertex 5.
inline Quiver rank4_quiver(bool with_frozen = true) {
    Quiver q;
    q.frozen = {false, false, false, false};
    q.arrows = {{1, 0}, {1, 0}, {2, 1}, {3, 1}, {2, 3}, {0, 2}, {0, 3}};
    if (with_frozen) {
        q.frozen.push_back(true);
        q.arrows.emplace_back(3, 4);
        q.arrows.emplace_back(4, 2);
    }
    return q;
}

inline std::vector<std::string> fixture_names() {
    return {"markov", "variant", "rank4", "rank4-nofrozen", "a3-hexagon"};
}

inline ExchangeMatrix fixture_matrix(const std::string& name) {
    if (name == "markov") {
        return ExchangeMatrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
    }
    if (name == "variant") {
        return ExchangeMatrix({{0, 1, -1}, {-4, 0, 2}, {4, -2, 0}});
    }
    if (name == "rank4") {
        return ExchangeMatrix({{0, -2, 1, 1, 0},
                               {2, 0, -1, -1, 0},
                               {-1, 1, 0, 1, -1},
                               {-1, 1, -1, 0, 1},
                               {0, 0, 1, -1, 0}},
                              {true, true, true, true, false});
    }
    if (name == "rank4-nofrozen") {
        return ExchangeMatrix({{0, -2, 1, 1}, {2, 0, -1, -1}, {-1, 1, 0, 1}, {-1, 1, -1, 0}});
    }
    if (name == "a3-hexagon") {
        // quiver 1 -> 2 -> 3 from the hexagon triangulation
        return ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    }
    throw param_error("unknown fixture '" + name + "'");
}

}  // namespace mutinv
