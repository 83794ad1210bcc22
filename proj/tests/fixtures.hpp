#pragma once

// Shared quiver fixtures for the test suites. Vertex order is fixed so
// dimension vectors in the tests are stable.

#include <utility>
#include <vector>

#include "qstab/quiver.hpp"

namespace fixtures {

using qstab::Quiver;

// 1 -> 2, 1 -> 3, 2 -> 4, 3 -> 4 (the commutative-square orientation)
inline Quiver a3tilde() {
    return Quiver({"1", "2", "3", "4"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

inline const char* a3tilde_json() {
    return R"({"vertices":["1","2","3","4"],"arrows":[["1","2"],["1","3"],["2","4"],["3","4"]]})";
}

// oriented triangle with a shortcut: 1 -> 2 -> 3 and 1 -> 3
inline Quiver a2tilde() {
    return Quiver({"1", "2", "3"}, {{0, 1}, {1, 2}, {0, 2}});
}

// double arrow 1 => 2
inline Quiver kronecker() {
    return Quiver({"1", "2"}, {{0, 1}, {0, 1}});
}

// central vertex 0 with four outward arrows
inline Quiver d4tilde() {
    return Quiver({"0", "1", "2", "3", "4"}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

// three arms of length 2 pointing into the center c
inline Quiver e6tilde() {
    return Quiver({"c", "a1", "a2", "b1", "b2", "d1", "d2"},
                  {{2, 1}, {1, 0}, {4, 3}, {3, 0}, {6, 5}, {5, 0}});
}

inline Quiver a2() { return Quiver({"1", "2"}, {{0, 1}}); }

inline Quiver a3() { return Quiver({"1", "2", "3"}, {{0, 1}, {1, 2}}); }

inline Quiver d4() { return Quiver({"0", "1", "2", "3"}, {{0, 1}, {0, 2}, {0, 3}}); }

inline Quiver e6() {
    return Quiver({"c", "a1", "a2", "b1", "b2", "d1"},
                  {{2, 1}, {1, 0}, {4, 3}, {3, 0}, {5, 0}});
}

// triple arrow: the smallest wild quiver
inline Quiver wild_kronecker() { return Quiver({"1", "2"}, {{0, 1}, {0, 1}, {0, 1}}); }

// five-arm star: wild (one arm beyond D4~)
inline Quiver wild_star() {
    return Quiver({"0", "1", "2", "3", "4", "5"}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
}

}  // namespace fixtures
