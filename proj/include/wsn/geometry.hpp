#pragma once

#include <cmath>

namespace wsn {

// A point in the deployment field, in meters. The base station may sit on
// the field edge, so Position itself carries no bounds; SimConfig::validate
// and deploy() enforce them where they apply.
struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Position& a, const Position& b) {
    return a.x == b.x && a.y == b.y;
}

inline double squared_distance(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(const Position& a, const Position& b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace wsn
