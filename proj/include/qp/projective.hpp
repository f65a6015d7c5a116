#pragma once

// Points of the projective line over Q, stored with the last nonzero
// coordinate normalized to 1, so equality is plain field equality.

#include <string>
#include <vector>

#include "qp/rational.hpp"

namespace qp {

struct ProjectiveLinePoint {
    Rat x, y;

    ProjectiveLinePoint() : x(0), y(1) {}
    ProjectiveLinePoint(const Rat& px, const Rat& py) {
        if (px == 0 && py == 0) throw BadParamsError("[0:0] is not a projective point");
        if (py != 0) {
            x = px / py;
            y = 1;
        } else {
            x = 1;
            y = 0;
        }
    }

    static ProjectiveLinePoint infinity() { return ProjectiveLinePoint(Rat(1), Rat(0)); }
    static ProjectiveLinePoint affine(const Rat& v) { return ProjectiveLinePoint(v, Rat(1)); }

    bool is_infinity() const { return y == 0; }

    bool operator==(const ProjectiveLinePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ProjectiveLinePoint& o) const { return !(*this == o); }
    bool operator<(const ProjectiveLinePoint& o) const { // infinity sorts last
        if (y != o.y) return y > o.y;
        return x < o.x;
    }

    std::string str() const { return "[" + x.get_str() + ":" + y.get_str() + "]"; }
};

inline bool all_distinct(const std::vector<ProjectiveLinePoint>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return false;
    return true;
}

} // namespace qp
