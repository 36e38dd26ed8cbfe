#pragma once

#include <array>
#include <string>
#include <vector>

#include "rotkit/rational.hpp"

namespace rotkit {

using Pt = std::array<Rat, 2>;

// Convex polygon with exact rational vertices, stored counterclockwise with
// no three collinear vertices retained, starting from the lexicographically
// smallest vertex.  Degenerate hulls (a point, a segment) keep 1 or 2
// vertices.  Two polygons are equal iff their vertex lists are equal.
class RatPolygon {
public:
    RatPolygon() = default;
    static RatPolygon hull_of(std::vector<Pt> points);

    const std::vector<Pt>& vertices() const { return v_; }
    bool empty() const { return v_.empty(); }
    size_t size() const { return v_.size(); }

    bool contains(const Pt& p) const;               // boundary counts as inside
    bool contains(const RatPolygon& other) const;   // convexity: vertex check
    bool operator==(const RatPolygon& o) const { return v_ == o.v_; }

    // Squared Euclidean distance from p to this polygon (0 if inside).
    Rat dist2(const Pt& p) const;

private:
    std::vector<Pt> v_;
};

// Exact Hausdorff distance between convex polygons, reported as a rational
// upper bound: exact when the distance is rational, otherwise rounded up by
// less than 2^-32.
Rat hausdorff(const RatPolygon& p, const RatPolygon& q);

// Rational upper bound on sqrt(x), exact for perfect squares.
Rat sqrt_upper(const Rat& x);

std::string polygon_str(const RatPolygon& p);

}  // namespace rotkit
