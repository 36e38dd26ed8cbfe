#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rotkit/rational.hpp"
#include "rotkit/word.hpp"

namespace rotkit {

// The figure eight space: two oriented circles of lengths 5 and 3 wedged at
// a vertex.  S1 carries the unit edges C c 1 2 2r at [0,1)...[4,5), S2 the
// edges A B b at [0,1)...[2,3).  The wedge point is canonically (S1, 0).
enum class Circle : uint8_t { S1, S2 };

struct EightPoint {
    Circle circle;
    Rat pos;
    bool operator==(const EightPoint& o) const { return circle == o.circle && pos == o.pos; }
};

EightPoint make_point(Circle c, Rat pos);
EightPoint parse_point(const std::string& text);  // "S1:149/40"
std::string point_str(const EightPoint& p);

// Clip points: distance (5-3t)/10 from p = (S1,4) on either side.
EightPoint ell(const Rat& t);
EightPoint r_pt(const Rat& t);

// The base map: each edge expands uniformly onto a full circle, orientation
// per the upper/lower-case edge naming.
EightPoint apply_f(const EightPoint& x);

// The stunted family: constant f(ell(t)) on the closed interval [ell(t), r(t)].
EightPoint apply_ft(const Rat& t, const EightPoint& x);

// Displacement observable: (0,1) on B and b, (1,0) on 2 and 2r, else (0,0).
std::array<int, 2> gamma(const EightPoint& x);

struct OrbitResult {
    EightPoint final_point;
    std::array<int64_t, 2> gamma_sum;
    std::array<Rat, 2> estimate;
};
OrbitResult orbit_cocycle(const Rat& t, const EightPoint& x, int64_t steps);

// First-return map to C' u 1' u 2: f^2 on C' = [1/3,3/5], f on 1' = [2,14/5]
// and on the edge 2 = [3,4].  Throws outside the domain.
EightPoint return_F(const EightPoint& x);

struct ThetaEvent {
    enum Kind { GapAbove, Backtrack, Revisit } kind;
    size_t step;
    Digit digit;
};

struct ThetaResult {
    DigitWord word;   // exact (eventually periodic) unless depth-limited
    bool depth_limited = false;
    std::vector<ThetaEvent> events;
};

// Supremal itinerary over return-map orbits starting at or below ell(t):
// greedy digit extraction through the ordered pieces C' < 1' < 2, with gap
// and backtrack events resolving to an exact 2-bar tail, and rational orbit
// revisits resolving to an exact eventually periodic word.
ThetaResult theta(const Rat& t, size_t depth);

struct KneadingResult {
    Rat t;
    DigitWord theta_prefix;
    DigitWord kneading;  // max_maximal_below(theta)
    size_t depth;
    bool exact = false;  // kneading word is eventually periodic
    MaximalVerdict certificate{MaximalVerdict::Undecided, 0};
    std::vector<ThetaEvent> events;
};
KneadingResult kneading_prefix(const Rat& t, size_t depth);

}  // namespace rotkit
