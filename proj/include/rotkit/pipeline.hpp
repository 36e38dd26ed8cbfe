#pragma once

#include <string>
#include <vector>

#include "rotkit/dfpoly.hpp"
#include "rotkit/eight.hpp"
#include "rotkit/polygon.hpp"

namespace rotkit {

// Projective change of coordinates between digit frequencies and rotation
// vectors: (a0,a1,a2) -> (a2/(1+a0), a0/(1+a0)).
Pt project_pi(const FreqVector& a);
FreqVector pi_inverse(const Pt& p);  // validated post hoc: result must lie in the simplex

// Maps a polygon from the (a0,a2) simplex chart to the rotation-vector plane.
RatPolygon project_polygon(const RatPolygon& delta_chart);

struct RotsetReport {
    Rat t;
    int order = 0;
    int max_period = 0;
    size_t kneading_depth = 0;
    DigitWord theta_prefix, kneading;
    bool kneading_exact = false;
    RatPolygon inner, outer;  // rotation-vector chart
    std::vector<Witness> witnesses;
    bool closed = false;
    // "rational-regular" when inner == outer certifies the set; otherwise
    // "open-irrational" with the observation depth (never a claim about
    // regular vs exceptional type, which no finite prefix can decide).
    std::string classification;
    size_t class_depth = 0;
    Rat gap;  // Hausdorff bound between inner and outer
};

RotsetReport rotation_set(const Rat& t, int order, int max_period, size_t kneading_depth = 0);

struct Plateau {
    size_t first = 0, last = 0;  // grid indices, inclusive
    Rat t_first, t_last;
    RatPolygon outer;
};

struct PlateauList {
    Rat t0, t1;
    int steps = 0, depth = 0;
    std::vector<Rat> grid;
    std::vector<int> plateau_id;      // per grid point
    std::vector<size_t> n_vertices;   // outer vertex count per grid point
    std::vector<char> closed;         // per grid point
    std::vector<Plateau> plateaus;
};

// Equal-polygon grouping of outer rotation sets over an even rational grid.
// The parallel version and the serial reference produce identical results.
PlateauList scan(const Rat& t0, const Rat& t1, int steps, int depth, int max_period = 0);
PlateauList scan_serial(const Rat& t0, const Rat& t1, int steps, int depth, int max_period = 0);

inline Rat hausdorff_pi(const RatPolygon& p, const RatPolygon& q) { return hausdorff(p, q); }

}  // namespace rotkit
