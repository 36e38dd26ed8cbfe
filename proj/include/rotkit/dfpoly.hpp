#pragma once

#include <utility>
#include <vector>

#include "rotkit/graph.hpp"
#include "rotkit/polygon.hpp"
#include "rotkit/word.hpp"

namespace rotkit {

// Digit frequency sets live in the 2-simplex; everything here works in the
// (alpha0, alpha2) chart so the later projective map stays rational.
inline Pt chart(const FreqVector& f) { return {f[0], f[2]}; }

struct OuterResult {
    RatPolygon poly;
    // Support probes behind each retained vertex, in vertex order.
    std::vector<std::pair<Pt, DigitWord>> witnesses;
};

// Exact convex hull of the cycle-mean frequency vectors of g, found by
// directional refinement: probe the outward normal of every tentative hull
// edge until no probe lands strictly outside.
OuterResult outer_polytope(const DigitGraph& g);

struct Witness {
    DigitWord word;  // periodic, least rotation
    FreqVector frequency;
};

struct InnerResult {
    RatPolygon poly;
    std::vector<Witness> witnesses;  // one per vertex, in vertex order
};

// Hull of digit frequencies of periodic words of period <= max_period lying
// in B(w).  For a finite prefix w the membership test is conservative: a
// witness is kept only when every shift comparison resolves strictly inside
// the observable window.
InnerResult inner_polytope(const DigitWord& w, int max_period);

// Naive serial reference: enumerates all 3^p words instead of Lyndon
// representatives.  Kept for testing and benchmarks.
InnerResult inner_polytope_reference(const DigitWord& w, int max_period);

struct DfApprox {
    RatPolygon inner, outer;
    int order = 0;
    int max_period = 0;
    std::vector<Witness> witnesses;        // inner vertex certificates
    std::vector<std::pair<Pt, DigitWord>> outer_witnesses;
    bool closed() const { return inner == outer; }
};

// Certified two-sided approximation of DF(w) at the given order.
DfApprox df_approx(const DigitWord& w, int n, int max_period);

}  // namespace rotkit
