#pragma once

// Test-only oracles, independent of the library's optimization paths.

#include <algorithm>
#include <functional>
#include <vector>

#include "rotkit/graph.hpp"
#include "rotkit/polygon.hpp"

namespace rotkit::oracle {

// All simple cycles of a DigitGraph as digit words, by DFS from each minimal
// node; intended for small graphs only.
inline std::vector<std::vector<Digit>> simple_cycles(const DigitGraph& g) {
    std::vector<std::vector<Digit>> cycles;
    std::vector<char> on_path(g.n_nodes, 0);
    std::vector<Digit> digits;

    std::function<void(int32_t, int32_t)> dfs = [&](int32_t start, int32_t v) {
        on_path[v] = 1;
        for (int32_t eid : g.out[v]) {
            const auto& e = g.edges[eid];
            if (e.to < start) continue;  // canonical: smallest node on the cycle is `start`
            digits.push_back(e.digit);
            if (e.to == start)
                cycles.push_back(digits);
            else if (!on_path[e.to])
                dfs(start, e.to);
            digits.pop_back();
        }
        on_path[v] = 0;
    };
    for (int32_t s = 0; s < g.n_nodes; ++s) dfs(s, s);
    return cycles;
}

inline FreqVector cycle_freq(const std::vector<Digit>& c) {
    std::array<long, 3> counts{0, 0, 0};
    for (Digit d : c) counts[d]++;
    FreqVector f;
    for (int i = 0; i < 3; ++i) f[i] = make_rat(counts[i], static_cast<long>(c.size()));
    return f;
}

// Brute-force maximum of direction . freq over an enumerated cycle list.
inline Rat brute_max_mean(const std::vector<std::vector<Digit>>& cycles,
                          const std::array<Rat, 3>& d) {
    bool have = false;
    Rat best;
    for (const auto& c : cycles) {
        FreqVector f = cycle_freq(c);
        Rat v = d[0] * f[0] + d[1] * f[1] + d[2] * f[2];
        if (!have || v > best) {
            best = v;
            have = true;
        }
    }
    if (!have) throw std::runtime_error("brute_max_mean: acyclic");
    return best;
}

inline Rat brute_max_mean(const DigitGraph& g, const std::array<Rat, 3>& d) {
    return brute_max_mean(simple_cycles(g), d);
}

// Hull of all simple-cycle frequencies in the (a0, a2) chart.
inline RatPolygon brute_cycle_hull(const DigitGraph& g) {
    std::vector<Pt> pts;
    for (const auto& c : simple_cycles(g)) {
        FreqVector f = cycle_freq(c);
        pts.push_back({f[0], f[2]});
    }
    return RatPolygon::hull_of(pts);
}

}  // namespace rotkit::oracle
