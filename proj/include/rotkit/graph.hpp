#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rotkit/rational.hpp"
#include "rotkit/word.hpp"

namespace rotkit {

// Directed graph whose edges consume one digit each; cycles spell periodic
// digit words.  Presentations used here: the order-n window SFT (de Bruijn
// style) and the n-state prefix automaton, both modelling the same outer
// approximation of a beta-shift.
struct DigitGraph {
    struct Edge {
        int32_t from, to;
        Digit digit;
    };
    int32_t n_nodes = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int32_t>> out;  // node -> edge indices

    void finish();  // builds adjacency
};

// Full order-n model of a beta-shift with reference prefix u: nodes are all
// (n-1)-windows over {0,1,2}, and the window w·d gives an edge iff w·d <= u
// as equal-length words.  Edge digits are the first symbol of the window, so
// a cycle spells the periodic sequence it shadows.
struct SftGraph {
    int order = 0;
    std::vector<Digit> u;  // reference prefix, length = order
    DigitGraph g;

    std::vector<Digit> window_of(int32_t node) const;  // length order-1
};

SftGraph build_sft(const DigitWord& u, int n);

// Prefix automaton presenting the same sofic shift with only n states: state
// q = length of the longest suffix of the read word that is a prefix of u.
// An edge dies exactly when some border match would be followed by a digit
// larger than the corresponding symbol of u.  Cycle-mean hulls of this graph
// and of build_sft(u, n) coincide.
DigitGraph build_prefix_automaton(const std::vector<Digit>& u);
inline DigitGraph build_prefix_automaton(const DigitWord& u, int n) {
    return build_prefix_automaton(u.prefix_digits(static_cast<size_t>(n)));
}

struct MeanCycle {
    Rat value;        // d . (mean digit frequency of the cycle)
    DigitWord cycle;  // periodic witness, least rotation
    FreqVector freq;
};

// Exact maximum over directed cycles of d . freq(cycle).  Karp's dynamic
// program gives the optimum; a deterministic walk in the tight subgraph
// extracts a witness cycle.  Throws on acyclic graphs.
MeanCycle max_mean_cycle(const DigitGraph& g, const std::array<Rat, 3>& direction);

}  // namespace rotkit
