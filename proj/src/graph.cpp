#include "rotkit/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rotkit {

void DigitGraph::finish() {
    out.assign(n_nodes, {});
    for (size_t i = 0; i < edges.size(); ++i)
        out[edges[i].from].push_back(static_cast<int32_t>(i));
}

std::vector<Digit> SftGraph::window_of(int32_t node) const {
    std::vector<Digit> w(order - 1);
    for (int i = order - 2; i >= 0; --i) {
        w[i] = static_cast<Digit>(node % 3);
        node /= 3;
    }
    return w;
}

SftGraph build_sft(const DigitWord& u, int n) {
    if (n < 2) throw std::invalid_argument("build_sft: order must be >= 2");
    if (u.observable() < static_cast<size_t>(n))
        throw std::invalid_argument("build_sft: reference prefix shorter than order");
    if (n > 10)
        throw std::invalid_argument(
            "build_sft: window model capped at order 10; use the prefix automaton");

    SftGraph s;
    s.order = n;
    s.u = u.prefix_digits(static_cast<size_t>(n));

    int32_t nodes = 1;
    for (int i = 0; i < n - 1; ++i) nodes *= 3;
    s.g.n_nodes = nodes;

    std::vector<Digit> w(n - 1);
    for (int32_t node = 0; node < nodes; ++node) {
        int32_t v = node;
        for (int i = n - 2; i >= 0; --i) {
            w[i] = static_cast<Digit>(v % 3);
            v /= 3;
        }
        for (Digit d = 0; d <= 2; ++d) {
            // Window w.d admissible iff w.d <= u as equal-length words.
            bool le = true;
            for (int i = 0; i < n; ++i) {
                Digit wi = (i < n - 1) ? w[i] : d;
                if (wi < s.u[i]) break;
                if (wi > s.u[i]) {
                    le = false;
                    break;
                }
            }
            if (!le) continue;
            int32_t to = (node % (nodes / 3)) * 3 + d;
            s.g.edges.push_back({node, to, w[0]});
        }
    }
    s.g.finish();
    return s;
}

DigitGraph build_prefix_automaton(const std::vector<Digit>& u) {
    const int n = static_cast<int>(u.size());
    if (n < 2) throw std::invalid_argument("prefix automaton: need a prefix of length >= 2");

    // fail[j] = longest proper border of u[0..j-1]; fail[0] = -1 sentinel.
    std::vector<int> fail(n + 1, 0);
    fail[0] = -1;
    for (int i = 1; i < n; ++i) {
        int k = fail[i];
        while (k > 0 && u[k] != u[i]) k = fail[k];
        fail[i + 1] = (u[k] == u[i]) ? k + 1 : 0;
    }

    DigitGraph g;
    g.n_nodes = n;
    for (int q = 0; q < n; ++q) {
        for (Digit d = 0; d <= 2; ++d) {
            // Forbidden iff some border match of the history would see a
            // digit larger than the next symbol of u at that anchor.
            bool forbidden = false;
            int extend = -1;
            for (int j = q; j >= 0; j = fail[j]) {
                if (d > u[j]) {
                    forbidden = true;
                    break;
                }
                if (extend < 0 && d == u[j]) extend = j + 1;
            }
            if (forbidden) continue;
            int to = (extend < 0) ? 0 : extend;
            if (to == n) to = fail[n];  // window equals u exactly; keep tracking borders
            g.edges.push_back({q, to, d});
        }
    }
    g.finish();
    return g;
}

namespace {

constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min() / 4;

struct ScaledDir {
    std::array<int64_t, 3> w;
    Int denom;
};

ScaledDir scale_direction(const std::array<Rat, 3>& d, int32_t n_nodes) {
    Int l;
    mpz_lcm(l.get_mpz_t(), d[0].get_den().get_mpz_t(), d[1].get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[2].get_den().get_mpz_t());
    ScaledDir sd;
    sd.denom = l;
    int64_t maxw = 0;
    for (int i = 0; i < 3; ++i) {
        Int z = d[i].get_num() * (l / d[i].get_den());
        auto v = to_i64(z);
        if (!v) throw std::overflow_error("max_mean_cycle: direction too large");
        sd.w[i] = *v;
        maxw = std::max(maxw, std::abs(*v));
    }
    if (static_cast<__int128>(maxw) * (n_nodes + 2) >= (static_cast<__int128>(1) << 62))
        throw std::overflow_error("max_mean_cycle: direction too large for this graph");
    return sd;
}

// Least rotation of a cyclic digit word.
std::vector<Digit> least_rotation(const std::vector<Digit>& s) {
    const size_t n = s.size();
    size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Digit a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i = i + k + 1;
        else
            j = j + k + 1;
        if (i == j) ++j;
        k = 0;
    }
    size_t start = std::min(i, j);
    std::vector<Digit> r(n);
    for (size_t t = 0; t < n; ++t) r[t] = s[(start + t) % n];
    return r;
}

}  // namespace

MeanCycle max_mean_cycle(const DigitGraph& g, const std::array<Rat, 3>& direction) {
    if (g.n_nodes == 0 || g.edges.empty())
        throw std::invalid_argument("max_mean_cycle: empty graph");
    const int32_t V = g.n_nodes;
    ScaledDir sd = scale_direction(direction, V);

    // Karp with a virtual source (D_0 = 0 everywhere), two passes to keep
    // memory linear: first the final layer, then the per-layer minima.
    std::vector<int64_t> prev(V, 0), cur(V);
    for (int32_t k = 1; k <= V; ++k) {
        std::fill(cur.begin(), cur.end(), kNegInf);
        for (const auto& e : g.edges) {
            if (prev[e.from] == kNegInf) continue;
            int64_t cand = prev[e.from] + sd.w[e.digit];
            if (cand > cur[e.to]) cur[e.to] = cand;
        }
        prev.swap(cur);
    }
    std::vector<int64_t> last = prev;

    std::vector<int64_t> min_num(V, 0), min_den(V, 0);  // den 0 = unset
    prev.assign(V, 0);
    for (int32_t k = 0; k < V; ++k) {
        if (k > 0) {
            std::fill(cur.begin(), cur.end(), kNegInf);
            for (const auto& e : g.edges) {
                if (prev[e.from] == kNegInf) continue;
                int64_t cand = prev[e.from] + sd.w[e.digit];
                if (cand > cur[e.to]) cur[e.to] = cand;
            }
            prev.swap(cur);
        }
        for (int32_t v = 0; v < V; ++v) {
            if (prev[v] == kNegInf || last[v] == kNegInf) continue;
            int64_t num = last[v] - prev[v], den = V - k;
            if (min_den[v] == 0 || static_cast<__int128>(num) * min_den[v] <
                                       static_cast<__int128>(min_num[v]) * den) {
                min_num[v] = num;
                min_den[v] = den;
            }
        }
    }

    bool found = false;
    int64_t best_num = 0, best_den = 1;
    for (int32_t v = 0; v < V; ++v) {
        if (last[v] == kNegInf || min_den[v] == 0) continue;
        if (!found || static_cast<__int128>(min_num[v]) * best_den >
                          static_cast<__int128>(best_num) * min_den[v]) {
            best_num = min_num[v];
            best_den = min_den[v];
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("max_mean_cycle: graph is acyclic");

    Rat rho(best_num, best_den);
    rho.canonicalize();
    int64_t p = *to_i64(rho.get_num()), q = *to_i64(rho.get_den());

    // Longest-walk potentials for reduced weights q*w - p settle because no
    // cycle has positive reduced weight; optimal cycles are exactly the
    // cycles of tight edges.
    std::vector<__int128> h(V, 0);
    bool changed = true;
    for (int32_t round = 0; round <= V + 1 && changed; ++round) {
        changed = false;
        for (const auto& e : g.edges) {
            __int128 cand = static_cast<__int128>(q) * sd.w[e.digit] - p + h[e.to];
            if (cand > h[e.from]) {
                h[e.from] = cand;
                changed = true;
            }
        }
    }
    if (changed) throw std::logic_error("max_mean_cycle: potentials failed to settle");

    std::vector<char> tight(g.edges.size(), 0);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        tight[i] = h[e.from] == static_cast<__int128>(q) * sd.w[e.digit] - p + h[e.to];
    }

    // Tarjan SCC of the tight subgraph, iteratively.
    std::vector<int32_t> comp(V, -1), low(V), idx(V, -1), stk;
    std::vector<char> on(V, 0);
    int32_t counter = 0, ncomp = 0;
    struct Frame {
        int32_t v;
        size_t ei;
    };
    for (int32_t root = 0; root < V; ++root) {
        if (idx[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        idx[root] = low[root] = counter++;
        stk.push_back(root);
        on[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.ei < g.out[f.v].size()) {
                int32_t eid = g.out[f.v][f.ei++];
                if (!tight[eid]) continue;
                int32_t wv = g.edges[eid].to;
                if (idx[wv] == -1) {
                    idx[wv] = low[wv] = counter++;
                    stk.push_back(wv);
                    on[wv] = 1;
                    frames.push_back({wv, 0});
                } else if (on[wv]) {
                    low[f.v] = std::min(low[f.v], idx[wv]);
                }
            } else {
                int32_t v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == idx[v]) {
                    while (true) {
                        int32_t u2 = stk.back();
                        stk.pop_back();
                        on[u2] = 0;
                        comp[u2] = ncomp;
                        if (u2 == v) break;
                    }
                    ++ncomp;
                }
            }
        }
    }

    // Deterministic walk over intra-component tight edges: smallest eligible
    // start node, then smallest (digit, target) at each step.
    auto pick = [&](int32_t v) -> int32_t {
        int32_t best = -1;
        for (int32_t eid : g.out[v]) {
            if (!tight[eid] || comp[g.edges[eid].to] != comp[v]) continue;
            if (best == -1 || g.edges[eid].digit < g.edges[best].digit ||
                (g.edges[eid].digit == g.edges[best].digit && g.edges[eid].to < g.edges[best].to))
                best = eid;
        }
        return best;
    };
    int32_t start = -1;
    for (int32_t v = 0; v < V && start == -1; ++v)
        if (pick(v) != -1) start = v;
    if (start == -1) throw std::logic_error("max_mean_cycle: no tight cycle found");

    std::vector<int32_t> visit_step(V, -1);
    std::vector<Digit> path_digits;
    int32_t at = start;
    while (visit_step[at] == -1) {
        visit_step[at] = static_cast<int32_t>(path_digits.size());
        int32_t eid = pick(at);
        if (eid == -1) throw std::logic_error("max_mean_cycle: tight walk dead end");
        path_digits.push_back(g.edges[eid].digit);
        at = g.edges[eid].to;
    }
    std::vector<Digit> cyc(path_digits.begin() + visit_step[at], path_digits.end());
    cyc = least_rotation(cyc);

    MeanCycle mc;
    mc.cycle = DigitWord::periodic(cyc);
    CocycleSum cs = kappa_cocycle(mc.cycle, mc.cycle.period_len());
    for (int i = 0; i < 3; ++i)
        mc.freq[i] = make_rat(cs.counts[i], static_cast<long>(cs.length));
    mc.value =
        direction[0] * mc.freq[0] + direction[1] * mc.freq[1] + direction[2] * mc.freq[2];
    Rat expect = rho / Rat(sd.denom);
    if (mc.value != expect) throw std::logic_error("max_mean_cycle: witness mismatch");
    return mc;
}

}  // namespace rotkit
