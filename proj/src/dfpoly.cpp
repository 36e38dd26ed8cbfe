#include "rotkit/dfpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotkit {

namespace {

// Normalized integer direction for caching probes.
std::pair<Int, Int> dir_key(const Rat& x, const Rat& y) {
    Int l;
    mpz_lcm(l.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Int a = x.get_num() * (l / x.get_den());
    Int b = y.get_num() * (l / y.get_den());
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 0) {
        a /= g;
        b /= g;
    }
    return {a, b};
}

}  // namespace

OuterResult outer_polytope(const DigitGraph& g) {
    std::map<std::pair<Int, Int>, std::pair<Pt, DigitWord>> probes;
    auto probe = [&](const Rat& dx, const Rat& dy) -> const std::pair<Pt, DigitWord>& {
        auto key = dir_key(dx, dy);
        auto it = probes.find(key);
        if (it == probes.end()) {
            MeanCycle mc = max_mean_cycle(g, {Rat(key.first), Rat(0), Rat(key.second)});
            it = probes.emplace(key, std::make_pair(chart(mc.freq), mc.cycle)).first;
        }
        return it->second;
    };

    std::vector<Pt> pts;
    for (auto [dx, dy] : {std::pair<int, int>{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
        pts.push_back(probe(Rat(dx), Rat(dy)).first);

    RatPolygon hull = RatPolygon::hull_of(pts);
    bool certified = hull.size() == 1;
    for (int guard = 0; guard < 100000 && !certified; ++guard) {
        const auto& v = hull.vertices();
        bool grew = false;
        // For a segment the wrap-around visits (a,b) and (b,a): both sides.
        for (size_t i = 0; i < v.size() && !grew; ++i) {
            const Pt& a = v[i];
            const Pt& b = v[(i + 1) % v.size()];
            Rat nx = b[1] - a[1], ny = a[0] - b[0];  // outward normal of CCW edge
            if (nx == 0 && ny == 0) continue;
            const auto& sup = probe(nx, ny);
            Rat level = nx * a[0] + ny * a[1];
            Rat got = nx * sup.first[0] + ny * sup.first[1];
            if (got > level) {
                pts.push_back(sup.first);
                hull = RatPolygon::hull_of(pts);
                grew = true;
            }
        }
        if (!grew) certified = true;
        if (hull.size() == 1) certified = true;
    }
    if (!certified) throw std::logic_error("outer_polytope: refinement did not settle");

    OuterResult r;
    r.poly = hull;
    for (const Pt& vert : hull.vertices()) {
        for (const auto& [key, pw] : probes) {
            if (pw.first == vert) {
                r.witnesses.emplace_back(vert, pw.second);
                break;
            }
        }
    }
    return r;
}

namespace {

// All Lyndon words over {0,1,2} of length <= cap, lexicographic (Duval).
std::vector<std::vector<Digit>> lyndon_words(int cap) {
    std::vector<std::vector<Digit>> out;
    std::vector<Digit> w{0};
    while (true) {
        out.push_back(w);
        std::vector<Digit> t;
        t.reserve(cap);
        for (int i = 0; i < cap; ++i) t.push_back(w[i % w.size()]);
        while (!t.empty() && t.back() == 2) t.pop_back();
        if (t.empty()) break;
        t.back()++;
        w = std::move(t);
    }
    return out;
}

// Conservative membership against a finite prefix: every shift must resolve
// strictly below w inside the observable window.
bool member_conservative(const DigitWord& s, const DigitWord& w) {
    size_t tails = s.preperiod_len() + s.period_len();
    for (size_t r = 0; r < tails; ++r)
        if (lex_cmp(s.shifted(r), w).ord != Ord::LT) return false;
    return true;
}

InnerResult hull_witnesses(const std::vector<Witness>& accepted) {
    std::vector<Pt> pts;
    pts.reserve(accepted.size());
    for (const auto& a : accepted) pts.push_back(chart(a.frequency));
    InnerResult r;
    r.poly = RatPolygon::hull_of(pts);
    for (const Pt& v : r.poly.vertices()) {
        for (const auto& a : accepted) {
            if (chart(a.frequency) == v) {
                r.witnesses.push_back(a);
                break;
            }
        }
    }
    return r;
}

}  // namespace

InnerResult inner_polytope(const DigitWord& w, int max_period) {
    if (max_period < 1) throw std::invalid_argument("inner_polytope: max_period must be >= 1");
    if (is_maximal(w).kind == MaximalVerdict::No)
        throw std::invalid_argument("inner_polytope: reference word is not maximal");
    const bool exact = !w.is_finite();
    auto cands = lyndon_words(max_period);
    std::vector<char> ok(cands.size(), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long i = 0; i < static_cast<long>(cands.size()); ++i) {
        DigitWord s = DigitWord::periodic(cands[i]);
        ok[i] = exact ? beta_member(s, w).kind == MemberVerdict::In
                      : member_conservative(s, w);
    }

    std::vector<Witness> accepted;
    for (size_t i = 0; i < cands.size(); ++i) {
        if (!ok[i]) continue;
        DigitWord s = DigitWord::periodic(cands[i]);
        accepted.push_back({s, freq(s)});
    }
    return hull_witnesses(accepted);
}

InnerResult inner_polytope_reference(const DigitWord& w, int max_period) {
    if (is_maximal(w).kind == MaximalVerdict::No)
        throw std::invalid_argument("inner_polytope_reference: reference word is not maximal");
    const bool exact = !w.is_finite();
    std::vector<Witness> accepted;
    for (int p = 1; p <= max_period; ++p) {
        std::vector<Digit> word(p, 0);
        while (true) {
            DigitWord s = DigitWord::periodic(word);
            if (static_cast<int>(s.period_len()) == p) {  // skip repeats of shorter periods
                bool in = exact ? beta_member(s, w).kind == MemberVerdict::In
                                : member_conservative(s, w);
                if (in) accepted.push_back({s, freq(s)});
            }
            int i = p - 1;
            while (i >= 0 && word[i] == 2) word[i--] = 0;
            if (i < 0) break;
            word[i]++;
        }
    }
    return hull_witnesses(accepted);
}

DfApprox df_approx(const DigitWord& w, int n, int max_period) {
    if (n < 2) throw std::invalid_argument("df_approx: order must be >= 2");
    if (w.observable() < static_cast<size_t>(n))
        throw std::invalid_argument("df_approx: word has fewer observable symbols than the order");
    if (is_maximal(w).kind == MaximalVerdict::No)
        throw std::invalid_argument("df_approx: word is not maximal");

    DfApprox a;
    a.order = n;
    a.max_period = max_period;
    OuterResult outer = outer_polytope(build_prefix_automaton(w, n));
    InnerResult inner = inner_polytope(w, max_period);
    a.inner = inner.poly;
    a.outer = outer.poly;
    a.witnesses = inner.witnesses;
    a.outer_witnesses = outer.witnesses;
    if (!a.inner.empty() && !a.outer.contains(a.inner))
        throw std::logic_error("df_approx: inner polygon escaped the outer model");
    return a;
}

}  // namespace rotkit
