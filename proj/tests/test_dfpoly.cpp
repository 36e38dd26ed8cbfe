#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rotkit/dfpoly.hpp"

using namespace rotkit;

namespace {

DigitWord W(const std::string& s) { return DigitWord::parse(s); }

Pt P(long a, long b, long c, long d) { return {make_rat(a, b), make_rat(c, d)}; }

// Random exact maximal words, via the repair of random 2-led words.
std::vector<DigitWord> random_maximal_words(int count, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pre_len(0, 4), per_len(1, 5), digit(0, 2);
    std::vector<DigitWord> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Digit> pre{2}, per(per_len(rng));
        int extra = pre_len(rng);
        for (int i = 0; i < extra; ++i) pre.push_back(static_cast<Digit>(digit(rng)));
        for (auto& d : per) d = static_cast<Digit>(digit(rng));
        DigitWord m = max_maximal_below(DigitWord::eventually(pre, per));
        if (!m.is_finite()) out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_CASE("outer polytope anchors") {
    // full shift: the whole simplex
    OuterResult full = outer_polytope(build_sft(W("22"), 2).g);
    CHECK(full.poly == RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 1, 0, 1), P(0, 1, 1, 1)}));

    // order-2 model of 2(1)
    OuterResult g21 = outer_polytope(build_sft(W("21"), 2).g);
    CHECK(g21.poly ==
          RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 1, 0, 1), P(1, 2, 1, 2), P(0, 1, 1, 2)}));

    // prefixes of (2) give the simplex at any order
    for (int n : {3, 5, 7})
        CHECK(outer_polytope(build_prefix_automaton(W("(2)"), n)).poly == full.poly);

    // every vertex carries a cycle witness realizing it
    for (const auto& [pt, cyc] : g21.witnesses) {
        FreqVector f = freq(cyc);
        CHECK(chart(f) == pt);
    }
    CHECK(g21.witnesses.size() == g21.poly.size());
}

TEST_CASE("outer polytope equals the enumeration hull on small models") {
    for (const char* word : {"(2)", "2(1)", "(210)", "(2220)", "(20)", "(211)"}) {
        for (int n = 2; n <= 3; ++n) {
            SftGraph s = build_sft(W(word), n);
            CHECK(outer_polytope(s.g).poly == oracle::brute_cycle_hull(s.g));
        }
    }
}

TEST_CASE("inner polytope anchors") {
    InnerResult full = inner_polytope(W("(2)"), 3);
    CHECK(full.poly == RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 1, 0, 1), P(0, 1, 1, 1)}));
    CHECK(full.witnesses.size() == 3);  // the three fixed digits

    InnerResult i21 = inner_polytope(W("2(1)"), 6);
    // includes (1/2,0,1/2) and (1/3,1/3,1/3), excludes (0,1/2,1/2)
    CHECK(i21.poly.contains(P(1, 2, 1, 2)));
    CHECK(i21.poly.contains(P(1, 3, 1, 3)));
    CHECK(!i21.poly.contains(P(0, 1, 1, 2)));
    for (const Witness& w : i21.witnesses) {
        CHECK(beta_member(w.word, W("2(1)")).kind == MemberVerdict::In);
        CHECK(chart(w.frequency) == chart(freq(w.word)));
    }
}

TEST_CASE("lyndon enumeration matches the naive reference") {
    for (const char* word : {"(2)", "2(1)", "(2220)", "(211)", "2(10)"}) {
        DigitWord w = W(word);
        for (int p : {3, 5, 7}) {
            InnerResult a = inner_polytope(w, p);
            InnerResult b = inner_polytope_reference(w, p);
            CHECK(a.poly == b.poly);
        }
    }
    // conservative mode against a finite prefix
    DigitWord fin = W("2111111111");
    CHECK(inner_polytope(fin, 5).poly == inner_polytope_reference(fin, 5).poly);
}

TEST_CASE("df_approx anchors") {
    DfApprox full = df_approx(W("(2)"), 3, 3);
    CHECK(full.closed());
    CHECK(full.inner == full.outer);

    // the rational-regular kneading word of the quadrilateral plateau
    DfApprox quad = df_approx(W("(2220)"), 4, 4);
    CHECK(quad.closed());
    CHECK(quad.outer == RatPolygon::hull_of(
                            {P(0, 1, 0, 1), P(1, 1, 0, 1), P(1, 4, 3, 4), P(0, 1, 2, 3)}));

    // 2(1) is the closure point of a plateau: its order-n window models always
    // admit cycles beyond DF, so the certificate stays open at every order.
    DfApprox open21 = df_approx(W("2(1)"), 6, 6);
    CHECK(!open21.closed());
    CHECK(open21.inner ==
          RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 1, 0, 1), P(1, 2, 1, 2)}));
    CHECK(open21.outer.contains(open21.inner));

    CHECK_THROWS_AS(df_approx(W("212(2)"), 3, 3), std::invalid_argument);  // not maximal
    CHECK_THROWS_AS(df_approx(W("(2)"), 1, 3), std::invalid_argument);
}

TEST_CASE("df_approx on a finite prefix is conservative and sandwiched") {
    DigitWord fin = W("2111111111");
    DfApprox a = df_approx(fin, 5, 6);
    CHECK(!a.closed());
    CHECK(a.outer.contains(a.inner));
    // the conservative inner accepts only strictly resolved witnesses, so it
    // sits inside the inner set of every completion of the prefix
    DfApprox exact = df_approx(W("2(1)"), 5, 6);
    CHECK(exact.inner.contains(a.inner));
    CHECK_THROWS_AS(df_approx(W("21"), 5, 3), std::invalid_argument);  // too short
}

TEST_CASE("sandwich and monotonicity properties") {
    auto words = random_maximal_words(12, 2024);
    for (const DigitWord& w : words) {
        RatPolygon prev_outer;
        for (int n = 3; n <= 8; ++n) {
            DfApprox a = df_approx(w, n, 6);
            CHECK(a.outer.contains(a.inner));
            if (n > 3) CHECK(prev_outer.contains(a.outer));  // outer shrinks with order
            prev_outer = a.outer;
        }
        // inner grows with the period bound
        RatPolygon prev_inner = inner_polytope(w, 2).poly;
        for (int p = 3; p <= 7; ++p) {
            RatPolygon cur = inner_polytope(w, p).poly;
            CHECK(cur.contains(prev_inner));
            prev_inner = cur;
        }
    }

    // monotone in the word: w <= w' gives nested approximations
    for (size_t i = 0; i + 1 < words.size(); i += 2) {
        const DigitWord& a = words[i];
        const DigitWord& b = words[i + 1];
        const DigitWord& lo = word_le(a, b) ? a : b;
        const DigitWord& hi = word_le(a, b) ? b : a;
        for (int n : {3, 5}) {
            DfApprox la = df_approx(lo, n, 5), hb = df_approx(hi, n, 5);
            CHECK(hb.outer.contains(la.outer));
            CHECK(hb.inner.contains(la.inner));
        }
    }
}

TEST_CASE("members stay inside the outer model at every order") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> per_len(1, 6), digit(0, 2);
    for (const char* word : {"(2)", "2(1)", "(2220)", "(211)"}) {
        DigitWord w = W(word);
        std::vector<OuterResult> outers;
        for (int n = 2; n <= 8; ++n)
            outers.push_back(outer_polytope(build_prefix_automaton(w, n)));
        for (int it = 0; it < 120; ++it) {
            std::vector<Digit> per(per_len(rng));
            for (auto& d : per) d = static_cast<Digit>(digit(rng));
            DigitWord s = DigitWord::periodic(per);
            if (beta_member(s, w).kind != MemberVerdict::In) continue;
            Pt p = chart(freq(s));
            for (const auto& o : outers) CHECK(o.poly.contains(p));
        }
    }
}

TEST_CASE("hausdorff anchors") {
    RatPolygon tri = RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 1, 0, 1), P(0, 1, 1, 1)});
    CHECK(hausdorff(tri, tri) == 0);

    RatPolygon seg = RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 1, 0, 1)});
    RatPolygon mid = RatPolygon::hull_of({P(1, 2, 0, 1)});
    CHECK(hausdorff(seg, mid) == Rat(1, 2));

    // distance from e2 to the cut edge of the truncated simplex
    RatPolygon cut = RatPolygon::hull_of(
        {P(0, 1, 0, 1), P(1, 1, 0, 1), P(1, 2, 1, 2), P(0, 1, 1, 2)});
    CHECK(hausdorff(tri, cut) == Rat(1, 2));
    CHECK_THROWS_AS(hausdorff(tri, RatPolygon()), std::invalid_argument);
}

TEST_CASE("sqrt_upper is exact on squares and tight otherwise") {
    CHECK(sqrt_upper(Rat(0)) == 0);
    CHECK(sqrt_upper(Rat(1, 4)) == Rat(1, 2));
    CHECK(sqrt_upper(Rat(9, 16)) == Rat(3, 4));
    Rat b = sqrt_upper(Rat(2));
    CHECK(b * b >= 2);
    CHECK(b - parse_rat("14142135623730951/10000000000000000") < Rat(1, 1000000));
}
