#include <doctest.h>

#include <random>

#include "rotkit/word.hpp"

using namespace rotkit;

namespace {

DigitWord W(const std::string& s) { return DigitWord::parse(s); }

DigitWord random_eventually_periodic(std::mt19937& rng) {
    std::uniform_int_distribution<int> pre_len(0, 4), per_len(1, 5), digit(0, 2);
    std::vector<Digit> pre(pre_len(rng)), per(per_len(rng));
    for (auto& d : pre) d = static_cast<Digit>(digit(rng));
    for (auto& d : per) d = static_cast<Digit>(digit(rng));
    return DigitWord::eventually(pre, per);
}

// Every periodic maximal word of period <= cap, by exhaustive search.
std::vector<DigitWord> periodic_maximal_words(int cap) {
    std::vector<DigitWord> out;
    for (int p = 1; p <= cap; ++p) {
        std::vector<Digit> word(p, 0);
        while (true) {
            DigitWord w = DigitWord::periodic(word);
            if (static_cast<int>(w.period_len()) == p &&
                is_maximal(w).kind == MaximalVerdict::Yes)
                out.push_back(w);
            int i = p - 1;
            while (i >= 0 && word[i] == 2) word[i--] = 0;
            if (i < 0) break;
            word[i]++;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("parsing and canonical form") {
    CHECK(W("21(1)").str() == "2(1)");
    CHECK(W("(2)").str() == "(2)");
    CHECK(W("(211211)").str() == "(211)");
    CHECK(W("2112(112)").str() == "(211)");
    CHECK(W("20(12)").str() == "20(12)");
    CHECK(W("210").str() == "210");
    CHECK(W("21(1)") == W("2(1)"));
    CHECK_THROWS_AS(W("2(3)"), std::invalid_argument);
    CHECK_THROWS_AS(W("2()"), std::invalid_argument);
    CHECK_THROWS_AS(W("2(1"), std::invalid_argument);
}

TEST_CASE("lex_cmp on anchor pairs") {
    CHECK(lex_cmp(W("(2)"), W("2(1)")).ord == Ord::GT);
    auto c = lex_cmp(W("(21)"), W("2(1)"));
    CHECK(c.ord == Ord::GT);
    CHECK(c.pos == 2);
    auto u = lex_cmp(W("21"), W("21"));
    CHECK(u.ord == Ord::Undecided);
    CHECK(u.pos == 2);
    CHECK(lex_cmp(W("2(1)"), W("2(1)")).ord == Ord::EQ);
    CHECK(lex_cmp(W("21"), W("2(1)")).ord == Ord::Undecided);
    CHECK(lex_cmp(W("22"), W("2(1)")).ord == Ord::GT);
}

TEST_CASE("lex_cmp is a total order on eventually periodic words") {
    std::mt19937 rng(77);
    for (int it = 0; it < 400; ++it) {
        DigitWord a = random_eventually_periodic(rng);
        DigitWord b = random_eventually_periodic(rng);
        DigitWord c = random_eventually_periodic(rng);
        Ord ab = lex_cmp(a, b).ord, ba = lex_cmp(b, a).ord;
        CHECK(ab != Ord::Undecided);
        if (ab == Ord::EQ) {
            CHECK(ba == Ord::EQ);
            CHECK(a == b);  // canonical form makes equality structural
        } else {
            CHECK(ab != ba);
        }
        if (word_le(a, b) && word_le(b, c)) CHECK(word_le(a, c));
    }
}

TEST_CASE("shift and at") {
    DigitWord w = W("210(21)");
    CHECK(w.at(0) == 2);
    CHECK(w.at(2) == 0);
    CHECK(w.at(3) == 2);
    CHECK(w.at(10000) == 1);  // (10000 - 3) odd, so the second period symbol
    CHECK(w.shifted(3) == W("(21)"));
    CHECK(w.shifted(4) == W("(12)"));
    CHECK(W("210").shifted(2) == W("0"));
}

TEST_CASE("is_maximal anchors") {
    CHECK(is_maximal(W("(2)")).kind == MaximalVerdict::Yes);
    CHECK(is_maximal(W("2(1)")).kind == MaximalVerdict::Yes);
    auto v = is_maximal(W("211(2)"));
    CHECK(v.kind == MaximalVerdict::No);
    CHECK(v.pos == 3);
    CHECK(is_maximal(W("(1)")).kind == MaximalVerdict::No);
    CHECK(is_maximal(W("211")).kind == MaximalVerdict::Undecided);
    CHECK(is_maximal(W("212")).kind == MaximalVerdict::Undecided);
    CHECK(is_maximal(W("2122")).kind == MaximalVerdict::No);
}

TEST_CASE("beta_member anchors") {
    CHECK(beta_member(W("(1)"), W("2(1)")).kind == MemberVerdict::In);
    auto out = beta_member(W("(21)"), W("2(1)"));
    CHECK(out.kind == MemberVerdict::Out);
    CHECK(out.pos == 0);
    CHECK(beta_member(W("(210)"), W("2(1)")).kind == MemberVerdict::In);
    CHECK_THROWS_AS(beta_member(W("(1)"), W("2122")), std::invalid_argument);
}

TEST_CASE("maximal words belong to their own beta-shift") {
    std::mt19937 rng(11);
    int seen = 0;
    for (int it = 0; it < 500; ++it) {
        DigitWord w = random_eventually_periodic(rng);
        if (is_maximal(w).kind != MaximalVerdict::Yes) continue;
        ++seen;
        CHECK(beta_member(w, w).kind == MemberVerdict::In);
    }
    CHECK(seen > 20);
}

TEST_CASE("kappa_cocycle anchors and additivity") {
    auto c = kappa_cocycle(W("(012)"), 3);
    CHECK(c.counts == std::array<int64_t, 3>{1, 1, 1});
    CHECK(kappa_cocycle(W("(2)"), 5).counts == std::array<int64_t, 3>{0, 0, 5});
    CHECK(kappa_cocycle(W("2(1)"), 4).counts == std::array<int64_t, 3>{0, 3, 1});
    CHECK_THROWS_AS(kappa_cocycle(W("210"), 4), std::out_of_range);

    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        DigitWord s = random_eventually_periodic(rng);
        size_t r = it % 7, r2 = (it * 3) % 9;
        auto whole = kappa_cocycle(s, r + r2);
        auto first = kappa_cocycle(s, r);
        auto second = kappa_cocycle(s.shifted(r), r2);
        for (int i = 0; i < 3; ++i) CHECK(whole.counts[i] == first.counts[i] + second.counts[i]);
    }
}

TEST_CASE("freq anchors") {
    FreqVector f = freq(W("(012)"));
    CHECK(f[0] == Rat(1, 3));
    CHECK(f[1] == Rat(1, 3));
    CHECK(f[2] == Rat(1, 3));
    CHECK(freq(W("(2)"))[2] == 1);
    FreqVector g = freq(W("(20)"));
    CHECK(g[0] == Rat(1, 2));
    CHECK(g[1] == 0);
    CHECK(g[2] == Rat(1, 2));
    CHECK_THROWS_AS(freq(W("2(1)")), std::invalid_argument);
    CHECK_THROWS_AS(freq(W("210")), std::invalid_argument);
}

TEST_CASE("max_maximal_below anchors") {
    CHECK(max_maximal_below(W("(2)")) == W("(2)"));
    CHECK(max_maximal_below(W("2(1)")) == W("2(1)"));
    CHECK(max_maximal_below(W("211(2)")) == W("(211)"));
    CHECK(max_maximal_below(W("2220(2)")) == W("(2220)"));
    CHECK_THROWS_AS(max_maximal_below(W("(1)")), std::domain_error);
    // Feasible finite prefixes come back unchanged, as certified prefixes.
    CHECK(max_maximal_below(W("2111")) == W("2111"));
}

TEST_CASE("max_maximal_below against the exhaustive periodic oracle") {
    auto maximals = periodic_maximal_words(6);
    CHECK(maximals.size() > 30);

    std::mt19937 rng(99);
    for (int it = 0; it < 250; ++it) {
        DigitWord theta = random_eventually_periodic(rng);
        if (theta.at(0) != 2) continue;
        DigitWord got = max_maximal_below(theta);
        CHECK(is_maximal(got).kind == MaximalVerdict::Yes);
        CHECK(word_le(got, theta));
        // Nothing in the periodic table lies strictly between.
        for (const DigitWord& m : maximals) {
            if (word_le(m, theta)) CHECK(word_le(m, got));
        }
    }
}

TEST_CASE("max_maximal_below is idempotent and monotone") {
    std::mt19937 rng(123);
    std::vector<DigitWord> thetas;
    for (int it = 0; it < 120; ++it) {
        DigitWord t = random_eventually_periodic(rng);
        if (t.at(0) == 2) thetas.push_back(t);
    }
    for (const DigitWord& t : thetas) {
        DigitWord m = max_maximal_below(t);
        CHECK(max_maximal_below(m) == m);
    }
    for (size_t i = 0; i + 1 < thetas.size(); i += 2) {
        const DigitWord &a = thetas[i], &b = thetas[i + 1];
        const DigitWord &lo = word_le(a, b) ? a : b, &hi = word_le(a, b) ? b : a;
        CHECK(word_le(max_maximal_below(lo), max_maximal_below(hi)));
    }
}
