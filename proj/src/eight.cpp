#include "rotkit/eight.hpp"

#include <map>
#include <stdexcept>

namespace rotkit {

namespace {

Rat circle_len(Circle c) { return c == Circle::S1 ? Rat(5) : Rat(3); }

Rat rat_mod(const Rat& v, const Rat& len) {
    Rat q = v / len;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return v - Rat(fl) * len;
}

int edge_index(const EightPoint& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.pos.get_num().get_mpz_t(), x.pos.get_den().get_mpz_t());
    return static_cast<int>(fl.get_si());
}

const Rat kThird(1, 3), kThreeFifths(3, 5), kFourteenFifths(14, 5);

}  // namespace

EightPoint make_point(Circle c, Rat pos) {
    if (pos < 0 || pos >= circle_len(c))
        throw std::invalid_argument("point position outside the circle");
    if (c == Circle::S2 && pos == 0) c = Circle::S1;  // wedge point canonical form
    return {c, std::move(pos)};
}

EightPoint parse_point(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad point: " + text);
    std::string cs = text.substr(0, colon);
    Circle c;
    if (cs == "S1")
        c = Circle::S1;
    else if (cs == "S2")
        c = Circle::S2;
    else
        throw std::invalid_argument("bad circle name: " + cs);
    return make_point(c, parse_rat(text.substr(colon + 1)));
}

std::string point_str(const EightPoint& p) {
    return (p.circle == Circle::S1 ? "S1:" : "S2:") + rat_str(p.pos);
}

EightPoint ell(const Rat& t) {
    if (t < 0 || t > 1) throw std::domain_error("parameter t outside [0,1]");
    return make_point(Circle::S1, Rat(4) - (Rat(5) - 3 * t) / 10);
}

EightPoint r_pt(const Rat& t) {
    if (t < 0 || t > 1) throw std::domain_error("parameter t outside [0,1]");
    return make_point(Circle::S1, Rat(4) + (Rat(5) - 3 * t) / 10);
}

EightPoint apply_f(const EightPoint& x) {
    int e = edge_index(x);
    const Rat& p = x.pos;
    if (x.circle == Circle::S1) {
        switch (e) {
            case 0:  // C -> S2
                return make_point(Circle::S2, rat_mod(3 * p, Rat(3)));
            case 1:  // c -> S2 reversed
                return make_point(Circle::S2, rat_mod(Rat(6) - 3 * p, Rat(3)));
            case 2:  // 1 -> S1
                return make_point(Circle::S1, rat_mod(5 * p - 10, Rat(5)));
            case 3:  // 2 -> S1
                return make_point(Circle::S1, rat_mod(5 * p - 15, Rat(5)));
            default:  // 2r -> S1 reversed
                return make_point(Circle::S1, rat_mod(Rat(25) - 5 * p, Rat(5)));
        }
    }
    switch (e) {
        case 0:  // A -> S2
            return make_point(Circle::S2, rat_mod(3 * p, Rat(3)));
        case 1:  // B -> S1
            return make_point(Circle::S1, rat_mod(5 * p - 5, Rat(5)));
        default:  // b -> S1 reversed
            return make_point(Circle::S1, rat_mod(Rat(10) - 5 * p, Rat(5)));
    }
}

EightPoint apply_ft(const Rat& t, const EightPoint& x) {
    EightPoint lo = ell(t);
    if (x.circle == Circle::S1 && x.pos >= lo.pos && x.pos <= r_pt(t).pos)
        return apply_f(lo);
    return apply_f(x);
}

std::array<int, 2> gamma(const EightPoint& x) {
    int e = edge_index(x);
    if (x.circle == Circle::S1) return (e >= 3) ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 0};
    return (e >= 1) ? std::array<int, 2>{0, 1} : std::array<int, 2>{0, 0};
}

OrbitResult orbit_cocycle(const Rat& t, const EightPoint& x0, int64_t steps) {
    if (steps < 1) throw std::invalid_argument("orbit_cocycle: need at least one step");
    OrbitResult r;
    r.gamma_sum = {0, 0};
    EightPoint x = x0;
    for (int64_t i = 0; i < steps; ++i) {
        auto g = gamma(x);
        r.gamma_sum[0] += g[0];
        r.gamma_sum[1] += g[1];
        x = apply_ft(t, x);
    }
    r.final_point = x;
    r.estimate = {make_rat(r.gamma_sum[0]) / Rat(steps), make_rat(r.gamma_sum[1]) / Rat(steps)};
    return r;
}

EightPoint return_F(const EightPoint& x) {
    if (x.circle != Circle::S1) throw std::domain_error("return_F: point outside C' u 1' u 2");
    const Rat& p = x.pos;
    if (p >= kThird && p <= kThreeFifths)
        return make_point(Circle::S1, rat_mod(15 * p - 5, Rat(5)));
    if (p >= 2 && p <= kFourteenFifths)
        return make_point(Circle::S1, rat_mod(5 * p - 10, Rat(5)));
    if (p >= 3 && p <= 4) return make_point(Circle::S1, rat_mod(5 * p - 15, Rat(5)));
    throw std::domain_error("return_F: point outside C' u 1' u 2");
}

ThetaResult theta(const Rat& t, size_t depth) {
    ThetaResult res;
    std::vector<Digit> digits;
    std::map<Rat, size_t> seen;
    Rat x = ell(t).pos;

    for (size_t step = 0; step < depth; ++step) {
        if (x < kThird) {
            // No return-orbit lives below C'; the supremum drops to the
            // previous cylinder: pop zeros, decrement, close with 2-bar.
            while (!digits.empty() && digits.back() == 0) digits.pop_back();
            if (digits.empty())
                throw std::logic_error("theta: descended below every itinerary");
            digits.back()--;
            res.events.push_back({ThetaEvent::Backtrack, step, digits.back()});
            res.word = DigitWord::eventually(std::move(digits), {2});
            return res;
        }
        Digit d;
        Rat next;
        bool gap = false;
        if (x <= kThreeFifths) {
            d = 0;
            next = 15 * x - 5;
        } else if (x < 2) {
            d = 0;
            gap = true;
        } else if (x <= kFourteenFifths) {
            d = 1;
            next = 5 * x - 10;
        } else if (x < 3) {
            d = 1;
            gap = true;
        } else if (x <= 4) {
            d = 2;
            next = 5 * x - 15;
        } else {
            d = 2;  // x in (4,5]; everything in the top piece lies below it
            gap = true;
        }
        if (gap) {
            // The whole piece d sits below x: supremum is d followed by the
            // largest itinerary tail.
            res.events.push_back({ThetaEvent::GapAbove, step, d});
            digits.push_back(d);
            res.word = DigitWord::eventually(std::move(digits), {2});
            return res;
        }
        auto it = seen.find(x);
        if (it != seen.end()) {
            res.events.push_back({ThetaEvent::Revisit, step, d});
            std::vector<Digit> pre(digits.begin(), digits.begin() + it->second);
            std::vector<Digit> per(digits.begin() + it->second, digits.end());
            res.word = DigitWord::eventually(std::move(pre), std::move(per));
            return res;
        }
        seen.emplace(x, digits.size());
        digits.push_back(d);
        // Images stay unreduced so a landing on the circle top reads as
        // "above every piece" rather than wrapping to the wedge.
        x = next;
    }
    res.depth_limited = true;
    res.word = DigitWord::finite(std::move(digits));
    return res;
}

KneadingResult kneading_prefix(const Rat& t, size_t depth) {
    KneadingResult k;
    k.t = t;
    k.depth = depth;
    ThetaResult th = theta(t, depth);
    k.theta_prefix = th.word;
    k.events = std::move(th.events);
    k.kneading = max_maximal_below(th.word);
    k.exact = !k.kneading.is_finite();
    k.certificate = is_maximal(k.kneading);
    if (lex_cmp(k.kneading, k.theta_prefix).ord == Ord::GT)
        throw std::logic_error("kneading_prefix: kneading word exceeds theta");
    return k;
}

}  // namespace rotkit
