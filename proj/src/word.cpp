#include "rotkit/word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rotkit {

namespace {

void check_digits(const std::vector<Digit>& v) {
    for (Digit d : v)
        if (d > 2) throw std::invalid_argument("digit out of alphabet {0,1,2}");
}

// Smallest block whose repetition gives v.
size_t minimal_period(const std::vector<Digit>& v) {
    for (size_t p = 1; p <= v.size(); ++p) {
        if (v.size() % p != 0) continue;
        bool ok = true;
        for (size_t i = p; i < v.size() && ok; ++i) ok = v[i] == v[i % p];
        if (ok) return p;
    }
    return v.size();
}

}  // namespace

void DigitWord::canonicalize() {
    if (per_.empty()) return;
    size_t p = minimal_period(per_);
    if (p < per_.size()) per_.resize(p);
    // Absorb the period tail into itself while it matches the preperiod tail:
    // "21(1)" and "2(1)" denote the same sequence, keep the shorter preperiod.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    }
}

DigitWord DigitWord::finite(std::vector<Digit> digits) {
    check_digits(digits);
    DigitWord w;
    w.pre_ = std::move(digits);
    return w;
}

DigitWord DigitWord::eventually(std::vector<Digit> pre, std::vector<Digit> per) {
    check_digits(pre);
    check_digits(per);
    if (per.empty()) throw std::invalid_argument("empty period; use finite()");
    DigitWord w;
    w.pre_ = std::move(pre);
    w.per_ = std::move(per);
    w.canonicalize();
    return w;
}

DigitWord DigitWord::parse(const std::string& text) {
    std::vector<Digit> pre, per;
    bool in_per = false, closed = false;
    for (char c : text) {
        if (c == '(') {
            if (in_per || closed) throw std::invalid_argument("bad word: " + text);
            in_per = true;
        } else if (c == ')') {
            if (!in_per) throw std::invalid_argument("bad word: " + text);
            in_per = false;
            closed = true;
        } else if (c >= '0' && c <= '2') {
            if (closed) throw std::invalid_argument("digits after period: " + text);
            (in_per ? per : pre).push_back(static_cast<Digit>(c - '0'));
        } else {
            throw std::invalid_argument("bad character in word: " + text);
        }
    }
    if (in_per) throw std::invalid_argument("unterminated period: " + text);
    if (closed && per.empty()) throw std::invalid_argument("empty period: " + text);
    return per.empty() ? finite(std::move(pre)) : eventually(std::move(pre), std::move(per));
}

std::string DigitWord::str() const {
    std::string s;
    for (Digit d : pre_) s += char('0' + d);
    if (!per_.empty()) {
        s += '(';
        for (Digit d : per_) s += char('0' + d);
        s += ')';
    }
    return s;
}

Digit DigitWord::at(size_t i) const {
    if (i < pre_.size()) return pre_[i];
    if (per_.empty()) throw std::out_of_range("read past end of finite word");
    return per_[(i - pre_.size()) % per_.size()];
}

DigitWord DigitWord::shifted(size_t r) const {
    if (per_.empty()) {
        std::vector<Digit> rest(pre_.begin() + std::min(r, pre_.size()), pre_.end());
        return finite(std::move(rest));
    }
    if (r <= pre_.size()) {
        std::vector<Digit> rest(pre_.begin() + r, pre_.end());
        return eventually(std::move(rest), per_);
    }
    size_t k = (r - pre_.size()) % per_.size();
    std::vector<Digit> rot(per_.begin() + k, per_.end());
    rot.insert(rot.end(), per_.begin(), per_.begin() + k);
    return eventually({}, std::move(rot));
}

std::vector<Digit> DigitWord::prefix_digits(size_t n) const {
    n = std::min(n, observable());
    std::vector<Digit> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = at(i);
    return v;
}

DigitWord DigitWord::prefix(size_t n) const { return finite(prefix_digits(n)); }

CmpResult lex_cmp(const DigitWord& a, const DigitWord& b) {
    size_t bound;
    if (a.is_finite() || b.is_finite()) {
        bound = std::min(a.observable(), b.observable());
    } else {
        size_t l = std::lcm(a.period_len(), b.period_len());
        bound = std::max(a.preperiod_len(), b.preperiod_len()) + l + 1;
    }
    for (size_t i = 0; i < bound; ++i) {
        Digit x = a.at(i), y = b.at(i);
        if (x < y) return {Ord::LT, i};
        if (x > y) return {Ord::GT, i};
    }
    if (!a.is_finite() && !b.is_finite()) return {Ord::EQ, bound};
    if (a.is_finite() && b.is_finite() && a.observable() == b.observable() && a == b)
        return {Ord::Undecided, bound};
    return {Ord::Undecided, bound};
}

MaximalVerdict is_maximal(const DigitWord& w) {
    if (w.observable() == 0) return {MaximalVerdict::Undecided, 0};
    if (w.at(0) != 2) return {MaximalVerdict::No, 0};
    if (w.is_finite()) {
        size_t n = w.observable();
        for (size_t r = 1; r < n; ++r) {
            CmpResult c = lex_cmp(w.shifted(r), w);
            if (c.ord == Ord::GT) return {MaximalVerdict::No, r};
        }
        return {MaximalVerdict::Undecided, n};
    }
    size_t tails = w.preperiod_len() + w.period_len();
    for (size_t r = 1; r <= tails; ++r) {
        CmpResult c = lex_cmp(w.shifted(r), w);
        if (c.ord == Ord::GT) return {MaximalVerdict::No, r};
    }
    return {MaximalVerdict::Yes, 0};
}

MemberVerdict beta_member(const DigitWord& s, const DigitWord& w) {
    if (is_maximal(w).kind == MaximalVerdict::No)
        throw std::invalid_argument("beta_member: reference word is not maximal");
    size_t tails = s.is_finite() ? s.observable()
                                 : s.preperiod_len() + s.period_len();
    bool undecided = false;
    size_t depth = SIZE_MAX;
    for (size_t r = 0; r < tails; ++r) {
        CmpResult c = lex_cmp(s.shifted(r), w);
        if (c.ord == Ord::GT) return {MemberVerdict::Out, r};
        if (c.ord == Ord::Undecided) {
            undecided = true;
            depth = std::min(depth, c.pos);
        }
    }
    if (undecided) return {MemberVerdict::Undecided, depth};
    return {MemberVerdict::In, 0};
}

CocycleSum kappa_cocycle(const DigitWord& s, size_t r) {
    if (r > s.observable())
        throw std::out_of_range("kappa_cocycle: length exceeds observable symbols");
    CocycleSum c;
    c.length = static_cast<int64_t>(r);
    for (size_t i = 0; i < r; ++i) c.counts[s.at(i)]++;
    return c;
}

FreqVector freq(const DigitWord& s) {
    if (!s.is_purely_periodic())
        throw std::invalid_argument("freq: word is not purely periodic");
    CocycleSum c = kappa_cocycle(s, s.period_len());
    FreqVector f;
    for (int i = 0; i < 3; ++i) f[i] = make_rat(c.counts[i], c.length);
    return f;
}

// Greedy maximal extension of a feasible prefix.  At each step the appended
// digit is min{w[b] : b a border length of the current word}, the largest
// digit that keeps every shift dominated.  The generation state is the KMP
// border length, so a repeated state proves eventual periodicity; a long
// self-copying run is certified by re-checking the candidate exactly.
static DigitWord greedy_extend(std::vector<Digit> w, const DigitWord* theta_exact) {
    const size_t base = w.size();
    std::vector<size_t> pi(w.size(), 0);  // pi[i] = longest border of w[0..i]
    for (size_t i = 1; i < w.size(); ++i) {
        size_t k = pi[i - 1];
        while (k > 0 && w[k] != w[i]) k = pi[k - 1];
        if (w[k] == w[i]) ++k;
        pi[i] = k;
    }
    std::map<size_t, size_t> seen;  // state -> length at which it occurred
    size_t run_len = 0, run_period = 0;
    const size_t cap = 64 * (base + 64);
    while (w.size() < cap) {
        size_t s = pi[w.size() - 1];
        // Emit min over the border chain (chain ends with the empty border 0).
        Digit d = w[0];
        for (size_t j = s; j > 0; j = pi[j - 1]) d = std::min(d, w[j]);

        // Growth-run bookkeeping: a border of length (size - p') growing by
        // one per step means the whole word is p'-periodic so far.
        size_t period_now = w.size() - s;
        if (run_len > 0 && period_now == run_period) {
            ++run_len;
        } else {
            run_len = 1;
            run_period = period_now;
        }
        if (run_len >= run_period + 8) {
            std::vector<Digit> per(w.begin(), w.begin() + run_period);
            DigitWord cand = DigitWord::eventually({}, std::move(per));
            bool consistent = true;
            for (size_t i = 0; i < w.size() && consistent; ++i)
                consistent = cand.at(i) == w[i];
            if (consistent && is_maximal(cand).kind == MaximalVerdict::Yes &&
                (theta_exact == nullptr || word_le(cand, *theta_exact)))
                return cand;
        }
        if (w.size() >= base) {
            auto it = seen.find(s);
            if (it != seen.end()) {
                size_t l1 = it->second;
                std::vector<Digit> pre(w.begin(), w.begin() + l1);
                std::vector<Digit> per(w.begin() + l1, w.end());
                DigitWord cand = DigitWord::eventually(std::move(pre), std::move(per));
                if (is_maximal(cand).kind == MaximalVerdict::Yes &&
                    (theta_exact == nullptr || word_le(cand, *theta_exact)))
                    return cand;
                seen.erase(it);  // verification failed; keep extending
            }
            seen[s] = w.size();
        }

        w.push_back(d);
        size_t k = pi[w.size() - 2];
        while (k > 0 && w[k] != d) k = pi[k - 1];
        if (w[k] == d) ++k;
        pi.push_back(k);
    }
    throw std::runtime_error("greedy maximal extension did not lock onto a period");
}

static bool finite_prefix_feasible(const std::vector<Digit>& p) {
    if (p.empty() || p[0] != 2) return false;
    for (size_t r = 1; r < p.size(); ++r) {
        for (size_t i = 0; r + i < p.size(); ++i) {
            if (p[r + i] > p[i]) return false;
            if (p[r + i] < p[i]) break;
        }
    }
    return true;
}

DigitWord max_maximal_below(const DigitWord& theta) {
    if (theta.observable() == 0 || theta.at(0) != 2)
        throw std::domain_error("max_maximal_below: theta below 2(0)");

    MaximalVerdict v = is_maximal(theta);
    if (v.kind == MaximalVerdict::Yes) return theta;
    if (v.kind == MaximalVerdict::Undecided) return theta;  // feasible finite prefix

    // First shift violation: theta[r+j] > theta[j] with agreement before j.
    size_t r = v.pos;
    CmpResult c = lex_cmp(theta.shifted(r), theta);
    size_t m_star = r + c.pos;

    // Every maximal word <= theta first differs from theta at some m <= m*,
    // with a smaller digit there.  Scan candidates in dominance order.
    for (size_t m = m_star; m >= 1; --m) {
        Digit tm = theta.at(m);
        if (tm == 0) continue;
        for (int d = static_cast<int>(tm) - 1; d >= 0; --d) {
            std::vector<Digit> p = theta.prefix_digits(m);
            p.push_back(static_cast<Digit>(d));
            if (!finite_prefix_feasible(p)) continue;
            const DigitWord* bound = theta.is_finite() ? nullptr : &theta;
            return greedy_extend(std::move(p), bound);
        }
    }
    throw std::domain_error("max_maximal_below: no maximal word below theta");
}

}  // namespace rotkit
