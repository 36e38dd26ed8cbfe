#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rotkit/rational.hpp"

namespace rotkit {

// Words over the digit alphabet {0,1,2}.
//
// A DigitWord is either a finite prefix observation (empty period) or an
// exact eventually periodic infinite sequence (nonempty period).  Both forms
// are canonical after construction: the period carries no repeated block and
// the preperiod is as short as possible, so value equality is structural
// equality.

using Digit = uint8_t;

enum class Ord { LT, EQ, GT, Undecided };

struct CmpResult {
    Ord ord;
    // For LT/GT: index of the first differing symbol.  For Undecided: the
    // number of symbols that were compared before observations ran out.
    size_t pos;
};

class DigitWord {
public:
    DigitWord() = default;
    static DigitWord finite(std::vector<Digit> digits);
    static DigitWord eventually(std::vector<Digit> pre, std::vector<Digit> per);
    static DigitWord periodic(std::vector<Digit> per) { return eventually({}, std::move(per)); }

    // Text form: digits concatenated, period in parentheses: "21(1)", "(2)".
    static DigitWord parse(const std::string& text);
    std::string str() const;

    bool is_finite() const { return per_.empty(); }
    bool is_purely_periodic() const { return pre_.empty() && !per_.empty(); }
    // Number of observable symbols (SIZE_MAX for infinite words).
    size_t observable() const { return per_.empty() ? pre_.size() : SIZE_MAX; }
    size_t preperiod_len() const { return pre_.size(); }
    size_t period_len() const { return per_.size(); }
    const std::vector<Digit>& preperiod() const { return pre_; }
    const std::vector<Digit>& period() const { return per_; }

    Digit at(size_t i) const;
    DigitWord shifted(size_t r) const;
    // First n symbols as a finite word (n clipped to the observable length).
    DigitWord prefix(size_t n) const;
    std::vector<Digit> prefix_digits(size_t n) const;

    bool operator==(const DigitWord& o) const { return pre_ == o.pre_ && per_ == o.per_; }

private:
    std::vector<Digit> pre_, per_;
    void canonicalize();
};

CmpResult lex_cmp(const DigitWord& a, const DigitWord& b);
inline bool word_le(const DigitWord& a, const DigitWord& b) {
    Ord o = lex_cmp(a, b).ord;
    return o == Ord::LT || o == Ord::EQ;
}
inline bool word_lt(const DigitWord& a, const DigitWord& b) { return lex_cmp(a, b).ord == Ord::LT; }

struct MaximalVerdict {
    enum Kind { Yes, No, Undecided } kind;
    // For No: the shift r whose image strictly exceeds the word.
    // For Undecided: the depth to which maximality was verified.
    size_t pos;
};
MaximalVerdict is_maximal(const DigitWord& w);

struct MemberVerdict {
    enum Kind { In, Out, Undecided } kind;
    // For Out: the violating shift r.  For Undecided: depth examined.
    size_t pos;
};
// Membership of s in the beta-shift of the maximal word w: every shift of s
// must be lexicographically <= w.  Rejects w that is certified non-maximal.
MemberVerdict beta_member(const DigitWord& s, const DigitWord& w);

struct CocycleSum {
    std::array<int64_t, 3> counts{0, 0, 0};
    int64_t length = 0;
};
CocycleSum kappa_cocycle(const DigitWord& s, size_t r);

struct FreqVector {
    std::array<Rat, 3> a;
    Rat& operator[](size_t i) { return a[i]; }
    const Rat& operator[](size_t i) const { return a[i]; }
    bool operator==(const FreqVector& o) const { return a == o.a; }
    std::string str() const { return rat_str(a[0]) + "," + rat_str(a[1]) + "," + rat_str(a[2]); }
};
FreqVector freq(const DigitWord& s);

// Largest maximal word <= theta.  Exact (eventually periodic) whenever the
// answer is determined by the observable part of theta; a feasible finite
// theta with no internal shift violation comes back unchanged, as a certified
// prefix of the answer for every completion.
DigitWord max_maximal_below(const DigitWord& theta);

}  // namespace rotkit
