#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rotkit/word.hpp"

namespace rotkit {

// Substitution on the digit alphabet, e.g. "0>1;1>200;2>20".
struct Substitution {
    std::array<std::vector<Digit>, 3> images;

    static Substitution parse(const std::string& spec);
    // The family of Example-type substitutions: 0 -> 1, 1 -> 2 0^{n+1}, 2 -> 2 0^n.
    static Substitution lambda_n(int n);
    std::vector<Digit> apply(const std::vector<Digit>& w) const;
    // (*this) after `inner`: first apply inner, then this.
    Substitution after(const Substitution& inner) const;
    std::string str() const;
};

// Column j holds the digit counts of the image of digit j.
struct AbelMatrix {
    std::array<std::array<int64_t, 3>, 3> m{};

    static AbelMatrix identity();
    AbelMatrix operator*(const AbelMatrix& o) const;
    std::array<int64_t, 3> apply(const std::array<int64_t, 3>& v) const;
    AbelMatrix pow(int k) const;
    bool operator==(const AbelMatrix& o) const { return m == o.m; }
};

AbelMatrix abelianization(const Substitution& s);

// Prefix of the substitution fixed point grown from `seed`; requires the
// seed's image to start with the seed and have length at least 2.
std::vector<Digit> subst_fixed_prefix(const Substitution& s, Digit seed, size_t len);

struct PfData {
    double lambda1;
    std::array<double, 3> alpha;  // normalized to unit 1-norm
    double lambda2_abs;
};
// Dominant eigendata of a primitive matrix (primitivity checked up to the
// sixth power); lambda1 is cross-checked against the characteristic cubic.
PfData pf_eigen(const AbelMatrix& a);

struct DeviationProfile {
    std::array<double, 3> target;
    struct Sample {
        int64_t r;
        double dev;      // sup-norm deviation of the cocycle from r*target
        double max_dev;  // running maximum
    };
    std::vector<Sample> samples;
};
DeviationProfile deviation_profile(const std::vector<Digit>& s,
                                   const std::array<double, 3>& target,
                                   const std::vector<int64_t>& checkpoints);

// s_r = floor((r+1)*slope) - floor(r*slope); balanced: |ones(r) - r*slope| < 1.
std::vector<Digit> sturmian(double slope, size_t len);

struct Goober {
    std::vector<Digit> word;
    std::array<double, 3> target;
    int64_t block_len;  // q; deviations stay below 2q
};
// Substitutes equal-length blocks W0^k0 / W1^k1 into the Sturmian sequence of
// the given slope.
Goober build_goober(const DigitWord& w0, const DigitWord& w1, int k0, int k1, double slope,
                    size_t len);

// Periodic infimax of a rational frequency vector with alpha2 > 0: the
// minimum over necklaces of length q (the common denominator) of the maximal
// rotation.  `den_bound` guards the enumeration.
DigitWord infimax_rational(const FreqVector& alpha, int den_bound = 12);

// alpha lies in DF(w) iff its infimax does not exceed w.
bool df_char_test(const FreqVector& alpha, const DigitWord& w, int den_bound = 12);

}  // namespace rotkit
