#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rotkit {

// All certified arithmetic runs on exact rationals; doubles appear only in
// eigenvalue/slope computations and rendering.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p"; also accepts a plain decimal like "0.75".
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        bool neg = !digits.empty() && digits[0] == '-';
        if (neg) digits = digits.substr(1);
        if (digits.empty()) throw std::invalid_argument("bad rational: " + s);
        Int num(digits, 10);
        Int den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat q(num, den);
        q.canonicalize();
        return neg ? Rat(-q) : q;
    }
    Rat q(s);
    q.canonicalize();
    return q;
}

// Canonical "p/q" form ("p" when q == 1); used by every serializer.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double rat_d(const Rat& q) { return q.get_d(); }

inline std::optional<int64_t> to_i64(const Int& z) {
    if (!z.fits_slong_p()) return std::nullopt;
    return static_cast<int64_t>(z.get_si());
}

}  // namespace rotkit
