#include "rotkit/infimax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotkit {

Substitution Substitution::parse(const std::string& spec) {
    Substitution s;
    std::array<bool, 3> set{false, false, false};
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t end = spec.find(';', pos);
        if (end == std::string::npos) end = spec.size();
        std::string rule = spec.substr(pos, end - pos);
        auto gt = rule.find('>');
        if (gt != 1 || rule.size() < 3 || rule[0] < '0' || rule[0] > '2')
            throw std::invalid_argument("bad substitution rule: " + rule);
        int d = rule[0] - '0';
        std::vector<Digit> img;
        for (size_t i = 2; i < rule.size(); ++i) {
            if (rule[i] < '0' || rule[i] > '2')
                throw std::invalid_argument("bad substitution rule: " + rule);
            img.push_back(static_cast<Digit>(rule[i] - '0'));
        }
        s.images[d] = std::move(img);
        set[d] = true;
        pos = end + 1;
    }
    for (int d = 0; d < 3; ++d)
        if (!set[d] || s.images[d].empty())
            throw std::invalid_argument("substitution must map every digit to a nonempty word");
    return s;
}

Substitution Substitution::lambda_n(int n) {
    if (n < 0) throw std::invalid_argument("lambda_n: n must be >= 0");
    Substitution s;
    s.images[0] = {1};
    s.images[1].assign(1, 2);
    s.images[1].insert(s.images[1].end(), n + 1, 0);
    s.images[2].assign(1, 2);
    s.images[2].insert(s.images[2].end(), n, 0);
    return s;
}

std::vector<Digit> Substitution::apply(const std::vector<Digit>& w) const {
    std::vector<Digit> out;
    size_t total = 0;
    for (Digit d : w) total += images[d].size();
    out.reserve(total);
    for (Digit d : w) out.insert(out.end(), images[d].begin(), images[d].end());
    return out;
}

Substitution Substitution::after(const Substitution& inner) const {
    Substitution s;
    for (int d = 0; d < 3; ++d) s.images[d] = apply(inner.images[d]);
    return s;
}

std::string Substitution::str() const {
    std::string out;
    for (int d = 0; d < 3; ++d) {
        if (d) out += ";";
        out += char('0' + d);
        out += ">";
        for (Digit x : images[d]) out += char('0' + x);
    }
    return out;
}

AbelMatrix AbelMatrix::identity() {
    AbelMatrix a;
    for (int i = 0; i < 3; ++i) a.m[i][i] = 1;
    return a;
}

AbelMatrix AbelMatrix::operator*(const AbelMatrix& o) const {
    AbelMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int64_t s = 0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

std::array<int64_t, 3> AbelMatrix::apply(const std::array<int64_t, 3>& v) const {
    std::array<int64_t, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
    return r;
}

AbelMatrix AbelMatrix::pow(int k) const {
    AbelMatrix r = identity(), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

AbelMatrix abelianization(const Substitution& s) {
    AbelMatrix a;
    for (int j = 0; j < 3; ++j)
        for (Digit d : s.images[j]) a.m[d][j]++;
    return a;
}

std::vector<Digit> subst_fixed_prefix(const Substitution& s, Digit seed, size_t len) {
    if (seed > 2) throw std::invalid_argument("subst_fixed_prefix: bad seed");
    if (s.images[seed].size() < 2 || s.images[seed][0] != seed)
        throw std::invalid_argument(
            "subst_fixed_prefix: seed image must start with the seed and be longer than 1");
    std::vector<Digit> w = s.images[seed];
    while (w.size() < len) w = s.apply(w);
    w.resize(len);
    return w;
}

PfData pf_eigen(const AbelMatrix& a) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a.m[i][j] < 0) throw std::invalid_argument("pf_eigen: negative entry");

    bool primitive = false;
    AbelMatrix p = a;
    for (int k = 1; k <= 6 && !primitive; ++k) {
        primitive = true;
        for (int i = 0; i < 3 && primitive; ++i)
            for (int j = 0; j < 3 && primitive; ++j) primitive = p.m[i][j] > 0;
        if (!primitive) {
            p = p * a;
            // keep entries bounded; only positivity matters
            for (auto& row : p.m)
                for (auto& x : row) x = std::min<int64_t>(x, int64_t(1) << 40);
        }
    }
    if (!primitive) throw std::invalid_argument("pf_eigen: matrix is not primitive");

    // Characteristic cubic x^3 - c2 x^2 + c1 x - c0.
    const auto& m = a.m;
    double c2 = double(m[0][0] + m[1][1] + m[2][2]);
    double c1 = double(m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                       m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    double c0 = double(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));

    auto f = [&](double x) { return ((x - c2) * x + c1) * x - c0; };
    auto fp = [&](double x) { return (3 * x - 2 * c2) * x + c1; };
    double x = 1;
    for (int i = 0; i < 3; ++i) {
        double row = 0;
        for (int j = 0; j < 3; ++j) row += double(m[i][j]);
        x = std::max(x, row);
    }
    x += 1;  // strictly right of the spectrum; Newton descends monotonically
    for (int it = 0; it < 200; ++it) {
        double step = f(x) / fp(x);
        x -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    PfData r;
    r.lambda1 = x;

    // Deflate: x^2 + b x + c.
    double b = x - c2;
    double c = x * x - c2 * x + c1;
    double disc = b * b - 4 * c;
    if (disc >= 0) {
        double s = std::sqrt(disc);
        r.lambda2_abs = std::max(std::abs((-b + s) / 2), std::abs((-b - s) / 2));
    } else {
        r.lambda2_abs = std::sqrt(c);
    }

    std::array<double, 3> v{1.0 / 3, 1.0 / 3, 1.0 / 3};
    for (int it = 0; it < 500; ++it) {
        std::array<double, 3> nv{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) nv[i] += double(m[i][j]) * v[j];
        double norm = nv[0] + nv[1] + nv[2];
        for (auto& e : nv) e /= norm;
        double delta = 0;
        for (int i = 0; i < 3; ++i) delta = std::max(delta, std::abs(nv[i] - v[i]));
        v = nv;
        if (delta < 1e-16) break;
    }
    r.alpha = v;

    double resid = 0;
    for (int i = 0; i < 3; ++i) {
        double row = 0;
        for (int j = 0; j < 3; ++j) row += double(m[i][j]) * v[j];
        resid = std::max(resid, std::abs(row - r.lambda1 * v[i]));
    }
    if (resid > 1e-9) throw std::logic_error("pf_eigen: eigenvector residual too large");
    return r;
}

DeviationProfile deviation_profile(const std::vector<Digit>& s,
                                   const std::array<double, 3>& target,
                                   const std::vector<int64_t>& checkpoints) {
    for (size_t i = 0; i + 1 < checkpoints.size(); ++i)
        if (checkpoints[i] >= checkpoints[i + 1])
            throw std::invalid_argument("deviation_profile: checkpoints must increase");
    if (!checkpoints.empty() &&
        checkpoints.back() > static_cast<int64_t>(s.size()))
        throw std::out_of_range("deviation_profile: checkpoint beyond observable length");

    DeviationProfile prof;
    prof.target = target;
    std::array<int64_t, 3> counts{0, 0, 0};
    int64_t pos = 0;
    double running = 0;
    for (int64_t r : checkpoints) {
        for (; pos < r; ++pos) counts[s[pos]]++;
        double dev = 0;
        for (int i = 0; i < 3; ++i)
            dev = std::max(dev, std::abs(double(counts[i]) - double(r) * target[i]));
        running = std::max(running, dev);
        prof.samples.push_back({r, dev, running});
    }
    return prof;
}

std::vector<Digit> sturmian(double slope, size_t len) {
    if (slope < 0 || slope > 1) throw std::invalid_argument("sturmian: slope outside [0,1]");
    std::vector<Digit> s(len);
    for (size_t r = 0; r < len; ++r)
        s[r] = static_cast<Digit>(std::floor((double(r) + 1) * slope) -
                                  std::floor(double(r) * slope));
    return s;
}

Goober build_goober(const DigitWord& w0, const DigitWord& w1, int k0, int k1, double slope,
                    size_t len) {
    if (!w0.is_purely_periodic() || !w1.is_purely_periodic())
        throw std::invalid_argument("build_goober: blocks must be periodic words");
    if (k0 < 1 || k1 < 1) throw std::invalid_argument("build_goober: repeat counts must be >= 1");
    std::vector<Digit> b0, b1;
    for (int i = 0; i < k0; ++i)
        b0.insert(b0.end(), w0.period().begin(), w0.period().end());
    for (int i = 0; i < k1; ++i)
        b1.insert(b1.end(), w1.period().begin(), w1.period().end());
    if (b0.size() != b1.size())
        throw std::invalid_argument("build_goober: blocks must have equal length");
    const int64_t q = static_cast<int64_t>(b0.size());

    std::array<int64_t, 3> p0{0, 0, 0}, p1{0, 0, 0};
    for (Digit d : b0) p0[d]++;
    for (Digit d : b1) p1[d]++;

    Goober g;
    g.block_len = q;
    for (int i = 0; i < 3; ++i)
        g.target[i] = (1 - slope) * double(p0[i]) / double(q) + slope * double(p1[i]) / double(q);

    std::vector<Digit> sturm = sturmian(slope, len / q + 2);
    g.word.reserve(len + q);
    for (Digit bit : sturm) {
        const auto& blk = bit ? b1 : b0;
        g.word.insert(g.word.end(), blk.begin(), blk.end());
        if (g.word.size() >= len) break;
    }
    g.word.resize(len);
    return g;
}

DigitWord infimax_rational(const FreqVector& alpha, int den_bound) {
    if (alpha[0] < 0 || alpha[1] < 0 || alpha[2] <= 0)
        throw std::domain_error("infimax_rational: need alpha in the simplex with alpha2 > 0");
    if (alpha[0] + alpha[1] + alpha[2] != 1)
        throw std::domain_error("infimax_rational: coordinates must sum to 1");
    Int q;
    mpz_lcm(q.get_mpz_t(), alpha[0].get_den().get_mpz_t(), alpha[1].get_den().get_mpz_t());
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), alpha[2].get_den().get_mpz_t());
    auto qi = to_i64(q);
    if (!qi || *qi > den_bound)
        throw std::invalid_argument("infimax_rational: denominator exceeds the oracle bound");
    const int n = static_cast<int>(*qi);

    std::array<int, 3> counts;
    for (int i = 0; i < 3; ++i) {
        Rat c = alpha[i] * Rat(q);
        counts[i] = static_cast<int>(c.get_num().get_si());
    }

    // Minimum over arrangements of the maximal rotation; length-n periodic
    // words compare on n symbols.
    std::vector<Digit> arr;
    for (int d = 0; d < 3; ++d) arr.insert(arr.end(), counts[d], static_cast<Digit>(d));
    auto rot_less = [n](const std::vector<Digit>& a, size_t ra, const std::vector<Digit>& b,
                        size_t rb) {
        for (int i = 0; i < n; ++i) {
            Digit x = a[(ra + i) % n], y = b[(rb + i) % n];
            if (x != y) return x < y;
        }
        return false;
    };
    std::vector<Digit> best;
    do {
        size_t top = 0;
        for (size_t r = 1; r < arr.size(); ++r)
            if (rot_less(arr, top, arr, r)) top = r;
        std::vector<Digit> rot(n);
        for (int i = 0; i < n; ++i) rot[i] = arr[(top + i) % n];
        if (best.empty() || std::lexicographical_compare(rot.begin(), rot.end(), best.begin(),
                                                         best.end()))
            best = std::move(rot);
    } while (std::next_permutation(arr.begin(), arr.end()));

    DigitWord w = DigitWord::periodic(best);
    if (is_maximal(w).kind != MaximalVerdict::Yes)
        throw std::logic_error("infimax_rational: necklace minimum is not maximal");
    if (!(freq(w) == alpha)) throw std::logic_error("infimax_rational: frequency mismatch");
    return w;
}

bool df_char_test(const FreqVector& alpha, const DigitWord& w, int den_bound) {
    CmpResult c = lex_cmp(infimax_rational(alpha, den_bound), w);
    if (c.ord == Ord::Undecided)
        throw std::domain_error("df_char_test: comparison undecided on a finite prefix");
    return c.ord != Ord::GT;
}

}  // namespace rotkit
