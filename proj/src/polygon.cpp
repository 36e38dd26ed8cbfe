#include "rotkit/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotkit {

namespace {

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rat dot(const Pt& a, const Pt& b) { return a[0] * b[0] + a[1] * b[1]; }

Pt sub(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1]}; }

Rat dist2_seg(const Pt& p, const Pt& a, const Pt& b) {
    Pt ab = sub(b, a), ap = sub(p, a);
    Rat len2 = dot(ab, ab);
    if (len2 == 0) return dot(ap, ap);
    Rat t = dot(ap, ab) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Pt c{a[0] + t * ab[0], a[1] + t * ab[1]};
    Pt d = sub(p, c);
    return dot(d, d);
}

}  // namespace

RatPolygon RatPolygon::hull_of(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    RatPolygon poly;
    if (pts.size() <= 2) {
        poly.v_ = std::move(pts);
        return poly;
    }
    // Andrew monotone chain; strict turns only, so collinear points drop out.
    std::vector<Pt> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() <= 2) {
        // All input points collinear: keep the two extremes.
        poly.v_ = {h.front(), h.size() == 2 ? h.back() : h.front()};
        if (poly.v_[0] == poly.v_[1]) poly.v_.resize(1);
        return poly;
    }
    // Monotone chain emits counterclockwise; rotate so the lexicographically
    // smallest vertex leads.
    auto mn = std::min_element(h.begin(), h.end());
    std::rotate(h.begin(), mn, h.end());
    poly.v_ = std::move(h);
    return poly;
}

bool RatPolygon::contains(const Pt& p) const {
    if (v_.empty()) return false;
    if (v_.size() == 1) return v_[0] == p;
    if (v_.size() == 2) {
        if (cross(v_[0], v_[1], p) != 0) return false;
        Pt d = sub(v_[1], v_[0]);
        Rat t = dot(sub(p, v_[0]), d);
        return t >= 0 && t <= dot(d, d);
    }
    for (size_t i = 0; i < v_.size(); ++i) {
        const Pt& a = v_[i];
        const Pt& b = v_[(i + 1) % v_.size()];
        if (cross(a, b, p) < 0) return false;
    }
    return true;
}

bool RatPolygon::contains(const RatPolygon& other) const {
    for (const Pt& p : other.v_)
        if (!contains(p)) return false;
    return true;
}

Rat RatPolygon::dist2(const Pt& p) const {
    if (v_.empty()) throw std::invalid_argument("dist2: empty polygon");
    if (contains(p)) return Rat(0);
    Rat best(-1);
    for (size_t i = 0; i < v_.size(); ++i) {
        Rat d = dist2_seg(p, v_[i], v_[(i + 1) % v_.size()]);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

Rat sqrt_upper(const Rat& x) {
    if (x < 0) throw std::domain_error("sqrt_upper: negative");
    if (x == 0) return Rat(0);
    Int num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Rat r(rn, rd);
        r.canonicalize();
        return r;
    }
    // ceil(2^32 * sqrt(x)) / 2^32
    Int scale = Int(1) << 32;
    Int target = num * scale * scale;
    Int q = target / den;
    Int root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    while (root * root * den < target) root += 1;
    Rat r(root, scale);
    r.canonicalize();
    return r;
}

Rat hausdorff(const RatPolygon& p, const RatPolygon& q) {
    if (p.empty() || q.empty()) throw std::invalid_argument("hausdorff: empty polygon");
    Rat worst(0);
    for (const Pt& v : p.vertices()) worst = std::max(worst, q.dist2(v));
    for (const Pt& v : q.vertices()) worst = std::max(worst, p.dist2(v));
    return sqrt_upper(worst);
}

std::string polygon_str(const RatPolygon& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.vertices().size(); ++i) {
        if (i) s += " ";
        s += "(" + rat_str(p.vertices()[i][0]) + "," + rat_str(p.vertices()[i][1]) + ")";
    }
    return s + "]";
}

}  // namespace rotkit
