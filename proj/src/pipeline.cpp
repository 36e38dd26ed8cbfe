#include "rotkit/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotkit {

Pt project_pi(const FreqVector& a) {
    Rat denom = 1 + a[0];
    return {a[2] / denom, a[0] / denom};
}

FreqVector pi_inverse(const Pt& p) {
    Rat one_my = 1 - p[1];
    if (one_my == 0) throw std::domain_error("pi_inverse: point outside the image of the simplex");
    FreqVector f;
    f[0] = p[1] / one_my;
    f[1] = (1 - p[0] - 2 * p[1]) / one_my;
    f[2] = p[0] / one_my;
    for (int i = 0; i < 3; ++i)
        if (f[i] < 0 || f[i] > 1)
            throw std::domain_error("pi_inverse: point outside the image of the simplex");
    return f;
}

RatPolygon project_polygon(const RatPolygon& delta_chart) {
    std::vector<Pt> pts;
    pts.reserve(delta_chart.size());
    for (const Pt& v : delta_chart.vertices()) {
        FreqVector f;
        f[0] = v[0];
        f[2] = v[1];
        f[1] = 1 - v[0] - v[1];
        pts.push_back(project_pi(f));
    }
    return RatPolygon::hull_of(pts);
}

RotsetReport rotation_set(const Rat& t, int order, int max_period, size_t kneading_depth) {
    if (t < 0 || t > 1) throw std::domain_error("rotation_set: t outside [0,1]");
    if (order < 2) throw std::invalid_argument("rotation_set: order must be >= 2");
    if (max_period < 1) throw std::invalid_argument("rotation_set: max_period must be >= 1");
    size_t kd = kneading_depth ? kneading_depth
                               : std::max<size_t>(64, 4 * static_cast<size_t>(order));
    if (kd < static_cast<size_t>(order))
        throw std::invalid_argument("rotation_set: kneading depth below the order");

    RotsetReport r;
    r.t = t;
    r.order = order;
    r.max_period = max_period;
    r.kneading_depth = kd;

    KneadingResult k = kneading_prefix(t, kd);
    r.theta_prefix = k.theta_prefix;
    r.kneading = k.kneading;
    r.kneading_exact = k.exact;

    DfApprox a = df_approx(k.kneading, order, max_period);
    r.inner = project_polygon(a.inner);
    r.outer = project_polygon(a.outer);
    r.witnesses = a.witnesses;
    r.closed = a.closed();
    if (!r.inner.empty() && !r.outer.contains(r.inner))
        throw std::logic_error("rotation_set: certified inner set escaped the outer set");
    r.classification = r.closed ? "rational-regular" : "open-irrational";
    r.class_depth = r.closed ? 0 : (k.exact ? kd : k.kneading.observable());
    r.gap = r.inner.empty() ? Rat(0) : hausdorff(r.inner, r.outer);
    return r;
}

namespace {

PlateauList scan_impl(const Rat& t0, const Rat& t1, int steps, int depth, int max_period,
                      bool parallel) {
    if (steps < 2) throw std::invalid_argument("scan: need at least 2 grid points");
    if (t1 < t0) throw std::invalid_argument("scan: empty parameter range");
    if (max_period <= 0) max_period = std::min(depth, 8);

    PlateauList pl;
    pl.t0 = t0;
    pl.t1 = t1;
    pl.steps = steps;
    pl.depth = depth;
    pl.grid.resize(steps);
    for (int i = 0; i < steps; ++i)
        pl.grid[i] = t0 + (t1 - t0) * Rat(i) / Rat(steps - 1);

    std::vector<RatPolygon> outers(steps);
    pl.n_vertices.resize(steps);
    pl.closed.resize(steps);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < steps; ++i) {
        RotsetReport rep = rotation_set(pl.grid[i], depth, max_period);
        outers[i] = rep.outer;
        pl.n_vertices[i] = rep.outer.size();
        pl.closed[i] = rep.closed;
    }
#ifndef _OPENMP
    (void)parallel;
#endif

    pl.plateau_id.resize(steps);
    for (int i = 0; i < steps; ++i) {
        if (i > 0 && outers[i] == outers[i - 1]) {
            pl.plateau_id[i] = pl.plateau_id[i - 1];
            pl.plateaus.back().last = i;
            pl.plateaus.back().t_last = pl.grid[i];
        } else {
            pl.plateau_id[i] = static_cast<int>(pl.plateaus.size());
            Plateau p;
            p.first = p.last = i;
            p.t_first = p.t_last = pl.grid[i];
            p.outer = outers[i];
            pl.plateaus.push_back(std::move(p));
        }
    }
    return pl;
}

}  // namespace

PlateauList scan(const Rat& t0, const Rat& t1, int steps, int depth, int max_period) {
    return scan_impl(t0, t1, steps, depth, max_period, true);
}

PlateauList scan_serial(const Rat& t0, const Rat& t1, int steps, int depth, int max_period) {
    return scan_impl(t0, t1, steps, depth, max_period, false);
}

}  // namespace rotkit
