#include <doctest.h>

#include <random>

#include "rotkit/pipeline.hpp"

using namespace rotkit;

namespace {
FreqVector FV(long a0, long b0, long a1, long b1, long a2, long b2) {
    FreqVector f;
    f[0] = make_rat(a0, b0);
    f[1] = make_rat(a1, b1);
    f[2] = make_rat(a2, b2);
    return f;
}
Pt P(long a, long b, long c, long d) { return {make_rat(a, b), make_rat(c, d)}; }
}  // namespace

TEST_CASE("projection anchors") {
    CHECK(project_pi(FV(0, 1, 1, 1, 0, 1)) == P(0, 1, 0, 1));
    CHECK(project_pi(FV(0, 1, 0, 1, 1, 1)) == P(1, 1, 0, 1));
    CHECK(project_pi(FV(1, 1, 0, 1, 0, 1)) == P(0, 1, 1, 2));
}

TEST_CASE("inverse projection anchors") {
    CHECK(pi_inverse(P(2, 3, 0, 1)) == FV(0, 1, 1, 3, 2, 3));
    CHECK(pi_inverse(P(3, 5, 1, 5)) == FV(1, 4, 0, 1, 3, 4));
    CHECK(pi_inverse(P(0, 1, 1, 2)) == FV(1, 1, 0, 1, 0, 1));
    CHECK_THROWS_AS(pi_inverse(P(2, 1, 0, 1)), std::domain_error);
}

TEST_CASE("projection round trip on random simplex points") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(0, 60);
    int done = 0;
    while (done < 1000) {
        long a = num(rng), b = num(rng), c = num(rng);
        if (a + b + c == 0) continue;
        long s = a + b + c;
        FreqVector f = FV(a, s, b, s, c, s);
        FreqVector back = pi_inverse(project_pi(f));
        CHECK(back == f);
        ++done;
    }
}

TEST_CASE("rotation set anchors from the figure-eight family") {
    RotsetReport tri = rotation_set(Rat(1), 4, 4);
    CHECK(tri.closed);
    CHECK(tri.outer ==
          RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 1, 0, 1), P(0, 1, 1, 2)}));
    CHECK(tri.classification == "rational-regular");
    CHECK(tri.gap == 0);

    RotsetReport quad = rotation_set(Rat(3, 4), 6, 6);
    CHECK(quad.closed);
    CHECK(quad.outer == RatPolygon::hull_of({P(0, 1, 0, 1), P(2, 3, 0, 1), P(3, 5, 1, 5),
                                             P(0, 1, 1, 2)}));
    CHECK(quad.kneading == DigitWord::parse("(2220)"));

    // t = 0: the window models keep admitting cycles just beyond DF(2(1)),
    // so the report stays open; the inner hull is already the projected
    // digit-frequency triangle.
    RotsetReport zero = rotation_set(Rat(0), 6, 6);
    CHECK(!zero.closed);
    CHECK(zero.classification == "open-irrational");
    CHECK(zero.inner ==
          RatPolygon::hull_of({P(0, 1, 0, 1), P(1, 3, 1, 3), P(0, 1, 1, 2)}));
    CHECK(zero.outer.contains(zero.inner));

    CHECK_THROWS_AS(rotation_set(Rat(2), 4, 4), std::domain_error);
}

TEST_CASE("closed reports are stable in the order") {
    RotsetReport base = rotation_set(Rat(3, 4), 4, 4);
    REQUIRE(base.closed);
    for (int n : {5, 6}) {
        RotsetReport next = rotation_set(Rat(3, 4), n, 4);
        CHECK(next.closed);
        CHECK(next.outer == base.outer);
        CHECK(next.inner == base.inner);
    }
}

TEST_CASE("closed vertices come from inner witnesses") {
    RotsetReport quad = rotation_set(Rat(3, 4), 6, 6);
    REQUIRE(quad.closed);
    for (const Pt& v : quad.outer.vertices()) {
        bool witnessed = false;
        for (const Witness& w : quad.witnesses)
            if (project_pi(w.frequency) == v) witnessed = true;
        CHECK(witnessed);
    }
}

TEST_CASE("outer rotation sets grow with the parameter") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> num(0, 240);
    for (int it = 0; it < 12; ++it) {
        Rat a = make_rat(num(rng), 240), b = make_rat(num(rng), 240);
        if (b < a) std::swap(a, b);
        RotsetReport ra = rotation_set(a, 6, 5);
        RotsetReport rb = rotation_set(b, 6, 5);
        CHECK(rb.outer.contains(ra.outer));
    }
}

TEST_CASE("scan structure") {
    PlateauList pl = scan_serial(Rat(0), Rat(1), 33, 6);
    CHECK(pl.grid.size() == 33);
    CHECK(pl.grid.front() == 0);
    CHECK(pl.grid.back() == 1);
    // plateaus tile the grid in order
    size_t expect = 0;
    for (const Plateau& p : pl.plateaus) {
        CHECK(p.first == expect);
        expect = p.last + 1;
    }
    CHECK(expect == pl.grid.size());

    PlateauList two = scan_serial(Rat(0), Rat(1), 2, 5);
    CHECK(two.plateaus.size() == 2);  // the endpoint polygons differ

    PlateauList flat = scan_serial(Rat(3, 4), Rat(3, 4), 2, 5);
    CHECK(flat.plateaus.size() == 1);

    CHECK_THROWS_AS(scan_serial(Rat(1), Rat(0), 8, 5), std::invalid_argument);
    CHECK_THROWS_AS(scan_serial(Rat(0), Rat(1), 1, 5), std::invalid_argument);
}

TEST_CASE("parallel scan equals the serial reference") {
    PlateauList a = scan(Rat(1, 4), Rat(7, 8), 41, 7);
    PlateauList b = scan_serial(Rat(1, 4), Rat(7, 8), 41, 7);
    CHECK(a.plateau_id == b.plateau_id);
    CHECK(a.n_vertices == b.n_vertices);
    CHECK(a.closed == b.closed);
    CHECK(a.plateaus.size() == b.plateaus.size());
    for (size_t i = 0; i < a.plateaus.size(); ++i)
        CHECK(a.plateaus[i].outer == b.plateaus[i].outer);
}

TEST_CASE("hausdorff in the projected chart") {
    RotsetReport tri = rotation_set(Rat(1), 4, 4);
    RotsetReport quad = rotation_set(Rat(3, 4), 6, 6);
    CHECK(hausdorff_pi(tri.outer, tri.outer) == 0);
    Rat d = hausdorff_pi(quad.outer, tri.outer);
    CHECK(d > 0);
    CHECK(quad.gap == 0);
}

TEST_CASE("orbit averages land inside the certified polygon") {
    // random rational starting points at t = 3/4; estimates after 10^4 steps
    // stay within 0.02 of the certified rotation set
    RotsetReport quad = rotation_set(Rat(3, 4), 6, 6);
    REQUIRE(quad.closed);
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(0, 7999);
    Rat tol2 = make_rat(1, 2500);  // 0.02 squared
    for (int it = 0; it < 25; ++it) {
        long n = num(rng);
        EightPoint x = n < 5000 ? make_point(Circle::S1, make_rat(n, 1000))
                                : make_point(Circle::S2, make_rat(n - 5000, 1000));
        OrbitResult orb = orbit_cocycle(Rat(3, 4), x, 10000);
        CHECK(quad.outer.dist2({orb.estimate[0], orb.estimate[1]}) <= tol2);
    }
}

TEST_CASE("orbit averages stay near the outer model at random parameters") {
    std::mt19937 rng(7777);
    std::uniform_int_distribution<long> tnum(0, 96), num(0, 7999);
    Rat tol2 = make_rat(1, 2500);
    for (int tc = 0; tc < 4; ++tc) {
        Rat t = make_rat(tnum(rng), 96);
        RotsetReport rep = rotation_set(t, 8, 6);
        for (int it = 0; it < 10; ++it) {
            long n = num(rng);
            EightPoint x = n < 5000 ? make_point(Circle::S1, make_rat(n, 1000))
                                    : make_point(Circle::S2, make_rat(n - 5000, 1000));
            OrbitResult orb = orbit_cocycle(t, x, 10000);
            CHECK(rep.outer.dist2({orb.estimate[0], orb.estimate[1]}) <= tol2);
        }
    }
}
