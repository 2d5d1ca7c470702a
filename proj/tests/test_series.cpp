#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phylogf/series.hpp"

using namespace phylogf;

namespace {

bool equal(const RatSeries& a, const RatSeries& b) {
    if (a.order != b.order) return false;
    for (int i = 0; i <= a.order; ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

bool equal(const MleSeries& a, const MleSeries& b) {
    if (a.order != b.order) return false;
    for (int i = 0; i <= a.order; ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

// deterministic pseudo-random rational series
RatSeries sample_series(int order, unsigned seed, bool unit_constant) {
    RatSeries s(order, mpq_class(0));
    unsigned long x = seed * 2654435761UL + 1;
    for (int i = 0; i <= order; ++i) {
        x = x * 6364136223846793005UL + 1442695040888963407UL;
        long num = long(x >> 40) % 19 - 9;
        long den = 1 + long((x >> 20) & 7);
        s.c[i] = mpq_class(num, den);
        s.c[i].canonicalize();
    }
    if (unit_constant) s.c[0] = 1;
    return s;
}

}  // namespace

TEST_CASE("arithmetic laws") {
    RatSeries a = sample_series(40, 11, false);
    RatSeries b = sample_series(40, 22, false);
    RatSeries c = sample_series(40, 33, false);
    CHECK(equal(ts_mul(a, b), ts_mul(b, a)));
    CHECK(equal(ts_mul(ts_add(a, b), c), ts_add(ts_mul(a, c), ts_mul(b, c))));
    CHECK(equal(ts_sub(a, a), RatSeries(40, mpq_class(0))));
    CHECK(equal(ts_scale(a, 2), ts_add(a, a)));
}

TEST_CASE("parallel product matches the serial reference") {
    // above the serial cutoff, on both coefficient rings
    RatSeries a = sample_series(150, 5, false);
    RatSeries b = sample_series(150, 6, false);
    CHECK(equal(ts_mul(a, b), ts_mul_serial(a, b)));

    MleSeries p = build_P(90, MultilinearElem::gen(2, 1), MultilinearElem::gen(2, 2),
                          MultilinearElem(2));
    MleSeries m = build_M(90, MultilinearElem::gen(2, 2));
    CHECK(equal(ts_mul(p, m), ts_mul_serial(p, m)));
}

TEST_CASE("shift and truncate") {
    RatSeries a = sample_series(20, 7, false);
    RatSeries up = ts_shift(a, 3);
    CHECK(up.c[3] == a.c[0]);
    CHECK(up.c[0] == 0);
    RatSeries down = ts_shift(up, -3);
    for (int i = 0; i + 3 <= 20; ++i) CHECK(down.c[i] == a.c[i]);
    CHECK_THROWS_AS(ts_shift(a, -1), std::invalid_argument);  // a.c[0] != 0 generically
    CHECK(ts_truncate(a, 5).order == 5);
    CHECK_THROWS_AS(ts_truncate(a, 21), std::invalid_argument);
}

TEST_CASE("reciprocal and square root invert exactly") {
    RatSeries a = sample_series(60, 13, true);
    RatSeries one(60, mpq_class(0));
    one.c[0] = 1;
    CHECK(equal(ts_mul(a, ts_recip(a)), one));

    // geometric series: 1/(1-z) has all coefficients 1
    RatSeries g(30, mpq_class(0));
    g.c[0] = 1;
    g.c[1] = -1;
    RatSeries inv = ts_recip(g);
    for (int i = 0; i <= 30; ++i) CHECK(inv.c[i] == 1);

    RatSeries s = sample_series(60, 17, true);
    RatSeries r = ts_sqrt(s);
    CHECK(equal(ts_mul(r, r), s));
    RatSeries bad = sample_series(10, 3, false);
    bad.c[0] = 2;
    CHECK_THROWS_AS(ts_sqrt(bad), std::invalid_argument);
}

TEST_CASE("plain Motzkin tree series") {
    RatSeries m0 = subst_zero(build_M(9, MultilinearElem(0)));
    CHECK(m0.c[1] == 1);
    CHECK(m0.c[3] == mpq_class(1, 2));
    CHECK(m0.c[5] == mpq_class(1, 2));
    CHECK(m0.c[7] == mpq_class(5, 8));
    CHECK(m0.c[9] == mpq_class(7, 8));
    for (int i = 0; i <= 9; i += 2) CHECK(m0.c[i] == 0);
    // every denominator is a power of two
    for (int i = 1; i <= 9; i += 2) {
        mpz_class den = m0.c[i].get_den();
        while (den % 2 == 0) den /= 2;
        CHECK(den == 1);
    }
}

TEST_CASE("marked builders") {
    const int N = 12;
    MultilinearElem y = MultilinearElem::gen(1, 1);
    MultilinearElem none(1);

    // a unary root contributes exactly one marked vertex atop a plain tree
    MleSeries mu = build_Mu(N, y);
    CHECK(mu.c[4].c[0] == 0);
    CHECK(mu.c[4].c[1] == mpq_class(1, 2));

    MleSeries m = build_M(N, y);
    CHECK(m.c[4].c[1] == mpq_class(3, 2));

    // M = Mtilde + z y Mtilde
    MleSeries mt = build_Mtilde(N, y);
    MleSeries ymt = mt;
    for (int i = 0; i <= ymt.order; ++i) ymt.c[i] = ymt.c[i] * y;
    MleSeries rhs = ts_add(mt, ts_shift(ymt, 1));
    CHECK(equal(m, rhs));

    // dropping the markers recovers the plain series
    RatSeries m0 = subst_zero(build_M(N, MultilinearElem(0)));
    CHECK(equal(subst_zero(m), m0));
    CHECK(equal(subst_zero(build_Mtilde(N, none)), subst_zero(build_Mtilde(N, y))));
}

TEST_CASE("paths reduce to the geometric tree series when unmarked") {
    const int N = 14;
    MultilinearElem none(0);
    // P with no markers is 1/(1 - z M0)
    MleSeries p = build_P(N, none, none, none);
    RatSeries m0 = subst_zero(build_M(N, none));
    RatSeries den(N, mpq_class(0));
    den.c[0] = 1;
    den = ts_sub(den, ts_shift(m0, 1));
    CHECK(equal(subst_zero(p), ts_recip(den)));
    // Phat without markers degenerates to the same path series
    MleSeries ph = build_Phat(N, none, none, none);
    CHECK(equal(subst_zero(ph), subst_zero(p)));
}
