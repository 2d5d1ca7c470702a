#include "phylogf/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace phylogf {

// constant-one series in the k-marker ring
static MleSeries mle1(int k, int N) {
    MleSeries s(N, MultilinearElem(k));
    s.c[0] = MultilinearElem::constant(k, 1);
    return s;
}

// ---- catalog

static AlgebraicGF make_gf(int k, std::vector<mpq_class> a, std::vector<mpq_class> b) {
    AlgebraicGF g;
    g.a_poly = std::move(a);
    g.b_poly = std::move(b);
    g.two_p = 4 * k - 1;
    return g;
}

const AlgebraicGF& catalog(Klass klass, int k) {
    if (klass == Klass::all) throw std::invalid_argument("no closed form for the unrestricted class");
    if (k < 1 || k > 3) throw std::invalid_argument("catalog covers k in 1..3");
    static const AlgebraicGF normal_1 = make_gf(1, {2, -3}, {2, -1});
    static const AlgebraicGF normal_2 =
        make_gf(2, {0, -3, 30, mpq_class(-87, 2), 6}, {0, -3, 27, -18});
    static const AlgebraicGF normal_3 =
        make_gf(3, {0, 0, 0, -9, 576, mpq_class(-2187, 2), 270}, {0, 0, 0, -9, 567, -531, 18});
    static const AlgebraicGF treechild_1 = make_gf(1, {0, 1}, {0, 1});
    static const AlgebraicGF treechild_2 =
        make_gf(2, {0, 0, mpq_class(-1, 2), mpq_class(21, 2), -4}, {0, 0, mpq_class(-1, 2), 9});
    static const AlgebraicGF treechild_3 =
        make_gf(3, {0, 0, 0, -1, 20, mpq_class(249, 2), -6}, {0, 0, 0, -1, 19, 144, 30});
    if (klass == Klass::normal) return k == 1 ? normal_1 : k == 2 ? normal_2 : normal_3;
    return k == 1 ? treechild_1 : k == 2 ? treechild_2 : treechild_3;
}

// ---- closed-form expansion

static RatSeries poly_in_z2(const std::vector<mpq_class>& poly, int N) {
    RatSeries s(N, mpq_class(0));
    for (std::size_t p = 0; p < poly.size(); ++p)
        if (2 * p <= std::size_t(N)) s.c[2 * p] = poly[p];
    return s;
}

RatSeries expand_algebraic(const AlgebraicGF& gf, int N) {
    const int M = N + 1;  // margin for the final multiplication by z
    RatSeries S(M, mpq_class(0));  // 1 - 2z^2
    S.c[0] = 1;
    S.c[2] = -2;
    RatSeries sq = ts_sqrt(S);
    // (1-2z^2)^p with half-integer p splits into floor(p) integer factors
    // times one square-root factor
    RatSeries den = sq;
    for (int i = 0; i < gf.two_p / 2; ++i) den = ts_mul(den, S);
    RatSeries num = ts_sub(poly_in_z2(gf.a_poly, M), ts_mul(poly_in_z2(gf.b_poly, M), sq));
    RatSeries out = ts_shift(ts_mul(num, ts_recip(den)), 1);
    return ts_truncate(out, N);
}

// ---- operator constructions
//
// Marker bookkeeping: gen_sum masks name which of y_1..y_k an argument sums,
// e.g. mask 0b101 = y_1 + y_3.  The case expressions below follow the skeleton
// decompositions: one z-power per pointed skeleton vertex, one white-tree or
// full-tree factor per attachment point, one path factor per skeleton edge.

RatSeries operator_N(int k, int N) {
    if (k == 1) {
        const MultilinearElem y1 = MultilinearElem::gen(1, 1);
        const MultilinearElem none(1);
        MleSeries m0 = build_M(N, none);
        MleSeries inv = ts_recip(ts_sub(mle1(1, N), ts_shift(build_Mtilde(N, y1), 1)));
        MleSeries expr = ts_mul(ts_shift(m0, 1), inv);
        return ts_scale(extract_full(expr), mpq_class(1, 2));
    }
    if (k == 2) {
        const MultilinearElem y1 = MultilinearElem::gen_sum(2, 0b01);
        const MultilinearElem y2 = MultilinearElem::gen_sum(2, 0b10);
        const MultilinearElem y12 = MultilinearElem::gen_sum(2, 0b11);
        const MultilinearElem none(2);
        MleSeries one = mle1(2, N);
        MleSeries m0 = build_M(N, none);
        MleSeries inv1 = ts_recip(ts_sub(one, ts_shift(build_Mtilde(N, y1), 1)));
        MleSeries inv12 = ts_recip(ts_sub(one, ts_shift(build_Mtilde(N, y12), 1)));
        // nested pair: both reticulations on one root path
        MleSeries n21 = ts_mul(ts_shift(m0, 2), ts_mul(inv1, inv12));
        // branched pair: the reticulations sit on two sibling paths
        MleSeries pa = build_P(N, y2, y12, none);
        MleSeries pb = build_P(N, y1, y12, none);
        MleSeries n22 = ts_shift(
            ts_mul(ts_mul(build_Mtilde(N, y1), build_Mtilde(N, y2)), ts_mul(ts_mul(pa, pb), inv12)),
            3);
        RatSeries sum = ts_add(extract_full(n21), ts_scale(extract_full(n22), mpq_class(1, 2)));
        return ts_scale(sum, mpq_class(1, 4));
    }
    if (k == 3) {
        const int K = 3;
        auto g = [&](unsigned mask) { return MultilinearElem::gen_sum(K, mask); };
        const MultilinearElem none(K);
        MleSeries one = mle1(K, N);
        MleSeries m0 = build_M(N, none);
        auto inv = [&](unsigned mask) {
            return ts_recip(ts_sub(one, ts_shift(build_Mtilde(N, g(mask)), 1)));
        };
        // all three reticulations on one path
        MleSeries n31 = ts_mul(ts_shift(m0, 3), ts_mul(inv(0b001), ts_mul(inv(0b011), inv(0b111))));
        // two on a lower branch pair, one above
        MleSeries p1 = build_P(N, g(0b001), g(0b011), none);
        MleSeries p2 = build_P(N, g(0b010), g(0b011), none);
        MleSeries n32 = ts_shift(
            ts_mul(ts_mul(build_Mtilde(N, g(0b001)), build_Mtilde(N, g(0b010))),
                   ts_mul(ts_mul(p1, p2), ts_mul(inv(0b111), inv(0b011)))),
            4);
        // one reticulation nested beside a branched pair
        MleSeries q1 = build_P(N, g(0b001), g(0b101), none);
        MleSeries q2 = build_P(N, g(0b110), g(0b111), none);
        MleSeries q3 = build_P(N, g(0b001), g(0b111), none);
        MleSeries n33 = ts_shift(
            ts_mul(ts_mul(build_Mtilde(N, g(0b110)), build_Mtilde(N, g(0b001))),
                   ts_mul(inv(0b111), ts_mul(q1, ts_mul(q2, q3)))),
            4);
        // fully branched: three paths meet below a common fork
        MleSeries r1 = build_P(N, g(0b011), g(0b111), none);
        MleSeries r2 = build_P(N, g(0b101), g(0b111), g(0b100));
        MleSeries r3 = build_P(N, g(0b110), g(0b111), g(0b100));
        MleSeries r4 = build_P(N, g(0b100), g(0b111), none);
        MleSeries n34 = ts_shift(
            ts_mul(ts_mul(build_Mtilde(N, g(0b011)),
                          ts_mul(build_Mtilde(N, g(0b101)), build_Mtilde(N, g(0b110)))),
                   ts_mul(inv(0b111), ts_mul(ts_mul(r1, r2), ts_mul(r3, r4)))),
            5);
        RatSeries sum = extract_full(n31);
        sum = ts_add(sum, ts_scale(extract_full(n32), mpq_class(1, 2)));
        sum = ts_add(sum, extract_full(n33));
        sum = ts_add(sum, ts_scale(extract_full(n34), mpq_class(1, 2)));
        return ts_scale(sum, mpq_class(1, 8));
    }
    throw std::invalid_argument("operator_N covers k in 1..3");
}

// single-marker helper expressions used by the k=3 tree-child corrections;
// each is evaluated in a one-marker ring and enters the case sums as a plain
// rational series
static RatSeries one_marker(int N, MleSeries (*expr)(int, const MultilinearElem&)) {
    return extract_full(expr(N, MultilinearElem::gen(1, 1)));
}

static MleSeries t32_corr_side(int N, const MultilinearElem& y) {
    // z^6 Mt^2 / (1 - zM)^3 * Phat(z, y, y, 0)
    MleSeries one = mle1(y.k, N);
    MleSeries mt = build_Mtilde(N, y);
    MleSeries iv = ts_recip(ts_sub(one, ts_shift(build_M(N, y), 1)));
    MleSeries ph = build_Phat(N, y, y, MultilinearElem(y.k));
    return ts_shift(ts_mul(ts_mul(mt, mt), ts_mul(iv, ts_mul(iv, ts_mul(iv, ph)))), 6);
}

static MleSeries t32_corr_top(int N, const MultilinearElem& y) {
    // z^6 Mt^2 / (1 - zM) * Phat(z, y, y, 0)^3
    MleSeries one = mle1(y.k, N);
    MleSeries mt = build_Mtilde(N, y);
    MleSeries iv = ts_recip(ts_sub(one, ts_shift(build_M(N, y), 1)));
    MleSeries ph = build_Phat(N, y, y, MultilinearElem(y.k));
    return ts_shift(ts_mul(ts_mul(mt, mt), ts_mul(iv, ts_mul(ph, ts_mul(ph, ph)))), 6);
}

static MleSeries t33_corr_two(int N, const MultilinearElem& y) {
    // z^6 Mt^2 / (1 - zM)^2 * Phat(z, y, y, 0)^2
    MleSeries one = mle1(y.k, N);
    MleSeries mt = build_Mtilde(N, y);
    MleSeries iv = ts_recip(ts_sub(one, ts_shift(build_M(N, y), 1)));
    MleSeries ph = build_Phat(N, y, y, MultilinearElem(y.k));
    return ts_shift(ts_mul(ts_mul(mt, mt), ts_mul(ts_mul(iv, iv), ts_mul(ph, ph))), 6);
}

static MleSeries t33_corr_three(int N, const MultilinearElem& y) {
    // z^6 Mt^2 / (1 - zM)^3 * Phat(z, y, y, 0)
    MleSeries one = mle1(y.k, N);
    MleSeries mt = build_Mtilde(N, y);
    MleSeries iv = ts_recip(ts_sub(one, ts_shift(build_M(N, y), 1)));
    MleSeries ph = build_Phat(N, y, y, MultilinearElem(y.k));
    return ts_shift(ts_mul(ts_mul(mt, mt), ts_mul(iv, ts_mul(iv, ts_mul(iv, ph)))), 6);
}

static MleSeries t34_corr_mid(int N, const MultilinearElem& y) {
    // z^7 Mt^3 / (1 - zM)^2 * Phat(z, y, y, y) * Phat(z, y, y, 0)^2
    MleSeries one = mle1(y.k, N);
    MleSeries mt = build_Mtilde(N, y);
    MleSeries iv = ts_recip(ts_sub(one, ts_shift(build_M(N, y), 1)));
    MleSeries pa = build_Phat(N, y, y, y);
    MleSeries pb = build_Phat(N, y, y, MultilinearElem(y.k));
    return ts_shift(
        ts_mul(ts_mul(mt, ts_mul(mt, mt)), ts_mul(ts_mul(iv, iv), ts_mul(pa, ts_mul(pb, pb)))), 7);
}

static MleSeries t34_corr_outer(int N, const MultilinearElem& y) {
    // z^7 Mt^3 / (1 - zM)^3 * Phat(z, y, y, y) * Phat(z, y, y, 0)
    MleSeries one = mle1(y.k, N);
    MleSeries mt = build_Mtilde(N, y);
    MleSeries iv = ts_recip(ts_sub(one, ts_shift(build_M(N, y), 1)));
    MleSeries pa = build_Phat(N, y, y, y);
    MleSeries pb = build_Phat(N, y, y, MultilinearElem(y.k));
    return ts_shift(
        ts_mul(ts_mul(mt, ts_mul(mt, mt)), ts_mul(iv, ts_mul(iv, ts_mul(iv, ts_mul(pa, pb))))), 7);
}

RatSeries operator_T(int k, int N) {
    if (k == 1) {
        const MultilinearElem y1 = MultilinearElem::gen(1, 1);
        MleSeries mt = build_Mtilde(N, y1);
        MleSeries inv = ts_recip(ts_sub(mle1(1, N), ts_shift(build_M(N, y1), 1)));
        MleSeries expr = ts_shift(ts_mul(mt, inv), 1);
        return ts_scale(extract_full(expr), mpq_class(1, 2));
    }
    if (k == 2) {
        const MultilinearElem y1 = MultilinearElem::gen_sum(2, 0b01);
        const MultilinearElem y2 = MultilinearElem::gen_sum(2, 0b10);
        const MultilinearElem y12 = MultilinearElem::gen_sum(2, 0b11);
        const MultilinearElem none(2);
        MleSeries mt12 = build_Mtilde(N, y12);
        // nested pair as a product of two path factors
        MleSeries pa = build_Phat(N, y2, y12, none);
        MleSeries pb = build_Phat(N, none, y12, none);
        MleSeries t21 = ts_shift(ts_mul(mt12, ts_mul(pa, pb)), 2);
        // branched pair, minus the configurations that break the class when
        // the two marked paths collapse onto one line
        MleSeries pc = build_Phat(N, y2, y12, y2);
        MleSeries pd = build_Phat(N, y1, y12, y1);
        MleSeries inv_m = ts_recip(ts_sub(mle1(2, N), ts_shift(build_M(N, y12), 1)));
        MleSeries t22 = ts_shift(ts_mul(ts_mul(mt12, mt12), ts_mul(inv_m, ts_mul(pc, pd))), 3);
        // pure-z correction: (1/2) z^5 M^2 / (1 - zM)^3 at y = 0
        const MultilinearElem zero0(0);
        MleSeries m0 = build_M(N, zero0);
        MleSeries iv0 = ts_recip(ts_sub(mle1(0, N), ts_shift(m0, 1)));
        RatSeries corr = subst_zero(
            ts_shift(ts_mul(ts_mul(m0, m0), ts_mul(iv0, ts_mul(iv0, iv0))), 5));
        RatSeries sum = extract_full(t21);
        sum = ts_add(sum, ts_scale(extract_full(t22), mpq_class(1, 2)));
        sum = ts_sub(sum, ts_scale(corr, mpq_class(1, 2)));
        return ts_scale(sum, mpq_class(1, 4));
    }
    if (k == 3) {
        const int K = 3;
        auto g = [&](unsigned mask) { return MultilinearElem::gen_sum(K, mask); };
        const MultilinearElem none(K);
        const MultilinearElem Y = g(0b111);
        MleSeries one = mle1(K, N);
        MleSeries mtY = build_Mtilde(N, Y);
        MleSeries invY = ts_recip(ts_sub(one, ts_shift(build_M(N, Y), 1)));
        // chain of three
        MleSeries a1 = build_Phat(N, g(0b100), Y, none);
        MleSeries a2 = build_Phat(N, g(0b110), Y, none);
        RatSeries t31 = extract_full(ts_shift(ts_mul(mtY, ts_mul(invY, ts_mul(a1, a2))), 3));
        // pair below a third, with three single-marker corrections
        MleSeries b1 = build_Phat(N, g(0b100), Y, none);
        MleSeries b2 = build_Phat(N, g(0b101), Y, g(0b101));
        MleSeries b3 = build_Phat(N, g(0b110), Y, g(0b110));
        RatSeries t32_main = extract_full(
            ts_shift(ts_mul(ts_mul(mtY, mtY), ts_mul(invY, ts_mul(b1, ts_mul(b2, b3)))), 4));
        RatSeries c_side = one_marker(N, t32_corr_side);
        RatSeries c_top = one_marker(N, t32_corr_top);
        RatSeries t32 = ts_scale(
            ts_sub(ts_sub(t32_main, ts_scale(c_side, mpq_class(2))), c_top), mpq_class(1, 2));
        // nested pair next to a single
        MleSeries c1 = build_Phat(N, g(0b110), Y, g(0b110));
        MleSeries c2 = build_Phat(N, g(0b001), Y, g(0b001));
        MleSeries c3 = build_Phat(N, g(0b011), Y, none);
        RatSeries t33_main = extract_full(
            ts_shift(ts_mul(ts_mul(mtY, mtY), ts_mul(invY, ts_mul(c1, ts_mul(c2, c3)))), 4));
        RatSeries t33 = ts_sub(ts_sub(t33_main, one_marker(N, t33_corr_two)),
                               one_marker(N, t33_corr_three));
        // fully branched, with the caterpillar-collapse corrections
        MleSeries d1 = build_Phat(N, g(0b011), Y, g(0b011));
        MleSeries d2 = build_Phat(N, g(0b101), Y, g(0b101));
        MleSeries d3 = build_Phat(N, g(0b110), Y, g(0b110));
        MleSeries d4 = build_Phat(N, g(0b100), Y, g(0b100));
        RatSeries t34_main = extract_full(ts_shift(
            ts_mul(ts_mul(mtY, ts_mul(mtY, mtY)),
                   ts_mul(invY, ts_mul(ts_mul(d1, d2), ts_mul(d3, d4)))),
            5));
        RatSeries e_mid = one_marker(N, t34_corr_mid);
        RatSeries e_outer = one_marker(N, t34_corr_outer);
        RatSeries t34 = ts_sub(ts_scale(ts_sub(t34_main, e_mid), mpq_class(1, 2)),
                               ts_scale(e_outer, mpq_class(2)));
        RatSeries sum = ts_add(ts_add(t31, t32), ts_add(t33, t34));
        return ts_scale(sum, mpq_class(1, 8));
    }
    throw std::invalid_argument("operator_T covers k in 1..3");
}

RatSeries unicyclic_gf(Klass klass, int N) {
    const MultilinearElem zero0(0);
    MleSeries m0m = build_M(N, zero0);
    RatSeries m0 = subst_zero(m0m);
    RatSeries one(N, mpq_class(0));
    one.c[0] = 1;
    RatSeries inv = ts_recip(ts_sub(one, ts_shift(m0, 1)));
    RatSeries inv3 = ts_mul(inv, ts_mul(inv, inv));
    if (klass == Klass::normal) {
        // z^4 M^3 / (2 (1 - zM)^3)
        RatSeries m3 = ts_mul(m0, ts_mul(m0, m0));
        return ts_scale(ts_shift(ts_mul(m3, inv3), 4), mpq_class(1, 2));
    }
    if (klass == Klass::treechild) {
        // z^3 M^2 (2 - zM) / (2 (1 - zM)^3)
        RatSeries m2 = ts_mul(m0, m0);
        RatSeries two_minus(N, mpq_class(0));
        two_minus.c[0] = 2;
        two_minus = ts_sub(two_minus, ts_shift(m0, 1));
        return ts_scale(ts_shift(ts_mul(m2, ts_mul(two_minus, inv3)), 3), mpq_class(1, 2));
    }
    throw std::invalid_argument("unicyclic form exists for normal and treechild only");
}

// ---- coefficient extraction

// factorial as big integer
static mpz_class factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// per-(klass,k) cache of the widest catalog expansion computed so far
namespace {
std::map<std::pair<int, int>, RatSeries> expansion_cache;
std::mutex expansion_mutex;
}

static RatSeries cached_expansion(Klass klass, int k, int N) {
    const std::pair<int, int> key{static_cast<int>(klass), k};
    std::lock_guard<std::mutex> lock(expansion_mutex);
    auto it = expansion_cache.find(key);
    if (it == expansion_cache.end() || it->second.order < N) {
        RatSeries s = (k == 0) ? subst_zero(build_M(N, MultilinearElem(0)))
                               : expand_algebraic(catalog(klass, k), N);
        it = expansion_cache.insert_or_assign(key, std::move(s)).first;
    }
    return it->second;
}

mpz_class count(Klass klass, int k, long n) {
    if (klass == Klass::all) throw std::invalid_argument("count covers normal and treechild");
    if (k < 0 || k > 3) throw std::invalid_argument("count covers k in 0..3");
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n % 2 == 0) return 0;
    RatSeries s = cached_expansion(klass, k, static_cast<int>(n));
    mpq_class v = s.c[n] * mpq_class(factorial(n));
    if (v.get_den() != 1) throw std::logic_error("count is not an integer");
    return v.get_num();
}

mpz_class leaf_labeled_count(Klass klass, int k, long l) {
    if (l < 1) throw std::invalid_argument("need l >= 1");
    const long n = 2 * l + 2 * k - 1;
    mpz_class numer = count(klass, k, n) * factorial(l);
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numer.get_mpz_t(), factorial(n).get_mpz_t());
    if (r != 0) throw std::logic_error("leaf-label conversion did not divide exactly");
    return q;
}

RatSeries caterpillar_path_gf(int N) {
    RatSeries S(N, mpq_class(0));
    S.c[0] = 1;
    S.c[2] = -2;
    RatSeries sq = ts_sqrt(S);
    RatSeries poly1(N, mpq_class(0));  // 8z^2 - 12z^4
    if (N >= 2) poly1.c[2] = 8;
    if (N >= 4) poly1.c[4] = -12;
    RatSeries poly2(N, mpq_class(0));  // 8z^2 - 4z^4
    if (N >= 2) poly2.c[2] = 8;
    if (N >= 4) poly2.c[4] = -4;
    RatSeries num = ts_sub(poly1, ts_mul(poly2, sq));
    return ts_mul(num, ts_recip(ts_mul(S, S)));
}

RatSeries caterpillar_lower_bound(int k, int N) {
    if (k < 2) throw std::invalid_argument("lower bound applies for k >= 2");
    RatSeries out = operator_N(1, N);
    RatSeries p = caterpillar_path_gf(N);
    for (int i = 1; i < k; ++i) out = ts_mul(out, p);
    return out;
}

}  // namespace phylogf
