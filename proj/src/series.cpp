#include "phylogf/series.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace phylogf {

RatSeries subst_zero(const MleSeries& s) {
    RatSeries out(s.order, mpq_class(0));
    for (int i = 0; i <= s.order; ++i) out.c[i] = s.c[i].c[0];
    return out;
}

RatSeries to_rational(const MleSeries& s) {
    RatSeries out(s.order, mpq_class(0));
    for (int i = 0; i <= s.order; ++i) {
        if (!s.c[i].is_constant()) throw std::invalid_argument("series still carries markers");
        out.c[i] = s.c[i].c[0];
    }
    return out;
}

RatSeries extract_full(const MleSeries& s) {
    RatSeries out(s.order, mpq_class(0));
    for (int i = 0; i <= s.order; ++i) out.c[i] = extract_full(s.c[i]);
    return out;
}

// ---- builder plumbing

static void require_marker_sum(const MultilinearElem& y) {
    if (sgn(y.c[0]) != 0) throw std::invalid_argument("marker argument must have zero constant part");
}

static MleSeries mle_const_series(int k, int N, const mpq_class& v) {
    MleSeries s(N, MultilinearElem(k));
    s.c[0] = MultilinearElem::constant(k, v);
    return s;
}

// v * z^d as a series
static MleSeries mle_term(int N, int d, const MultilinearElem& v) {
    MleSeries s(N, MultilinearElem(v.k));
    if (d <= N) s.c[d] = v;
    return s;
}

// Builders are memoized per (builder, order, marker assignment).  The marker
// assignments that actually occur are sums of distinct generators, which a
// bitmask captures exactly; anything else bypasses the cache.
namespace {
using memo_key = std::tuple<int, int, int, unsigned, unsigned, unsigned>;
std::map<memo_key, MleSeries> builder_memo;
std::mutex builder_memo_mutex;

bool generator_mask(const MultilinearElem& y, unsigned* mask) {
    unsigned m = 0;
    for (std::size_t s = 0; s < y.c.size(); ++s) {
        if (sgn(y.c[s]) == 0) continue;
        // only single generators with coefficient 1 qualify
        if ((s & (s - 1)) != 0 || y.c[s] != 1) return false;
        m |= unsigned(s);
    }
    *mask = m;
    return true;
}

bool memo_lookup(const memo_key& key, bool usable, MleSeries* out) {
    if (!usable) return false;
    std::lock_guard<std::mutex> lock(builder_memo_mutex);
    auto it = builder_memo.find(key);
    if (it == builder_memo.end()) return false;
    *out = it->second;
    return true;
}

void memo_store(const memo_key& key, bool usable, const MleSeries& value) {
    if (!usable) return;
    std::lock_guard<std::mutex> lock(builder_memo_mutex);
    builder_memo.emplace(key, value);
}
}  // namespace

// elementwise product of a series with a fixed ring element
static MleSeries scale_elem(const MleSeries& s, const MultilinearElem& v) {
    MleSeries out(s.order, MultilinearElem(v.k));
    for (int i = 0; i <= s.order; ++i) out.c[i] = mle_mul(s.c[i], v);
    return out;
}

// radicand shared by the tree builders: 1 - 2z^2 - 4y z^3
static MleSeries tree_radicand(int k, int N, const MultilinearElem& y) {
    MleSeries r = mle_const_series(k, N, 1);
    r = ts_sub(r, mle_term(N, 2, MultilinearElem::constant(k, 2)));
    r = ts_sub(r, mle_term(N, 3, y * mpq_class(4)));
    return r;
}

MleSeries build_Mb(int N, const MultilinearElem& y) {
    require_marker_sum(y);
    unsigned mask = 0;
    const bool cacheable = generator_mask(y, &mask);
    const memo_key key{0, N, y.k, mask, 0, 0};
    MleSeries cached;
    if (memo_lookup(key, cacheable, &cached)) return cached;

    const int k = y.k;
    const int M = N + 1;  // margin for the division by z
    MleSeries one_minus_sq = ts_sub(mle_const_series(k, M, 1), ts_sqrt(tree_radicand(k, M, y)));
    MleSeries den = ts_add(mle_const_series(k, M, 1), mle_term(M, 1, y * mpq_class(2)));
    // the numerator starts at z^2, so the z-division below is exact by construction
    MleSeries q = ts_shift(ts_mul(one_minus_sq, ts_recip(den)), -1);
    MleSeries out = ts_sub(ts_truncate(q, N), mle_term(N, 1, MultilinearElem::constant(k, 1)));

    memo_store(key, cacheable, out);
    return out;
}

MleSeries build_Mu(int N, const MultilinearElem& y) {
    require_marker_sum(y);
    unsigned mask = 0;
    const bool cacheable = generator_mask(y, &mask);
    const memo_key key{1, N, y.k, mask, 0, 0};
    MleSeries cached;
    if (memo_lookup(key, cacheable, &cached)) return cached;

    const int k = y.k;
    MleSeries one_minus_sq = ts_sub(mle_const_series(k, N, 1), ts_sqrt(tree_radicand(k, N, y)));
    MleSeries den = ts_add(mle_const_series(k, N, 1), mle_term(N, 1, y * mpq_class(2)));
    MleSeries out = scale_elem(ts_mul(one_minus_sq, ts_recip(den)), y);

    memo_store(key, cacheable, out);
    return out;
}

MleSeries build_M(int N, const MultilinearElem& y) {
    MleSeries z = mle_term(N, 1, MultilinearElem::constant(y.k, 1));
    return ts_add(z, ts_add(build_Mu(N, y), build_Mb(N, y)));
}

MleSeries build_Mtilde(int N, const MultilinearElem& y) {
    MleSeries z = mle_term(N, 1, MultilinearElem::constant(y.k, 1));
    return ts_add(z, build_Mb(N, y));
}

MleSeries build_P(int N, const MultilinearElem& y, const MultilinearElem& ytilde,
                  const MultilinearElem& yhat) {
    require_marker_sum(y);
    require_marker_sum(ytilde);
    require_marker_sum(yhat);
    unsigned my = 0, mt = 0, mh = 0;
    const bool cacheable =
        generator_mask(y, &my) && generator_mask(ytilde, &mt) && generator_mask(yhat, &mh);
    const memo_key key{2, N, y.k, my, mt, mh};
    MleSeries cached;
    if (memo_lookup(key, cacheable, &cached)) return cached;

    const int k = y.k;
    MleSeries mt_series = build_Mtilde(N, ytilde);
    MleSeries factor = ts_add(mle_term(N, 1, MultilinearElem::constant(k, 1)),
                              mle_term(N, 2, y * mpq_class(2)));
    MleSeries den = ts_sub(mle_const_series(k, N, 1), ts_mul(factor, mt_series));
    MleSeries num = ts_add(mle_const_series(k, N, 1), mle_term(N, 1, yhat));
    MleSeries out = ts_mul(num, ts_recip(den));

    memo_store(key, cacheable, out);
    return out;
}

MleSeries build_Phat(int N, const MultilinearElem& y, const MultilinearElem& ytilde,
                     const MultilinearElem& yhat) {
    require_marker_sum(y);
    require_marker_sum(ytilde);
    require_marker_sum(yhat);
    unsigned my = 0, mt = 0, mh = 0;
    const bool cacheable =
        generator_mask(y, &my) && generator_mask(ytilde, &mt) && generator_mask(yhat, &mh);
    const memo_key key{3, N, y.k, my, mt, mh};
    MleSeries cached;
    if (memo_lookup(key, cacheable, &cached)) return cached;

    const int k = y.k;
    MleSeries m_series = build_M(N, ytilde);
    MleSeries mt_series = build_Mtilde(N, ytilde);
    MleSeries den = ts_sub(mle_const_series(k, N, 1), ts_shift(m_series, 1));
    den = ts_sub(den, scale_elem(ts_shift(mt_series, 2), y));
    MleSeries num = ts_add(mle_const_series(k, N, 1), mle_term(N, 1, yhat));
    MleSeries out = ts_mul(num, ts_recip(den));

    memo_store(key, cacheable, out);
    return out;
}

}  // namespace phylogf
