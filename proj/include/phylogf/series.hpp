#pragma once

#include "phylogf/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace phylogf {

// Truncated power series in z: coefficients for z^0..z^order.
// R is mpq_class (plain rational series) or MultilinearElem (marker ring).
// Binary operations truncate to the smaller operand order and require
// compatible rings (same marker count).
template <class R>
struct TruncSeries {
    int order = 0;
    std::vector<R> c;  // size order+1

    TruncSeries() : c(1) {}
    TruncSeries(int order_, const R& zero) : order(order_), c(std::size_t(order_) + 1, zero) {}
};

using RatSeries = TruncSeries<mpq_class>;
using MleSeries = TruncSeries<MultilinearElem>;

// ---- small ring shims so the series templates cover both coefficient rings

inline mpq_class ring_zero_like(const mpq_class&) { return mpq_class(0); }
inline MultilinearElem ring_zero_like(const MultilinearElem& x) { return MultilinearElem(x.k); }
inline bool ring_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const MultilinearElem& x) { return x.is_zero(); }
inline bool ring_is_one(const mpq_class& x) { return x == 1; }
inline bool ring_is_one(const MultilinearElem& x) { return x.c[0] == 1 && x.is_constant(); }
inline bool ring_compatible(const mpq_class&, const mpq_class&) { return true; }
inline bool ring_compatible(const MultilinearElem& a, const MultilinearElem& b) { return a.k == b.k; }
inline mpq_class ring_recip(const mpq_class& x) {
    if (sgn(x) == 0) throw std::invalid_argument("reciprocal of zero");
    return mpq_class(1) / x;
}
inline MultilinearElem ring_recip(const MultilinearElem& x) { return mle_recip(x); }
inline mpq_class ring_scale(const mpq_class& x, const mpq_class& s) { return x * s; }
inline MultilinearElem ring_scale(const MultilinearElem& x, const mpq_class& s) { return x * s; }

template <class R>
void require_compatible(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    if (!ring_compatible(a.c[0], b.c[0])) throw std::invalid_argument("series ring mismatch");
}

// ---- arithmetic

template <class R>
TruncSeries<R> ts_add(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    require_compatible(a, b);
    TruncSeries<R> out(std::min(a.order, b.order), ring_zero_like(a.c[0]));
    for (int i = 0; i <= out.order; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

template <class R>
TruncSeries<R> ts_sub(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    require_compatible(a, b);
    TruncSeries<R> out(std::min(a.order, b.order), ring_zero_like(a.c[0]));
    for (int i = 0; i <= out.order; ++i) out.c[i] = a.c[i] - b.c[i];
    return out;
}

template <class R>
TruncSeries<R> ts_scale(const TruncSeries<R>& a, const mpq_class& s) {
    TruncSeries<R> out(a.order, ring_zero_like(a.c[0]));
    for (int i = 0; i <= out.order; ++i) out.c[i] = ring_scale(a.c[i], s);
    return out;
}

// serial reference product (schoolbook Cauchy convolution); correctness anchor
// for the parallel kernel below
template <class R>
TruncSeries<R> ts_mul_serial(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    require_compatible(a, b);
    TruncSeries<R> out(std::min(a.order, b.order), ring_zero_like(a.c[0]));
    for (int i = 0; i <= out.order; ++i) {
        if (ring_is_zero(a.c[i])) continue;
        for (int j = 0; i + j <= out.order; ++j) {
            if (ring_is_zero(b.c[j])) continue;
            out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
        }
    }
    return out;
}

// parallel product: each output coefficient is an independent dot product, so
// the loop parallelizes without any reduction reordering (results stay exact
// and bit-identical to the serial reference)
template <class R>
TruncSeries<R> ts_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    require_compatible(a, b);
    const int n = std::min(a.order, b.order);
    if (n < 64) return ts_mul_serial(a, b);
    TruncSeries<R> out(n, ring_zero_like(a.c[0]));
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i <= n; ++i) {
        R acc = ring_zero_like(a.c[0]);
        for (int j = 0; j <= i; ++j) {
            if (ring_is_zero(a.c[j]) || ring_is_zero(b.c[i - j])) continue;
            acc = acc + a.c[j] * b.c[i - j];
        }
        out.c[i] = acc;
    }
    return out;
}

// multiply by z^m (m >= 0), or divide by z^|m| (m < 0; the low-order
// coefficients must vanish exactly, otherwise the shift is reported as an
// inexact division).  Down-shifts lose the top |m| coefficients to truncation,
// so the result order shrinks accordingly.
template <class R>
TruncSeries<R> ts_shift(const TruncSeries<R>& a, int m) {
    const R zero = ring_zero_like(a.c[0]);
    if (m >= 0) {
        TruncSeries<R> out(a.order, zero);
        for (int i = 0; i + m <= a.order; ++i) out.c[i + m] = a.c[i];
        return out;
    }
    const int d = -m;
    if (d > a.order) throw std::invalid_argument("shift exceeds series order");
    for (int i = 0; i < d; ++i)
        if (!ring_is_zero(a.c[i])) throw std::invalid_argument("inexact division by z^m");
    TruncSeries<R> out(a.order - d, zero);
    for (int i = d; i <= a.order; ++i) out.c[i - d] = a.c[i];
    return out;
}

template <class R>
TruncSeries<R> ts_truncate(const TruncSeries<R>& a, int n) {
    if (n > a.order) throw std::invalid_argument("cannot extend a truncated series");
    TruncSeries<R> out(n, ring_zero_like(a.c[0]));
    for (int i = 0; i <= n; ++i) out.c[i] = a.c[i];
    return out;
}

// reciprocal via the standard convolution recurrence; needs an invertible
// constant coefficient
template <class R>
TruncSeries<R> ts_recip(const TruncSeries<R>& a) {
    const R inv0 = ring_recip(a.c[0]);
    TruncSeries<R> out(a.order, ring_zero_like(a.c[0]));
    out.c[0] = inv0;
    for (int n = 1; n <= a.order; ++n) {
        R acc = ring_zero_like(a.c[0]);
        for (int j = 1; j <= n; ++j) {
            if (ring_is_zero(a.c[j]) || ring_is_zero(out.c[n - j])) continue;
            acc = acc + a.c[j] * out.c[n - j];
        }
        out.c[n] = ring_scale(acc * inv0, mpq_class(-1));
    }
    return out;
}

// square root by Newton iteration with order doubling, seeded at 1; the
// principal branch, so the constant coefficient must be the ring unit
template <class R>
TruncSeries<R> ts_sqrt(const TruncSeries<R>& a) {
    if (!ring_is_one(a.c[0])) throw std::invalid_argument("sqrt needs constant coefficient 1");
    const R zero = ring_zero_like(a.c[0]);
    TruncSeries<R> r(0, zero);
    r.c[0] = a.c[0];
    int m = 0;
    while (m < a.order) {
        const int m2 = std::min(2 * m + 1, a.order);
        // pad the current iterate up to the new order
        TruncSeries<R> rx(m2, zero);
        for (int i = 0; i <= m; ++i) rx.c[i] = r.c[i];
        // r <- (r + a/r) / 2
        TruncSeries<R> quotient = ts_mul(ts_truncate(a, m2), ts_recip(rx));
        r = ts_scale(ts_add(rx, quotient), mpq_class(1, 2));
        m = m2;
    }
    return r;
}

// drop all marker information (substitute y_i := 0); ring homomorphism onto Q
RatSeries subst_zero(const MleSeries& s);

// strict conversion: every marker coefficient must already vanish
RatSeries to_rational(const MleSeries& s);

// the y_1..y_k coefficient of every z-coefficient, as a rational series
RatSeries extract_full(const MleSeries& s);

// ---- generating-function building blocks
//
// Every builder takes marker arguments that are sums of distinct generators
// (possibly the zero element) of one common ring.  Marker placement encodes
// which vertices of the sparsened skeleton the factors may point at.

// binary-rooted Motzkin trees:  (1 - sqrt(1 - 2z^2 - 4y z^3)) / (z (1 + 2y z)) - z
MleSeries build_Mb(int N, const MultilinearElem& y);

// unary-rooted Motzkin trees:  y (1 - sqrt(1 - 2z^2 - 4y z^3)) / (1 + 2y z)
MleSeries build_Mu(int N, const MultilinearElem& y);

// all Motzkin trees:  M = z + M_u + M_b
MleSeries build_M(int N, const MultilinearElem& y);

// trees whose root is not unary ("white" attached trees):  z + M_b
MleSeries build_Mtilde(int N, const MultilinearElem& y);

// path with optional markers: on-path tails (y), attached-tree markers
// (ytilde) and the distinguished first vertex (yhat):
//   P = (1 + z yhat) / (1 - (z + 2 z^2 y) Mtilde(z, ytilde))
MleSeries build_P(int N, const MultilinearElem& y, const MultilinearElem& ytilde,
                  const MultilinearElem& yhat);

// path variant whose attached trees may be red-rooted:
//   Phat = (1 + z yhat) / (1 - z M(z, ytilde) - z^2 y Mtilde(z, ytilde))
MleSeries build_Phat(int N, const MultilinearElem& y, const MultilinearElem& ytilde,
                     const MultilinearElem& yhat);

}  // namespace phylogf
