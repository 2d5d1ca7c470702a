#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace phylogf {

// Element of the nilpotent marker ring Q[y_1..y_k]/(y_1^2,...,y_k^2).
//
// Dense storage: one exact rational per subset of {1..k}, indexed by bitmask
// (bit i-1 set <=> the monomial contains y_i).  Differentiating once in every
// marker and then setting all markers to zero is plain coefficient extraction
// of the full mask, so the pointing operator used by the skeleton
// constructions never has to leave this ring.
struct MultilinearElem {
    int k = 0;                  // marker count, 0 <= k <= 8
    std::vector<mpq_class> c;   // 2^k coefficients, c[mask]

    MultilinearElem() : k(0), c(1) {}
    explicit MultilinearElem(int k_) : k(check_k(k_)), c(std::size_t(1) << k_) {}

    // a plain rational embedded in the ring
    static MultilinearElem constant(int k, const mpq_class& v) {
        MultilinearElem e(k);
        e.c[0] = v;
        return e;
    }
    // the single marker y_i (1-based index)
    static MultilinearElem gen(int k, int i) {
        if (i < 1 || i > k) throw std::invalid_argument("marker index out of range");
        MultilinearElem e(k);
        e.c[std::size_t(1) << (i - 1)] = 1;
        return e;
    }
    // sum of the markers selected by `mask` (e.g. mask 0b101 -> y_1 + y_3)
    static MultilinearElem gen_sum(int k, unsigned mask) {
        MultilinearElem e(k);
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) e.c[std::size_t(1) << i] = 1;
        return e;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (sgn(x) != 0) return false;
        return true;
    }
    // true when every proper marker coefficient vanishes
    bool is_constant() const {
        for (std::size_t m = 1; m < c.size(); ++m)
            if (sgn(c[m]) != 0) return false;
        return true;
    }

    static int check_k(int k) {
        if (k < 0 || k > 8) throw std::invalid_argument("marker count must be in 0..8");
        return k;
    }
};

MultilinearElem mle_add(const MultilinearElem& a, const MultilinearElem& b);
MultilinearElem mle_sub(const MultilinearElem& a, const MultilinearElem& b);

// disjoint-subset convolution: (ab)_S = sum over A disjoint-union B = S of a_A b_B;
// repeated markers die structurally, never by cancellation
MultilinearElem mle_mul(const MultilinearElem& a, const MultilinearElem& b);

// multiplicative inverse; requires a nonzero constant part.  The nilpotent
// part is folded in by a finite geometric series (at most k+1 terms).
MultilinearElem mle_recip(const MultilinearElem& a);

// coefficient of y_1 y_2 ... y_k: the value of the full pointing operator
mpq_class extract_full(const MultilinearElem& a);

// convenience operators (thin wrappers over the named operations)
inline MultilinearElem operator+(const MultilinearElem& a, const MultilinearElem& b) { return mle_add(a, b); }
inline MultilinearElem operator-(const MultilinearElem& a, const MultilinearElem& b) { return mle_sub(a, b); }
inline MultilinearElem operator*(const MultilinearElem& a, const MultilinearElem& b) { return mle_mul(a, b); }
MultilinearElem operator*(const MultilinearElem& a, const mpq_class& s);
bool operator==(const MultilinearElem& a, const MultilinearElem& b);
inline bool operator!=(const MultilinearElem& a, const MultilinearElem& b) { return !(a == b); }

}  // namespace phylogf
