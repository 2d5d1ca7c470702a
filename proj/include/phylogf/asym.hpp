#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "phylogf/gf.hpp"

namespace phylogf {

// Arbitrary-precision floating value: a thin RAII wrapper around one mpfr_t
// carrying its requested decimal precision.  All arithmetic runs at the
// requested digits plus a 10-digit guard, rounding to nearest (ties to even).
struct BigDecimal {
    mpfr_t v;
    int digits = 50;
    // set only by the estimate functions: the value is zero because the
    // input n was even, not because anything was computed
    bool even_zero = false;

    explicit BigDecimal(int digits_ = 50);
    BigDecimal(const BigDecimal& o);
    BigDecimal(BigDecimal&& o) noexcept;
    BigDecimal& operator=(BigDecimal o);
    ~BigDecimal();

    static BigDecimal from_long(long x, int digits);
    static BigDecimal from_integer(const mpz_class& x, int digits);
    static BigDecimal from_rational(const mpq_class& x, int digits);

    double to_double() const;
};

BigDecimal operator+(const BigDecimal& a, const BigDecimal& b);
BigDecimal operator-(const BigDecimal& a, const BigDecimal& b);
BigDecimal operator-(const BigDecimal& a);
BigDecimal operator*(const BigDecimal& a, const BigDecimal& b);
BigDecimal operator/(const BigDecimal& a, const BigDecimal& b);

BigDecimal bd_sqrt(const BigDecimal& a);
BigDecimal bd_exp(const BigDecimal& a);
BigDecimal bd_ln(const BigDecimal& a);
BigDecimal bd_pi(int digits);
BigDecimal bd_ln2(int digits);

// scientific rendering d.dddddddddE+xxxx (round-half-even, zero-padded
// four-digit exponent), `show` significant digits
std::string sci(const BigDecimal& a, int show = 10);
std::string sci(const mpz_class& a, int show = 10);

// leading constant A, second-order constant B and leaf-count constant c for
// count(klass,k,n) ~ (sqrt(2)/e)^n n^{n+2k-1} (A + B/sqrt(n)); A = 2c
struct AsymConstants {
    BigDecimal a, b, c;
};
AsymConstants asym_constants(Klass klass, int k, int digits);

// first- or second-order estimate of count(klass,k,n), evaluated through
// logarithms as exp(n(ln2/2 - 1) + (n+2k-1) ln n) * (A + B/sqrt(n));
// even n yields 0 with the even_zero flag set
BigDecimal asym_estimate(Klass klass, int k, long n, int order, int digits);

// first-order estimate of the leaf-labeled count:
// 2^{3k-1} c_k (2/e)^l l^{l+2k-1}
BigDecimal leaf_asym_estimate(Klass klass, int k, long l, int digits);

// one table row: exact count plus both estimate orders
struct AsymRow {
    long n = 0;
    mpz_class exact;
    BigDecimal first, second;
};

// the odd squares 49, 81, ..., 961
std::vector<long> default_table_rows();

// exact-vs-asymptotic comparison table over the requested rows
std::vector<AsymRow> appendix_table(Klass klass, int k, const std::vector<long>& rows,
                                    int digits);

// empirical second-order coefficient sqrt(n) * (exact/lead - A) where
// lead = (sqrt(2)/e)^n n^{n+2k-1}; converges to the constant B
BigDecimal second_order_probe(Klass klass, int k, long n, int digits = 50);

// recover A from the closed-form catalog: the numerator polynomial evaluated
// at the dominant singularity gives A = 2 sqrt(2 pi) a(1/2) / (4^k G) with
// G = Gamma(2k - 1/2) expanded by the half-integer factorial identity
BigDecimal leading_constant_from_catalog(Klass klass, int k, int digits);

// agreement with a printed cell mantissa * 10^exponent, allowing the last
// printed digit to differ by one
bool matches_printed(const mpz_class& value, const char* mantissa, int exponent);
bool matches_printed(const BigDecimal& value, const char* mantissa, int exponent);

}  // namespace phylogf
