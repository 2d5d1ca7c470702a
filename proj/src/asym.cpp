#include "phylogf/asym.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace phylogf {

// working precision in bits: requested digits + 10 guard digits
static mpfr_prec_t bits_for(int digits) {
    if (digits < 1) throw std::invalid_argument("need at least one digit");
    return mpfr_prec_t((digits + 10) * 3.3219280948873626) + 4;
}

BigDecimal::BigDecimal(int digits_) : digits(digits_) {
    mpfr_init2(v, bits_for(digits_));
    mpfr_set_zero(v, 1);
}

BigDecimal::BigDecimal(const BigDecimal& o) : digits(o.digits), even_zero(o.even_zero) {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_set(v, o.v, MPFR_RNDN);
}

BigDecimal::BigDecimal(BigDecimal&& o) noexcept : digits(o.digits), even_zero(o.even_zero) {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_swap(v, o.v);
}

BigDecimal& BigDecimal::operator=(BigDecimal o) {
    std::swap(digits, o.digits);
    std::swap(even_zero, o.even_zero);
    mpfr_swap(v, o.v);
    return *this;
}

BigDecimal::~BigDecimal() { mpfr_clear(v); }

BigDecimal BigDecimal::from_long(long x, int digits) {
    BigDecimal r(digits);
    mpfr_set_si(r.v, x, MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::from_integer(const mpz_class& x, int digits) {
    BigDecimal r(digits);
    mpfr_set_z(r.v, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::from_rational(const mpq_class& x, int digits) {
    BigDecimal r(digits);
    mpfr_set_q(r.v, x.get_mpq_t(), MPFR_RNDN);
    return r;
}

double BigDecimal::to_double() const { return mpfr_get_d(v, MPFR_RNDN); }

// binary results carry the wider operand's precision
static BigDecimal result_like(const BigDecimal& a, const BigDecimal& b) {
    return BigDecimal(a.digits >= b.digits ? a.digits : b.digits);
}

BigDecimal operator+(const BigDecimal& a, const BigDecimal& b) {
    BigDecimal r = result_like(a, b);
    mpfr_add(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

BigDecimal operator-(const BigDecimal& a, const BigDecimal& b) {
    BigDecimal r = result_like(a, b);
    mpfr_sub(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

BigDecimal operator-(const BigDecimal& a) {
    BigDecimal r(a.digits);
    mpfr_neg(r.v, a.v, MPFR_RNDN);
    return r;
}

BigDecimal operator*(const BigDecimal& a, const BigDecimal& b) {
    BigDecimal r = result_like(a, b);
    mpfr_mul(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

BigDecimal operator/(const BigDecimal& a, const BigDecimal& b) {
    BigDecimal r = result_like(a, b);
    mpfr_div(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}

BigDecimal bd_sqrt(const BigDecimal& a) {
    BigDecimal r(a.digits);
    mpfr_sqrt(r.v, a.v, MPFR_RNDN);
    return r;
}

BigDecimal bd_exp(const BigDecimal& a) {
    BigDecimal r(a.digits);
    mpfr_exp(r.v, a.v, MPFR_RNDN);
    return r;
}

BigDecimal bd_ln(const BigDecimal& a) {
    BigDecimal r(a.digits);
    mpfr_log(r.v, a.v, MPFR_RNDN);
    return r;
}

BigDecimal bd_pi(int digits) {
    BigDecimal r(digits);
    mpfr_const_pi(r.v, MPFR_RNDN);
    return r;
}

BigDecimal bd_ln2(int digits) {
    BigDecimal r(digits);
    mpfr_const_log2(r.v, MPFR_RNDN);
    return r;
}

// ---- rendering

static std::string format_exponent(long e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "E%c%04ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return buf;
}

std::string sci(const BigDecimal& a, int show) {
    if (show < 1) throw std::invalid_argument("need at least one shown digit");
    if (mpfr_zero_p(a.v)) {
        std::string m = "0";
        if (show > 1) m += "." + std::string(show - 1, '0');
        return m + format_exponent(0);
    }
    char* s = nullptr;
    // mpfr prints d.ddd...e+EE; re-shape the exponent field
    mpfr_asprintf(&s, "%.*Re", show - 1, a.v);
    std::string str(s);
    mpfr_free_str(s);
    std::size_t epos = str.find('e');
    long e = std::stol(str.substr(epos + 1));
    return str.substr(0, epos) + format_exponent(e);
}

std::string sci(const mpz_class& a, int show) {
    if (show < 1) throw std::invalid_argument("need at least one shown digit");
    if (a == 0) {
        std::string m = "0";
        if (show > 1) m += "." + std::string(show - 1, '0');
        return m + format_exponent(0);
    }
    const bool neg = a < 0;
    std::string digits = mpz_class(abs(a)).get_str();
    long e = long(digits.size()) - 1;
    std::string mant;
    if (long(digits.size()) <= show) {
        mant = digits + std::string(std::size_t(show) - digits.size(), '0');
    } else {
        mant = digits.substr(0, std::size_t(show));
        // round half to even on the cut-off tail
        const char head = digits[std::size_t(show)];
        bool round_up;
        if (head > '5') {
            round_up = true;
        } else if (head < '5') {
            round_up = false;
        } else {
            round_up = digits.find_first_not_of('0', std::size_t(show) + 1) != std::string::npos;
            if (!round_up) round_up = ((mant.back() - '0') % 2) == 1;
        }
        if (round_up) {
            int i = show - 1;
            while (i >= 0 && mant[std::size_t(i)] == '9') mant[std::size_t(i--)] = '0';
            if (i < 0) {
                mant.insert(mant.begin(), '1');
                mant.pop_back();
                ++e;
            } else {
                ++mant[std::size_t(i)];
            }
        }
    }
    std::string out = neg ? "-" : "";
    out += mant.substr(0, 1);
    if (show > 1) out += "." + mant.substr(1);
    return out + format_exponent(e);
}

// ---- constants and estimates

AsymConstants asym_constants(Klass klass, int k, int digits) {
    if (klass == Klass::all) throw std::invalid_argument("constants cover normal and treechild");
    if (k < 1 || k > 3) throw std::invalid_argument("constants cover k in 1..3");
    const long a_den[] = {0, 2, 16, 192};   // A = sqrt(2)/a_den
    const long b_den[] = {0, 2, 8, 64};     // B = -(3 or 1) sqrt(pi)/b_den
    AsymConstants c{BigDecimal(digits), BigDecimal(digits), BigDecimal(digits)};
    BigDecimal two = BigDecimal::from_long(2, digits);
    c.a = bd_sqrt(two) / BigDecimal::from_long(a_den[k], digits);
    BigDecimal sqrt_pi = bd_sqrt(bd_pi(digits));
    long num = (klass == Klass::normal) ? 3 : 1;
    c.b = -(BigDecimal::from_long(num, digits) * sqrt_pi) / BigDecimal::from_long(b_den[k], digits);
    c.c = c.a / two;
    return c;
}

// log of the shared growth factor (sqrt(2)/e)^n n^{n+2k-1}
static BigDecimal log_lead(int k, long n, int digits) {
    BigDecimal bn = BigDecimal::from_long(n, digits);
    BigDecimal half_ln2 = bd_ln2(digits) / BigDecimal::from_long(2, digits);
    BigDecimal w = bn * (half_ln2 - BigDecimal::from_long(1, digits));
    return w + BigDecimal::from_long(n + 2 * k - 1, digits) * bd_ln(bn);
}

BigDecimal asym_estimate(Klass klass, int k, long n, int order, int digits) {
    if (digits < 10) throw std::invalid_argument("need digits >= 10");
    if (order != 1 && order != 2) throw std::invalid_argument("order is 1 or 2");
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n % 2 == 0) {
        BigDecimal r(digits);
        r.even_zero = true;
        return r;
    }
    AsymConstants c = asym_constants(klass, k, digits);
    BigDecimal factor = c.a;
    if (order == 2)
        factor = factor + c.b / bd_sqrt(BigDecimal::from_long(n, digits));
    return bd_exp(log_lead(k, n, digits)) * factor;
}

BigDecimal leaf_asym_estimate(Klass klass, int k, long l, int digits) {
    if (digits < 10) throw std::invalid_argument("need digits >= 10");
    if (l < 1) throw std::invalid_argument("need l >= 1");
    AsymConstants c = asym_constants(klass, k, digits);
    BigDecimal bl = BigDecimal::from_long(l, digits);
    // (2/e)^l l^{l+2k-1} through logs, times 2^{3k-1} c_k
    BigDecimal w = bl * (bd_ln2(digits) - BigDecimal::from_long(1, digits)) +
                   BigDecimal::from_long(l + 2 * k - 1, digits) * bd_ln(bl);
    return bd_exp(w) * BigDecimal::from_long(1L << (3 * k - 1), digits) * c.c;
}

std::vector<long> default_table_rows() {
    std::vector<long> rows;
    for (long r = 7; r <= 31; r += 2) rows.push_back(r * r);
    return rows;
}

std::vector<AsymRow> appendix_table(Klass klass, int k, const std::vector<long>& rows,
                                    int digits) {
    std::vector<AsymRow> out;
    out.reserve(rows.size());
    for (long n : rows) {
        AsymRow row;
        row.n = n;
        row.exact = (n % 2 == 0) ? mpz_class(0) : count(klass, k, n);
        row.first = asym_estimate(klass, k, n, 1, digits);
        row.second = asym_estimate(klass, k, n, 2, digits);
        out.push_back(std::move(row));
    }
    return out;
}

BigDecimal second_order_probe(Klass klass, int k, long n, int digits) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("probe needs odd n");
    mpz_class exact = count(klass, k, n);
    AsymConstants c = asym_constants(klass, k, digits);
    BigDecimal ratio = BigDecimal::from_integer(exact, digits) / bd_exp(log_lead(k, n, digits));
    return bd_sqrt(BigDecimal::from_long(n, digits)) * (ratio - c.a);
}

BigDecimal leading_constant_from_catalog(Klass klass, int k, int digits) {
    const AlgebraicGF& gf = catalog(klass, k);
    // numerator polynomial at the singularity, exactly in rationals
    mpq_class a_half = 0;
    mpq_class w(1);
    for (const mpq_class& coef : gf.a_poly) {
        a_half += coef * w;
        w /= 2;
    }
    // Gamma(2k - 1/2) = (4k-2)! sqrt(pi) / (4^{2k-1} (2k-1)!)
    mpz_class fac_top, fac_bot;
    mpz_fac_ui(fac_top.get_mpz_t(), static_cast<unsigned long>(4 * k - 2));
    mpz_fac_ui(fac_bot.get_mpz_t(), static_cast<unsigned long>(2 * k - 1));
    mpq_class gamma_rat(fac_top, fac_bot);
    gamma_rat.canonicalize();
    gamma_rat /= mpz_class(mpz_class(1) << (2 * (2 * k - 1)));
    mpq_class pow4(mpz_class(1) << (2 * k));
    // A = 2 sqrt(2 pi) a(1/2) / (4^k gamma_rat sqrt(pi)) = 2 sqrt(2) a(1/2)/(4^k gamma_rat)
    mpq_class rat = 2 * a_half / (pow4 * gamma_rat);
    return BigDecimal::from_rational(rat, digits) * bd_sqrt(BigDecimal::from_long(2, digits));
}

// ---- comparison against printed table cells

// split a printed mantissa like "-17.08470069" into a scaled integer and the
// number of fractional digits
static mpz_class parse_mantissa(const char* mantissa, int& frac) {
    std::string m(mantissa);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    std::size_t dot = m.find('.');
    frac = dot == std::string::npos ? 0 : int(m.size() - dot - 1);
    if (dot != std::string::npos) m.erase(dot, 1);
    // base fixed at 10: a stripped "0.63..." keeps its leading zero, which
    // the auto-detecting constructor would misread as octal
    mpz_class v(m, 10);
    return neg ? mpz_class(-v) : v;
}

bool matches_printed(const mpz_class& value, const char* mantissa, int exponent) {
    int frac = 0;
    mpz_class printed_scaled = parse_mantissa(mantissa, frac);
    long s = exponent - frac;  // value ~ printed_scaled * 10^s
    mpz_class pow10, q;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(s >= 0 ? s : -s));
    if (s >= 0) {
        // round value / 10^s half to even, then compare scaled mantissas
        mpz_class r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), pow10.get_mpz_t());
        mpz_class twice = 2 * r;
        if (twice > pow10 || (twice == pow10 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    } else {
        q = value * pow10;
    }
    mpz_class diff = q - printed_scaled;
    return diff >= -1 && diff <= 1;
}

bool matches_printed(const BigDecimal& value, const char* mantissa, int exponent) {
    int frac = 0;
    mpz_class printed_scaled = parse_mantissa(mantissa, frac);
    long s = exponent - frac;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(s >= 0 ? s : -s));
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(value.v) + 8);
    if (s >= 0)
        mpfr_div_z(t, value.v, pow10.get_mpz_t(), MPFR_RNDN);
    else
        mpfr_mul_z(t, value.v, pow10.get_mpz_t(), MPFR_RNDN);
    mpz_class q;
    mpfr_get_z(q.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    mpz_class diff = q - printed_scaled;
    return diff >= -1 && diff <= 1;
}

}  // namespace phylogf
