#include "semiprimes/bigreal.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace semiprimes {

mpfr_prec_t BigReal::bits_for(int digits) {
    if (digits < 2) digits = 2;
    // log2(10) = 3.3219...; a few extra bits so decimal round-trips are exact
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

BigReal::BigReal() : BigReal(kDefaultDigits) {}

BigReal::BigReal(int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(unsigned long v, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_ui(v_, v, MPFR_RNDN);
}

BigReal::BigReal(double v, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& q, int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
    // leave `other` valid for destruction
    v_[0] = other.v_[0];
    mpfr_init2(other.v_, MPFR_PREC_MIN);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        std::swap(digits_, other.digits_);
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(std::string_view s, int digits) {
    BigReal r(digits);
    std::string buf(s);
    if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("BigReal::from_string: unparsable '" + buf + "'");
    }
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(digits_);
    mpfr_set_prec(r.v_, mpfr_get_prec(v_));
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(digits_);
    mpfr_set_prec(r.v_, mpfr_get_prec(v_));
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
inline BigReal result_like(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.digits(), b.digits()));
    return r;
}
}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r = result_like(a, b);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r = result_like(a, b);
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r = result_like(a, b);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r = result_like(a, b);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& b) {
    mpfr_add(v_, v_, b.v_, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator-=(const BigReal& b) {
    mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator*=(const BigReal& b) {
    mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator/=(const BigReal& b) {
    mpfr_div(v_, v_, b.v_, MPFR_RNDN);
    return *this;
}

BigReal BigReal::operator+(long v) const {
    BigReal r(digits_);
    mpfr_add_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator-(long v) const {
    BigReal r(digits_);
    mpfr_sub_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator*(long v) const {
    BigReal r(digits_);
    mpfr_mul_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}
BigReal BigReal::operator/(long v) const {
    BigReal r(digits_);
    mpfr_div_si(r.v_, v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::log() const {
    BigReal r(digits_);
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::exp() const {
    BigReal r(digits_);
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::sqrt() const {
    BigReal r(digits_);
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}
BigReal BigReal::pow_si(long e) const {
    BigReal r(digits_);
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

namespace {

// digits + exponent from mpfr_get_str -> human string
std::string format(mpfr_srcptr v, size_t ndig, bool force_plain_range) {
    if (mpfr_zero_p(v)) return "0";
    if (!mpfr_number_p(v)) return mpfr_nan_p(v) ? "nan" : (mpfr_sgn(v) > 0 ? "inf" : "-inf");

    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, ndig, v, MPFR_RNDN);
    std::string digs(s);
    mpfr_free_str(s);
    bool neg = false;
    if (digs[0] == '-') {
        neg = true;
        digs.erase(0, 1);
    }
    // strip trailing zeros but keep at least one digit
    // (round-trip strings keep them all; callers pass force_plain_range=false there)
    std::string out;
    // decimal exponent of the leading digit
    long exp10 = static_cast<long>(e) - 1;
    bool scientific = !(exp10 >= -4 && exp10 <= 2) || !force_plain_range;
    if (force_plain_range && exp10 >= -4 && exp10 <= 2) scientific = false;
    if (scientific) {
        out = digs.substr(0, 1);
        if (digs.size() > 1) out += "." + digs.substr(1);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "e%+03ld", exp10);
        out += buf;
    } else {
        if (exp10 >= 0) {
            size_t ip = static_cast<size_t>(exp10) + 1;
            if (ip >= digs.size()) {
                out = digs + std::string(ip - digs.size(), '0');
            } else {
                out = digs.substr(0, ip) + "." + digs.substr(ip);
            }
        } else {
            out = "0." + std::string(static_cast<size_t>(-exp10 - 1), '0') + digs;
        }
    }
    return neg ? "-" + out : out;
}

}  // namespace

std::string BigReal::to_string() const {
    size_t n = mpfr_get_str_ndigits(10, mpfr_get_prec(v_));
    return format(v_, n, false);
}

std::string BigReal::to_decimal(int sig) const {
    if (sig < 1) sig = 1;
    return format(v_, static_cast<size_t>(sig), true);
}

BigReal log(const BigReal& x) { return x.log(); }
BigReal exp(const BigReal& x) { return x.exp(); }
BigReal sqrt(const BigReal& x) { return x.sqrt(); }
BigReal abs(const BigReal& x) { return x.abs(); }

}  // namespace semiprimes
