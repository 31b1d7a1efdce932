#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace semiprimes {

/// Arbitrary-precision real number backed by MPFR.
///
/// Precision is expressed in decimal significant digits; every value carries
/// its own working precision and binary operations round to the larger of the
/// two operand precisions (MPFR round-to-nearest, so results are correctly
/// rounded -- well within the 2 ulp contract).
class BigReal {
public:
    static constexpr int kDefaultDigits = 40;

    BigReal();  // zero at default precision
    explicit BigReal(int digits);
    BigReal(long v, int digits);
    BigReal(unsigned long v, int digits);
    BigReal(double v, int digits);
    BigReal(const mpq_class& q, int digits);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal from_string(std::string_view s, int digits);

    int digits() const { return digits_; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigReal operator-() const;
    BigReal abs() const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    BigReal& operator+=(const BigReal& b);
    BigReal& operator-=(const BigReal& b);
    BigReal& operator*=(const BigReal& b);
    BigReal& operator/=(const BigReal& b);

    BigReal operator+(long v) const;
    BigReal operator-(long v) const;
    BigReal operator*(long v) const;
    BigReal operator/(long v) const;

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    BigReal log() const;
    BigReal exp() const;
    BigReal sqrt() const;
    BigReal pow_si(long e) const;  // integer power

    double to_double() const;

    /// Exact round-trip serialization: from_string(to_string(), digits()) == *this.
    std::string to_string() const;

    /// `sig` significant digits; plain decimal for 1e-4 <= |v| < 1e3, otherwise
    /// normalized scientific notation d.dd...e[+-]XX.
    std::string to_decimal(int sig) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static mpfr_prec_t bits_for(int digits);

private:
    mpfr_t v_;
    int digits_;
};

BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal abs(const BigReal& x);

}  // namespace semiprimes
