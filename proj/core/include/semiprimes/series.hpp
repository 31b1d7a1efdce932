#pragma once

#include <vector>

#include "semiprimes/bigreal.hpp"

namespace semiprimes {

/// Truncated power series about a fixed expansion point (s = 1 throughout),
/// with an optional simple-pole coefficient for Laurent data like zeta(s).
///
/// coeffs[j] multiplies t^j where t = s - center; pole multiplies 1/t.
class TruncatedSeries {
public:
    TruncatedSeries(int order, int digits, double center = 1.0)
        : center_(center), pole_(BigReal(0L, digits)), coeffs_(static_cast<size_t>(order) + 1, BigReal(0L, digits)) {}

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double center() const { return center_; }

    const BigReal& operator[](int j) const { return coeffs_[static_cast<size_t>(j)]; }
    BigReal& operator[](int j) { return coeffs_[static_cast<size_t>(j)]; }

    const BigReal& pole() const { return pole_; }
    void set_pole(const BigReal& p) { pole_ = p; }
    bool has_pole() const { return !pole_.is_zero(); }

    const std::vector<BigReal>& coeffs() const { return coeffs_; }

private:
    double center_;
    BigReal pole_;
    std::vector<BigReal> coeffs_;
};

/// Series that is identically `c` (order `order`).
TruncatedSeries series_constant(const BigReal& c, int order);

/// Cauchy product truncated to the shorter operand; at most one operand may
/// carry a pole (the pole contributes a down-shift of the other series, so the
/// reliable order drops by one in that case).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/a for a series with nonzero constant term and no pole.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// Termwise derivative; order decreases by one. Rejects series with a pole.
TruncatedSeries series_derivative(const TruncatedSeries& a);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const BigReal& c);

}  // namespace semiprimes
