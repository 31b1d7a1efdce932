#include "semiprimes/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiprimes {

TruncatedSeries series_constant(const BigReal& c, int order) {
    TruncatedSeries r(order, c.digits());
    r[0] = c;
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.center() != b.center()) throw std::invalid_argument("series_mul: center mismatch");
    if (a.has_pole() && b.has_pole()) throw std::invalid_argument("series_mul: both operands carry a pole");

    const TruncatedSeries& p = a.has_pole() ? a : b;  // at most one pole
    const TruncatedSeries& q = a.has_pole() ? b : a;

    int order = std::min(a.order(), b.order());
    if (p.has_pole()) order = std::min(order, q.order() - 1);
    if (order < 0) throw std::invalid_argument("series_mul: pole requires operand of order >= 1");

    int digits = std::max(a[0].digits(), b[0].digits());
    TruncatedSeries r(order, digits, a.center());

    for (int j = 0; j <= order; ++j) {
        BigReal acc(0L, digits);
        for (int m = 0; m <= j; ++m) {
            if (m <= a.order() && j - m <= b.order()) acc += a[m] * b[j - m];
        }
        // pole/t * q(t): shifts q down by one and contributes pole*q0 to 1/t
        if (p.has_pole() && j + 1 <= q.order()) acc += p.pole() * q[j + 1];
        r[j] = acc;
    }
    if (p.has_pole()) r.set_pole(p.pole() * q[0]);
    return r;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    if (a.has_pole()) throw std::invalid_argument("series_reciprocal: operand carries a pole");
    if (a[0].is_zero()) throw std::invalid_argument("series_reciprocal: zero constant term");
    int digits = a[0].digits();
    TruncatedSeries r(a.order(), digits, a.center());
    BigReal inv0 = BigReal(1L, digits) / a[0];
    r[0] = inv0;
    for (int j = 1; j <= a.order(); ++j) {
        BigReal acc(0L, digits);
        for (int m = 1; m <= j; ++m) acc += a[m] * r[j - m];
        r[j] = -(acc * inv0);
    }
    return r;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    if (a.has_pole()) throw std::invalid_argument("series_derivative: operand carries a pole");
    if (a.order() == 0) {
        TruncatedSeries r(0, a[0].digits(), a.center());
        return r;  // derivative of a constant
    }
    TruncatedSeries r(a.order() - 1, a[0].digits(), a.center());
    for (int j = 0; j < a.order(); ++j) r[j] = a[j + 1] * static_cast<long>(j + 1);
    return r;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.center() != b.center()) throw std::invalid_argument("series_add: center mismatch");
    int order = std::min(a.order(), b.order());
    int digits = std::max(a[0].digits(), b[0].digits());
    TruncatedSeries r(order, digits, a.center());
    for (int j = 0; j <= order; ++j) r[j] = a[j] + b[j];
    r.set_pole(a.pole() + b.pole());
    return r;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const BigReal& c) {
    TruncatedSeries r(a.order(), std::max(a[0].digits(), c.digits()), a.center());
    for (int j = 0; j <= a.order(); ++j) r[j] = a[j] * c;
    r.set_pole(a.pole() * c);
    return r;
}

}  // namespace semiprimes
