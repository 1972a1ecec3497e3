#include "focklab/slog.hpp"

#include <algorithm>

namespace focklab {

double wrap_angle(double a) {
    if (a > -M_PI && a <= M_PI) return a;
    a = std::remainder(a, 2.0 * M_PI);  // lands in [-pi, pi]
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

SignedLogComplex SignedLogComplex::from_polar_log(double log_mag, double arg) {
    if (log_mag == kNegInf) return zero();
    return {log_mag, wrap_angle(arg)};
}

SignedLogComplex SignedLogComplex::from_complex(const std::complex<double>& z) {
    if (z == std::complex<double>(0.0, 0.0)) return zero();
    return {std::log(std::abs(z)), std::arg(z)};
}

SignedLogReal slog_add(const SignedLogReal& a, const SignedLogReal& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedLogReal& hi = (a.log_mag >= b.log_mag) ? a : b;
    const SignedLogReal& lo = (a.log_mag >= b.log_mag) ? b : a;
    const double diff = lo.log_mag - hi.log_mag;  // <= 0
    if (a.sign == b.sign)
        return {hi.log_mag + std::log1p(std::exp(diff)), a.sign};
    if (diff == 0.0) return SignedLogReal::zero();  // exact cancellation
    return {hi.log_mag + std::log1p(-std::exp(diff)), hi.sign};
}

SignedLogReal slog_mul(const SignedLogReal& a, const SignedLogReal& b) {
    if (a.sign == 0 || b.sign == 0) return SignedLogReal::zero();
    return {a.log_mag + b.log_mag, a.sign * b.sign};
}

SignedLogReal slog_neg(const SignedLogReal& a) { return {a.log_mag, -a.sign}; }

SignedLogComplex slc_add(const SignedLogComplex& a, const SignedLogComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const SignedLogComplex& hi = (a.log_mag >= b.log_mag) ? a : b;
    const SignedLogComplex& lo = (a.log_mag >= b.log_mag) ? b : a;
    // 1 + (lo/hi) in ordinary arithmetic; |lo/hi| <= 1 so no overflow.
    const std::complex<double> w =
        1.0 + std::polar(std::exp(lo.log_mag - hi.log_mag), lo.arg - hi.arg);
    if (w == std::complex<double>(0.0, 0.0)) return SignedLogComplex::zero();
    return {hi.log_mag + std::log(std::abs(w)), wrap_angle(hi.arg + std::arg(w))};
}

SignedLogComplex slc_mul(const SignedLogComplex& a, const SignedLogComplex& b) {
    if (a.is_zero() || b.is_zero()) return SignedLogComplex::zero();
    return {a.log_mag + b.log_mag, wrap_angle(a.arg + b.arg)};
}

SignedLogComplex slc_div(const SignedLogComplex& a, const SignedLogComplex& b) {
    if (a.is_zero()) return SignedLogComplex::zero();
    return {a.log_mag - b.log_mag, wrap_angle(a.arg - b.arg)};
}

SignedLogComplex slc_neg(const SignedLogComplex& a) {
    if (a.is_zero()) return a;
    return {a.log_mag, wrap_angle(a.arg + M_PI)};
}

SignedLogComplex slc_conj(const SignedLogComplex& a) {
    if (a.is_zero()) return a;
    return {a.log_mag, wrap_angle(-a.arg)};
}

SignedLogComplex slc_scale(const SignedLogComplex& a, double log_factor) {
    if (a.is_zero()) return a;
    return {a.log_mag + log_factor, a.arg};
}

SignedLogComplex slc_pow(const SignedLogComplex& a, long k) {
    if (k == 0) return SignedLogComplex::one();
    if (a.is_zero()) return a;
    return {a.log_mag * static_cast<double>(k),
            wrap_angle(a.arg * static_cast<double>(k))};
}

double log_add_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double log_sum_exp(std::span<const double> terms) {
    if (terms.empty()) return kNegInf;
    std::vector<double> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    const double peak = sorted.front();
    if (peak == kNegInf) return kNegInf;
    // Kahan-compensated sum of exp(t - peak), largest first.
    double sum = 0.0, comp = 0.0;
    for (double t : sorted) {
        const double term = std::exp(t - peak);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return peak + std::log(sum);
}

}  // namespace focklab
