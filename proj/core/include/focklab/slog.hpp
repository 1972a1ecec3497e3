#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace focklab {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// A real number stored as (log|x|, sign).  Survives magnitudes like
/// exp(2(log r)^{1+beta}) that overflow double in linear form.
/// Invariant: sign == 0 <=> log_mag == -inf.
struct SignedLogReal {
    double log_mag = kNegInf;
    int sign = 0;

    static SignedLogReal zero() { return {kNegInf, 0}; }
    static SignedLogReal one() { return {0.0, +1}; }

    static SignedLogReal from_double(double x) {
        if (x == 0.0) return zero();
        return {std::log(std::fabs(x)), x > 0 ? +1 : -1};
    }
    static SignedLogReal from_log(double log_mag, int sign) {
        if (sign == 0 || log_mag == kNegInf) return zero();
        return {log_mag, sign > 0 ? +1 : -1};
    }

    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
    bool is_zero() const { return sign == 0; }
};

/// A complex number stored as (log|z|, arg z), arg in (-pi, pi].
/// Zero is represented by log_mag == -inf with arg fixed at 0.
struct SignedLogComplex {
    double log_mag = kNegInf;
    double arg = 0.0;

    static SignedLogComplex zero() { return {kNegInf, 0.0}; }
    static SignedLogComplex one() { return {0.0, 0.0}; }
    static SignedLogComplex from_polar_log(double log_mag, double arg);
    static SignedLogComplex from_complex(const std::complex<double>& z);
    static SignedLogComplex from_real(const SignedLogReal& x) {
        if (x.is_zero()) return zero();
        return {x.log_mag, x.sign > 0 ? 0.0 : M_PI};
    }

    std::complex<double> to_complex() const {
        if (log_mag == kNegInf) return {0.0, 0.0};
        return std::polar(std::exp(log_mag), arg);
    }
    bool is_zero() const { return log_mag == kNegInf; }
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Exact-in-sign addition; log-magnitude from the shifted formula
/// max + log(1 +/- e^{-|diff|}).  Exact cancellation yields the signed zero.
SignedLogReal slog_add(const SignedLogReal& a, const SignedLogReal& b);
SignedLogReal slog_mul(const SignedLogReal& a, const SignedLogReal& b);
SignedLogReal slog_neg(const SignedLogReal& a);

SignedLogComplex slc_add(const SignedLogComplex& a, const SignedLogComplex& b);
SignedLogComplex slc_mul(const SignedLogComplex& a, const SignedLogComplex& b);
SignedLogComplex slc_div(const SignedLogComplex& a, const SignedLogComplex& b);
SignedLogComplex slc_neg(const SignedLogComplex& a);
SignedLogComplex slc_conj(const SignedLogComplex& a);
SignedLogComplex slc_scale(const SignedLogComplex& a, double log_factor);
/// a^k for integer k (log_mag and arg scale linearly; arg re-wrapped).
SignedLogComplex slc_pow(const SignedLogComplex& a, long k);

/// log(e^a + e^b) for two log-magnitudes of nonnegative quantities.
double log_add_exp(double a, double b);

/// log of a sum of nonnegative quantities given by their logs.
/// Canonical order: terms sorted descending, compensated accumulation,
/// so the result is permutation-invariant bit for bit.
/// Empty input -> -inf.  Result >= max(terms).
double log_sum_exp(std::span<const double> terms);

}  // namespace focklab
