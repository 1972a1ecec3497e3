#pragma once

#include <cmath>
#include <complex>

namespace focklab {

/// A point of the plane in log-polar form: modulus e^u, angle theta.
/// Moduli in this problem reach e^{700}+ so the linear form is unusable.
struct LogPoint {
    double u = 0.0;
    double theta = 0.0;

    bool operator==(const LogPoint&) const = default;
    std::complex<double> to_complex() const { return std::polar(std::exp(u), theta); }
};

/// log(1 + e^u), stable for large |u|.
inline double log1p_exp(double u) {
    return u > 36.0 ? u + std::exp(-u) : std::log1p(std::exp(u));
}

/// log |a - b| via the shifted form e^{max(u)} |1 - e^{-|du|} e^{i dtheta}|.
/// Returns -inf when the points coincide exactly.
double log_euclid_dist(const LogPoint& a, const LogPoint& b);

}  // namespace focklab
