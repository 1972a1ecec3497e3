#pragma once

#include <cmath>
#include <stdexcept>

namespace focklab {

/// Weight exponent beta in (0, 1].  beta == 1 sits outside the regime the
/// rest of the lab targets and is flagged experimental in reports.
struct WeightParams {
    double beta = 0.5;

    void validate() const {
        if (!(beta > 0.0) || !(beta <= 1.0))
            throw std::invalid_argument("WeightParams: beta must be in (0, 1]");
    }
    bool experimental() const { return beta == 1.0; }
};

/// phi(r) = (log+ r)^{1+beta}; zero on [0, 1], strictly increasing beyond.
inline double phi(double r, const WeightParams& p) {
    if (r < 0.0) throw std::invalid_argument("phi: radius must be >= 0");
    const double s = std::log(r);
    return s <= 0.0 ? 0.0 : std::pow(s, 1.0 + p.beta);
}

/// phi as a function of s = log r.
inline double phi_from_log(double s, const WeightParams& p) {
    return s <= 0.0 ? 0.0 : std::pow(s, 1.0 + p.beta);
}

/// rho(z) = (Laplacian phi)^{-1/2} = |z| (log|z|)^{(1-beta)/2}, |z| > 1.
inline double rho(double r, const WeightParams& p) {
    if (!(r > 1.0)) throw std::invalid_argument("rho: defined for modulus > 1");
    return r * std::pow(std::log(r), 0.5 * (1.0 - p.beta));
}

/// log rho as a function of s = log|z| > 0.
inline double log_rho_from_log(double s, const WeightParams& p) {
    if (!(s > 0.0)) throw std::invalid_argument("log_rho: log-modulus must be > 0");
    return s + 0.5 * (1.0 - p.beta) * std::log(s);
}

}  // namespace focklab
