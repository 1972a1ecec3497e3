#pragma once

#include <vector>

#include "focklab/weight.hpp"

namespace focklab {

/// log ||z^n||^2 = log(2 pi) + log[ 1/(2n+2) + int_0^inf e^{(2n+2)t - 2t^{1+beta}} dt ].
/// The unit-disk part is analytic (phi vanishes there); the rest is adaptive
/// quadrature with the Laplace stationary point as peak hint.
double moment_log_exact(int n, const WeightParams& p, double rel_tol = 1e-12);

/// log of the closed asymptotic form, implicit constant fixed at 1:
/// ((1-beta)/(2 beta)) log((1+n)/(1+beta)) + 2 beta ((1+n)/(1+beta))^{(1+beta)/beta}.
/// Consumers compare log-differences only, never absolute offsets.
double moment_log_asymptotic(int n, const WeightParams& p);

/// Stationary point of the radial integrand e^{(2n+2)t - 2t^{1+beta}}.
double moment_peak_hint(int n, const WeightParams& p);

/// Contiguous table of exact log-moments, the single source of truth for the
/// kernel and product modules.  Immutable after construction.
class MomentTable {
  public:
    static MomentTable build(int n_max, const WeightParams& p, double rel_tol = 1e-12);

    double operator[](int n) const { return w_.at(static_cast<size_t>(n)); }
    int size() const { return static_cast<int>(w_.size()); }
    const WeightParams& params() const { return p_; }
    double rel_tol() const { return rel_tol_; }
    const std::vector<double>& values() const { return w_; }

    /// Throws (demanding a larger n_max) unless the table covers [0, n].
    void require(int n) const;

  private:
    MomentTable(WeightParams p, double rel_tol, std::vector<double> w)
        : p_(p), rel_tol_(rel_tol), w_(std::move(w)) {}
    WeightParams p_;
    double rel_tol_;
    std::vector<double> w_;
};

}  // namespace focklab
