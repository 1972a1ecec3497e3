#pragma once

#include <functional>
#include <string_view>

namespace focklab {

/// log of the integral over [0, inf) of a positive integrand given by its log.
///
/// The integrand must be unimodal after its peak and super-exponentially
/// decaying (the e^{at - 2t^{1+beta}} family).  Panels of Gauss-Legendre
/// nodes are laid out from the peak outward, each refined by bisection, and
/// the outward march stops once panel contributions fall below
/// rel_tol x running total (floored by the ulp of the log value itself).
/// Deterministic for fixed inputs.
///
/// Throws when the panel budget is exhausted; the message names `label`.
double adaptive_quad_log(const std::function<double(double)>& log_f,
                         double peak_hint, double rel_tol,
                         std::string_view label = "integrand");

}  // namespace focklab
