#pragma once

#include <complex>

#include "focklab/moments.hpp"
#include "focklab/points.hpp"
#include "focklab/weight.hpp"

namespace focklab {

/// g_s(t) = s t - beta (t/(1+beta))^{(1+beta)/beta}; maximized at
/// t* = (1+beta) s^beta with stationary value s^{1+beta} = phi(e^s).
double g_s(double t, double s, const WeightParams& p);

/// n_z = floor((1+beta) s^beta), the integer index nearest the series peak.
int kernel_peak_index(double s, const WeightParams& p);

/// log ||k_z||^2 = log sum_n exp(2 n s - w[n]), s = log|z|.  The scan starts
/// at the peak index and stops once terms stay below rel_tol x peak for 10
/// consecutive indices; a table that ends before that demands a larger n_max.
double kernel_diag_log(double s, const WeightParams& p, const MomentTable& table,
                       double rel_tol = 1e-12);

/// log( e^{2 phi~ - s - log rho} + e^{2 phi - 2 log rho} ), s > 0, with
/// phi~ = max(g_s(n_z), g_s(n_z + 1)).
double kernel_diag_estimate_log(double s, const WeightParams& p);

/// Logs of the two-sided envelope e^{2 phi}/rho^2 <= ||k_z||^2 <= e^{2 phi}/(|z| rho).
struct KernelBoundsLog {
    double lower = 0.0;
    double upper = 0.0;
};
KernelBoundsLog kern_estim_bounds_log(double s, const WeightParams& p);

struct KernelDiagnostics {
    double s = 0.0;
    int n_z = 0;
    double g_at_nz = 0.0;
    double g_at_nz_plus_1 = 0.0;
    double phi_tilde = 0.0;
    double exact_log_norm2 = 0.0;
    double estimate_log_norm2 = 0.0;
    double branch_peak_log = 0.0;   // 2 phi~ - s - log rho
    double branch_bulk_log = 0.0;   // 2 phi  - 2 log rho
    KernelBoundsLog bounds;
};
KernelDiagnostics kernel_diagnostics(double s, const WeightParams& p,
                                     const MomentTable& table, double rel_tol = 1e-12);

/// <k_z, k_w> / (||k_z|| ||k_w||) = sum_n e^{n(s_z+s_w) - w[n]} e^{i n (th_z - th_w)}
/// over the norms.  Normalized terms are <= 1, so the phase sum runs in plain
/// compensated complex arithmetic.  |result| <= 1; Hermitian in (z, w).
std::complex<double> kernel_offdiag_normalized(const LogPoint& z, const LogPoint& w,
                                               const WeightParams& p,
                                               const MomentTable& table,
                                               double rel_tol = 1e-12);

/// Moment-table length that comfortably covers diagonal and pair series for
/// log-moduli up to u_max.
int required_table_length(double u_max, const WeightParams& p);

}  // namespace focklab
