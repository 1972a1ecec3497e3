#include "focklab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "focklab/slog.hpp"

namespace focklab {

double g_s(double t, double s, const WeightParams& p) {
    return s * t - p.beta * std::pow(t / (1.0 + p.beta), (1.0 + p.beta) / p.beta);
}

int kernel_peak_index(double s, const WeightParams& p) {
    if (s <= 0.0) return 0;
    return static_cast<int>(std::floor((1.0 + p.beta) * std::pow(s, p.beta)));
}

namespace {

// Terms of the diagonal/pair series share this shape: exponent(n) unimodal
// in n with a sharp peak.  Collects indices around the peak until the
// 10-consecutive below-threshold rule fires on both sides.
template <typename ExpFn>
void scan_series(const MomentTable& table, int peak_guess, double rel_tol,
                 const ExpFn& exponent, std::vector<int>& indices, double& peak_val) {
    const int last = table.size() - 1;
    int n_hat = std::clamp(peak_guess, 0, last);
    // Local uphill walk; the estimate is within a couple of indices already.
    while (n_hat + 1 <= last && exponent(n_hat + 1) > exponent(n_hat)) ++n_hat;
    while (n_hat - 1 >= 0 && exponent(n_hat - 1) > exponent(n_hat)) --n_hat;
    peak_val = exponent(n_hat);
    const double cut = peak_val + std::log(rel_tol);

    indices.clear();
    indices.push_back(n_hat);
    int below = 0;
    for (int n = n_hat + 1;; ++n) {
        if (n > last) table.require(n);  // throws, naming the needed index
        indices.push_back(n);
        below = (exponent(n) < cut) ? below + 1 : 0;
        if (below >= 10) break;
    }
    below = 0;
    for (int n = n_hat - 1; n >= 0; --n) {
        indices.push_back(n);
        below = (exponent(n) < cut) ? below + 1 : 0;
        if (below >= 10) break;
    }
}

}  // namespace

double kernel_diag_log(double s, const WeightParams& p, const MomentTable& table,
                       double rel_tol) {
    const auto exponent = [&](int n) { return 2.0 * n * s - table[n]; };
    const int guess = kernel_peak_index(s, p) - 1;
    std::vector<int> idx;
    double peak = 0.0;
    scan_series(table, guess, rel_tol, exponent, idx, peak);
    std::vector<double> terms(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) terms[i] = exponent(idx[i]);
    return log_sum_exp(terms);
}

double kernel_diag_estimate_log(double s, const WeightParams& p) {
    if (!(s > 0.0))
        throw std::invalid_argument("kernel_diag_estimate_log: needs log-modulus > 0");
    const int n_z = kernel_peak_index(s, p);
    const double phi_tilde = std::max(g_s(n_z, s, p), g_s(n_z + 1.0, s, p));
    const double log_rho = log_rho_from_log(s, p);
    const double branch_peak = 2.0 * phi_tilde - s - log_rho;
    const double branch_bulk = 2.0 * phi_from_log(s, p) - 2.0 * log_rho;
    return log_add_exp(branch_peak, branch_bulk);
}

KernelBoundsLog kern_estim_bounds_log(double s, const WeightParams& p) {
    if (!(s > 0.0))
        throw std::invalid_argument("kern_estim_bounds_log: needs log-modulus > 0");
    const double log_rho = log_rho_from_log(s, p);
    const double two_phi = 2.0 * phi_from_log(s, p);
    return {two_phi - 2.0 * log_rho, two_phi - s - log_rho};
}

KernelDiagnostics kernel_diagnostics(double s, const WeightParams& p,
                                     const MomentTable& table, double rel_tol) {
    KernelDiagnostics d;
    d.s = s;
    d.n_z = kernel_peak_index(s, p);
    d.g_at_nz = g_s(d.n_z, s, p);
    d.g_at_nz_plus_1 = g_s(d.n_z + 1.0, s, p);
    d.phi_tilde = std::max(d.g_at_nz, d.g_at_nz_plus_1);
    d.exact_log_norm2 = kernel_diag_log(s, p, table, rel_tol);
    const double log_rho = log_rho_from_log(s, p);
    d.branch_peak_log = 2.0 * d.phi_tilde - s - log_rho;
    d.branch_bulk_log = 2.0 * phi_from_log(s, p) - 2.0 * log_rho;
    d.estimate_log_norm2 = log_add_exp(d.branch_peak_log, d.branch_bulk_log);
    d.bounds = kern_estim_bounds_log(s, p);
    return d;
}

std::complex<double> kernel_offdiag_normalized(const LogPoint& z, const LogPoint& w,
                                               const WeightParams& p,
                                               const MomentTable& table,
                                               double rel_tol) {
    const double lz = kernel_diag_log(z.u, p, table, rel_tol);
    const double lw = kernel_diag_log(w.u, p, table, rel_tol);
    const double pair_s = z.u + w.u;
    const double half_norms = 0.5 * (lz + lw);
    const auto exponent = [&](int n) {
        return n * pair_s - table[n] - half_norms;
    };
    const int guess = kernel_peak_index(0.5 * pair_s, p) - 1;
    std::vector<int> idx;
    double peak = 0.0;
    scan_series(table, guess, rel_tol * 1e-4, exponent, idx, peak);
    std::sort(idx.begin(), idx.end());

    // Neumaier-compensated sum; each |term| <= 1 by Cauchy-Schwarz.
    const double dtheta = z.theta - w.theta;
    double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
    auto add = [](double& sum, double& comp, double x) {
        const double t = sum + x;
        comp += (std::fabs(sum) >= std::fabs(x)) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    };
    for (int n : idx) {
        const double mag = std::exp(exponent(n));
        const double phase = static_cast<double>(n) * dtheta;
        add(re, re_c, mag * std::cos(phase));
        add(im, im_c, mag * std::sin(phase));
    }
    return {re + re_c, im + im_c};
}

int required_table_length(double u_max, const WeightParams& p) {
    return kernel_peak_index(std::max(u_max, 1.0), p) + 64;
}

}  // namespace focklab
