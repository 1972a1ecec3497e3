#pragma once

#include <optional>
#include <span>
#include <vector>

#include "focklab/kernel.hpp"
#include "focklab/sequence.hpp"
#include "focklab/slog.hpp"

namespace focklab {

/// (1 - z/pole) in signed-log form, safe at any modulus; exact zero when the
/// points coincide bit for bit.
SignedLogComplex one_minus_ratio(const LogPoint& z, const LogPoint& pole);

/// Product of (1 - z/gamma_k) over the first M points, optionally skipping
/// one index.  Factors multiply in ascending-modulus order.  When z hits an
/// included point exactly the result is the zero flag and *zero_index (if
/// given) records the witness.
SignedLogComplex product_eval_log(const PointSeq& seq, int M, const LogPoint& z,
                                  int skip_index = -1, int* zero_index = nullptr);

/// log sum_{k >= M} e^{u_z - u_k}: bound on the neglected log-tail of the
/// product at log-modulus u_z.  Indices past the realized horizon extend by
/// the reference moduli; the remainder closes with a geometric bound.
double product_tail_bound_log(const PointSeq& seq, int M, double u_z);

/// Smallest M with product_tail_bound_log below log(tail_tol).
int choose_truncation(const PointSeq& seq, double u_max, double tail_tol = 1e-12);

/// Polynomial coefficients of the truncated product, degree M, coeff[0] = 1.
struct TruncatedProduct {
    int M = 0;
    int skip_index = -1;
    std::vector<SignedLogComplex> coeffs;

    static TruncatedProduct build(const PointSeq& seq, int M, int skip_index = -1);
    SignedLogComplex eval(const LogPoint& z) const;
    /// ||p||^2 = sum_k |c_k|^2 ||z^k||^2 (monomials are orthogonal under any
    /// radial weight); log value via the moment table.
    double norm2_log(const MomentTable& table) const;
};

/// Exact Euclidean distance to the realized sequence, as a log; computed by
/// branch-and-bound over the sorted moduli (only a window can matter).
double dist_to_seq_log(const LogPoint& z, const PointSeq& seq);
/// Index attaining that distance.
int nearest_index(const LogPoint& z, const PointSeq& seq);

struct EnvelopeSample {
    LogPoint z;
    double log_g = 0.0;
    double dist_log = 0.0;
    double excess = 0.0;  // log|G| - phi - log dist + (3/2) log(1+|z|)
    double slack = 0.0;   // (Delta_N + eps) log(1+|z|)
};

struct EnvelopeReport {
    std::vector<EnvelopeSample> samples;
    int skipped = 0;  // grid points that landed on the sequence
    double sup_excess = 0.0, inf_excess = 0.0;
    double sup_excess_minus_slack = 0.0;
    double inf_excess_plus_slack = 0.0;
    /// Single constant C with excess in [-slack - C, slack + C] on the grid.
    double observed_constant = 0.0;
};

EnvelopeReport envelope_sweep(const PointSeq& seq, double delta_n_value, double eps,
                              std::span<const LogPoint> grid, int M);

struct IntegralTestReport {
    std::vector<double> partial_log;  // log of partial sums of |gamma_n|^{1-alpha}
    bool converged = false;
    int converged_at = -1;  // first index with term < 1e-15 x running total
};
IntegralTestReport integral_test_partial(const PointSeq& seq, double alpha, int K);

/// Biorthogonal function g_n(z) = ||k_{gamma_n}|| q_n(z)/q_n(gamma_n) with
/// q_n the product skipping index n; the removable factor is handled
/// analytically.
SignedLogComplex biorthogonal_g(const PointSeq& seq, int n, int M, const LogPoint& z,
                                const MomentTable& table, double rel_tol = 1e-12);

/// log ||g_n||^2 via the coefficient expansion of q_n and the moment table.
double biorthogonal_g_norm_log(const PointSeq& seq, int n, int M,
                               const MomentTable& table, double rel_tol = 1e-12);

/// <g_n, normalized kernel at gamma_m> = g_n(gamma_m)/||k_{gamma_m}||,
/// evaluated through the coefficient path (independent of the factor path).
SignedLogComplex biorthogonal_pairing(const PointSeq& seq, int n, int m, int M,
                                      const MomentTable& table, double rel_tol = 1e-12);

/// H_a(z) = sum_j a_j g_{gamma_j}(z) for finitely supported coefficients.
SignedLogComplex lagrange_h(const PointSeq& seq, std::span<const std::complex<double>> a,
                            int M, const LogPoint& z, const MomentTable& table,
                            double rel_tol = 1e-12);

/// L_v(z) = sum over nodes {gamma_*} u first M points of
/// v F(z)/(F'(node)(z - node)), F(z) = (1 - z/gamma_*) G(z).
/// values[0] belongs to gamma_*, values[1 + k] to point k.
SignedLogComplex uniform_interp_l(const PointSeq& seq, int M, const LogPoint& gamma_star,
                                  std::span<const SignedLogComplex> values,
                                  const LogPoint& z);

/// One matrix diagnostic entry.  log_literal is the entry as written
/// (log magnitude; -inf at structural zeros).  log_envelope is the
/// scale-free profile: the factor vanishing at the evaluation point is
/// removed and the distance ratio dist/(point gap) is replaced by its
/// generic unit |z|, which is what the decay displays describe.
struct MatrixEntryLog {
    double log_literal = 0.0;
    double log_envelope = 0.0;
    bool exact_zero = false;
};

/// A_{n,m} = |G_Gamma(lambda_m)| / (|G'_Gamma(gamma_n)| |lambda_m - gamma_n|)
///           x ||k_{gamma_n}|| / ||k_{lambda_m}||.
MatrixEntryLog matrix_entry_a(const PointSeq& gamma, const PointSeq& lambda, int n,
                              int m, int M, const MomentTable& table,
                              double rel_tol = 1e-12);

/// C_{n,m} = ||k_{lambda_n}|| / ||k_{gamma_m}||
///           x |G_Lambda(gamma_m)| / (|G'_Lambda(lambda_n)| |lambda_n - gamma_m|).
MatrixEntryLog matrix_entry_c(const PointSeq& gamma, const PointSeq& lambda, int n,
                              int m, int M, const MomentTable& table,
                              double rel_tol = 1e-12);

/// B_{n,m} = e^{phi(gamma_n) - phi(lambda_m)}
///           x |F_Gamma(lambda_m)| / (|F'_Gamma(gamma_n)| |lambda_m - gamma_n|),
/// F = (1 - z/gamma_*) G_Gamma.
MatrixEntryLog matrix_entry_b(const PointSeq& gamma, const PointSeq& lambda,
                              const LogPoint& gamma_star, int n, int m, int M,
                              const MomentTable& table, double rel_tol = 1e-12);

/// Schur operator-norm bound sqrt(max row sum x max column sum) over a
/// rectangular block of entry magnitudes given as logs.
double schur_bound_log(const std::vector<std::vector<double>>& log_entries);

}  // namespace focklab
