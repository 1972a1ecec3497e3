#include "focklab/products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace focklab {

SignedLogComplex one_minus_ratio(const LogPoint& z, const LogPoint& pole) {
    const double du = z.u - pole.u;
    const double dth = z.theta - pole.theta;
    if (du <= 0.0) {
        const std::complex<double> w = 1.0 - std::polar(std::exp(du), dth);
        return SignedLogComplex::from_complex(w);
    }
    // (1 - z/p) = (-z/p)(1 - p/z); keeps the large ratio in log form.
    const std::complex<double> w = 1.0 - std::polar(std::exp(-du), -dth);
    return slc_mul(SignedLogComplex::from_polar_log(du, M_PI + dth),
                   SignedLogComplex::from_complex(w));
}

SignedLogComplex product_eval_log(const PointSeq& seq, int M, const LogPoint& z,
                                  int skip_index, int* zero_index) {
    if (M < 0 || M > seq.size())
        throw std::out_of_range("product_eval_log: M exceeds realized points");
    if (zero_index) *zero_index = -1;
    double log_mag = 0.0;
    double arg = 0.0;
    for (int k = 0; k < M; ++k) {
        if (k == skip_index) continue;
        const SignedLogComplex f = one_minus_ratio(z, seq[k]);
        if (f.is_zero()) {
            if (zero_index) *zero_index = k;
            return SignedLogComplex::zero();
        }
        log_mag += f.log_mag;
        arg += f.arg;
    }
    return SignedLogComplex::from_polar_log(log_mag, arg);
}

double product_tail_bound_log(const PointSeq& seq, int M, double u_z) {
    if (M < 0 || M > seq.size())
        throw std::out_of_range("product_tail_bound_log: M exceeds realized points");
    std::vector<double> terms;
    for (int k = M; k < seq.size(); ++k) terms.push_back(u_z - seq[k].u);

    // Extend past the horizon with reference moduli, shifted down by the most
    // negative realized delta so the bound stays conservative.
    const auto& deltas = seq.provenance.deltas;
    double guard = 0.0;
    for (double d : deltas) guard = std::min(guard, d);
    const WeightParams& p = seq.provenance.p;
    const int ext_from = std::max(M, seq.size());
    const int ext_count = 256;
    for (int k = ext_from; k < ext_from + ext_count; ++k)
        terms.push_back(u_z - (lambda_log_modulus(k, p) + guard));
    // Geometric closure using the final gap (gaps are increasing).
    const double last = terms.back();
    const double gap = lambda_log_modulus(ext_from + ext_count, p) -
                       lambda_log_modulus(ext_from + ext_count - 1, p);
    const double remainder = last - gap - std::log(-std::expm1(-gap));
    terms.push_back(remainder);
    return log_sum_exp(terms);
}

int choose_truncation(const PointSeq& seq, double u_max, double tail_tol) {
    const double cut = std::log(tail_tol);
    for (int m = 1; m <= seq.size(); ++m)
        if (product_tail_bound_log(seq, m, u_max) < cut) return m;
    throw std::runtime_error(
        "choose_truncation: realized sequence too short for tail tolerance at "
        "log-modulus " +
        std::to_string(u_max));
}

TruncatedProduct TruncatedProduct::build(const PointSeq& seq, int M, int skip_index) {
    if (M < 0 || M > seq.size())
        throw std::out_of_range("TruncatedProduct: M exceeds realized points");
    TruncatedProduct tp;
    tp.M = M;
    tp.skip_index = skip_index;
    tp.coeffs.assign(1, SignedLogComplex::one());
    for (int k = 0; k < M; ++k) {
        if (k == skip_index) continue;
        // multiply by (1 - z/gamma_k): convolution with [1, -1/gamma_k]
        const SignedLogComplex f =
            SignedLogComplex::from_polar_log(-seq[k].u, M_PI - seq[k].theta);
        tp.coeffs.push_back(SignedLogComplex::zero());
        for (size_t j = tp.coeffs.size() - 1; j >= 1; --j)
            tp.coeffs[j] = slc_add(tp.coeffs[j], slc_mul(f, tp.coeffs[j - 1]));
    }
    return tp;
}

SignedLogComplex TruncatedProduct::eval(const LogPoint& z) const {
    SignedLogComplex acc = SignedLogComplex::zero();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        const auto zk = SignedLogComplex::from_polar_log(
            static_cast<double>(k) * z.u, static_cast<double>(k) * z.theta);
        acc = slc_add(acc, slc_mul(coeffs[k], zk));
    }
    return acc;
}

double TruncatedProduct::norm2_log(const MomentTable& table) const {
    table.require(static_cast<int>(coeffs.size()) - 1);
    std::vector<double> terms;
    terms.reserve(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        terms.push_back(2.0 * coeffs[k].log_mag + table[static_cast<int>(k)]);
    }
    return log_sum_exp(terms);
}

namespace {

int nearest_scan(const LogPoint& z, const PointSeq& seq, double& best_log) {
    const int n = seq.size();
    int pos = static_cast<int>(std::lower_bound(seq.points.begin(), seq.points.end(),
                                                z.u,
                                                [](const LogPoint& a, double u) {
                                                    return a.u < u;
                                                }) -
                               seq.points.begin());
    best_log = std::numeric_limits<double>::infinity();
    int best_i = -1;
    auto visit = [&](int i) {
        const double d = log_euclid_dist(z, seq[i]);
        if (d < best_log) {
            best_log = d;
            best_i = i;
        }
    };
    // The modulus gap alone bounds the distance from below; expand each
    // direction until that floor can no longer beat the best.
    auto floor_log = [&](int i) {
        const double du = std::fabs(z.u - seq[i].u);
        if (du == 0.0) return -std::numeric_limits<double>::infinity();
        return std::max(z.u, seq[i].u) + std::log(-std::expm1(-du));
    };
    for (int i = pos; i < n; ++i) {
        if (floor_log(i) >= best_log) break;
        visit(i);
    }
    for (int i = pos - 1; i >= 0; --i) {
        if (floor_log(i) >= best_log) break;
        visit(i);
    }
    return best_i;
}

}  // namespace

double dist_to_seq_log(const LogPoint& z, const PointSeq& seq) {
    if (seq.size() == 0)
        throw std::invalid_argument("dist_to_seq_log: empty sequence");
    double best = 0.0;
    nearest_scan(z, seq, best);
    return best;
}

int nearest_index(const LogPoint& z, const PointSeq& seq) {
    if (seq.size() == 0)
        throw std::invalid_argument("nearest_index: empty sequence");
    double best = 0.0;
    return nearest_scan(z, seq, best);
}

EnvelopeReport envelope_sweep(const PointSeq& seq, double delta_n_value, double eps,
                              std::span<const LogPoint> grid, int M) {
    EnvelopeReport rep;
    const WeightParams& p = seq.provenance.p;
    rep.sup_excess = -std::numeric_limits<double>::infinity();
    rep.inf_excess = std::numeric_limits<double>::infinity();
    rep.sup_excess_minus_slack = -std::numeric_limits<double>::infinity();
    rep.inf_excess_plus_slack = std::numeric_limits<double>::infinity();
    for (const LogPoint& z : grid) {
        const double d_log = dist_to_seq_log(z, seq);
        if (d_log == -std::numeric_limits<double>::infinity()) {
            ++rep.skipped;
            continue;
        }
        EnvelopeSample s;
        s.z = z;
        s.log_g = product_eval_log(seq, M, z).log_mag;
        s.dist_log = d_log;
        const double log1pz = log1p_exp(z.u);
        s.excess = s.log_g - phi_from_log(z.u, p) - d_log + 1.5 * log1pz;
        s.slack = (delta_n_value + eps) * log1pz;
        rep.sup_excess = std::max(rep.sup_excess, s.excess);
        rep.inf_excess = std::min(rep.inf_excess, s.excess);
        rep.sup_excess_minus_slack = std::max(rep.sup_excess_minus_slack, s.excess - s.slack);
        rep.inf_excess_plus_slack = std::min(rep.inf_excess_plus_slack, s.excess + s.slack);
        rep.samples.push_back(s);
    }
    if (!rep.samples.empty())
        rep.observed_constant =
            std::max({rep.sup_excess_minus_slack, -rep.inf_excess_plus_slack, 0.0});
    return rep;
}

IntegralTestReport integral_test_partial(const PointSeq& seq, double alpha, int K) {
    if (K < 0 || K > seq.size())
        throw std::out_of_range("integral_test_partial: K exceeds realized points");
    IntegralTestReport rep;
    double total = kNegInf;
    for (int n = 0; n < K; ++n) {
        const double term = (1.0 - alpha) * seq[n].u;
        total = log_add_exp(total, term);
        rep.partial_log.push_back(total);
        if (!rep.converged && n > 0 && term < total + std::log(1e-15)) {
            rep.converged = true;
            rep.converged_at = n;
        }
    }
    return rep;
}

SignedLogComplex biorthogonal_g(const PointSeq& seq, int n, int M, const LogPoint& z,
                                const MomentTable& table, double rel_tol) {
    if (n < 0 || n >= M)
        throw std::out_of_range("biorthogonal_g: index must lie inside the truncation");
    const double l_n = kernel_diag_log(seq[n].u, seq.provenance.p, table, rel_tol);
    const SignedLogComplex q_z = product_eval_log(seq, M, z, n);
    const SignedLogComplex q_g = product_eval_log(seq, M, seq[n], n);
    return slc_scale(slc_div(q_z, q_g), 0.5 * l_n);
}

double biorthogonal_g_norm_log(const PointSeq& seq, int n, int M,
                               const MomentTable& table, double rel_tol) {
    if (n < 0 || n >= M)
        throw std::out_of_range("biorthogonal_g_norm_log: index outside truncation");
    const double l_n = kernel_diag_log(seq[n].u, seq.provenance.p, table, rel_tol);
    const TruncatedProduct tp = TruncatedProduct::build(seq, M, n);
    const SignedLogComplex q_g = product_eval_log(seq, M, seq[n], n);
    return l_n + tp.norm2_log(table) - 2.0 * q_g.log_mag;
}

SignedLogComplex biorthogonal_pairing(const PointSeq& seq, int n, int m, int M,
                                      const MomentTable& table, double rel_tol) {
    const double l_n = kernel_diag_log(seq[n].u, seq.provenance.p, table, rel_tol);
    const double l_m = kernel_diag_log(seq[m].u, seq.provenance.p, table, rel_tol);
    const TruncatedProduct tp = TruncatedProduct::build(seq, M, n);
    const SignedLogComplex p_val = tp.eval(seq[m]);
    const SignedLogComplex q_g = product_eval_log(seq, M, seq[n], n);
    return slc_scale(slc_div(p_val, q_g), 0.5 * (l_n - l_m));
}

SignedLogComplex lagrange_h(const PointSeq& seq, std::span<const std::complex<double>> a,
                            int M, const LogPoint& z, const MomentTable& table,
                            double rel_tol) {
    if (static_cast<int>(a.size()) > M)
        throw std::out_of_range("lagrange_h: coefficients extend past the truncation");
    SignedLogComplex acc = SignedLogComplex::zero();
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j] == std::complex<double>(0.0, 0.0)) continue;
        const auto g = biorthogonal_g(seq, static_cast<int>(j), M, z, table, rel_tol);
        acc = slc_add(acc, slc_mul(SignedLogComplex::from_complex(a[j]), g));
    }
    return acc;
}

SignedLogComplex uniform_interp_l(const PointSeq& seq, int M, const LogPoint& gamma_star,
                                  std::span<const SignedLogComplex> values,
                                  const LogPoint& z) {
    if (M < 1 || M > seq.size())
        throw std::out_of_range("uniform_interp_l: M exceeds realized points");
    if (static_cast<int>(values.size()) != M + 1)
        throw std::invalid_argument("uniform_interp_l: need one value per node "
                                    "(gamma_star first)");
    for (int k = 0; k < M; ++k)
        if (seq[k] == gamma_star)
            throw std::invalid_argument("uniform_interp_l: gamma_star collides with a node");

    SignedLogComplex acc = SignedLogComplex::zero();
    // Star node: F(z)/(F'(gamma_*)(z - gamma_*)) = G(z)/G(gamma_*).
    if (!values[0].is_zero()) {
        const auto card = slc_div(product_eval_log(seq, M, z),
                                  product_eval_log(seq, M, gamma_star));
        acc = slc_add(acc, slc_mul(values[0], card));
    }
    // Regular nodes: [(1 - z/gamma_*) q_k(z)] / [(1 - gamma_k/gamma_*) q_k(gamma_k)].
    const SignedLogComplex star_z = one_minus_ratio(z, gamma_star);
    for (int k = 0; k < M; ++k) {
        if (values[k + 1].is_zero()) continue;
        const SignedLogComplex star_k = one_minus_ratio(seq[k], gamma_star);
        const auto num = slc_mul(star_z, product_eval_log(seq, M, z, k));
        const auto den = slc_mul(star_k, product_eval_log(seq, M, seq[k], k));
        acc = slc_add(acc, slc_mul(values[k + 1], slc_div(num, den)));
    }
    return acc;
}

namespace {

// Shared core of the A/C/B diagnostics:
// |G_zeros(point)| / (|G'_zeros(zeros[n])| |point - zeros[n]|) x e^{extra}.
// The envelope drops the factor nearest to `point` and replaces the distance
// ratio by its generic unit |point|.
MatrixEntryLog entry_core(const PointSeq& zeros, int n, const LogPoint& point, int M,
                          double extra_log) {
    if (n < 0 || n >= M)
        throw std::out_of_range("matrix entry: row index outside truncation");
    MatrixEntryLog out;
    const double gprime_log =
        -zeros[n].u + product_eval_log(zeros, M, zeros[n], n).log_mag;
    const int j_star = nearest_index(point, zeros);
    const double gap_log = log_euclid_dist(point, zeros[n]);

    int zero_at = -1;
    const double g_log = product_eval_log(zeros, M, point, -1, &zero_at).log_mag;

    const bool coincides_n = (gap_log == -std::numeric_limits<double>::infinity());
    if (coincides_n) {
        // Removable singularity: G(z)/(z - zeros[n]) -> -q_n(zeros[n])/zeros[n].
        out.log_literal = extra_log;  // q_n(point)/q_n(zeros[n]) == 1 at the node
        out.log_envelope = out.log_literal;
        return out;
    }
    out.exact_zero = (zero_at >= 0);
    out.log_literal = g_log - gprime_log - gap_log + extra_log;

    if (j_star == n) {
        const double q_log = product_eval_log(zeros, M, point, n).log_mag;
        out.log_envelope = q_log - zeros[n].u - gprime_log + extra_log;
    } else {
        const double q_log =
            (j_star < M) ? product_eval_log(zeros, M, point, j_star).log_mag : g_log;
        const double drop = (j_star < M) ? point.u - zeros[j_star].u : 0.0;
        out.log_envelope = q_log + drop - gprime_log - gap_log + extra_log;
    }
    return out;
}

}  // namespace

MatrixEntryLog matrix_entry_a(const PointSeq& gamma, const PointSeq& lambda, int n,
                              int m, int M, const MomentTable& table, double rel_tol) {
    const WeightParams& p = gamma.provenance.p;
    const double l_gamma = kernel_diag_log(gamma[n].u, p, table, rel_tol);
    const double l_lambda = kernel_diag_log(lambda[m].u, p, table, rel_tol);
    return entry_core(gamma, n, lambda[m], M, 0.5 * (l_gamma - l_lambda));
}

MatrixEntryLog matrix_entry_c(const PointSeq& gamma, const PointSeq& lambda, int n,
                              int m, int M, const MomentTable& table, double rel_tol) {
    const WeightParams& p = lambda.provenance.p;
    const double l_lambda = kernel_diag_log(lambda[n].u, p, table, rel_tol);
    const double l_gamma = kernel_diag_log(gamma[m].u, p, table, rel_tol);
    return entry_core(lambda, n, gamma[m], M, 0.5 * (l_lambda - l_gamma));
}

MatrixEntryLog matrix_entry_b(const PointSeq& gamma, const PointSeq& lambda,
                              const LogPoint& gamma_star, int n, int m, int M,
                              const MomentTable& table, double rel_tol) {
    (void)table;
    (void)rel_tol;
    const WeightParams& p = gamma.provenance.p;
    const double star_ratio = one_minus_ratio(lambda[m], gamma_star).log_mag -
                              one_minus_ratio(gamma[n], gamma_star).log_mag;
    const double extra =
        phi_from_log(gamma[n].u, p) - phi_from_log(lambda[m].u, p) + star_ratio;
    return entry_core(gamma, n, lambda[m], M, extra);
}

double schur_bound_log(const std::vector<std::vector<double>>& log_entries) {
    if (log_entries.empty()) return kNegInf;
    double max_row = kNegInf;
    for (const auto& row : log_entries) max_row = std::max(max_row, log_sum_exp(row));
    const size_t cols = log_entries.front().size();
    double max_col = kNegInf;
    for (size_t j = 0; j < cols; ++j) {
        std::vector<double> col;
        col.reserve(log_entries.size());
        for (const auto& row : log_entries) col.push_back(row.at(j));
        max_col = std::max(max_col, log_sum_exp(col));
    }
    return 0.5 * (max_row + max_col);
}

}  // namespace focklab
