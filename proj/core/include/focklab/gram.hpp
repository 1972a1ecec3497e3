#pragma once

#include <span>
#include <vector>

#include "focklab/hermitian.hpp"
#include "focklab/kernel.hpp"
#include "focklab/sequence.hpp"

namespace focklab {

/// Finite section of the Gram matrix of normalized kernels with its extreme
/// eigenvalues.  Unit diagonal; positive semidefinite up to solver tolerance.
struct GramSection {
    int size = 0;
    HermitianMatrix matrix{1};
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double cond = 0.0;  // lambda_max / lambda_min, +inf when min <= 0
};

/// Entries below 1e-300 in magnitude are flushed to exact zero (entries are
/// <= 1; only extreme off-diagonal decay gets there).
GramSection build_gram(const PointSeq& seq, int M, const MomentTable& table,
                       double rel_tol = 1e-12, int jobs = 1);

enum class FrameTrend { stable, degenerating_min, exploding_max };
const char* to_string(FrameTrend t);

struct FrameSweepRow {
    int size = 0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double cond = 0.0;
};

struct FrameSweepReport {
    std::vector<FrameSweepRow> rows;
    FrameTrend trend = FrameTrend::stable;
};

/// Gram bounds across section sizes.  degenerating-min fires when lambda_min
/// shrinks by >= factor 2 across two consecutive size steps anywhere in the
/// sweep, or when the largest section is numerically singular (<= 1e-13);
/// exploding-max is the mirror rule on lambda_max.
FrameSweepReport frame_sweep(const SequenceSpec& spec, std::span<const int> sizes,
                             const MomentTable& table, double rel_tol = 1e-12,
                             int jobs = 1);

struct BariRow {
    int n = 0;
    double j1 = 0.0;      // (1 - |e_n(lambda_n)| / ||k||)^2
    double j2 = 0.0;      // sum_{k != n} |e_k(lambda_n)|^2 / ||k||^2
    double defect = 0.0;  // j1 + j2
    double partial_sum = 0.0;
};

struct BariReport {
    std::vector<BariRow> rows;
    int k_window = 0;       // half-width of the k-sum window actually used
    double tail_estimate = 0.0;
};

/// Per-n Bari defect terms for the reference sequence, with the k-sum
/// truncated by the Gaussian decay guide
/// exp(-2 (1+beta)^{-(1+beta)/beta} |k-n|^2 (1+n)^{1/beta-1}).
/// window_mult scales the window for truncation-insensitivity checks.
BariReport bari_defect(const WeightParams& p, const MomentTable& table, int n_lo,
                       int n_hi, double rel_tol = 1e-12, int window_mult = 1);

}  // namespace focklab
