#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "focklab/points.hpp"
#include "focklab/weight.hpp"

namespace focklab {

/// u_n = log|lambda_n| = ((1+n)/(1+beta))^{1/beta}, the reference sequence.
double lambda_log_modulus(int n, const WeightParams& p);

/// log|sigma_n| = ((n+1/2)/(1+beta))^{1/beta}, n >= 2; interlaces strictly
/// between u_{n-1} and u_n.
double sigma_log_modulus(int n, const WeightParams& p);

/// Generator description of a perturbed sequence: gamma_n has log-modulus
/// lambda_log_modulus(n) + deltas[n] and angle thetas[n].
struct SequenceSpec {
    WeightParams p;
    std::vector<double> deltas;
    std::vector<double> thetas;

    int count() const { return static_cast<int>(deltas.size()); }
    void validate() const;

    static SequenceSpec reference(int count, const WeightParams& p);
};

/// Realized finite sequence, sorted by log-modulus.  order[i] is the spec
/// index that landed at sorted position i, so reports can keep deltas in
/// the modulus-ordered convention.
struct PointSeq {
    std::vector<LogPoint> points;
    std::vector<int> order;
    SequenceSpec provenance;

    int size() const { return static_cast<int>(points.size()); }
    const LogPoint& operator[](int i) const { return points[static_cast<size_t>(i)]; }
};

PointSeq realize(const SequenceSpec& spec);

/// d(z, w) = |z - w| / (1 + min(|z|, |w|)) on plain complex values.
double d_metric(const std::complex<double>& z, const std::complex<double>& w);

/// log d(z, w) in log-polar form; safe at any modulus.
double d_metric_log(const LogPoint& a, const LogPoint& b);

struct SeparationResult {
    bool separated = false;
    double inf_d = 0.0;      // exact infimum over all pairs (may overflow to +inf)
    double inf_d_log = 0.0;  // its log, always finite unless < 2 points
    std::optional<std::pair<int, int>> witness;  // pair attaining the infimum
};

/// Exact pairwise infimum of d, found by branch-and-bound over the sorted
/// moduli (pairs far apart in log-modulus are separated automatically).
SeparationResult is_d_separated(const PointSeq& seq, double d_min);

struct LogSeparation {
    double inf_gap = 0.0;  // min consecutive gap of sorted log-moduli
    int union_count = 0;   // greedy round-robin decomposition count at `gap`
};
LogSeparation log_separation(const PointSeq& seq, double gap);

}  // namespace focklab
