#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "focklab/sequence.hpp"
#include "focklab/weight.hpp"

namespace focklab {

/// max over n <= horizon of |delta_n| / (1+n)^{1/beta - 1}  (condition (2)).
double cond2_sup(std::span<const double> deltas, const WeightParams& p, int horizon);

/// max over window starts n in [n_min-1, n_max-N] of
/// |sum_{k=n+1}^{n+N} delta_k| / ((1+n+N)^{1/beta} - (1+n)^{1/beta}).
/// Burn-in n_min is the smallest delta index any window may read.
/// Windows are summed afresh per n, so earlier deltas can never leak in.
double delta_n_window(std::span<const double> deltas, const WeightParams& p, int N,
                      int n_min, int n_max);

/// Same maximand with denominator u_{n+N} - u_n; identically
/// (1+beta)^{1/beta} x delta_n_window with the same maximizing index.
double delta_n_window_u_form(std::span<const double> deltas, const WeightParams& p,
                             int N, int n_min, int n_max);

/// Thresholds: raw form 1/(2(1+beta)^{1/beta}); u-form 1/2;
/// N=1 modulus form 1/(2 beta (1+beta)^{1/beta}).
double delta_n_threshold(const WeightParams& p);
inline double delta_n_u_threshold() { return 0.5; }
double kadets_threshold(const WeightParams& p);

enum class Verdict { satisfies, violates, inconclusive };
const char* to_string(Verdict v);

struct KadetsResult {
    double sup = 0.0;
    double threshold = 0.0;
    Verdict verdict = Verdict::inconclusive;
};
/// sup_{1 <= n <= horizon} |delta_n| / n^{1/beta-1} against the N=1 constant.
KadetsResult kadets_check(std::span<const double> deltas, const WeightParams& p,
                          int horizon, double resolution = 1e-9);

/// Replaces deltas[0..prefix.size()) by `prefix` and reports whether the
/// u-form window maximum with the given burn-in is bit-identical.
/// Requires prefix.size() <= burn_in.
bool limsup_stability(std::span<const double> deltas, const WeightParams& p, int N,
                      int burn_in, int n_max, std::span<const double> prefix);

struct Cond1Report {
    bool separated = false;
    double inf_d = 0.0;
    std::optional<std::pair<int, int>> witness;
};

struct Cond2Report {
    double sup = 0.0;
    bool tail_nonincreasing = false;  // certification rule for boundedness
};

struct Cond3Entry {
    int N = 0;
    double value = 0.0;      // u-form window maximum over the burn-in horizon
    double threshold = 0.5;  // u-form threshold
    double margin = 0.0;     // threshold - value
};

struct CriterionReport {
    Verdict verdict = Verdict::inconclusive;
    int violated_condition = 0;  // 1..3 when verdict == violates
    std::string reason;
    Cond1Report cond1;
    Cond2Report cond2;
    std::vector<Cond3Entry> cond3;
    int best_N = 0;
    int burn_in = 0;
    int horizon = 0;
    double d_min = 0.0;
    double resolution = 0.0;
};

/// Theorem-style verdict at a finite horizon.  Values within `resolution` of
/// a threshold, or an uncertified condition (2), yield `inconclusive` rather
/// than a sign-of-rounding answer.  burn_in < 0 means horizon/4.
CriterionReport theorem_verdict(const SequenceSpec& spec, double d_min, int N_max,
                                int horizon, int burn_in = -1,
                                double resolution = 1e-9);

}  // namespace focklab
