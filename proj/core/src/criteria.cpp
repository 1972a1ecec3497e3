#include "focklab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace focklab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfies: return "satisfies";
        case Verdict::violates: return "violates";
        default: return "inconclusive";
    }
}

double cond2_sup(std::span<const double> deltas, const WeightParams& p, int horizon) {
    p.validate();
    if (horizon < 0 || horizon >= static_cast<int>(deltas.size()))
        throw std::out_of_range("cond2_sup: horizon outside delta array");
    const double e = 1.0 / p.beta - 1.0;
    double sup = 0.0;
    for (int n = 0; n <= horizon; ++n)
        sup = std::max(sup, std::fabs(deltas[n]) / std::pow(1.0 + n, e));
    return sup;
}

namespace {

template <typename DenomFn>
double window_max(std::span<const double> deltas, int N, int n_min, int n_max,
                  const DenomFn& denom) {
    if (N < 1) throw std::invalid_argument("window maximum: N must be >= 1");
    if (n_max >= static_cast<int>(deltas.size()))
        throw std::out_of_range("window maximum: n_max outside delta array");
    const int first = std::max(0, n_min - 1);
    if (first + N > n_max)
        throw std::invalid_argument("window maximum: empty window range");
    double best = 0.0;
    for (int n = first; n + N <= n_max; ++n) {
        double sum = 0.0;
        for (int k = n + 1; k <= n + N; ++k) sum += deltas[k];
        best = std::max(best, std::fabs(sum) / denom(n));
    }
    return best;
}

}  // namespace

double delta_n_window(std::span<const double> deltas, const WeightParams& p, int N,
                      int n_min, int n_max) {
    p.validate();
    const double inv_beta = 1.0 / p.beta;
    return window_max(deltas, N, n_min, n_max, [&](int n) {
        return std::pow(1.0 + n + N, inv_beta) - std::pow(1.0 + n, inv_beta);
    });
}

double delta_n_window_u_form(std::span<const double> deltas, const WeightParams& p,
                             int N, int n_min, int n_max) {
    p.validate();
    return window_max(deltas, N, n_min, n_max, [&](int n) {
        return lambda_log_modulus(n + N, p) - lambda_log_modulus(n, p);
    });
}

double delta_n_threshold(const WeightParams& p) {
    return 0.5 / std::pow(1.0 + p.beta, 1.0 / p.beta);
}

double kadets_threshold(const WeightParams& p) {
    return 0.5 / (p.beta * std::pow(1.0 + p.beta, 1.0 / p.beta));
}

KadetsResult kadets_check(std::span<const double> deltas, const WeightParams& p,
                          int horizon, double resolution) {
    p.validate();
    if (horizon < 1 || horizon >= static_cast<int>(deltas.size()))
        throw std::out_of_range("kadets_check: horizon outside delta array");
    const double e = 1.0 / p.beta - 1.0;
    KadetsResult r;
    r.threshold = kadets_threshold(p);
    for (int n = 1; n <= horizon; ++n)
        r.sup = std::max(r.sup, std::fabs(deltas[n]) / std::pow(n, e));
    if (r.sup < r.threshold - resolution)
        r.verdict = Verdict::satisfies;
    else if (r.sup > r.threshold + resolution)
        r.verdict = Verdict::violates;
    else
        r.verdict = Verdict::inconclusive;
    return r;
}

bool limsup_stability(std::span<const double> deltas, const WeightParams& p, int N,
                      int burn_in, int n_max, std::span<const double> prefix) {
    if (static_cast<int>(prefix.size()) > burn_in)
        throw std::invalid_argument(
            "limsup_stability: modified prefix must end before the burn-in");
    const double base = delta_n_window_u_form(deltas, p, N, burn_in, n_max);
    std::vector<double> mod(deltas.begin(), deltas.end());
    std::copy(prefix.begin(), prefix.end(), mod.begin());
    const double bent = delta_n_window_u_form(mod, p, N, burn_in, n_max);
    return base == bent;  // bit-identical, not approximately equal
}

CriterionReport theorem_verdict(const SequenceSpec& spec, double d_min, int N_max,
                                int horizon, int burn_in, double resolution) {
    spec.validate();
    if (horizon >= spec.count())
        throw std::out_of_range("theorem_verdict: horizon outside the sequence spec");
    if (burn_in < 0) burn_in = horizon / 4;

    CriterionReport rep;
    rep.burn_in = burn_in;
    rep.horizon = horizon;
    rep.d_min = d_min;
    rep.resolution = resolution;

    const PointSeq seq = realize(spec);
    const auto sep = is_d_separated(seq, d_min);
    rep.cond1 = {sep.separated, sep.inf_d, sep.witness};

    rep.cond2.sup = cond2_sup(spec.deltas, spec.p, horizon);
    {
        // Boundedness is not finitely decidable; certify only when the ratio
        // trend over the last half-horizon is non-increasing.
        const double e = 1.0 / spec.p.beta - 1.0;
        auto quarter_max = [&](int lo, int hi) {
            double m = 0.0;
            for (int n = lo; n <= hi; ++n)
                m = std::max(m, std::fabs(spec.deltas[n]) / std::pow(1.0 + n, e));
            return m;
        };
        const int h2 = horizon / 2, h3 = (3 * horizon) / 4;
        const double q3 = quarter_max(h2, h3);
        const double q4 = quarter_max(std::min(h3 + 1, horizon), horizon);
        rep.cond2.tail_nonincreasing = q4 <= q3 * (1.0 + 1e-12) + 1e-300;
    }

    double best_margin = -std::numeric_limits<double>::infinity();
    for (int N = 1; N <= N_max; ++N) {
        if (std::max(0, burn_in - 1) + N > horizon) break;
        Cond3Entry ent;
        ent.N = N;
        ent.value = delta_n_window_u_form(spec.deltas, spec.p, N, burn_in, horizon);
        ent.threshold = delta_n_u_threshold();
        ent.margin = ent.threshold - ent.value;
        rep.cond3.push_back(ent);
        if (ent.margin > best_margin) {
            best_margin = ent.margin;
            rep.best_N = N;
        }
    }

    if (!rep.cond1.separated) {
        rep.verdict = Verdict::violates;
        rep.violated_condition = 1;
        rep.reason = "sequence is not d-separated at the requested d_min";
        return rep;
    }
    if (rep.cond3.empty()) {
        rep.verdict = Verdict::inconclusive;
        rep.reason = "horizon too short for any condition (3) window";
        return rep;
    }
    if (std::fabs(best_margin) <= resolution) {
        rep.verdict = Verdict::inconclusive;
        rep.reason = "boundary: condition (3) within the resolution band";
        return rep;
    }
    if (best_margin < 0.0) {
        rep.verdict = Verdict::violates;
        rep.violated_condition = 3;
        rep.reason = "condition (3) exceeds 1/2 for every N up to N_max";
        return rep;
    }
    if (!rep.cond2.tail_nonincreasing) {
        rep.verdict = Verdict::inconclusive;
        rep.reason = "condition (2) boundedness not certified: ratio trend increases";
        return rep;
    }
    rep.verdict = Verdict::satisfies;
    return rep;
}

}  // namespace focklab
