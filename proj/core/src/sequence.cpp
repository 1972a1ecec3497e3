#include "focklab/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace focklab {

double log_euclid_dist(const LogPoint& a, const LogPoint& b) {
    const double hi = std::max(a.u, b.u);
    const double du = std::fabs(a.u - b.u);
    const double r = std::exp(-du);
    const double one_minus_r = -std::expm1(-du);
    const double sin_half = std::sin(0.5 * (a.theta - b.theta));
    const double mag2 = one_minus_r * one_minus_r + 4.0 * r * sin_half * sin_half;
    if (mag2 == 0.0) return -std::numeric_limits<double>::infinity();
    return hi + 0.5 * std::log(mag2);
}

double lambda_log_modulus(int n, const WeightParams& p) {
    if (n < 0) throw std::invalid_argument("lambda_log_modulus: n must be >= 0");
    return std::pow((1.0 + n) / (1.0 + p.beta), 1.0 / p.beta);
}

double sigma_log_modulus(int n, const WeightParams& p) {
    if (n < 2) throw std::invalid_argument("sigma_log_modulus: defined for n >= 2");
    return std::pow((n + 0.5) / (1.0 + p.beta), 1.0 / p.beta);
}

void SequenceSpec::validate() const {
    p.validate();
    if (deltas.size() != thetas.size())
        throw std::invalid_argument("SequenceSpec: deltas and thetas length mismatch");
    if (deltas.empty()) throw std::invalid_argument("SequenceSpec: count must be positive");
    for (double d : deltas)
        if (!std::isfinite(d))
            throw std::invalid_argument("SequenceSpec: non-finite delta");
    for (double t : thetas)
        if (!std::isfinite(t))
            throw std::invalid_argument("SequenceSpec: non-finite theta");
}

SequenceSpec SequenceSpec::reference(int count, const WeightParams& p) {
    SequenceSpec s;
    s.p = p;
    s.deltas.assign(static_cast<size_t>(count), 0.0);
    s.thetas.assign(static_cast<size_t>(count), 0.0);
    return s;
}

PointSeq realize(const SequenceSpec& spec) {
    spec.validate();
    const int n = spec.count();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) u[i] = lambda_log_modulus(i, spec.p) + spec.deltas[i];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return u[a] < u[b]; });
    PointSeq seq;
    seq.order = order;
    seq.provenance = spec;
    seq.points.reserve(static_cast<size_t>(n));
    for (int i : order) seq.points.push_back({u[i], spec.thetas[i]});
    return seq;
}

double d_metric(const std::complex<double>& z, const std::complex<double>& w) {
    return std::abs(z - w) / (1.0 + std::min(std::abs(z), std::abs(w)));
}

double d_metric_log(const LogPoint& a, const LogPoint& b) {
    return log_euclid_dist(a, b) - log1p_exp(std::min(a.u, b.u));
}

SeparationResult is_d_separated(const PointSeq& seq, double d_min) {
    SeparationResult out;
    const int n = seq.size();
    if (n < 2) {
        out.separated = true;
        out.inf_d = std::numeric_limits<double>::infinity();
        out.inf_d_log = std::numeric_limits<double>::infinity();
        return out;
    }
    double best = std::numeric_limits<double>::infinity();
    std::pair<int, int> best_pair{0, 1};
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // Moduli alone force d >= e^{min u}(e^{du}-1)/(1+e^{min u}).
            const double du = seq[j].u - seq[i].u;
            const double floor_log =
                seq[i].u + std::log(std::expm1(std::max(du, 0.0))) - log1p_exp(seq[i].u);
            if (floor_log >= best) break;  // the floor only grows with j
            const double d = d_metric_log(seq[i], seq[j]);
            if (d < best) {
                best = d;
                best_pair = {i, j};
            }
        }
    }
    out.inf_d_log = best;
    out.inf_d = std::exp(best);
    out.witness = best_pair;
    out.separated = best >= std::log(d_min);
    return out;
}

LogSeparation log_separation(const PointSeq& seq, double gap) {
    LogSeparation out;
    const int n = seq.size();
    out.inf_gap = std::numeric_limits<double>::infinity();
    if (n == 0) return out;
    for (int i = 0; i + 1 < n; ++i)
        out.inf_gap = std::min(out.inf_gap, seq[i + 1].u - seq[i].u);
    std::vector<double> last_u;  // greedy round-robin: first bin that fits
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (double& lu : last_u) {
            if (seq[i].u - lu >= gap) {
                lu = seq[i].u;
                placed = true;
                break;
            }
        }
        if (!placed) last_u.push_back(seq[i].u);
    }
    out.union_count = static_cast<int>(last_u.size());
    return out;
}

}  // namespace focklab
