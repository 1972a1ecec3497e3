#include "focklab/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "focklab/slog.hpp"

namespace focklab {

const char* to_string(FrameTrend t) {
    switch (t) {
        case FrameTrend::degenerating_min: return "degenerating-min";
        case FrameTrend::exploding_max: return "exploding-max";
        default: return "stable";
    }
}

GramSection build_gram(const PointSeq& seq, int M, const MomentTable& table,
                       double rel_tol, int jobs) {
    if (M < 1 || M > seq.size())
        throw std::out_of_range("build_gram: section size exceeds realized points");
    const WeightParams& p = seq.provenance.p;

    struct Pair {
        int i, j;
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) pairs.push_back({i, j});
    std::vector<std::complex<double>> vals(pairs.size());

    auto work = [&](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; ++k) {
            auto v = kernel_offdiag_normalized(seq[pairs[k].i], seq[pairs[k].j], p,
                                               table, rel_tol);
            if (std::abs(v) < 1e-300) v = {0.0, 0.0};
            vals[k] = v;
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1 || pairs.size() < 64) {
        work(0, pairs.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (pairs.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            const size_t lo = t * chunk;
            const size_t hi = std::min(pairs.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    GramSection sec;
    sec.size = M;
    sec.matrix = HermitianMatrix(M);
    for (int i = 0; i < M; ++i) sec.matrix.set_upper(i, i, {1.0, 0.0});
    for (size_t k = 0; k < pairs.size(); ++k)
        sec.matrix.set_upper(pairs[k].i, pairs[k].j, vals[k]);

    const auto eigs = hermitian_extreme_eigs(sec.matrix);
    sec.lambda_min = eigs.min;
    sec.lambda_max = eigs.max;
    sec.cond = eigs.min > 0.0 ? eigs.max / eigs.min
                              : std::numeric_limits<double>::infinity();
    return sec;
}

FrameSweepReport frame_sweep(const SequenceSpec& spec, std::span<const int> sizes,
                             const MomentTable& table, double rel_tol, int jobs) {
    FrameSweepReport rep;
    if (sizes.empty()) return rep;
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("frame_sweep: sizes must be ascending");
    const PointSeq seq = realize(spec);
    for (int m : sizes) {
        const GramSection sec = build_gram(seq, m, table, rel_tol, jobs);
        rep.rows.push_back({m, sec.lambda_min, sec.lambda_max, sec.cond});
    }
    const size_t n = rep.rows.size();
    auto min_ratio = [&](size_t i) {
        return rep.rows[i].lambda_min / rep.rows[i - 1].lambda_min;
    };
    auto max_ratio = [&](size_t i) {
        return rep.rows[i].lambda_max / rep.rows[i - 1].lambda_max;
    };
    // A fully collapsed floor (numerically singular section) counts as
    // degeneration even when the ratios have already flattened out.
    if (rep.rows.back().lambda_min <= 1e-13) {
        rep.trend = FrameTrend::degenerating_min;
        return rep;
    }
    for (size_t i = 2; i < n; ++i) {
        if (min_ratio(i - 1) <= 0.5 && min_ratio(i) <= 0.5) {
            rep.trend = FrameTrend::degenerating_min;
            return rep;
        }
        if (max_ratio(i - 1) >= 2.0 && max_ratio(i) >= 2.0) {
            rep.trend = FrameTrend::exploding_max;
            return rep;
        }
    }
    return rep;
}

BariReport bari_defect(const WeightParams& p, const MomentTable& table, int n_lo,
                       int n_hi, double rel_tol, int window_mult) {
    if (n_lo < 0 || n_hi < n_lo)
        throw std::invalid_argument("bari_defect: bad n range");
    BariReport rep;
    const double decay_c = 2.0 * std::pow(1.0 + p.beta, -(1.0 + p.beta) / p.beta);

    double running = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double u_n = lambda_log_modulus(n, p);
        const double l_n = kernel_diag_log(u_n, p, table, rel_tol);

        // Window from the proof's Gaussian decay in |k - n|; terms beyond it
        // are below e^{-60} of the peak.
        const double rate = decay_c * std::pow(1.0 + n, 1.0 / p.beta - 1.0);
        const int w = window_mult * (10 + static_cast<int>(std::ceil(std::sqrt(60.0 / rate))));
        rep.k_window = std::max(rep.k_window, w);
        const int k_hi = n + w;
        if (k_hi >= table.size()) table.require(k_hi);

        std::vector<double> terms;
        for (int k = std::max(0, n - w); k <= k_hi; ++k) {
            if (k == n) continue;
            terms.push_back(2.0 * k * u_n - table[k] - l_n);
        }
        BariRow row;
        row.n = n;
        row.j2 = std::exp(log_sum_exp(terms));
        const double h = n * u_n - 0.5 * table[n] - 0.5 * l_n;  // <= 0
        const double one_minus = -std::expm1(h);
        row.j1 = one_minus * one_minus;
        row.defect = row.j1 + row.j2;
        running += row.defect;
        row.partial_sum = running;
        rep.rows.push_back(row);
    }

    // Tail estimate beyond n_hi: ratio-calibrated Gaussian guide.
    if (!rep.rows.empty()) {
        const auto& last = rep.rows.back();
        const double rate_hi = decay_c * std::pow(1.0 + n_hi, 1.0 / p.beta - 1.0);
        const double k_cal = last.defect / std::exp(-rate_hi);
        double tail = 0.0;
        for (int n = n_hi + 1; n <= n_hi + 400; ++n) {
            const double rate = decay_c * std::pow(1.0 + n, 1.0 / p.beta - 1.0);
            tail += k_cal * std::exp(-rate);
        }
        rep.tail_estimate = tail;
    }
    return rep;
}

}  // namespace focklab
