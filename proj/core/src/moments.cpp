#include "focklab/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "focklab/quadrature.hpp"
#include "focklab/slog.hpp"

namespace focklab {

double moment_peak_hint(int n, const WeightParams& p) {
    // argmax of (2n+2)t - 2t^{1+beta}: t* = ((n+1)/(1+beta))^{1/beta}.
    return std::pow((n + 1.0) / (1.0 + p.beta), 1.0 / p.beta);
}

double moment_log_exact(int n, const WeightParams& p, double rel_tol) {
    if (n < 0) throw std::invalid_argument("moment_log_exact: n must be >= 0");
    p.validate();
    const double a = 2.0 * n + 2.0;
    const double expo = 1.0 + p.beta;
    const auto log_f = [a, expo](double t) {
        return a * t - 2.0 * std::pow(t, expo);
    };
    const double quad = adaptive_quad_log(log_f, moment_peak_hint(n, p), rel_tol,
                                          "radial moment n=" + std::to_string(n));
    const double disk = -std::log(a);  // int_0^1 r^{2n+1} dr = 1/(2n+2)
    return std::log(2.0 * M_PI) + log_add_exp(disk, quad);
}

double moment_log_asymptotic(int n, const WeightParams& p) {
    if (n < 0) throw std::invalid_argument("moment_log_asymptotic: n must be >= 0");
    p.validate();
    const double base = (1.0 + n) / (1.0 + p.beta);
    return (1.0 - p.beta) / (2.0 * p.beta) * std::log(base) +
           2.0 * p.beta * std::pow(base, (1.0 + p.beta) / p.beta);
}

MomentTable MomentTable::build(int n_max, const WeightParams& p, double rel_tol) {
    if (n_max < 0) throw std::invalid_argument("MomentTable: n_max must be >= 0");
    p.validate();
    std::vector<double> w(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) w[n] = moment_log_exact(n, p, rel_tol);
    return MomentTable(p, rel_tol, std::move(w));
}

void MomentTable::require(int n) const {
    if (n >= size())
        throw std::out_of_range("MomentTable covers n < " + std::to_string(size()) +
                                " but index " + std::to_string(n) +
                                " is needed; rebuild with a larger n_max");
}

}  // namespace focklab
