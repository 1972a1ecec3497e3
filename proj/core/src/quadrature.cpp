#include "focklab/quadrature.hpp"

#include <array>
#include <limits>
#include <cmath>
#include <stdexcept>
#include <string>

#include "focklab/slog.hpp"

namespace focklab {
namespace {

// 15-point Gauss-Legendre rule on [-1, 1], nodes paired by symmetry.
constexpr std::array<double, 8> kGlNode = {
    0.0000000000000000, 0.2011940939974345, 0.3941513470775634,
    0.5709721726085388, 0.7244177313601701, 0.8482065834104272,
    0.9372733924007060, 0.9879925180204854};
constexpr std::array<double, 8> kGlWeight = {
    0.2025782419255613, 0.1984314853271116, 0.1861610000155622,
    0.1662692058169939, 0.1395706779261543, 0.1071592204671719,
    0.0703660474881081, 0.0307532419961173};

using LogFn = std::function<double(double)>;

// log of the GL15 approximation over [a, b], assembled against the node max.
double panel_gauss_log(const LogFn& log_f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, 15> vals;
    int k = 0;
    vals[k++] = log_f(mid);
    for (int i = 1; i < 8; ++i) {
        vals[k++] = log_f(mid - half * kGlNode[i]);
        vals[k++] = log_f(mid + half * kGlNode[i]);
    }
    double peak = kNegInf;
    for (double v : vals) peak = std::max(peak, v);
    if (peak == kNegInf) return kNegInf;
    double sum = kGlWeight[0] * std::exp(vals[0] - peak);
    k = 1;
    for (int i = 1; i < 8; ++i) {
        sum += kGlWeight[i] * (std::exp(vals[k] - peak) + std::exp(vals[k + 1] - peak));
        k += 2;
    }
    return peak + std::log(sum) + std::log(half);
}

struct PanelBudget {
    long remaining;
    std::string_view label;
    void spend() {
        if (--remaining < 0)
            throw std::runtime_error(
                "adaptive_quad_log: panel budget exhausted integrating " +
                std::string(label));
    }
};

// Bisect until whole-panel and split-panel estimates agree to rel_tol.
double panel_adaptive_log(const LogFn& log_f, double a, double b, double rel_tol,
                          int depth, PanelBudget& budget) {
    budget.spend();
    const double whole = panel_gauss_log(log_f, a, b);
    const double mid = 0.5 * (a + b);
    const double split = log_add_exp(panel_gauss_log(log_f, a, mid),
                                     panel_gauss_log(log_f, mid, b));
    if (whole == kNegInf && split == kNegInf) return kNegInf;
    if (depth >= 48) return split;
    // A log value cannot be resolved below its own ulp; without this floor
    // huge-exponent panels would bisect forever.
    const double quantum = 64.0 * std::numeric_limits<double>::epsilon() *
                           std::max(1.0, std::fabs(split));
    if (whole != kNegInf && split != kNegInf &&
        (std::fabs(std::expm1(whole - split)) <= rel_tol ||
         std::fabs(whole - split) <= quantum))
        return split;
    return log_add_exp(panel_adaptive_log(log_f, a, mid, rel_tol, depth + 1, budget),
                       panel_adaptive_log(log_f, mid, b, rel_tol, depth + 1, budget));
}

}  // namespace

double adaptive_quad_log(const LogFn& log_f, double peak_hint, double rel_tol,
                         std::string_view label) {
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("adaptive_quad_log: rel_tol must be positive");
    PanelBudget budget{200000, label};

    const double t0 = std::max(peak_hint, 0.0);
    const double f0 = log_f(t0);

    // Width scale: distance over which log_f drops by ~2 from the peak value.
    double width = 0.25;
    while (width < 1e6 && log_f(t0 + width) > f0 - 2.0) width *= 2.0;
    width = std::max(width, 1e-3);

    const double panel_tol = rel_tol / 16.0;
    const double stop_log = std::log(rel_tol / 64.0);
    double total = kNegInf;

    // Left of the peak, down to 0.
    double lo = t0;
    int below = 0;
    while (lo > 0.0 && below < 2) {
        const double a = std::max(0.0, lo - width);
        const double part = panel_adaptive_log(log_f, a, lo, panel_tol, 0, budget);
        total = log_add_exp(total, part);
        below = (total != kNegInf && part < total + stop_log) ? below + 1 : 0;
        lo = a;
    }

    // Right of the peak; super-exponential decay makes the stop rule safe
    // once two consecutive panels are negligible.
    double hi = t0;
    below = 0;
    while (below < 2) {
        const double b = hi + width;
        const double part = panel_adaptive_log(log_f, hi, b, panel_tol, 0, budget);
        total = log_add_exp(total, part);
        below = (total != kNegInf && part < total + stop_log) ? below + 1 : 0;
        hi = b;
        budget.spend();
    }
    return total;
}

}  // namespace focklab
