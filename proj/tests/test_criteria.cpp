#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "focklab/criteria.hpp"

using namespace focklab;

namespace {
const WeightParams kHalf{0.5};

std::vector<double> linear_deltas(double c, int count) {
    std::vector<double> d(count);
    for (int n = 0; n < count; ++n) d[n] = c * (1.0 + n);
    return d;
}
}  // namespace

TEST_CASE("threshold constants at beta = 0.5") {
    CHECK(delta_n_threshold(kHalf) == doctest::Approx(1.0 / 4.5).epsilon(1e-15));
    CHECK(kadets_threshold(kHalf) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    CHECK(delta_n_u_threshold() == 0.5);
}

TEST_CASE("cond2_sup closed forms") {
    std::vector<double> zero(200, 0.0);
    CHECK(cond2_sup(zero, kHalf, 150) == 0.0);
    // (1+n)^{1/beta - 1} = (1+n) at beta = 1/2, so 0.3(1+n) gives 0.3
    const auto lin = linear_deltas(0.3, 200);
    for (int h : {10, 50, 199}) CHECK(cond2_sup(lin, kHalf, h) == doctest::Approx(0.3));
    // delta_n = n^{1/beta} outruns the normalizer
    std::vector<double> fast(200);
    for (int n = 0; n < 200; ++n) fast[n] = std::pow(n, 2.0);
    CHECK(cond2_sup(fast, kHalf, 100) > cond2_sup(fast, kHalf, 50));
    CHECK(cond2_sup(fast, kHalf, 199) > 100.0);
}

TEST_CASE("delta_N window: zero deltas stay below the threshold") {
    std::vector<double> zero(100, 0.0);
    for (int N : {1, 2, 5}) {
        CHECK(delta_n_window(zero, kHalf, N, 10, 99) == 0.0);
        CHECK(delta_n_window_u_form(zero, kHalf, N, 10, 99) == 0.0);
    }
}

TEST_CASE("u-form is exactly (1+beta)^{1/beta} times the raw form") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (double beta : {0.3, 0.5, 0.7}) {
        const WeightParams p{beta};
        const double factor = std::pow(1.0 + beta, 1.0 / beta);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<double> deltas(120);
            for (auto& x : deltas) x = d(rng);
            for (int N : {1, 2, 3, 7}) {
                const double raw = delta_n_window(deltas, p, N, 8, 119);
                const double uform = delta_n_window_u_form(deltas, p, N, 8, 119);
                CHECK(uform == doctest::Approx(factor * raw).epsilon(1e-12));
                // verdicts against the paired thresholds agree exactly
                CHECK((raw < delta_n_threshold(p)) == (uform < 0.5));
            }
        }
    }
}

TEST_CASE("linear deltas: u-form tends to 9c/8 at beta=0.5, flips at c = 4/9") {
    // ratio at window start n: 2.25 c (n + 1 + (N+1)/2) / (2n + 2 + N), decreasing,
    // so the sup sits at the burn-in and approaches 1.125 c from above.
    const int horizon = 4000, burn = 1000;
    for (double c : {0.1, 0.3, 0.4}) {
        const auto d = linear_deltas(c, horizon + 1);
        const double v = delta_n_window_u_form(d, kHalf, 1, burn, horizon);
        CHECK(v == doctest::Approx(1.125 * c).epsilon(2e-3));
        CHECK(v < 0.5);
    }
    for (double c : {0.5, 0.7}) {
        const auto d = linear_deltas(c, horizon + 1);
        CHECK(delta_n_window_u_form(d, kHalf, 1, burn, horizon) > 0.5);
    }
    // closed-form flip point c = 4/9: strictly above at +2%, below at -2%
    const auto hi = linear_deltas(4.0 / 9.0 * 1.02, horizon + 1);
    const auto lo = linear_deltas(4.0 / 9.0 * 0.98, horizon + 1);
    CHECK(delta_n_window_u_form(hi, kHalf, 1, burn, horizon) > 0.5);
    CHECK(delta_n_window_u_form(lo, kHalf, 1, burn, horizon) < 0.5);
}

TEST_CASE("alternating deltas collapse at N = 2") {
    // delta_n = (-1)^n 0.3 (1+n): two-term sums telescope to -/+ 0.3
    const int horizon = 2000, burn = 500;
    std::vector<double> d(horizon + 1);
    for (int n = 0; n <= horizon; ++n) d[n] = ((n % 2) ? -0.3 : 0.3) * (1.0 + n);
    const double d1 = delta_n_window_u_form(d, kHalf, 1, burn, horizon);
    CHECK(d1 == doctest::Approx(0.3375).epsilon(2e-3));  // 1.125 x 0.3
    const double d2 = delta_n_window_u_form(d, kHalf, 2, burn, horizon);
    CHECK(d2 < 0.01);
    CHECK(d2 > 0.0);
}

TEST_CASE("scaling: window value is absolutely homogeneous in the deltas") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::vector<double> deltas(80);
    for (auto& x : deltas) x = d(rng);
    for (double t : {-3.0, 0.5, 7.0}) {
        auto scaled = deltas;
        for (auto& x : scaled) x *= t;
        CHECK(delta_n_window_u_form(scaled, kHalf, 3, 5, 79) ==
              doctest::Approx(std::fabs(t) * delta_n_window_u_form(deltas, kHalf, 3, 5, 79))
                  .epsilon(1e-13));
    }
}

TEST_CASE("kadets check at beta=0.5") {
    std::vector<double> zero(100, 0.0);
    const auto ok = kadets_check(zero, kHalf, 99);
    CHECK(ok.verdict == Verdict::satisfies);
    CHECK(ok.threshold == doctest::Approx(4.0 / 9.0));

    std::vector<double> bad(100);
    for (int n = 0; n < 100; ++n) bad[n] = 0.5 * n;  // |delta_n|/n = 0.5 > 4/9
    const auto v = kadets_check(bad, kHalf, 99);
    CHECK(v.verdict == Verdict::violates);
    CHECK(v.sup == doctest::Approx(0.5));
}

TEST_CASE("limsup stability: windows never read the modified prefix") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> deltas(160);
    for (auto& x : deltas) x = d(rng);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> prefix(10);
        for (auto& x : prefix) x = 100.0 * d(rng);
        CHECK(limsup_stability(deltas, kHalf, 1 + trial % 4, 10, 159, prefix));
    }
    // touching the first readable index may change the value
    std::vector<double> prefix11(11, 1000.0);
    CHECK_THROWS_AS(limsup_stability(deltas, kHalf, 1, 10, 159, prefix11),
                    std::invalid_argument);
}

TEST_CASE("theorem verdict: the reference sequence satisfies") {
    const auto spec = SequenceSpec::reference(200, kHalf);
    const auto rep = theorem_verdict(spec, 0.05, 4, 199);
    CHECK(rep.verdict == Verdict::satisfies);
    CHECK(rep.cond1.separated);
    CHECK(rep.cond2.sup == 0.0);
    REQUIRE(!rep.cond3.empty());
    CHECK(rep.cond3.front().value == 0.0);
    CHECK(rep.cond3.front().margin == doctest::Approx(0.5));
}

TEST_CASE("theorem verdict: c = 0.6 violates condition (3)") {
    auto spec = SequenceSpec::reference(400, kHalf);
    spec.deltas = linear_deltas(0.6, 400);
    const auto rep = theorem_verdict(spec, 0.01, 4, 399);
    CHECK(rep.verdict == Verdict::violates);
    CHECK(rep.violated_condition == 3);
}

TEST_CASE("theorem verdict: margin below resolution is inconclusive") {
    // Pick c so the finite-horizon value lands within the resolution band of
    // 1/2: invert the window-start formula at the burn-in.
    const int horizon = 400, burn = 100;
    const int n = burn - 1;
    const double c = 0.5 * (2.0 * n + 3.0) / (2.25 * (n + 2.0));
    auto spec = SequenceSpec::reference(horizon + 1, kHalf);
    spec.deltas = linear_deltas(c, horizon + 1);
    const auto rep = theorem_verdict(spec, 0.01, 1, horizon, burn, 1e-9);
    CHECK(rep.verdict == Verdict::inconclusive);
    CHECK(rep.reason.find("boundary") != std::string::npos);
}

TEST_CASE("theorem verdict: angles only matter through condition (1)") {
    auto spec = SequenceSpec::reference(120, kHalf);
    spec.deltas = linear_deltas(0.2, 120);
    const auto base = theorem_verdict(spec, 0.05, 3, 119);
    auto rotated = spec;
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> th(-M_PI, M_PI);
    for (auto& t : rotated.thetas) t = th(rng);
    const auto rot = theorem_verdict(rotated, 0.05, 3, 119);
    CHECK(base.cond2.sup == rot.cond2.sup);
    REQUIRE(base.cond3.size() == rot.cond3.size());
    for (size_t i = 0; i < base.cond3.size(); ++i)
        CHECK(base.cond3[i].value == rot.cond3[i].value);
    CHECK(base.verdict == rot.verdict);
}

TEST_CASE("theorem verdict: unbounded growth trend is caught") {
    auto spec = SequenceSpec::reference(300, kHalf);
    for (int n = 0; n < 300; ++n) spec.deltas[n] = 1e-4 * std::pow(1.0 + n, 2.0);
    const auto rep = theorem_verdict(spec, 1e-8, 3, 299);
    // ratios |delta_n|/(1+n) grow, so condition (2) cannot be certified;
    // with small coefficient the windows stay under 1/2 for a while
    CHECK(rep.verdict != Verdict::satisfies);
}
