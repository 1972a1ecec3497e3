#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "focklab/slog.hpp"

using namespace focklab;

TEST_CASE("slog_add small integers are exact") {
    const auto a = SignedLogReal::from_double(2.0);
    const auto b = SignedLogReal::from_double(3.0);
    const auto c = slog_add(a, b);
    CHECK(c.sign == +1);
    CHECK(c.to_double() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("slog_add exact cancellation gives the signed zero") {
    const auto a = SignedLogReal::from_log(12.34, +1);
    const auto b = SignedLogReal::from_log(12.34, -1);
    const auto c = slog_add(a, b);
    CHECK(c.sign == 0);
    CHECK(c.log_mag == kNegInf);
    CHECK(c.to_double() == 0.0);
}

TEST_CASE("slog_add matches direct arithmetic on random pairs") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> mag(-30.0, 30.0);
    std::bernoulli_distribution coin;
    for (int i = 0; i < 1000; ++i) {
        const double x = (coin(rng) ? 1 : -1) * std::exp(mag(rng));
        const double y = (coin(rng) ? 1 : -1) * std::exp(mag(rng));
        const double direct = x + y;
        const auto got = slog_add(SignedLogReal::from_double(x),
                                  SignedLogReal::from_double(y));
        if (direct == 0.0) {
            CHECK(got.sign == 0);
        } else {
            CHECK(got.to_double() ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("slog_add is associative to 1e-12 on random triples") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mag(-20.0, 20.0);
    std::bernoulli_distribution coin;
    for (int i = 0; i < 500; ++i) {
        SignedLogReal v[3];
        for (auto& x : v)
            x = SignedLogReal::from_log(mag(rng), coin(rng) ? +1 : -1);
        const auto left = slog_add(slog_add(v[0], v[1]), v[2]);
        const auto right = slog_add(v[0], slog_add(v[1], v[2]));
        if (left.sign == 0 || right.sign == 0) continue;  // near-total cancellation
        CHECK(left.sign == right.sign);
        const double rel = std::fabs(std::expm1(left.log_mag - right.log_mag));
        // Relative tolerance in the value, guarded against cancellation
        // blow-up by comparing against the largest input magnitude.
        const double scale = std::max({v[0].log_mag, v[1].log_mag, v[2].log_mag});
        if (left.log_mag > scale - 25.0) CHECK(rel < 1e-12);
    }
}

TEST_CASE("log_sum_exp basics") {
    const double two[] = {0.0, 0.0};
    CHECK(log_sum_exp(two) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    const double single[] = {-3.25};
    CHECK(log_sum_exp(single) == -3.25);
    CHECK(log_sum_exp({}) == kNegInf);
    const double skewed[] = {0.0, -50.0};
    CHECK(log_sum_exp(skewed) ==
          doctest::Approx(std::log1p(std::exp(-50.0))).epsilon(1e-15));
}

TEST_CASE("log_sum_exp ignores -inf terms and dominates the max") {
    const double t[] = {1.5, kNegInf, -2.0, kNegInf};
    const double base[] = {1.5, -2.0};
    CHECK(log_sum_exp(t) == log_sum_exp(base));
    CHECK(log_sum_exp(t) >= 1.5);
}

TEST_CASE("log_sum_exp is permutation-invariant bit for bit") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> mag(-40.0, 40.0);
    std::vector<double> terms(64);
    for (auto& t : terms) t = mag(rng);
    const double ref = log_sum_exp(terms);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(terms.begin(), terms.end(), rng);
        CHECK(log_sum_exp(terms) == ref);
    }
}

TEST_CASE("signed-log complex round trip and arithmetic") {
    const std::complex<double> z{-1.25, 2.5};
    const auto a = SignedLogComplex::from_complex(z);
    CHECK(std::abs(a.to_complex() - z) < 1e-15 * std::abs(z));

    const std::complex<double> w{0.5, -0.125};
    const auto b = SignedLogComplex::from_complex(w);
    CHECK(std::abs(slc_mul(a, b).to_complex() - z * w) < 1e-14 * std::abs(z * w));
    CHECK(std::abs(slc_add(a, b).to_complex() - (z + w)) < 1e-14 * std::abs(z + w));
    CHECK(std::abs(slc_div(a, b).to_complex() - z / w) < 1e-14 * std::abs(z / w));
    // phases are never exact, so opposite values cancel only to roundoff
    const auto cancel = slc_add(a, slc_neg(a));
    CHECK((cancel.is_zero() || cancel.log_mag < a.log_mag + std::log(1e-15)));
    CHECK(std::abs(slc_conj(a).to_complex() - std::conj(z)) < 1e-14 * std::abs(z));
}

TEST_CASE("slc_pow tracks huge magnitudes in log form") {
    const auto a = SignedLogComplex::from_polar_log(50.0, 0.3);
    const auto p = slc_pow(a, 40);
    CHECK(p.log_mag == doctest::Approx(2000.0));
    CHECK(p.arg == doctest::Approx(wrap_angle(12.0)));
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
    CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(0.25) == 0.25);
    for (double a = -50.0; a < 50.0; a += 0.7) {
        const double w = wrap_angle(a);
        CHECK(w > -M_PI - 1e-15);
        CHECK(w <= M_PI + 1e-15);
        CHECK(std::fabs(std::remainder(w - a, 2.0 * M_PI)) < 1e-9);
    }
}
