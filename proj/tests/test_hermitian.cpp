#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "focklab/hermitian.hpp"

using namespace focklab;
using cplx = std::complex<double>;

namespace {

// Characteristic polynomial p(x) = x^n + c[0] x^{n-1} + ... + c[n-1]
// via Faddeev-LeVerrier; coefficients are real for Hermitian input.
std::vector<long double> charpoly(const HermitianMatrix& m) {
    const int n = m.dimension();
    std::vector<cplx> mk(static_cast<size_t>(n) * n, 0.0), tmp(mk.size());
    std::vector<long double> c;
    for (int i = 0; i < n; ++i) mk[i * n + i] = 1.0;  // M_0 = I
    for (int k = 1; k <= n; ++k) {
        // tmp = A * mk
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx s = 0.0;
                for (int l = 0; l < n; ++l) s += m.at(i, l) * mk[l * n + j];
                tmp[i * n + j] = s;
            }
        cplx tr = 0.0;
        for (int i = 0; i < n; ++i) tr += tmp[i * n + i];
        const long double ck = -static_cast<long double>(tr.real()) / k;
        c.push_back(ck);
        mk = tmp;
        for (int i = 0; i < n; ++i) mk[i * n + i] += static_cast<double>(ck);
    }
    return c;
}

long double poly_eval(const std::vector<long double>& c, long double x) {
    long double v = 1.0L;
    for (long double ck : c) v = v * x + ck;
    return v;
}

long double bisect_root(const std::vector<long double>& c, long double lo,
                        long double hi) {
    long double flo = poly_eval(c, lo);
    for (int it = 0; it < 200; ++it) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = poly_eval(c, mid);
        if ((flo <= 0) == (fm <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5L * (lo + hi);
}

// All real roots of p (all-real-roots case), bracketed by the critical
// points of successive derivatives and the Gershgorin interval.
std::vector<long double> real_roots_all(const std::vector<long double>& c,
                                        long double lo, long double hi) {
    const size_t n = c.size();
    if (n == 1) return {-c[0]};
    // p' / n, monic with coefficients c'_k = c_k (n-k)/n.
    std::vector<long double> dc(n - 1);
    for (size_t k = 0; k + 1 < n; ++k)
        dc[k] = c[k] * static_cast<long double>(n - 1 - k) / static_cast<long double>(n);
    const auto crit = real_roots_all(dc, lo, hi);
    std::vector<long double> cuts{lo};
    cuts.insert(cuts.end(), crit.begin(), crit.end());
    cuts.push_back(hi);
    std::vector<long double> roots;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const long double fl = poly_eval(c, cuts[i]);
        const long double fr = poly_eval(c, cuts[i + 1]);
        if ((fl <= 0) != (fr <= 0))
            roots.push_back(bisect_root(c, cuts[i], cuts[i + 1]));
        else if (fl == 0)
            roots.push_back(cuts[i]);
    }
    return roots;
}

HermitianMatrix random_hermitian(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    HermitianMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (i == j)
                m.set_upper(i, j, {d(rng), 0.0});
            else
                m.set_upper(i, j, {d(rng), d(rng)});
        }
    }
    return m;
}

double gershgorin_radius(const HermitianMatrix& m) {
    double r = 0.0;
    for (int i = 0; i < m.dimension(); ++i) {
        double row = 0.0;
        for (int j = 0; j < m.dimension(); ++j) row += std::abs(m.at(i, j));
        r = std::max(r, row);
    }
    return r;
}

}  // namespace

TEST_CASE("identity 3x3") {
    HermitianMatrix m(3);
    for (int i = 0; i < 3; ++i) m.set_upper(i, i, {1.0, 0.0});
    const auto e = hermitian_extreme_eigs(m);
    CHECK(e.min == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.max == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rank-one [[1,1],[1,1]] gives (0, 2)") {
    HermitianMatrix m(2);
    m.set_upper(0, 0, {1.0, 0.0});
    m.set_upper(1, 1, {1.0, 0.0});
    m.set_upper(0, 1, {1.0, 0.0});
    const auto e = hermitian_extreme_eigs(m);
    CHECK(std::fabs(e.min) < 1e-12);
    CHECK(e.max == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("dimension 1 is exact") {
    HermitianMatrix m(1);
    m.set_upper(0, 0, {-0.6875, 0.0});
    const auto e = hermitian_extreme_eigs(m);
    CHECK(e.min == -0.6875);
    CHECK(e.max == -0.6875);
}

TEST_CASE("random 4x4 Hermitian matches the quartic-root oracle to 1e-10") {
    for (unsigned seed : {11u, 12u, 13u, 14u, 15u}) {
        const auto m = random_hermitian(4, seed);
        const auto e = hermitian_extreme_eigs(m);
        const auto c = charpoly(m);
        const double r = gershgorin_radius(m) + 1.0;
        auto roots = real_roots_all(c, -r, r);
        REQUIRE(roots.size() == 4);
        const double lo = static_cast<double>(roots.front());
        const double hi = static_cast<double>(roots.back());
        CHECK(std::fabs(e.min - lo) <= 1e-10 * std::max(1.0, std::fabs(lo)));
        CHECK(std::fabs(e.max - hi) <= 1e-10 * std::max(1.0, std::fabs(hi)));
    }
}

TEST_CASE("residual check: ||Mx - vx|| <= 1e-8 ||x|| for the produced vectors") {
    for (unsigned seed : {21u, 22u, 23u}) {
        for (int n : {2, 5, 8, 13}) {
            const auto m = random_hermitian(n, seed * 100 + n);
            const auto e = hermitian_extreme_eigs(m);
            auto residual = [&](const std::vector<cplx>& x, double v) {
                double num = 0.0, den = 0.0;
                for (int i = 0; i < n; ++i) {
                    cplx mx = 0.0;
                    for (int j = 0; j < n; ++j) mx += m.at(i, j) * x[j];
                    num += std::norm(mx - v * x[i]);
                    den += std::norm(x[i]);
                }
                return std::sqrt(num / den);
            };
            CHECK(residual(e.vec_min, e.min) <= 1e-8);
            CHECK(residual(e.vec_max, e.max) <= 1e-8);
        }
    }
}

TEST_CASE("non-Hermitian input rejected") {
    std::vector<cplx> bad{{1.0, 0.0}, {2.0, 0.5}, {1.0, 0.5}, {3.0, 0.0}};
    CHECK_THROWS_AS(HermitianMatrix::from_dense(bad, 2), std::invalid_argument);
    // conj-symmetric input passes
    std::vector<cplx> good{{1.0, 0.0}, {2.0, 0.5}, {2.0, -0.5}, {3.0, 0.0}};
    CHECK_NOTHROW(HermitianMatrix::from_dense(good, 2));
}
