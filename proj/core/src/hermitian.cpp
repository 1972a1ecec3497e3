#include "focklab/hermitian.hpp"

#include <cmath>
#include <stdexcept>

namespace focklab {

HermitianMatrix::HermitianMatrix(int dimension) : n_(dimension) {
    if (dimension < 1)
        throw std::invalid_argument("HermitianMatrix: dimension must be >= 1");
    a_.assign(static_cast<size_t>(n_) * n_, {0.0, 0.0});
}

void HermitianMatrix::set_upper(int i, int j, std::complex<double> v) {
    if (i == j) v = {v.real(), 0.0};
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = std::conj(v);
}

HermitianMatrix HermitianMatrix::from_dense(
    const std::vector<std::complex<double>>& a, int dimension) {
    if (static_cast<size_t>(dimension) * dimension != a.size())
        throw std::invalid_argument("HermitianMatrix::from_dense: size mismatch");
    double scale = 0.0;
    for (const auto& v : a) scale = std::max(scale, std::abs(v));
    const double tol = 1e-12 * std::max(1.0, scale);
    HermitianMatrix m(dimension);
    for (int i = 0; i < dimension; ++i) {
        for (int j = i; j < dimension; ++j) {
            const auto upper = a[i * dimension + j];
            const auto lower = a[j * dimension + i];
            if (std::abs(upper - std::conj(lower)) > tol)
                throw std::invalid_argument(
                    "HermitianMatrix::from_dense: input is not Hermitian");
            m.set_upper(i, j, 0.5 * (upper + std::conj(lower)));
        }
    }
    return m;
}

namespace {

// Cyclic Jacobi on a dense real-symmetric matrix; V accumulates rotations.
void jacobi_sym(std::vector<double>& e, std::vector<double>& v, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[i * n + j] = (i == j) ? 1.0 : 0.0;

    double frob = 0.0;
    for (double x : e) frob += x * x;
    const double stop = 1e-30 * std::max(frob, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * e[p * n + q] * e[p * n + q];
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = e[p * n + q];
                if (apq == 0.0) continue;
                const double app = e[p * n + p];
                const double aqq = e[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                e[p * n + p] = app - t * apq;
                e[q * n + q] = aqq + t * apq;
                e[p * n + q] = 0.0;
                e[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = e[k * n + p];
                    const double akq = e[k * n + q];
                    e[k * n + p] = akp - s * (akq + tau * akp);
                    e[p * n + k] = e[k * n + p];
                    e[k * n + q] = akq + s * (akp - tau * akq);
                    e[q * n + k] = e[k * n + q];
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = vkp - s * (vkq + tau * vkp);
                    v[k * n + q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
}

}  // namespace

ExtremeEigs hermitian_extreme_eigs(const HermitianMatrix& m) {
    const int n = m.dimension();
    ExtremeEigs out;
    if (n == 1) {
        out.min = out.max = m.at(0, 0).real();
        out.vec_min = out.vec_max = {{1.0, 0.0}};
        return out;
    }

    // Real-symmetric embedding [[A, -B], [B, A]].
    const int nn = 2 * n;
    std::vector<double> e(static_cast<size_t>(nn) * nn, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto z = m.at(i, j);
            e[i * nn + j] = z.real();
            e[(i + n) * nn + (j + n)] = z.real();
            e[i * nn + (j + n)] = -z.imag();
            e[(i + n) * nn + j] = z.imag();
        }
    }
    std::vector<double> v;
    v.resize(e.size());
    jacobi_sym(e, v, nn);

    int imin = 0, imax = 0;
    for (int k = 1; k < nn; ++k) {
        if (e[k * nn + k] < e[imin * nn + imin]) imin = k;
        if (e[k * nn + k] > e[imax * nn + imax]) imax = k;
    }
    out.min = e[imin * nn + imin];
    out.max = e[imax * nn + imax];

    auto to_complex_vec = [&](int col) {
        std::vector<std::complex<double>> w(n);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            w[i] = {v[i * nn + col], v[(i + n) * nn + col]};
            norm += std::norm(w[i]);
        }
        norm = std::sqrt(norm);
        for (auto& x : w) x /= norm;
        return w;
    };
    out.vec_min = to_complex_vec(imin);
    out.vec_max = to_complex_vec(imax);
    return out;
}

}  // namespace focklab
