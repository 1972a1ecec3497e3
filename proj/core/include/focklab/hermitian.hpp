#pragma once

#include <complex>
#include <vector>

namespace focklab {

/// Hermitian matrix with full complex storage.  Mutation goes through
/// set_upper which mirrors the conjugate entry, so entries[i][j] ==
/// conj(entries[j][i]) and the diagonal stays real by construction.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(int dimension);

    /// Validates conjugate symmetry (tolerance 1e-12 relative) and
    /// symmetrizes; throws std::invalid_argument otherwise.
    static HermitianMatrix from_dense(const std::vector<std::complex<double>>& a,
                                      int dimension);

    int dimension() const { return n_; }
    std::complex<double> at(int i, int j) const { return a_[i * n_ + j]; }
    /// Sets (i,j) and (j,i)=conj; for i==j the imaginary part is dropped.
    void set_upper(int i, int j, std::complex<double> v);

  private:
    int n_;
    std::vector<std::complex<double>> a_;
};

struct ExtremeEigs {
    double min = 0.0;
    double max = 0.0;
    std::vector<std::complex<double>> vec_min;
    std::vector<std::complex<double>> vec_max;
};

/// Extreme eigenvalues (with eigenvectors) by cyclic Jacobi on the
/// 2n x 2n real-symmetric embedding [[A, -B], [B, A]] of M = A + iB.
/// Exact for dimension 1.
ExtremeEigs hermitian_extreme_eigs(const HermitianMatrix& m);

}  // namespace focklab
