#pragma once

#include <string>
#include <vector>

#include "hupstab/integration.hpp"

namespace hupstab {

using Matrix = std::vector<std::vector<double>>;

// closed-form bounds --------------------------------------------------------

// sqrt((N+2k)^2 - 8k) - N through the rationalized form
// 4k(N+k-2) / (sqrt((N+2k)^2-8k) + N), exact for N up to 1e6
double lower_bound(double N, int k);

// K(N) = (4N-4)/(sqrt(N^2+4N-4)+N); identical to lower_bound(N, 1)
double k_of_n(double N);

// Rayleigh quotient of e^{-r^2/2} for the sector functional minus (N+2);
// evaluated through the exact-algebra energies, equals 2k - 4k/(N+2k)
double gaussian_quotient(int N, int k);

// Rayleigh pencil -----------------------------------------------------------

// Stiffness/Gram pair for the sector quotient over span{r^{2j} e^{-s r^2/2},
// j < m} in dimension N+2k. The spanning set is expressed in its
// Laguerre-orthogonalized form and the entries are accumulated in
// double-double arithmetic: raw monomial Gram matrices are numerically
// singular in double precision beyond m ~ 16.
struct RayleighPencil {
    Matrix A;  // numerator form: lap + x2_grad - 2k l2
    Matrix B;  // gradient Gram
    int N = 0, k = 0, m = 0;
    double scale = 1.0;
};

RayleighPencil assemble_rayleigh(int N, int k, int m, double scale);

struct EigResult {
    double lambda_min = 0.0;
    std::vector<double> coeffs;
};

// smallest lambda of A x = lambda B x: diagonal prescale, Cholesky of B
// (pivot drop tolerance 1e-10 -> conditioning error), cyclic Jacobi on the
// reduced symmetric matrix
EigResult min_generalized_eig(const Matrix& A, const Matrix& B);

// estimates -----------------------------------------------------------------

struct EstimateOptions {
    std::vector<int> m_list = {8, 16, 24};
    std::vector<double> scale_list;  // default: 9 log-spaced in [0.2, 2]
    double refine_tol = 1e-6;
};

struct StabilityEstimate {
    int N = 0, k = 0;
    int basis_size = 0;
    double scale = 1.0;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;  // 2k
    double gaussian_quotient = 0.0;
    double reference = 0.0;  // sqrt(N^2+4N-4)-N when k = 1, else NaN
    bool converged = false;
    double refinement_change = 0.0;
    std::string diagnostics;
    std::vector<double> coeffs;  // minimizer in the orthogonalized basis
    std::vector<double> certificate;  // estimate_C_N: lower_bound(N,j), j=2..kmax
    bool certificate_ok = false;
};

StabilityEstimate estimate_C(int N, int k, const EstimateOptions& opts = {});

// estimate_C(N, 1) plus the certificate lower_bound(N, j) > value for
// 2 <= j <= kmax, confirming that higher sectors cannot undercut k = 1
StabilityEstimate estimate_C_N(int N, int kmax, const EstimateOptions& opts = {});

// Stable evaluator for the Rayleigh minimizer (Laguerre recurrences; the
// monomial expansion of the eigenvector would lose all precision). Usable
// with quad_radial as an integration route independent of the pencil.
RadialProfile minimizer_profile(const StabilityEstimate& est);

} // namespace hupstab
