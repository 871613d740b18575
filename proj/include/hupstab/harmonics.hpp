#pragma once

#include <string>
#include <vector>

#include "hupstab/integration.hpp"
#include "hupstab/polygauss.hpp"

namespace hupstab {

// u = sum_k v_k(r) r^k phi_k(sigma) with phi_k normalized against the
// normalized surface measure so that int |phi_k|^2 dsigma =
// |S^{N-1+2k}|/|S^{N-1}|. Concrete harmonics exist for k <= 2 (phi_0 = 1,
// phi_1 = sqrt(2 pi) sigma_1, phi_2 = 2 pi sigma_1 sigma_2); higher k are
// supported through the sector formulas only.
struct SectorComponent {
    int k = 0;
    PolyGaussFn profile;  // v_k, even parity
    std::string harmonic_id = "std";
};

struct SeparableFn {
    int ambient_dim = 2;
    std::vector<SectorComponent> components;  // distinct k
};

void validate_separable(const SeparableFn& s);

// Laplace-Beltrami eigenvalue c_k = k (k + N - 2)
double eigenvalue_ck(int k, int N);

enum class SectorEnergy { grad, lap, x2_grad, l2, x2_l2 };

// Full-space energy as the sector sum over lifted dimensions N + 2k.
double sector_energies(const SeparableFn& s, SectorEnergy which);

// Gaussian-weighted integrals (weight e^{-rate r^2}) that the lifted
// dimensions do not cover: the weighted gradient needs the ambient-dimension
// reduction with the Laplace-Beltrami eigenvalue term.
double sector_weighted_l2(const SeparableFn& s, double rate);
double sector_weighted_grad(const SeparableFn& s, double rate);

// Cartesian evaluation through the concrete harmonics (k <= 2 only).
struct CartesianEval {
    double value = 0.0;
    std::vector<double> grad;
    double lap = 0.0;
};
CartesianEval eval_cartesian(const SeparableFn& s, const std::vector<double>& x);

// Monte-Carlo estimate of a full-space energy from the Cartesian formulas;
// independent of the sector reductions. ambient_dim must be 2 or 3 and all
// sectors concrete.
MCOracleResult direct_energies_mc(const SeparableFn& s, SectorEnergy which,
                                  std::int64_t samples, std::uint64_t seed);

// w_k with int_{R^{N+2k}} |grad v_k|^2 = int_{R^{N+2k+2}} |w_k|^2 and
// int |Delta v_k|^2 = int |grad w_k|^2 across the same lift.
PolyGaussFn lift_w(const PolyGaussFn& v_k, int N, int k);

// Relative residual of the exact split of the sector x2-gradient energy into
// its coercive part ((N+2k)^2-8k)/(N+2k)^2 and a completed square.
double x2grad_decomposition_check(const PolyGaussFn& v_k, int N, int k);

} // namespace hupstab
