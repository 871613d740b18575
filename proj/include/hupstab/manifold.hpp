#pragma once

#include "hupstab/harmonics.hpp"
#include "hupstab/polygauss.hpp"

namespace hupstab {

enum class Metric { l2, grad_seminorm, grad_seminorm_norm_matched, vector_l2, d2_partial };

struct DistanceResult {
    double value_sq = 0.0;   // squared distance
    double alpha_star = 0.0;
    double beta_star = 1.0;  // rate in alpha e^{-beta |x|^2 / 2}
    Metric metric = Metric::l2;
    bool converged = false;
    long evaluations = 0;
};

// inf over alpha, beta > 0 of the squared seminorm distance to the Gaussian
// family alpha e^{-beta |x|^2 / 2}: alpha eliminated in closed form, then a
// coarse log-beta grid plus golden-section refinement.
DistanceResult dist_grad_to_shup(const PolyGaussFn& u, int N);
DistanceResult dist_l2_to_hup(const PolyGaussFn& u, int N);

// same, subject to ||grad u*|| = ||grad u|| (constraint fixes |alpha|)
DistanceResult dist_grad_norm_matched(const PolyGaussFn& u, int N);

enum class VectorMetric { l2, norm_matched };

// distance of the curl-free field U = grad u to the optimizer fields
// alpha e^{-beta |x|^2/2} x; identical numbers to the scalar gradient
// problems since curl-free fields are gradients.
DistanceResult dist_vector_cfhup(const PolyGaussFn& potential, int N, VectorMetric m);

// inf over c, d, beta of int |u - c G_beta|^2 + |u - (c + d.x) G_beta|^2 dx
// for separable inputs with sectors in {0, 1}; (c, d) split by sector
// orthogonality for each beta. alpha_star reports c*.
DistanceResult dist_d2_partial(const SeparableFn& s);

// pinned-scale variant used by the linearized stability statement:
// inf over c only of ||grad(u - c e^{-|x|^2/2})||^2
double dist_grad_pinned_sq(const PolyGaussFn& u, int N);

} // namespace hupstab
