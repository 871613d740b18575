#pragma once

#include <cstdint>
#include <functional>

#include "hupstab/polygauss.hpp"

namespace hupstab {

// |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2), evaluated in log space
double sphere_area(int d);

// A radial function given by callables, for profiles outside the exact
// class. Derivatives must be consistent with the value (see validate).
struct RadialProfile {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    double r_max = 15.0;
};

RadialProfile profile_from(const PolyGaussFn& f);

// Throws std::invalid_argument when finite differences disagree with the
// stored derivatives beyond 1e-6 relative at the probe points.
void validate_profile(const RadialProfile& p);

struct QuadResult {
    double value = 0.0;
    bool accuracy_warning = false;  // tail estimate exceeded 1e-6 of the integral
};

// integral_0^inf p(r) r^{d-1} dr after the substitution t = r^2, composite
// Gauss-Legendre panels in t. Target 1e-9 relative for Gaussian-decay
// profiles at nodes = 200.
QuadResult quad_radial(const RadialProfile& p, int d, int nodes = 200);
QuadResult quad_radial(const std::function<double(double)>& f, double r_max, int d,
                       int nodes = 200);

struct MCOracleResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

// Importance-sampled full-space integral over R^N against a centered
// isotropic Gaussian proposal; the proposal width comes from a pilot run.
// Deterministic for fixed seed and independent of sharding.
MCOracleResult mc_fullspace(const std::function<double(const std::vector<double>&)>& f,
                            int N, std::int64_t samples, std::uint64_t seed);

} // namespace hupstab
