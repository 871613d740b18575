#pragma once

// Refining grid-search oracles for the manifold distances. Test-only code,
// deliberately independent of the golden-section implementation path: each
// stage re-grids a +/- 3-cell window around the previous argmin.

#include <cmath>

#include "hupstab/functionals.hpp"
#include "hupstab/manifold.hpp"

namespace hupstab::testing {

inline double brute_force_grad(const PolyGaussFn& u, int N, bool norm_match = false) {
    const EnergyVector e = energies(u, N);
    const double S = sphere_area(N);
    const PolyGaussFn h = pg_mul_power(pg_derivative(u), 1);
    auto ip = [&](double beta) {
        return -beta * S * pg_integral_radial(pg_shift_rate(h, 0.5 * beta), N);
    };
    auto gg = [&](double beta) {
        return 0.5 * N * std::pow(M_PI, 0.5 * N) * std::pow(beta, 1.0 - 0.5 * N);
    };
    // Cauchy-Schwarz: |alpha*(beta)| = |<grad u, grad g>|/||grad g||^2
    // <= sqrt(grad_u / ||grad g||^2); size the alpha range from the bound
    double blo = 0.05, bhi = 20.0;
    double abound = 3.0;
    for (double beta : {blo, 1.0, bhi})
        abound = std::max(abound, 1.05 * std::sqrt(e.grad / gg(beta)));
    double alo = -abound, ahi = abound;
    double best = 1e300, ba = 0.0, bb = 1.0;
    for (int stage = 0; stage < 3; ++stage) {
        const int na = stage == 0 ? 400 : 160, nb = na;
        for (int j = 0; j < nb; ++j) {
            const double beta = blo + (bhi - blo) * j / (nb - 1);
            const double ipb = ip(beta), ggb = gg(beta);
            if (norm_match) {
                const double a = std::sqrt(e.grad / ggb);
                for (double sign : {-1.0, 1.0}) {
                    const double J = 2.0 * e.grad - 2.0 * sign * a * ipb;
                    if (J < best) { best = J; ba = sign * a; bb = beta; }
                }
            } else {
                for (int i = 0; i < na; ++i) {
                    const double a = alo + (ahi - alo) * i / (na - 1);
                    const double J = e.grad - 2.0 * a * ipb + a * a * ggb;
                    if (J < best) { best = J; ba = a; bb = beta; }
                }
            }
        }
        const double wa = 3.0 * (ahi - alo) / (na - 1), wb = 3.0 * (bhi - blo) / (nb - 1);
        alo = ba - wa; ahi = ba + wa;
        blo = std::max(1e-4, bb - wb); bhi = bb + wb;
    }
    return best;
}

inline double brute_force_l2(const PolyGaussFn& u, int N) {
    const EnergyVector e = energies(u, N);
    const double S = sphere_area(N);
    auto ip = [&](double beta) {
        return S * pg_integral_radial(pg_shift_rate(u, 0.5 * beta), N);
    };
    auto zz = [&](double beta) { return std::pow(M_PI, 0.5 * N) * std::pow(beta, -0.5 * N); };
    double blo = 0.05, bhi = 20.0;
    double abound = 3.0;
    for (double beta : {blo, 1.0, bhi})
        abound = std::max(abound, 1.05 * std::sqrt(e.l2 / zz(beta)));
    double alo = -abound, ahi = abound;
    double best = 1e300, ba = 0.0, bb = 1.0;
    for (int stage = 0; stage < 3; ++stage) {
        const int n = stage == 0 ? 400 : 160;
        for (int j = 0; j < n; ++j) {
            const double beta = blo + (bhi - blo) * j / (n - 1);
            const double ipb = ip(beta), z = zz(beta);
            for (int i = 0; i < n; ++i) {
                const double a = alo + (ahi - alo) * i / (n - 1);
                const double J = e.l2 - 2.0 * a * ipb + a * a * z;
                if (J < best) { best = J; ba = a; bb = beta; }
            }
        }
        const double wa = 3.0 * (ahi - alo) / (n - 1), wb = 3.0 * (bhi - blo) / (n - 1);
        alo = ba - wa; ahi = ba + wa;
        blo = std::max(1e-4, bb - wb); bhi = bb + wb;
    }
    return best;
}

} // namespace hupstab::testing
