#pragma once

#include "hupstab/integration.hpp"
#include "hupstab/polygauss.hpp"

namespace hupstab {

struct EnergyVector {
    double l2 = 0.0;       // int |u|^2
    double grad = 0.0;     // int |grad u|^2
    double lap = 0.0;      // int |Delta u|^2
    double x2_l2 = 0.0;    // int |x|^2 |u|^2
    double x2_grad = 0.0;  // int |x|^2 |grad u|^2
    int dim = 0;
};

struct DeficitReport {
    EnergyVector energies;
    double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;
    double delta1 = 0.0, delta2 = 0.0;
    double lambda_first = 0.0;   // (x2_l2 / grad)^{1/4}, NaN when undefined
    double lambda_second = 0.0;  // (x2_grad / lap)^{1/4}, NaN when undefined
};

// Full-space energies of the radial function u(|x|) on R^N. The exact-class
// overload integrates Gamma moments; the profile overload validates the
// derivatives first and goes through quadrature.
EnergyVector energies(const PolyGaussFn& u, int N);
EnergyVector energies(const RadialProfile& u, int N, int nodes = 400);

DeficitReport deficits_from(const EnergyVector& e);
DeficitReport deficits(const PolyGaussFn& u, int N);

// Right side of the first-order identity: (lambda^2/2) int |grad(u
// e^{|x|^2/(2 lambda^2)})|^2 e^{-|x|^2/lambda^2} dx, reduced exactly (the
// Gaussian factors cancel against the weight). Equals theta1(u).
double hup_identity_rhs(const PolyGaussFn& u, int N);

// int ||Hess v - x (x) grad v||_HS^2 e^{-|x|^2} dx for radial v, reduced to
// |S^{N-1}| int [(v'' - r v')^2 + (N-1)(v'/r)^2] e^{-r^2} r^{N-1} dr.
double hessian_gaussian_energy(const PolyGaussFn& v, int N);

// Numerator of the sector stability quotient over R^{N+2k}:
// lap + x2_grad - 2k l2 in dimension N+2k.
double sector_numerator(const PolyGaussFn& f, int N, int k);

// LHS - RHS of the sharp radial Gaussian Poincare step:
// [grad + x2_l2 - N l2] - 2[l2 - (int v e^{-r^2/2} dx)^2 / int e^{-r^2} dx]
double radial_gaussian_poincare_gap(const PolyGaussFn& v, int N);

} // namespace hupstab
