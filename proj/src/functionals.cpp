#include "hupstab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace hupstab {

EnergyVector energies(const PolyGaussFn& u, int N) {
    if (N < 1) throw std::domain_error("energies: N must be >= 1");
    EnergyVector e;
    e.dim = N;
    if (u.is_zero()) return e;
    if (u.parity() != Parity::even)
        throw std::invalid_argument("energies: radial profile must be even");
    const double S = sphere_area(N);
    const PolyGaussFn up = pg_derivative(u);
    const PolyGaussFn u2 = u * u;
    const PolyGaussFn up2 = up * up;
    const PolyGaussFn lap = pg_radial_laplacian(u, N);
    e.l2 = S * pg_integral_radial(u2, N);
    e.grad = S * pg_integral_radial(up2, N);
    e.lap = S * pg_integral_radial(lap * lap, N);
    e.x2_l2 = S * pg_integral_radial(pg_mul_power(u2, 2), N);
    e.x2_grad = S * pg_integral_radial(pg_mul_power(up2, 2), N);
    return e;
}

EnergyVector energies(const RadialProfile& u, int N, int nodes) {
    if (N < 1) throw std::domain_error("energies: N must be >= 1");
    validate_profile(u);
    const double S = sphere_area(N);
    EnergyVector e;
    e.dim = N;
    auto I = [&](const std::function<double(double)>& f) {
        return S * quad_radial(f, u.r_max, N, nodes).value;
    };
    e.l2 = I([&](double r) { double v = u.value(r); return v * v; });
    e.grad = I([&](double r) { double v = u.d1(r); return v * v; });
    e.lap = I([&](double r) {
        double v = u.d2(r) + (N - 1) * u.d1(r) / r;
        return v * v;
    });
    e.x2_l2 = I([&](double r) { double v = u.value(r); return r * r * v * v; });
    e.x2_grad = I([&](double r) { double v = u.d1(r); return r * r * v * v; });
    return e;
}

DeficitReport deficits_from(const EnergyVector& e) {
    DeficitReport d;
    d.energies = e;
    const int N = e.dim;
    d.theta1 = std::sqrt(e.grad * e.x2_l2) - 0.5 * N * e.l2;
    d.theta2 = e.grad * e.x2_l2 - 0.25 * N * N * e.l2 * e.l2;
    d.theta3 = e.grad + e.x2_l2 - N * e.l2;
    d.delta1 = std::sqrt(e.lap * e.x2_grad) - 0.5 * (N + 2) * e.grad;
    d.delta2 = e.lap + e.x2_grad - (N + 2) * e.grad;
    d.lambda_first = e.grad > 0.0 ? std::pow(e.x2_l2 / e.grad, 0.25)
                                  : std::nan("");
    d.lambda_second = e.lap > 0.0 ? std::pow(e.x2_grad / e.lap, 0.25)
                                  : std::nan("");
    return d;
}

DeficitReport deficits(const PolyGaussFn& u, int N) {
    return deficits_from(energies(u, N));
}

double hup_identity_rhs(const PolyGaussFn& u, int N) {
    if (u.is_zero()) throw std::invalid_argument("hup_identity_rhs: u must be nonzero");
    const EnergyVector e = energies(u, N);
    if (!(e.l2 > 0.0 && e.grad > 0.0 && e.x2_l2 > 0.0))
        throw std::invalid_argument("hup_identity_rhs: lambda undefined");
    const double lam2 = std::sqrt(e.x2_l2 / e.grad);
    // grad(u e^{r^2/(2 lam^2)}) squared times e^{-r^2/lam^2} collapses to
    // (u' + r u / lam^2)^2 -- no growing factor ever materializes.
    PolyGaussFn h = pg_derivative(u) + pg_mul_power(u, 1).scaled(1.0 / lam2);
    return 0.5 * lam2 * sphere_area(N) * pg_integral_radial(h * h, N);
}

double hessian_gaussian_energy(const PolyGaussFn& v, int N) {
    if (v.is_zero()) return 0.0;
    if (v.parity() != Parity::even)
        throw std::invalid_argument("hessian_gaussian_energy: requires even parity");
    const PolyGaussFn vp = pg_derivative(v);
    const PolyGaussFn vpp = pg_derivative(vp);
    const PolyGaussFn a = vpp - pg_mul_power(vp, 1);
    const PolyGaussFn b = pg_divide_r(vp);
    PolyGaussFn integrand = a * a + (b * b).scaled(static_cast<double>(N - 1));
    integrand = pg_shift_rate(integrand, 1.0);  // weight e^{-r^2}
    return sphere_area(N) * pg_integral_radial(integrand, N);
}

double sector_numerator(const PolyGaussFn& f, int N, int k) {
    if (k < 0) throw std::domain_error("sector_numerator: k must be >= 0");
    const int d = N + 2 * k;
    if (d < 2) throw std::domain_error("sector_numerator: N + 2k must be >= 2");
    if (f.is_zero()) return 0.0;
    const EnergyVector e = energies(f, d);
    return e.lap + e.x2_grad - 2.0 * k * e.l2;
}

double radial_gaussian_poincare_gap(const PolyGaussFn& v, int N) {
    if (v.is_zero()) return 0.0;
    const EnergyVector e = energies(v, N);
    const double S = sphere_area(N);
    const double mean_num = S * pg_integral_radial(pg_shift_rate(v, 0.5), N);
    const double z = std::pow(M_PI, 0.5 * N);  // int e^{-|x|^2} dx
    const double lhs = e.grad + e.x2_l2 - N * e.l2;
    const double rhs = 2.0 * (e.l2 - mean_num * mean_num / z);
    return lhs - rhs;
}

} // namespace hupstab
