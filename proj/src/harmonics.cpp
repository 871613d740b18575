#include "hupstab/harmonics.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "hupstab/functionals.hpp"

namespace hupstab {

void validate_separable(const SeparableFn& s) {
    if (s.ambient_dim < 2)
        throw std::invalid_argument("SeparableFn: ambient_dim must be >= 2");
    std::set<int> ks;
    for (const auto& c : s.components) {
        if (c.k < 0) throw std::invalid_argument("SeparableFn: k must be >= 0");
        if (!ks.insert(c.k).second)
            throw std::invalid_argument("SeparableFn: duplicate sector degree");
        if (!c.profile.is_zero() && c.profile.parity() != Parity::even)
            throw std::invalid_argument("SeparableFn: profiles must be even");
    }
}

double eigenvalue_ck(int k, int N) {
    if (k < 0 || N < 2) throw std::domain_error("eigenvalue_ck: need k >= 0, N >= 2");
    return static_cast<double>(k) * (k + N - 2);
}

double sector_energies(const SeparableFn& s, SectorEnergy which) {
    validate_separable(s);
    double sum = 0.0;
    for (const auto& c : s.components) {
        if (c.profile.is_zero()) continue;
        const int d = s.ambient_dim + 2 * c.k;
        const EnergyVector e = energies(c.profile, d);
        switch (which) {
            case SectorEnergy::grad: sum += e.grad; break;
            case SectorEnergy::lap: sum += e.lap; break;
            case SectorEnergy::l2: sum += e.l2; break;
            case SectorEnergy::x2_l2: sum += e.x2_l2; break;
            case SectorEnergy::x2_grad: sum += e.x2_grad - 2.0 * c.k * e.l2; break;
        }
    }
    return sum;
}

double sector_weighted_l2(const SeparableFn& s, double rate) {
    validate_separable(s);
    double sum = 0.0;
    for (const auto& c : s.components) {
        if (c.profile.is_zero()) continue;
        const int d = s.ambient_dim + 2 * c.k;
        PolyGaussFn f = pg_shift_rate(c.profile * c.profile, rate);
        sum += sphere_area(d) * pg_integral_radial(f, d);
    }
    return sum;
}

double sector_weighted_grad(const SeparableFn& s, double rate) {
    validate_separable(s);
    const int N = s.ambient_dim;
    double sum = 0.0;
    for (const auto& c : s.components) {
        if (c.profile.is_zero()) continue;
        // |grad u_k|^2 integrated over the sphere gives, per unit radius,
        // |S^{N-1+2k}| [ g'^2 + c_k g^2 / r^2 ] with g = v r^k; the weighted
        // radial integral stays in the ambient dimension N.
        const PolyGaussFn g = pg_mul_power(c.profile, c.k);
        const PolyGaussFn gp = pg_derivative(g);
        PolyGaussFn integrand = gp * gp;
        if (c.k >= 1) {
            const PolyGaussFn gr = pg_mul_power(c.profile, c.k - 1);  // g / r
            integrand = integrand + (gr * gr).scaled(eigenvalue_ck(c.k, N));
        }
        integrand = pg_shift_rate(integrand, rate);
        sum += sphere_area(N + 2 * c.k) * pg_integral_radial(integrand, N);
    }
    return sum;
}

namespace {

const double kPhi1Norm = std::sqrt(2.0 * M_PI);  // phi_1 = sqrt(2 pi) sigma_1
const double kPhi2Norm = 2.0 * M_PI;             // phi_2 = 2 pi sigma_1 sigma_2

// per-component data prepared once so the MC loop stays cheap
struct PreparedSector {
    int k;
    PolyGaussFn v, vp, vpp;
};

std::vector<PreparedSector> prepare(const SeparableFn& s, int kmax_concrete) {
    std::vector<PreparedSector> out;
    for (const auto& c : s.components) {
        if (c.profile.is_zero()) continue;
        if (c.k > kmax_concrete)
            throw std::invalid_argument(
                "harmonics: unsupported sector (no concrete harmonic for k > 2)");
        PreparedSector p;
        p.k = c.k;
        p.v = c.profile;
        p.vp = pg_derivative(c.profile);
        p.vpp = pg_derivative(p.vp);
        out.push_back(std::move(p));
    }
    return out;
}

CartesianEval eval_prepared(const std::vector<PreparedSector>& comps, int N,
                            const std::vector<double>& x) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    const double r = std::max(std::sqrt(r2), 1e-150);

    CartesianEval out;
    out.grad.assign(N, 0.0);
    for (const auto& c : comps) {
        const double v = c.v.evaluate(r);
        const double vp = c.vp.evaluate(r);
        const double vpp = c.vpp.evaluate(r);
        const double rad_lap = vpp + (N + 2 * c.k - 1) * vp / r;
        if (c.k == 0) {
            out.value += v;
            for (int i = 0; i < N; ++i) out.grad[i] += vp * x[i] / r;
            out.lap += rad_lap;
        } else if (c.k == 1) {
            const double A = kPhi1Norm;  // u = A v(r) x_1
            out.value += A * v * x[0];
            for (int i = 0; i < N; ++i) out.grad[i] += A * vp * x[0] * x[i] / r;
            out.grad[0] += A * v;
            out.lap += A * x[0] * rad_lap;
        } else {
            const double A = kPhi2Norm;  // u = A v(r) x_1 x_2
            out.value += A * v * x[0] * x[1];
            for (int i = 0; i < N; ++i) out.grad[i] += A * vp * x[0] * x[1] * x[i] / r;
            out.grad[0] += A * v * x[1];
            out.grad[1] += A * v * x[0];
            out.lap += A * x[0] * x[1] * rad_lap;
        }
    }
    return out;
}

} // namespace

CartesianEval eval_cartesian(const SeparableFn& s, const std::vector<double>& x) {
    validate_separable(s);
    const int N = s.ambient_dim;
    if (static_cast<int>(x.size()) != N)
        throw std::invalid_argument("eval_cartesian: point dimension mismatch");
    return eval_prepared(prepare(s, 2), N, x);
}

MCOracleResult direct_energies_mc(const SeparableFn& s, SectorEnergy which,
                                  std::int64_t samples, std::uint64_t seed) {
    validate_separable(s);
    if (s.ambient_dim != 2 && s.ambient_dim != 3)
        throw std::domain_error("direct_energies_mc: ambient_dim must be 2 or 3");
    const auto comps = prepare(s, 2);
    const int N = s.ambient_dim;
    auto f = [&](const std::vector<double>& x) {
        const CartesianEval e = eval_prepared(comps, N, x);
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        switch (which) {
            case SectorEnergy::l2: return e.value * e.value;
            case SectorEnergy::x2_l2: return r2 * e.value * e.value;
            case SectorEnergy::lap: return e.lap * e.lap;
            case SectorEnergy::grad:
            case SectorEnergy::x2_grad: {
                double g2 = 0.0;
                for (double g : e.grad) g2 += g * g;
                return which == SectorEnergy::grad ? g2 : r2 * g2;
            }
        }
        return 0.0;
    };
    return mc_fullspace(f, N, samples, seed);
}

PolyGaussFn lift_w(const PolyGaussFn& v_k, int N, int k) {
    if (k < 0 || N < 1) throw std::domain_error("lift_w: need k >= 0, N >= 1");
    if (v_k.is_zero()) return {};
    if (v_k.parity() != Parity::even)
        throw std::invalid_argument("lift_w: requires even parity");
    const int d = N + 2 * k;
    const double c = std::sqrt(sphere_area(d) / sphere_area(d + 2));
    return pg_divide_r(pg_derivative(v_k)).scaled(c);
}

double x2grad_decomposition_check(const PolyGaussFn& v_k, int N, int k) {
    if (k < 0) throw std::domain_error("x2grad_decomposition_check: k >= 0");
    const int d = N + 2 * k;
    if (d < 2) throw std::domain_error("x2grad_decomposition_check: N + 2k >= 2");
    if (v_k.is_zero()) return 0.0;
    const double S = sphere_area(d);
    const PolyGaussFn vp = pg_derivative(v_k);
    const PolyGaussFn vp2 = vp * vp;
    const double grad_x2 = S * pg_integral_radial(pg_mul_power(vp2, 2), d);
    const double l2 = S * pg_integral_radial(v_k * v_k, d);
    const double lhs = grad_x2 - 2.0 * k * l2;

    const double dd = static_cast<double>(d);
    const double coercive = (dd * dd - 8.0 * k) / (dd * dd);
    const double s2k = std::sqrt(2.0 * k);
    PolyGaussFn sq = pg_mul_power(vp, 1).scaled(2.0 * s2k / dd) + v_k.scaled(s2k);
    const double rhs = coercive * grad_x2 + S * pg_integral_radial(sq * sq, d);
    // normalize by the positive ingredients, not the (possibly cancelling)
    // sides themselves
    const double scale = std::max(grad_x2 + 2.0 * k * l2, 1e-300);
    return std::abs(lhs - rhs) / scale;
}

} // namespace hupstab
