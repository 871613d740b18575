#include "hupstab/manifold.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hupstab/functionals.hpp"

namespace hupstab {

namespace {

constexpr double kLogBracketLo = -3.0 * 2.302585092994046;  // log 1e-3
constexpr double kLogBracketHi = 3.0 * 2.302585092994046;   // log 1e3
constexpr int kCoarsePoints = 61;
constexpr double kGoldenTol = 1e-10;

struct ScanOutcome {
    double log_beta = 0.0;
    double obj = 0.0;
    bool converged = false;
    long evaluations = 0;
};

// coarse grid over [lo, hi] in log beta, endpoint-escape expansion (10x, at
// most twice), then golden-section under the local-unimodality assumption
ScanOutcome minimize_log_beta(const std::function<double(double)>& obj) {
    double lo = kLogBracketLo, hi = kLogBracketHi;
    long evals = 0;
    int best_i = 0;
    double best_v = 0.0;
    std::vector<double> grid(kCoarsePoints), val(kCoarsePoints);
    for (int expand = 0;; ++expand) {
        best_i = 0;
        for (int i = 0; i < kCoarsePoints; ++i) {
            grid[i] = lo + (hi - lo) * i / (kCoarsePoints - 1);
            val[i] = obj(grid[i]);
            ++evals;
            if (val[i] < val[best_i]) best_i = i;
        }
        best_v = val[best_i];
        if (best_i != 0 && best_i != kCoarsePoints - 1) break;
        if (expand >= 2) {
            // stuck at an endpoint: report the best seen, flag non-convergence
            return {grid[best_i], best_v, false, evals};
        }
        // push the stuck end one decade further out
        const double decade = 2.302585092994046;
        if (best_i == 0) lo -= decade; else hi += decade;
    }
    double a = grid[best_i - 1], b = grid[best_i + 1];
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = obj(x1), f2 = obj(x2);
    evals += 2;
    while (b - a > kGoldenTol) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a);
            f1 = obj(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a);
            f2 = obj(x2);
        }
        ++evals;
    }
    const double xm = 0.5 * (a + b);
    return {xm, obj(xm), true, evals + 1};
}

// gradient-seminorm data against g_beta = e^{-beta r^2 / 2}
double grad_gaussian(double beta, int N) {
    return 0.5 * N * std::pow(M_PI, 0.5 * N) * std::pow(beta, 1.0 - 0.5 * N);
}

double l2_gaussian(double beta, int N) {
    return std::pow(M_PI, 0.5 * N) * std::pow(beta, -0.5 * N);
}

} // namespace

DistanceResult dist_grad_to_shup(const PolyGaussFn& u, int N) {
    DistanceResult out;
    out.metric = Metric::grad_seminorm;
    const EnergyVector e = u.is_zero() ? EnergyVector{} : energies(u, N);
    if (e.grad <= 0.0) {
        // degenerate: u constant in the seminorm, the zero member attains 0
        out.converged = true;
        out.alpha_star = 0.0;
        return out;
    }
    const double S = sphere_area(N);
    const PolyGaussFn h = pg_mul_power(pg_derivative(u), 1);  // r u'(r), even
    auto inner = [&](double beta) {
        // <grad u, grad g_beta> = -beta S int u' r e^{-beta r^2/2} r^{N-1} dr
        return -beta * S * pg_integral_radial(pg_shift_rate(h, 0.5 * beta), N);
    };
    auto obj = [&](double lb) {
        const double beta = std::exp(lb);
        const double ip = inner(beta);
        return e.grad - ip * ip / grad_gaussian(beta, N);
    };
    const ScanOutcome sc = minimize_log_beta(obj);
    out.beta_star = std::exp(sc.log_beta);
    out.alpha_star = inner(out.beta_star) / grad_gaussian(out.beta_star, N);
    out.value_sq = std::max(0.0, sc.obj);
    out.converged = sc.converged;
    out.evaluations = sc.evaluations;
    return out;
}

DistanceResult dist_l2_to_hup(const PolyGaussFn& u, int N) {
    DistanceResult out;
    out.metric = Metric::l2;
    const EnergyVector e = u.is_zero() ? EnergyVector{} : energies(u, N);
    if (e.l2 <= 0.0) {
        out.converged = true;
        return out;
    }
    const double S = sphere_area(N);
    auto inner = [&](double beta) {
        return S * pg_integral_radial(pg_shift_rate(u, 0.5 * beta), N);
    };
    auto obj = [&](double lb) {
        const double beta = std::exp(lb);
        const double ip = inner(beta);
        return e.l2 - ip * ip / l2_gaussian(beta, N);
    };
    const ScanOutcome sc = minimize_log_beta(obj);
    out.beta_star = std::exp(sc.log_beta);
    out.alpha_star = inner(out.beta_star) / l2_gaussian(out.beta_star, N);
    out.value_sq = std::max(0.0, sc.obj);
    out.converged = sc.converged;
    out.evaluations = sc.evaluations;
    return out;
}

DistanceResult dist_grad_norm_matched(const PolyGaussFn& u, int N) {
    DistanceResult out;
    out.metric = Metric::grad_seminorm_norm_matched;
    const EnergyVector e = u.is_zero() ? EnergyVector{} : energies(u, N);
    if (e.grad <= 0.0)
        throw std::invalid_argument("dist_grad_norm_matched: zero gradient seminorm");
    const double S = sphere_area(N);
    const PolyGaussFn h = pg_mul_power(pg_derivative(u), 1);
    auto inner = [&](double beta) {
        return -beta * S * pg_integral_radial(pg_shift_rate(h, 0.5 * beta), N);
    };
    auto alpha_of = [&](double beta, double ip) {
        // |alpha| fixed by ||grad u*|| = ||grad u||; the sign follows the
        // inner product to maximize alignment
        const double a = std::sqrt(e.grad / grad_gaussian(beta, N));
        return ip >= 0.0 ? a : -a;
    };
    auto obj = [&](double lb) {
        const double beta = std::exp(lb);
        const double ip = inner(beta);
        const double a = alpha_of(beta, ip);
        return 2.0 * e.grad - 2.0 * a * ip;
    };
    const ScanOutcome sc = minimize_log_beta(obj);
    out.beta_star = std::exp(sc.log_beta);
    out.alpha_star = alpha_of(out.beta_star, inner(out.beta_star));
    out.value_sq = std::max(0.0, sc.obj);
    out.converged = sc.converged;
    out.evaluations = sc.evaluations;
    return out;
}

DistanceResult dist_vector_cfhup(const PolyGaussFn& potential, int N, VectorMetric m) {
    DistanceResult out = m == VectorMetric::l2
                             ? dist_grad_to_shup(potential, N)
                             : dist_grad_norm_matched(potential, N);
    out.metric = Metric::vector_l2;
    return out;
}

double dist_grad_pinned_sq(const PolyGaussFn& u, int N) {
    if (u.is_zero()) return 0.0;
    const EnergyVector e = energies(u, N);
    const double S = sphere_area(N);
    const PolyGaussFn h = pg_mul_power(pg_derivative(u), 1);
    const double ip = -S * pg_integral_radial(pg_shift_rate(h, 0.5), N);
    return std::max(0.0, e.grad - ip * ip / grad_gaussian(1.0, N));
}

DistanceResult dist_d2_partial(const SeparableFn& s) {
    validate_separable(s);
    DistanceResult out;
    out.metric = Metric::d2_partial;
    const int N = s.ambient_dim;
    PolyGaussFn v0, v1;
    for (const auto& c : s.components) {
        if (c.k == 0) v0 = c.profile;
        else if (c.k == 1) v1 = c.profile;
        else throw std::invalid_argument("dist_d2_partial: sectors must lie in {0,1}");
    }
    const double S0 = sphere_area(N), S1 = sphere_area(N + 2);
    const double l2_0 = v0.is_zero() ? 0.0 : S0 * pg_integral_radial(v0 * v0, N);
    const double l2_1 = v1.is_zero() ? 0.0 : S1 * pg_integral_radial(v1 * v1, N + 2);
    auto ip0 = [&](double beta) {
        return v0.is_zero() ? 0.0 : S0 * pg_integral_radial(pg_shift_rate(v0, 0.5 * beta), N);
    };
    auto ip1 = [&](double beta) {
        return v1.is_zero() ? 0.0 : S1 * pg_integral_radial(pg_shift_rate(v1, 0.5 * beta), N + 2);
    };
    // D(beta) = 2 ||v0 - c G||^2_{R^N} + ||v1||^2 + ||v1 - delta G||^2_{R^{N+2}}
    auto obj = [&](double lb) {
        const double beta = std::exp(lb);
        const double g0 = l2_gaussian(beta, N), g1 = l2_gaussian(beta, N + 2);
        const double a0 = ip0(beta), a1 = ip1(beta);
        return 2.0 * (l2_0 - a0 * a0 / g0) + l2_1 + (l2_1 - a1 * a1 / g1);
    };
    if (l2_0 + l2_1 <= 0.0) {
        out.converged = true;
        return out;
    }
    const ScanOutcome sc = minimize_log_beta(obj);
    out.beta_star = std::exp(sc.log_beta);
    out.alpha_star = ip0(out.beta_star) / l2_gaussian(out.beta_star, N);
    out.value_sq = std::max(0.0, sc.obj);
    out.converged = sc.converged;
    out.evaluations = sc.evaluations;
    return out;
}

} // namespace hupstab
