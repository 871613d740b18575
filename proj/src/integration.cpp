#include "hupstab/integration.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hupstab/rng.hpp"

namespace hupstab {

double sphere_area(int d) {
    if (d < 1) throw std::domain_error("sphere_area: d must be >= 1");
    return std::exp(std::log(2.0) + 0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d));
}

RadialProfile profile_from(const PolyGaussFn& f) {
    PolyGaussFn f1 = pg_derivative(f);
    PolyGaussFn f2 = pg_derivative(f1);
    // pick r_max so that the slowest Gaussian rate has decayed past ~e^-60
    double bmin = 1e300;
    size_t degmax = 0;
    for (const auto& t : f.terms()) {
        bmin = std::min(bmin, t.beta);
        degmax = std::max(degmax, t.coeffs.size());
    }
    double rmax = 15.0;
    if (!f.is_zero()) {
        rmax = std::sqrt(60.0 / bmin);
        for (int it = 0; it < 4; ++it)
            rmax = std::sqrt((60.0 + (2.0 * degmax + 4.0) * std::log(std::max(rmax, 2.0))) / bmin);
    }
    return {[f](double r) { return f.evaluate(r); },
            [f1](double r) { return f1.evaluate(r); },
            [f2](double r) { return f2.evaluate(r); },
            rmax};
}

void validate_profile(const RadialProfile& p) {
    const double h = 1e-5;
    for (int i = 1; i <= 10; ++i) {
        const double r = p.r_max * i / 12.0 + 0.05;
        const double fd1 = (p.value(r + h) - p.value(r - h)) / (2.0 * h);
        const double fd2 = (p.d1(r + h) - p.d1(r - h)) / (2.0 * h);
        const double s1 = std::max({std::abs(fd1), std::abs(p.d1(r)), 1e-12});
        const double s2 = std::max({std::abs(fd2), std::abs(p.d2(r)), 1e-12});
        if (std::abs(fd1 - p.d1(r)) > 1e-6 * s1 + 1e-9 ||
            std::abs(fd2 - p.d2(r)) > 1e-6 * s2 + 1e-9)
            throw std::invalid_argument("RadialProfile: derivatives inconsistent with value");
    }
}

namespace {

// 10-point Gauss-Legendre on [-1, 1]
const double kGlX[5] = {0.14887433898163121, 0.43339539412924719, 0.67940956829902441,
                        0.86506336668898451, 0.97390652851717172};
const double kGlW[5] = {0.29552422471475287, 0.26926671930999635, 0.21908636251598204,
                        0.14945134915058059, 0.06667134430868814};

double panel(const std::function<double(double)>& g, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i)
        s += kGlW[i] * (g(c + h * kGlX[i]) + g(c - h * kGlX[i]));
    return s * h;
}

} // namespace

QuadResult quad_radial(const std::function<double(double)>& f, double r_max, int d,
                       int nodes) {
    if (d < 1) throw std::domain_error("quad_radial: d must be >= 1");
    if (nodes < 20) nodes = 20;
    // r_max is a decay hint for f alone; the r^{d-1} weight pushes the
    // effective support outward
    r_max *= std::sqrt(1.0 + (d - 1) / 8.0);
    // Composite Gauss-Legendre in r. The integrand f(r) r^{d-1} is smooth in
    // r for every d >= 1, whereas the t = r^2 substitution leaves a
    // half-integer power t^{d/2-1} in odd dimensions that caps the accuracy
    // three orders below the target.
    auto g = [&](double r) { return f(r) * std::pow(r, d - 1); };
    const int panels = nodes / 10;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i)
        sum += panel(g, r_max * i / panels, r_max * (i + 1) / panels);
    // crude tail bound: integrand at the cutoff times one more r_max of width
    const double tail = std::abs(g(r_max)) * r_max;
    QuadResult out;
    out.value = sum;
    out.accuracy_warning = tail > 1e-6 * std::max(std::abs(sum), 1e-300);
    return out;
}

QuadResult quad_radial(const RadialProfile& p, int d, int nodes) {
    return quad_radial(p.value, p.r_max, d, nodes);
}

MCOracleResult mc_fullspace(const std::function<double(const std::vector<double>&)>& f,
                            int N, std::int64_t samples, std::uint64_t seed) {
    if (N < 1 || N > 3)
        throw std::domain_error("mc_fullspace: N must be in {1,2,3}");
    if (samples < 1) throw std::domain_error("mc_fullspace: samples must be >= 1");

    CounterRng pilot_rng(seed, 1);
    std::vector<double> x(N);

    auto draw = [&](const CounterRng& rng, std::int64_t i, double sigma) {
        for (int j = 0; j < N; ++j)
            x[j] = sigma * rng.normal(static_cast<std::uint64_t>(i) * N + j);
    };

    // pilot run with unit proposal to size the main proposal from the
    // integrand's second moment
    double w_abs = 0.0, w_r2 = 0.0;
    const std::int64_t pilot_n = 10000;
    const double log_norm1 = -0.5 * N * std::log(2.0 * M_PI);
    for (std::int64_t i = 0; i < pilot_n; ++i) {
        draw(pilot_rng, i, 1.0);
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        const double p = std::exp(log_norm1 - 0.5 * r2);
        const double w = std::abs(f(x)) / p;
        w_abs += w;
        w_r2 += w * r2;
    }
    double sigma2 = w_abs > 0.0 ? w_r2 / (w_abs * N) : 1.0;
    sigma2 = std::min(16.0, std::max(0.0625, sigma2));
    const double sigma = std::sqrt(sigma2);

    CounterRng rng(seed, 2);
    const double log_norm = -0.5 * N * std::log(2.0 * M_PI * sigma2);
    double sum = 0.0, sum2 = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        draw(rng, i, sigma);
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        const double p = std::exp(log_norm - 0.5 * r2 / sigma2);
        const double w = f(x) / p;
        sum += w;
        sum2 += w * w;
    }
    MCOracleResult out;
    out.samples = samples;
    out.seed = seed;
    out.estimate = sum / samples;
    const double var = std::max(0.0, sum2 / samples - out.estimate * out.estimate);
    out.std_error = std::sqrt(var / samples);
    return out;
}

} // namespace hupstab
