#include "hupstab/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "hupstab/dd.hpp"
#include "hupstab/functionals.hpp"
#include "hupstab/polygauss.hpp"

namespace hupstab {

using detail::dd;

double lower_bound(double N, int k) {
    if (k < 0) throw std::domain_error("lower_bound: k must be >= 0");
    if (N < 2.0) throw std::domain_error("lower_bound: N must be >= 2");
    const double d = N + 2.0 * k;
    const double rad = d * d - 8.0 * k;
    return 4.0 * k * (N + k - 2.0) / (std::sqrt(rad) + N);
}

double k_of_n(double N) {
    if (N < 2.0) throw std::domain_error("k_of_n: N must be >= 2");
    return (4.0 * N - 4.0) / (std::sqrt(N * N + 4.0 * N - 4.0) + N);
}

double gaussian_quotient(int N, int k) {
    if (N < 2 || k < 0) throw std::domain_error("gaussian_quotient: need N >= 2, k >= 0");
    const PolyGaussFn g = PolyGaussFn::gaussian(1.0, 1.0);
    const double num = sector_numerator(g, N, k);
    const double grad = energies(g, N + 2 * k).grad;
    return num / grad - (N + 2);
}

// ---------------------------------------------------------------------------
// pencil assembly in double-double arithmetic
// ---------------------------------------------------------------------------

namespace {

struct Mono {  // coefficient of r^power inside a fixed Gaussian factor
    int power;
    dd coeff;
};

// generalized Laguerre coefficient table in t = s r^2, via the three-term
// recurrence; row n holds the t^i coefficients of L_n^{(nu)}
std::vector<std::vector<dd>> laguerre_rows(int m, double nu) {
    std::vector<std::vector<dd>> rows;
    rows.push_back({dd(1.0)});
    if (m > 1) rows.push_back({dd(1.0 + nu), dd(-1.0)});
    for (int n = 1; n + 1 < m; ++n) {
        const auto& prev = rows[n - 1];
        const auto& cur = rows[n];
        std::vector<dd> nxt(n + 2);
        for (int i = 0; i <= n + 1; ++i) {
            dd a = i < static_cast<int>(cur.size()) ? dd(2.0 * n + nu + 1.0) * cur[i] : dd(0.0);
            dd b = (i >= 1 && i - 1 < static_cast<int>(cur.size())) ? cur[i - 1] : dd(0.0);
            dd c = i < static_cast<int>(prev.size()) ? dd(n + nu) * prev[i] : dd(0.0);
            nxt[i] = (a - b - c) / dd(n + 1.0);
        }
        rows.push_back(std::move(nxt));
    }
    return rows;
}

std::vector<Mono> derivative_monos(const std::vector<dd>& poly, dd s) {
    // d/dr [ sum c_i r^{2i} e^{-s r^2/2} ] -> coefficients of odd powers
    std::vector<Mono> out;
    for (int i = 0; i < static_cast<int>(poly.size()); ++i) {
        if (i > 0) out.push_back({2 * i - 1, dd(2.0 * i) * poly[i]});
        out.push_back({2 * i + 1, -s * poly[i]});
    }
    return out;
}

std::vector<Mono> laplacian_monos(const std::vector<dd>& poly, dd s, int d) {
    std::vector<Mono> out;
    for (int i = 0; i < static_cast<int>(poly.size()); ++i) {
        if (i > 0) out.push_back({2 * i - 2, dd(2.0 * i) * dd(2.0 * i + d - 2.0) * poly[i]});
        out.push_back({2 * i, -s * dd(4.0 * i + d) * poly[i]});
        out.push_back({2 * i + 2, s * s * poly[i]});
    }
    return out;
}

std::vector<Mono> value_monos(const std::vector<dd>& poly) {
    std::vector<Mono> out;
    for (int i = 0; i < static_cast<int>(poly.size()); ++i) out.push_back({2 * i, poly[i]});
    return out;
}

// moments M[p] = int_0^inf r^p e^{-s r^2} dr by the exact recurrence
std::vector<dd> moment_table(dd s, int pmax) {
    std::vector<dd> M(pmax + 1);
    M[0] = detail::dd_sqrt(detail::dd_pi / s) / dd(2.0);
    if (pmax >= 1) M[1] = dd(1.0) / (dd(2.0) * s);
    for (int p = 0; p + 2 <= pmax; ++p) M[p + 2] = dd(p + 1.0) / (dd(2.0) * s) * M[p];
    return M;
}

dd pair_integral(const std::vector<Mono>& a, const std::vector<Mono>& b,
                 const std::vector<dd>& M, int shift) {
    dd sum(0.0);
    for (const auto& ma : a)
        for (const auto& mb : b) sum += ma.coeff * mb.coeff * M[ma.power + mb.power + shift];
    return sum;
}

} // namespace

RayleighPencil assemble_rayleigh(int N, int k, int m, double scale) {
    if (N < 2 || k < 0) throw std::domain_error("assemble_rayleigh: need N >= 2, k >= 0");
    if (m < 1) throw std::domain_error("assemble_rayleigh: m must be >= 1");
    if (scale <= 0.0) throw std::domain_error("assemble_rayleigh: scale must be > 0");
    const int d = N + 2 * k;
    const dd s(scale);
    const double nu = 0.5 * d - 1.0;

    const auto rows = laguerre_rows(m, nu);
    // fold t^i = (s r^2)^i into r^{2i} monomial coefficients
    std::vector<std::vector<dd>> polys(m);
    for (int j = 0; j < m; ++j) {
        polys[j].resize(rows[j].size());
        dd spow(1.0);
        for (size_t i = 0; i < rows[j].size(); ++i) {
            polys[j][i] = rows[j][i] * spow;
            spow *= s;
        }
    }

    const auto M = moment_table(s, 4 * m + d + 8);
    const double S = sphere_area(d);

    std::vector<std::vector<Mono>> vals(m), ders(m), laps(m);
    for (int j = 0; j < m; ++j) {
        vals[j] = value_monos(polys[j]);
        ders[j] = derivative_monos(polys[j], s);
        laps[j] = laplacian_monos(polys[j], s, d);
    }

    RayleighPencil P;
    P.N = N; P.k = k; P.m = m; P.scale = scale;
    P.A.assign(m, std::vector<double>(m, 0.0));
    P.B.assign(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const dd grad = pair_integral(ders[i], ders[j], M, d - 1);
            const dd lap = pair_integral(laps[i], laps[j], M, d - 1);
            const dd x2g = pair_integral(ders[i], ders[j], M, d + 1);
            const dd l2 = pair_integral(vals[i], vals[j], M, d - 1);
            const double a = S * static_cast<double>(lap + x2g - dd(2.0 * k) * l2);
            const double b = S * static_cast<double>(grad);
            P.A[i][j] = P.A[j][i] = a;
            P.B[i][j] = P.B[j][i] = b;
        }
    // both forms are positive definite in exact arithmetic; a nonpositive or
    // nonfinite diagonal means the cancellation exceeded the double-double
    // headroom (large d together with large m)
    for (int i = 0; i < m; ++i)
        if (!(P.A[i][i] > 0.0) || !(P.B[i][i] > 0.0) || !std::isfinite(P.A[i][i]) ||
            !std::isfinite(P.B[i][i]))
            throw std::runtime_error(
                "assemble_rayleigh: assembly exceeded precision headroom; reduce the "
                "basis size");
    return P;
}

// ---------------------------------------------------------------------------
// symmetric reduction + cyclic Jacobi
// ---------------------------------------------------------------------------

namespace {

constexpr double kPivotDropTol = 1e-10;

// lower Cholesky of a symmetric positive definite matrix with unit-ish
// diagonal; throws on pivot collapse
Matrix cholesky(const Matrix& B) {
    const int n = static_cast<int>(B.size());
    Matrix L(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j) {
        double diag = B[j][j];
        for (int t = 0; t < j; ++t) diag -= L[j][t] * L[j][t];
        if (diag < kPivotDropTol)
            throw std::runtime_error(
                "min_generalized_eig: B numerically singular beyond drop tolerance; "
                "reduce the basis size or change the scale");
        L[j][j] = std::sqrt(diag);
        for (int i = j + 1; i < n; ++i) {
            double v = B[i][j];
            for (int t = 0; t < j; ++t) v -= L[i][t] * L[j][t];
            L[i][j] = v / L[j][j];
        }
    }
    return L;
}

void jacobi_eigen(Matrix& C, Matrix& V) {
    const int n = static_cast<int>(C.size());
    V.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) V[i][i] = 1.0;
    double fro = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fro += C[i][j] * C[i][j];
    fro = std::sqrt(fro);
    const double tol = 1e-12 * std::max(fro, 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * C[i][j] * C[i][j];
        if (std::sqrt(off) <= tol) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(C[p][q]) <= 1e-300) continue;
                const double theta = (C[q][q] - C[p][p]) / (2.0 * C[p][q]);
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                for (int i = 0; i < n; ++i) {
                    const double cip = C[i][p], ciq = C[i][q];
                    C[i][p] = c * cip - sn * ciq;
                    C[i][q] = sn * cip + c * ciq;
                }
                for (int i = 0; i < n; ++i) {
                    const double cpi = C[p][i], cqi = C[q][i];
                    C[p][i] = c * cpi - sn * cqi;
                    C[q][i] = sn * cpi + c * cqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = V[i][p], viq = V[i][q];
                    V[i][p] = c * vip - sn * viq;
                    V[i][q] = sn * vip + c * viq;
                }
            }
    }
}

} // namespace

EigResult min_generalized_eig(const Matrix& A, const Matrix& B) {
    const int n = static_cast<int>(A.size());
    if (n == 0 || B.size() != A.size())
        throw std::invalid_argument("min_generalized_eig: size mismatch");
    // diagonal prescale D = diag(B)^{-1/2} standardizes the pencil
    std::vector<double> dsc(n);
    for (int i = 0; i < n; ++i) {
        if (B[i][i] <= 0.0)
            throw std::runtime_error("min_generalized_eig: nonpositive diagonal in B");
        dsc[i] = 1.0 / std::sqrt(B[i][i]);
    }
    Matrix A2(n, std::vector<double>(n)), B2(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            A2[i][j] = A[i][j] * dsc[i] * dsc[j];
            B2[i][j] = B[i][j] * dsc[i] * dsc[j];
        }
    const Matrix L = cholesky(B2);
    // Linv by forward substitution on unit columns
    Matrix Li(n, std::vector<double>(n, 0.0));
    for (int c = 0; c < n; ++c) {
        Li[c][c] = 1.0 / L[c][c];
        for (int i = c + 1; i < n; ++i) {
            double v = 0.0;
            for (int t = c; t < i; ++t) v += L[i][t] * Li[t][c];
            Li[i][c] = -v / L[i][i];
        }
    }
    // C = Li A2 Li^T, symmetrized
    Matrix T(n, std::vector<double>(n, 0.0)), C(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int t = 0; t <= i; ++t) v += Li[i][t] * A2[t][j];
            T[i][j] = v;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int t = 0; t <= j; ++t) v += T[i][t] * Li[j][t];
            C[i][j] = v;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (C[i][j] + C[j][i]);
            C[i][j] = C[j][i] = v;
        }
    Matrix V;
    jacobi_eigen(C, V);
    int imin = 0;
    for (int i = 1; i < n; ++i)
        if (C[i][i] < C[imin][imin]) imin = i;
    EigResult out;
    out.lambda_min = C[imin][imin];
    // x = D L^{-T} y
    out.coeffs.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double v = 0.0;
        for (int t = i; t < n; ++t) v += Li[t][i] * V[t][imin];
        out.coeffs[i] = dsc[i] * v;
    }
    return out;
}

// ---------------------------------------------------------------------------
// estimates
// ---------------------------------------------------------------------------

namespace {

std::vector<double> default_scales() {
    std::vector<double> s;
    const double lo = std::log(0.2), hi = std::log(2.0);
    for (int i = 0; i < 9; ++i) s.push_back(std::exp(lo + (hi - lo) * i / 8.0));
    return s;
}

} // namespace

StabilityEstimate estimate_C(int N, int k, const EstimateOptions& opts) {
    StabilityEstimate est;
    est.N = N;
    est.k = k;
    est.lower = lower_bound(N, k);
    est.upper = 2.0 * k;
    est.gaussian_quotient = hupstab::gaussian_quotient(N, k);
    est.reference = k == 1 ? std::sqrt(N * N + 4.0 * N - 4.0) - N : std::nan("");
    if (N + 2 * k > 60) {
        est.value = std::nan("");
        est.diagnostics = "dimension cap: N + 2k > 60, closed-form bounds only";
        return est;
    }
    const auto scales = opts.scale_list.empty() ? default_scales() : opts.scale_list;
    const auto& ms = opts.m_list;
    if (ms.empty()) throw std::invalid_argument("estimate_C: empty m_list");
    const int m_last = ms.back();

    double best = std::nan("");
    double best_scale = 0.0, best_prev = std::nan("");
    std::vector<double> best_coeffs;
    int failures = 0;
    for (double s : scales) {
        double prev = std::nan("");
        double lam = std::nan("");
        EigResult eig;
        try {
            for (int m : ms) {
                const RayleighPencil P = assemble_rayleigh(N, k, m, s);
                eig = min_generalized_eig(P.A, P.B);
                prev = lam;
                lam = eig.lambda_min;
                // the quotient is variationally >= N+2; anything below signals
                // a corrupted pencil that slipped past the pivot check
                if (!(lam >= N + 2 - 1e-6))
                    throw std::runtime_error("estimate_C: implausible eigenvalue");
            }
        } catch (const std::runtime_error&) {
            ++failures;
            continue;
        }
        if (std::isnan(best) || lam < best) {
            best = lam;
            best_prev = prev;
            best_scale = s;
            best_coeffs = eig.coeffs;
        }
    }
    if (std::isnan(best)) {
        est.diagnostics = "conditioning failure at every scale";
        est.value = std::nan("");
        return est;
    }
    est.value = best - (N + 2);
    est.scale = best_scale;
    est.basis_size = m_last;
    est.coeffs = std::move(best_coeffs);
    est.refinement_change = std::isnan(best_prev) ? std::nan("") : std::abs(best - best_prev);
    const bool sandwich = est.value >= est.lower - 1e-6 &&
                          est.value <= std::min(est.upper, est.gaussian_quotient) + 1e-6;
    est.converged = sandwich && !std::isnan(est.refinement_change) &&
                    est.refinement_change < opts.refine_tol;
    if (failures > 0)
        est.diagnostics = std::to_string(failures) + " scale(s) dropped for conditioning";
    if (!sandwich) est.diagnostics += (est.diagnostics.empty() ? "" : "; ") + std::string("sandwich violated");
    return est;
}

StabilityEstimate estimate_C_N(int N, int kmax, const EstimateOptions& opts) {
    if (kmax < 2) throw std::domain_error("estimate_C_N: kmax must be >= 2");
    StabilityEstimate est = estimate_C(N, 1, opts);
    est.certificate_ok = !std::isnan(est.value);
    for (int j = 2; j <= kmax; ++j) {
        const double lb = lower_bound(N, j);
        est.certificate.push_back(lb);
        if (!(lb > est.value)) est.certificate_ok = false;
    }
    if (!est.certificate_ok)
        est.diagnostics += (est.diagnostics.empty() ? "" : "; ") +
                           std::string("C(N)=C(N,1) certificate failed");
    return est;
}

RadialProfile minimizer_profile(const StabilityEstimate& est) {
    if (est.coeffs.empty())
        throw std::invalid_argument("minimizer_profile: estimate carries no coefficients");
    const int d = est.N + 2 * est.k;
    const double nu = 0.5 * d - 1.0;
    const double s = est.scale;
    const int m = static_cast<int>(est.coeffs.size());
    const std::vector<double> y = est.coeffs;

    // upward recurrences for L^{(a)}_0..L^{(a)}_{n}(t); stable for t >= 0
    auto lag = [](double a, double t, int n, std::vector<double>& out) {
        out.resize(n + 1);
        out[0] = 1.0;
        if (n >= 1) out[1] = 1.0 + a - t;
        for (int j = 1; j < n; ++j)
            out[j + 1] = ((2.0 * j + a + 1.0 - t) * out[j] - (j + a) * out[j - 1]) / (j + 1.0);
    };

    auto value = [=](double r) {
        std::vector<double> L0;
        const double t = s * r * r;
        lag(nu, t, m - 1, L0);
        double acc = 0.0;
        for (int j = 0; j < m; ++j) acc += y[j] * L0[j];
        return acc * std::exp(-0.5 * t);
    };
    auto d1 = [=](double r) {
        std::vector<double> L0, L1;
        const double t = s * r * r;
        lag(nu, t, m - 1, L0);
        lag(nu + 1.0, t, m - 1, L1);
        double acc = 0.0;
        for (int j = 0; j < m; ++j) {
            const double lp = j >= 1 ? -L1[j - 1] : 0.0;  // dL_j/dt
            acc += y[j] * (lp - 0.5 * L0[j]);
        }
        return acc * 2.0 * s * r * std::exp(-0.5 * t);
    };
    auto d2 = [=](double r) {
        std::vector<double> L0, L1, L2;
        const double t = s * r * r;
        lag(nu, t, m - 1, L0);
        lag(nu + 1.0, t, m - 1, L1);
        lag(nu + 2.0, t, m - 1, L2);
        double acc1 = 0.0, acc2 = 0.0;
        for (int j = 0; j < m; ++j) {
            const double lp = j >= 1 ? -L1[j - 1] : 0.0;
            const double lpp = j >= 2 ? L2[j - 2] : 0.0;
            acc1 += y[j] * (lp - 0.5 * L0[j]);
            acc2 += y[j] * (lpp - lp + 0.25 * L0[j]);
        }
        return (2.0 * s * acc1 + 4.0 * s * s * r * r * acc2) * std::exp(-0.5 * t);
    };

    RadialProfile p;
    p.value = value;
    p.d1 = d1;
    p.d2 = d2;
    // reach of the slowest Gaussian envelope e^{-s r^2 / 2} with the
    // polynomial degree folded in
    double rmax = std::sqrt(140.0 / s);
    for (int it = 0; it < 4; ++it)
        rmax = std::sqrt((140.0 + (4.0 * m + 4.0) * std::log(std::max(rmax, 2.0))) / s);
    p.r_max = rmax;
    return p;
}

} // namespace hupstab
