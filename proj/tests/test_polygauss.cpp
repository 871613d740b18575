#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hupstab/polygauss.hpp"
#include "hupstab/rng.hpp"

using namespace hupstab;

namespace {

PolyGaussFn std_gaussian() { return PolyGaussFn::gaussian(1.0, 1.0); }  // e^{-r^2/2}

double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

PolyGaussFn random_fn(SeqRng& rng, Parity parity = Parity::even) {
    std::vector<PolyGaussTerm> terms;
    const int nt = rng.uniform_int(1, 3);
    for (int t = 0; t < nt; ++t) {
        PolyGaussTerm term;
        term.beta = rng.log_uniform(0.3, 3.0);
        term.coeffs.resize(rng.uniform_int(1, 4));
        for (auto& c : term.coeffs) c = rng.uniform(-1.0, 1.0);
        terms.push_back(term);
    }
    return {terms, parity};
}

} // namespace

TEST_CASE("combine: add and multiply on the optimizer family") {
    const PolyGaussFn g = std_gaussian();
    const PolyGaussFn sum = pg_combine(g, g, PgOp::add);
    CHECK(sum.terms().size() == 1);
    CHECK(sum.terms()[0].coeffs[0] == doctest::Approx(2.0));

    const PolyGaussFn prod = g * g;  // betas add: e^{-r^2}
    CHECK(prod.terms().size() == 1);
    CHECK(prod.terms()[0].beta == doctest::Approx(1.0));
    CHECK(prod.evaluate(1.3) == doctest::Approx(std::exp(-1.69)));
}

TEST_CASE("combine: exact cancellation gives the canonical empty term list") {
    const PolyGaussFn f = PolyGaussFn::term({0.0, 1.0}, 1.0);  // r^2 e^{-r^2}
    const PolyGaussFn z = f - f;
    CHECK(z.is_zero());
    CHECK(z.evaluate(0.7) == 0.0);
}

TEST_CASE("combine: parity mismatch on add is rejected") {
    const PolyGaussFn even = std_gaussian();
    const PolyGaussFn odd = pg_derivative(even);
    CHECK_THROWS_AS(pg_combine(even, odd, PgOp::add), std::invalid_argument);
}

TEST_CASE("derivative: chain and product rules, parity flip") {
    const PolyGaussFn g = std_gaussian();
    const PolyGaussFn d1 = pg_derivative(g);  // -r e^{-r^2/2}
    CHECK(d1.parity() == Parity::odd);
    CHECK(d1.evaluate(0.8) == doctest::Approx(-0.8 * std::exp(-0.32)));

    // d/dr (r^2 e^{-r^2}) = (2r - 2r^3) e^{-r^2}
    const PolyGaussFn f = PolyGaussFn::term({0.0, 1.0}, 1.0);
    const PolyGaussFn fp = pg_derivative(f);
    for (double r : {0.3, 1.0, 2.1})
        CHECK(fp.evaluate(r) ==
              doctest::Approx((2 * r - 2 * r * r * r) * std::exp(-r * r)));

    // second derivative of the Gaussian: (r^2 - 1) e^{-r^2/2}
    const PolyGaussFn d2 = pg_derivative(d1);
    CHECK(d2.parity() == Parity::even);
    for (double r : {0.0, 0.5, 1.7})
        CHECK(d2.evaluate(r) == doctest::Approx((r * r - 1) * std::exp(-r * r / 2)));
}

TEST_CASE("radial laplacian: Gaussian closed form and parity contract") {
    const PolyGaussFn g = std_gaussian();
    for (int d : {1, 2, 3, 7}) {
        const PolyGaussFn lap = pg_radial_laplacian(g, d);
        CHECK(lap.parity() == Parity::even);
        for (double r : {0.2, 1.0, 2.5})
            CHECK(lap.evaluate(r) == doctest::Approx((r * r - d) * std::exp(-r * r / 2)));
    }
    CHECK_THROWS_AS(pg_radial_laplacian(pg_derivative(g), 3), std::invalid_argument);
}

TEST_CASE("radial laplacian: finite-difference oracle on r^2 e^{-r^2}") {
    const PolyGaussFn f = PolyGaussFn::term({0.0, 1.0}, 1.0);
    const PolyGaussFn lap = pg_radial_laplacian(f, 2);
    const double h = 1e-3;  // five-point stencils: O(h^4) truncation
    auto fv = [&](double r) { return f.evaluate(r); };
    for (double r : {0.5, 1.0, 2.0}) {
        const double fd2 = (-fv(r + 2 * h) + 16 * fv(r + h) - 30 * fv(r) +
                            16 * fv(r - h) - fv(r - 2 * h)) /
                           (12 * h * h);
        const double fd1 =
            (-fv(r + 2 * h) + 8 * fv(r + h) - 8 * fv(r - h) + fv(r - 2 * h)) / (12 * h);
        CHECK(rel_err(lap.evaluate(r), fd2 + fd1 / r) < 1e-8);
    }
}

TEST_CASE("radial laplacian applied twice to the Gaussian") {
    const PolyGaussFn g = std_gaussian();
    for (int d : {2, 3, 5}) {
        const PolyGaussFn lap2 = pg_radial_laplacian(pg_radial_laplacian(g, d), d);
        for (double r : {0.4, 1.1, 2.3}) {
            const double expect =
                (std::pow(r, 4) - (2 * d + 4) * r * r + d * d + 2 * d) * std::exp(-r * r / 2);
            CHECK(rel_err(lap2.evaluate(r), expect) < 1e-13);
        }
    }
}

TEST_CASE("integral: Gamma moments") {
    // e^{-r^2}, d = 2 -> 1/2
    const PolyGaussFn f = PolyGaussFn::term({1.0}, 1.0);
    CHECK(pg_integral_radial(f, 2) == doctest::Approx(0.5));
    // r^2 e^{-r^2}, d = 1 -> sqrt(pi)/4
    const PolyGaussFn f2 = PolyGaussFn::term({0.0, 1.0}, 1.0);
    CHECK(pg_integral_radial(f2, 1) == doctest::Approx(std::sqrt(M_PI) / 4));
}

TEST_CASE("integral: log-space accumulation survives d = 200") {
    const PolyGaussFn f = PolyGaussFn::term({1.0}, 1.0);
    const double got = pg_integral_radial(f, 200);
    const double expect = std::exp(std::lgamma(100.0) - std::log(2.0));
    CHECK(std::isfinite(got));
    CHECK(got > 0.0);
    CHECK(rel_err(got, expect) < 1e-12);
}

TEST_CASE("integral: errors") {
    PolyGaussTerm t;
    t.coeffs = {1.0};
    t.beta = 1.0;
    const PolyGaussFn f({t}, Parity::even);
    CHECK_THROWS_AS(pg_integral_radial(f, 0), std::domain_error);
    CHECK_THROWS_AS(pg_integral_radial(pg_derivative(f), 3), std::invalid_argument);
    CHECK_THROWS_AS(pg_shift_rate(f, -2.0), std::domain_error);
}

TEST_CASE("property: closure under composed operations, evaluated pointwise") {
    SeqRng rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        const PolyGaussFn a = random_fn(rng);
        const PolyGaussFn b = random_fn(rng);
        // algebraic compositions match pointwise arithmetic on the evaluations
        const PolyGaussFn c = (a * b).scaled(1.3) + b.scaled(-0.7) + a * a;
        const PolyGaussFn d2a = pg_derivative(pg_derivative(a));
        for (int i = 0; i < 20; ++i) {
            const double r = rng.uniform(1e-3, 10.0);
            const double av = a.evaluate(r), bv = b.evaluate(r);
            CHECK(rel_err(c.evaluate(r), 1.3 * av * bv - 0.7 * bv + av * av) < 1e-10);
            // derivatives against a five-point stencil
            const double h = 2e-3;
            auto fa = [&](double x) { return a.evaluate(x); };
            const double fd2 = (-fa(r + 2 * h) + 16 * fa(r + h) - 30 * fa(r) +
                                16 * fa(r - h) - fa(r - 2 * h)) /
                               (12 * h * h);
            CHECK(std::abs(d2a.evaluate(r) - fd2) <=
                  1e-7 * std::max({std::abs(fd2), std::abs(d2a.evaluate(r)), 1.0}));
        }
    }
}

TEST_CASE("property: integration is linear") {
    SeqRng rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const PolyGaussFn f = random_fn(rng);
        const PolyGaussFn g = random_fn(rng);
        const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
        const int d = rng.uniform_int(1, 12);
        const PolyGaussFn combo = f.scaled(a) + g.scaled(b);
        const double lhs = pg_integral_radial(combo, d);
        const double rhs = a * pg_integral_radial(f, d) + b * pg_integral_radial(g, d);
        CHECK(std::abs(lhs - rhs) <=
              1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1.0}));
    }
}

TEST_CASE("property: parity bookkeeping is structural") {
    SeqRng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const PolyGaussFn f = random_fn(rng);
        CHECK(pg_derivative(f).parity() == Parity::odd);
        CHECK(pg_radial_laplacian(f, 4).parity() == Parity::even);
        CHECK((pg_derivative(f) * pg_derivative(f)).parity() == Parity::even);
        CHECK(pg_mul_power(f, 3).parity() == Parity::odd);
        CHECK(pg_divide_r(pg_derivative(f)).parity() == Parity::even);
    }
}

TEST_CASE("property: integration by parts with the r^{d-1} weight") {
    SeqRng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const PolyGaussFn f = random_fn(rng);                      // even
        const PolyGaussFn g = pg_mul_power(random_fn(rng), 1);     // odd = r * even
        const int d = rng.uniform_int(2, 10);
        const double lhs = pg_integral_radial(pg_derivative(f) * g, d);
        const PolyGaussFn gp_term = pg_derivative(g) + pg_divide_r(g).scaled(d - 1.0);
        const double rhs = -pg_integral_radial(f * gp_term, d);
        CHECK(std::abs(lhs - rhs) <=
              1e-10 * std::max({std::abs(lhs), std::abs(rhs), 1e-12}));
    }
}

TEST_CASE("rescale matches pointwise composition") {
    SeqRng rng(5);
    const PolyGaussFn f = random_fn(rng);
    for (double lam : {0.5, 2.0}) {
        const PolyGaussFn fl = f.rescaled(lam);
        for (double r : {0.3, 1.0, 2.2})
            CHECK(rel_err(fl.evaluate(r), f.evaluate(lam * r)) < 1e-13);
    }
}

TEST_CASE("json round trip is canonical") {
    const std::string spec = R"({"terms":[{"coeffs":[1.0,0.25],"beta":0.5},{"coeffs":[0.5],"beta":2.0}]})";
    const PolyGaussFn f = pg_from_json(spec);
    const PolyGaussFn g = pg_from_json(pg_to_json(f));
    CHECK(f.terms().size() == g.terms().size());
    for (double r : {0.1, 1.4, 3.0}) CHECK(f.evaluate(r) == g.evaluate(r));
    CHECK_THROWS_AS(pg_from_json("{\"terms\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(pg_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(pg_from_json(R"({"terms":[{"coeffs":[1],"beta":-1}]})"),
                    std::invalid_argument);
}
