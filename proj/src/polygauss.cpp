#include "hupstab/polygauss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hupstab {

namespace {

constexpr double kRateMergeTol = 1e-14;
constexpr double kCoeffTrim = 1e-300;

int offset(Parity p) { return p == Parity::odd ? 1 : 0; }

void trim(std::vector<double>& c) {
    while (!c.empty() && std::abs(c.back()) < kCoeffTrim) c.pop_back();
}

} // namespace

PolyGaussFn::PolyGaussFn(std::vector<PolyGaussTerm> terms, Parity parity)
    : terms_(std::move(terms)), parity_(parity) {
    canonicalize();
}

void PolyGaussFn::canonicalize() {
    for (auto& t : terms_) {
        for (auto& c : t.coeffs)
            if (std::abs(c) < kCoeffTrim) c = 0.0;
        trim(t.coeffs);
    }
    std::erase_if(terms_, [](const PolyGaussTerm& t) { return t.coeffs.empty(); });
    std::sort(terms_.begin(), terms_.end(),
              [](const PolyGaussTerm& a, const PolyGaussTerm& b) { return a.beta < b.beta; });
    std::vector<PolyGaussTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && std::abs(merged.back().beta - t.beta) <= kRateMergeTol) {
            auto& dst = merged.back().coeffs;
            if (dst.size() < t.coeffs.size()) dst.resize(t.coeffs.size(), 0.0);
            for (size_t i = 0; i < t.coeffs.size(); ++i) dst[i] += t.coeffs[i];
            trim(dst);
            if (dst.empty()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

PolyGaussFn PolyGaussFn::gaussian(double alpha, double beta) {
    if (beta <= 0.0) throw std::invalid_argument("gaussian: beta must be > 0");
    if (alpha == 0.0) return {};
    return {{{{alpha}, beta / 2.0}}, Parity::even};
}

PolyGaussFn PolyGaussFn::term(std::vector<double> coeffs, double rate, Parity parity) {
    if (rate <= 0.0) throw std::invalid_argument("term: rate must be > 0");
    return {{{std::move(coeffs), rate}}, parity};
}

double PolyGaussFn::evaluate(double r) const {
    const double r2 = r * r;
    double sum = 0.0;
    for (const auto& t : terms_) {
        double p = 0.0;
        for (auto it = t.coeffs.rbegin(); it != t.coeffs.rend(); ++it) p = p * r2 + *it;
        sum += p * std::exp(-t.beta * r2);
    }
    if (parity_ == Parity::odd) sum *= r;
    return sum;
}

PolyGaussFn PolyGaussFn::scaled(double a) const {
    if (a == 0.0) return {};
    auto terms = terms_;
    for (auto& t : terms)
        for (auto& c : t.coeffs) c *= a;
    return {std::move(terms), parity_};
}

PolyGaussFn PolyGaussFn::rescaled(double lambda) const {
    if (lambda <= 0.0) throw std::invalid_argument("rescaled: lambda must be > 0");
    auto terms = terms_;
    const double l2 = lambda * lambda;
    for (auto& t : terms) {
        double pw = parity_ == Parity::odd ? lambda : 1.0;
        for (auto& c : t.coeffs) {
            c *= pw;
            pw *= l2;
        }
        t.beta *= l2;
    }
    return {std::move(terms), parity_};
}

PolyGaussFn pg_combine(const PolyGaussFn& a, const PolyGaussFn& b, PgOp op, double scale) {
    if (op == PgOp::add) {
        if (a.is_zero()) return b.scaled(scale);
        if (b.is_zero()) return a;
        if (a.parity() != b.parity())
            throw std::invalid_argument("pg_combine: parity mismatch on add");
        auto terms = a.terms();
        for (auto t : b.terms()) {
            for (auto& c : t.coeffs) c *= scale;
            terms.push_back(std::move(t));
        }
        return {std::move(terms), a.parity()};
    }
    // multiply: parities combine by XOR; an odd*odd product carries an r^2
    if (a.is_zero() || b.is_zero()) return {};
    const bool ao = a.parity() == Parity::odd, bo = b.parity() == Parity::odd;
    const int shift = (ao && bo) ? 1 : 0;
    Parity parity = (ao != bo) ? Parity::odd : Parity::even;
    std::vector<PolyGaussTerm> terms;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            PolyGaussTerm t;
            t.beta = ta.beta + tb.beta;
            t.coeffs.assign(ta.coeffs.size() + tb.coeffs.size() - 1 + shift, 0.0);
            for (size_t i = 0; i < ta.coeffs.size(); ++i)
                for (size_t j = 0; j < tb.coeffs.size(); ++j)
                    t.coeffs[i + j + shift] += scale * ta.coeffs[i] * tb.coeffs[j];
            terms.push_back(std::move(t));
        }
    return {std::move(terms), parity};
}

PolyGaussFn operator+(const PolyGaussFn& a, const PolyGaussFn& b) {
    return pg_combine(a, b, PgOp::add);
}
PolyGaussFn operator-(const PolyGaussFn& a, const PolyGaussFn& b) {
    return pg_combine(a, b, PgOp::add, -1.0);
}
PolyGaussFn operator*(const PolyGaussFn& a, const PolyGaussFn& b) {
    return pg_combine(a, b, PgOp::multiply);
}

PolyGaussFn pg_derivative(const PolyGaussFn& f) {
    if (f.is_zero()) return {};
    const int off = f.parity() == Parity::odd ? 1 : 0;
    Parity parity = f.parity() == Parity::odd ? Parity::even : Parity::odd;
    std::vector<PolyGaussTerm> terms;
    for (const auto& t : f.terms()) {
        // d/dr [c r^p e^{-b r^2}] = (c p r^{p-1} - 2 b c r^{p+1}) e^{-b r^2}
        PolyGaussTerm nt;
        nt.beta = t.beta;
        nt.coeffs.assign(t.coeffs.size() + 1, 0.0);
        for (size_t i = 0; i < t.coeffs.size(); ++i) {
            const int p = static_cast<int>(2 * i) + off;
            const double c = t.coeffs[i];
            // r^{p-1}: result offset is 1-off, index (p-1-(1-off))/2 = i + off - 1
            if (p >= 1) nt.coeffs[i + off - 1] += c * p;
            // r^{p+1}: index (p+1-(1-off))/2 = i + off
            nt.coeffs[i + off] += -2.0 * t.beta * c;
        }
        terms.push_back(std::move(nt));
    }
    return {std::move(terms), parity};
}

PolyGaussFn pg_divide_r(const PolyGaussFn& f) {
    if (f.is_zero()) return {};
    if (f.parity() != Parity::odd)
        throw std::invalid_argument("pg_divide_r: requires odd parity");
    auto terms = f.terms();
    return {std::move(terms), Parity::even};  // r^{2i+1} -> r^{2i}, same coeffs
}

PolyGaussFn pg_mul_power(const PolyGaussFn& f, int p) {
    if (p < 0) throw std::invalid_argument("pg_mul_power: p must be >= 0");
    if (f.is_zero() || p == 0) return f;
    const int off = f.parity() == Parity::odd ? 1 : 0;
    const int noff = (off + p) % 2;
    const int shift = (off + p - noff) / 2;
    Parity parity = noff ? Parity::odd : Parity::even;
    std::vector<PolyGaussTerm> terms;
    for (const auto& t : f.terms()) {
        PolyGaussTerm nt;
        nt.beta = t.beta;
        nt.coeffs.assign(t.coeffs.size() + shift, 0.0);
        for (size_t i = 0; i < t.coeffs.size(); ++i) nt.coeffs[i + shift] = t.coeffs[i];
        terms.push_back(std::move(nt));
    }
    return {std::move(terms), parity};
}

PolyGaussFn pg_divide_r2(const PolyGaussFn& f) {
    if (f.is_zero()) return {};
    std::vector<PolyGaussTerm> terms;
    for (const auto& t : f.terms()) {
        double cmax = 0.0;
        for (double c : t.coeffs) cmax = std::max(cmax, std::abs(c));
        if (!t.coeffs.empty() && std::abs(t.coeffs.front()) > 1e-9 * cmax)
            throw std::invalid_argument("pg_divide_r2: lowest coefficient not negligible");
        PolyGaussTerm nt;
        nt.beta = t.beta;
        if (t.coeffs.size() > 1)
            nt.coeffs.assign(t.coeffs.begin() + 1, t.coeffs.end());
        terms.push_back(std::move(nt));
    }
    return {std::move(terms), f.parity()};
}

PolyGaussFn pg_shift_rate(const PolyGaussFn& f, double delta) {
    auto terms = f.terms();
    for (auto& t : terms) {
        t.beta += delta;
        if (t.beta <= 0.0)
            throw std::domain_error("pg_shift_rate: resulting rate not positive");
    }
    return {std::move(terms), f.parity()};
}

PolyGaussFn pg_radial_laplacian(const PolyGaussFn& f, int d) {
    if (d < 1) throw std::domain_error("pg_radial_laplacian: d must be >= 1");
    if (f.is_zero()) return {};
    if (f.parity() != Parity::even)
        throw std::invalid_argument("pg_radial_laplacian: requires even parity");
    PolyGaussFn fp = pg_derivative(f);
    PolyGaussFn fpp = pg_derivative(fp);
    return pg_combine(fpp, pg_divide_r(fp), PgOp::add, static_cast<double>(d - 1));
}

double pg_integral_radial(const PolyGaussFn& f, int d) {
    if (d < 1) throw std::domain_error("pg_integral_radial: d must be >= 1");
    if (f.is_zero()) return 0.0;
    if (f.parity() != Parity::even)
        throw std::invalid_argument("pg_integral_radial: requires even parity");
    // term c r^{2i}, rate b: integral c * Gamma((2i+d)/2) / (2 b^{(2i+d)/2}).
    // Work with (log magnitude, sign) pairs and accumulate via log-sum-exp so
    // large d stays inside double range.
    std::vector<std::pair<double, double>> parts;  // (log|value|, sign)
    double lmax = -std::numeric_limits<double>::infinity();
    for (const auto& t : f.terms()) {
        if (t.beta <= 0.0)
            throw std::domain_error("pg_integral_radial: rate must be > 0");
        const double lb = std::log(t.beta);
        for (size_t i = 0; i < t.coeffs.size(); ++i) {
            const double c = t.coeffs[i];
            if (c == 0.0) continue;
            const double half = 0.5 * (2.0 * static_cast<double>(i) + d);
            const double lg = std::lgamma(half) - std::log(2.0) - half * lb + std::log(std::abs(c));
            parts.emplace_back(lg, c > 0.0 ? 1.0 : -1.0);
            lmax = std::max(lmax, lg);
        }
    }
    if (parts.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& [lg, sign] : parts) acc += sign * std::exp(lg - lmax);
    return acc * std::exp(lmax);
}

} // namespace hupstab
