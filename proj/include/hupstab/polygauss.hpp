#pragma once

#include <string>
#include <vector>

namespace hupstab {

enum class Parity { even, odd };

// One term p(r) * exp(-beta * r^2). The polynomial stores only every other
// power: coeffs[i] multiplies r^(2i) for even parity, r^(2i+1) for odd.
// Parity lives on the owning function; all terms share it.
struct PolyGaussTerm {
    std::vector<double> coeffs;
    double beta = 1.0;
};

// Finite sums of even/odd polynomials times Gaussians. Closed under the
// radial calculus used throughout: d/dr flips parity, f'/r of an even f is
// again in the class, products and Gaussian-weight shifts stay inside.
// All moments against r^(d-1) dr have Gamma closed forms.
class PolyGaussFn {
public:
    PolyGaussFn() = default;
    PolyGaussFn(std::vector<PolyGaussTerm> terms, Parity parity);

    // alpha * exp(-beta/2 * |x|^2), the optimizer family (beta > 0)
    static PolyGaussFn gaussian(double alpha, double beta);
    // single term p(r) e^{-rate r^2} with p given by sparse even coeffs
    static PolyGaussFn term(std::vector<double> coeffs, double rate,
                            Parity parity = Parity::even);
    static PolyGaussFn zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    Parity parity() const { return parity_; }
    const std::vector<PolyGaussTerm>& terms() const { return terms_; }

    double evaluate(double r) const;

    PolyGaussFn scaled(double a) const;
    PolyGaussFn rescaled(double lambda) const;  // r -> lambda * r

    friend PolyGaussFn operator+(const PolyGaussFn& a, const PolyGaussFn& b);
    friend PolyGaussFn operator-(const PolyGaussFn& a, const PolyGaussFn& b);
    friend PolyGaussFn operator*(const PolyGaussFn& a, const PolyGaussFn& b);

private:
    std::vector<PolyGaussTerm> terms_;
    Parity parity_ = Parity::even;

    void canonicalize();
};

enum class PgOp { add, multiply };

// add requires equal parity (throws std::invalid_argument otherwise);
// multiply XORs parities. `scale` multiplies b before combining.
PolyGaussFn pg_combine(const PolyGaussFn& a, const PolyGaussFn& b, PgOp op,
                       double scale = 1.0);

PolyGaussFn pg_derivative(const PolyGaussFn& f);

// f'/r handled exactly; requires odd parity input for divide, any for mul.
PolyGaussFn pg_divide_r(const PolyGaussFn& f);
PolyGaussFn pg_mul_power(const PolyGaussFn& f, int p);

// f / r^2 for f with a vanishing lowest coefficient slot (exact in the
// polynomial ring; throws when the slot is not negligible)
PolyGaussFn pg_divide_r2(const PolyGaussFn& f);

// multiply by exp(-delta r^2); every resulting rate must stay positive
PolyGaussFn pg_shift_rate(const PolyGaussFn& f, double delta);

// f'' + (d-1) f'/r, requires even parity
PolyGaussFn pg_radial_laplacian(const PolyGaussFn& f, int d);

// integral_0^inf f(r) r^(d-1) dr via Gamma moments, accumulated in log space
double pg_integral_radial(const PolyGaussFn& f, int d);

// JSON function-spec format: {"terms":[{"coeffs":[c0,c2,...],"beta":b},...]}
PolyGaussFn pg_from_json(const std::string& text);
std::string pg_to_json(const PolyGaussFn& f);

} // namespace hupstab
