#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hupstab/constants.hpp"
#include "hupstab/harmonics.hpp"
#include "hupstab/polygauss.hpp"
#include "hupstab/rng.hpp"

namespace hupstab {

enum class CheckKind { identity, inequality, sharpness };

struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::identity;
    double residual = 0.0;   // identities: max relative residual over the
                             // corpus; inequalities: max signed violation
    double tolerance = 0.0;
    bool passed = false;
    std::string paper_tag;   // which statement family the check certifies
    std::optional<std::string> witness;  // serialized input with max residual
};

struct VerifyReport {
    std::string suite;
    int N = 0;
    std::uint64_t seed = 0;
    int corpus_size = 0;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

struct IdentityOptions {
    double tol = 1e-9;
    int corpus_size = 100;
    bool mc_cross_check = false;  // N in {2,3} only; adds 3-sigma MC checks
    bool gaussian_only = false;   // restrict the corpus to optimizer members
};

// Exact identities on a seeded corpus: first-order identity, Hessian-Gaussian
// identity, sector reductions against ambient-formula routes, the
// x2-gradient split, the completed square at the sharp constant, the
// dimension lift, and the curl-free energy identity.
VerifyReport run_identity_suite(int N, std::uint64_t seed, const IdentityOptions& opts = {});

struct InequalityOptions {
    double tol = 1e-9;  // scaled by each input's energy magnitude
    int trials = 200;
    bool gaussian_only = false;
};

// Stability inequalities with the closed-form constant K(N) and the sharp
// first-order statements, plus the Gaussian Poincare chains.
VerifyReport run_inequality_suite(int N, std::uint64_t seed, const InequalityOptions& opts = {});

// Builds the k=1 sector function from the Rayleigh minimizer and reports
// delta2 / (C dist^2); tight when the eigenvector approaches the sector
// infimum. Requires a usable estimate (coefficients present, sandwich holds).
CheckResult sharpness_probe(int N, const EstimateOptions& opts = {});

// re-evaluate a named check on a serialized witness (tests the witness
// round-trip; returns the residual/violation the report would contain)
double reeval_identity(const std::string& check_name, const std::string& witness_json, int N);
double reeval_inequality(const std::string& check_name, const std::string& witness_json, int N);

// corpus access for tests
PolyGaussFn random_polygauss(SeqRng& rng, bool min_rate_half = false);
SeparableFn random_separable(SeqRng& rng, int N);

} // namespace hupstab
