#pragma once

#include <string>

#include "hupstab/constants.hpp"
#include "hupstab/functionals.hpp"
#include "hupstab/harmonics.hpp"
#include "hupstab/manifold.hpp"
#include "hupstab/verify.hpp"

namespace hupstab {

// SeparableFn schema: {"dim":N,"sectors":[{"k":..,"profile":<fn spec>,"harmonic":"std"}]}
SeparableFn separable_from_json(const std::string& text);
std::string separable_to_json(const SeparableFn& s);

std::string deficit_report_to_json(const DeficitReport& d);
std::string distance_result_to_json(const DistanceResult& d);
std::string stability_estimate_to_json(const StabilityEstimate& e);
std::string verify_report_to_json(const VerifyReport& r);

// CSV emitters; both start with the versioned header line "# hupstab-report v1"
std::string estimates_to_csv(const std::vector<StabilityEstimate>& rows);
std::string verify_report_to_csv(const VerifyReport& r);

const char* metric_name(Metric m);
const char* check_kind_name(CheckKind k);

} // namespace hupstab
