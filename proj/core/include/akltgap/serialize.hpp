#pragma once

#include "akltgap/bounds.hpp"
#include "akltgap/epsilon.hpp"

namespace akltgap {

/// JSON emitters used by the CLI and the regression tests. Output is
/// byte-deterministic for identical inputs: keys keep insertion order and
/// numbers are printed in shortest round-trip form. Every document carries
/// "schema": 1.
std::string to_json(const Patch& patch);
std::string to_json(const BoundReport& report);
std::string to_json(const EpsilonResult& result);
std::string to_json(const SpectralSummary& summary, const LatticeFamily& family,
                    WeightScheme scheme);
std::string to_json(const GapCertificate& certificate);

/// CSV with columns n, a, b_L, b_R, b_LR, b_G, one_minus_bL, one_minus_bG,
/// d, d_minus_threshold, certified. Undefined d prints as
/// "undefined(<reason>)".
std::string bounds_csv(const std::vector<BoundReport>& reports);

/// CSV with columns n, value.
std::string series_csv(const std::vector<std::pair<int, double>>& series);

}  // namespace akltgap
