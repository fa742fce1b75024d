#pragma once

#include <json.hpp>

#include "rainbowkit/coloring.hpp"
#include "rainbowkit/graph.hpp"
#include "rainbowkit/kernel.hpp"
#include "rainbowkit/reductions.hpp"
#include "rainbowkit/verify.hpp"

namespace rainbow::detail {

nlohmann::json coloring_to_json(const EdgeColoring& c);
nlohmann::json pairs_to_json(const PairSet& p);
nlohmann::json verify_report_to_json(const VerifyReport& r);
nlohmann::json kernel_result_to_json(const KernelResult& r);
nlohmann::json provenance_to_json(const ReductionOutput& red);

}  // namespace rainbow::detail
