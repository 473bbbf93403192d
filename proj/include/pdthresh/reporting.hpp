#pragma once

#include <string>

#include <json.hpp>

#include "pdthresh/certificates.hpp"
#include "pdthresh/decomposable.hpp"
#include "pdthresh/graph.hpp"
#include "pdthresh/matrix.hpp"

namespace pdthresh::reporting {

// All JSON output uses 1-based vertex indices, matching the file formats.

const char* verdict_name(Verdict v);
const char* overall_name(OverallVerdict v);
const char* pd_mode_name(PdMode m);

nlohmann::json graph_json(const UndirectedGraph& g);
nlohmann::json pd_report_json(const PdReport& rep);
nlohmann::json certificate_json(const Certificate& cert, const std::string& witness_path = "");
nlohmann::json condition_report_json(const ConditionReport& rep);

}  // namespace pdthresh::reporting
