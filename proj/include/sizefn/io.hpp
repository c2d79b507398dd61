#pragma once

#include "sizefn/bounds.hpp"
#include "sizefn/matching.hpp"
#include "sizefn/persistence.hpp"
#include "sizefn/reparam.hpp"
#include "sizefn/size_pair.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace sizefn {

// Malformed file content or unreadable path; distinct from the
// std::invalid_argument used for contract violations.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV with two columns `t,value`, optional header line, '.' decimals.
IntervalSamples read_interval_csv(const std::string& path);

// {"vertices":[{"id":int,"value":float}],"edges":[[int,int]]}; vertices are
// indexed by ascending id.
DiscreteSizePair read_graph_json(const std::string& path);
nlohmann::json graph_to_json(const DiscreteSizePair& p);

// {"infinity":[k,...],"points":[{"x":..,"y":..,"mult":n},...]}
SizeFunctionDiagram read_diagram_json(const std::string& path);
nlohmann::json diagram_to_json(const SizeFunctionDiagram& d);
SizeFunctionDiagram diagram_from_json(const nlohmann::json& j);

// [{"from":point,"to":point,"cost":c}]; points are {"x":..,"y":..} with "inf"
// standing in for an infinite y or cost.
nlohmann::json matching_to_json(const MatchingResult& m);

nlohmann::json bound_report_to_json(const BoundReport& rep);
nlohmann::json estimate_to_json(const Estimate& est);

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::json& j);

// 12 significant digits, for printed (non-JSON) numbers.
std::string format_number(double v);
std::string format_extended(ExtendedReal v);

} // namespace sizefn
