#pragma once

#include <string>

#include <json.hpp>

#include "dlab/configurations.hpp"
#include "dlab/cycle_analysis.hpp"
#include "dlab/discharging.hpp"
#include "dlab/plane_graph.hpp"

namespace dlab {

// All machine output is ordered JSON: key order is fixed by construction and
// values avoid floats, so emit -> parse -> emit is byte-stable.
using Json = nlohmann::ordered_json;

Json class_g_json(const ClassGReport& rep);
Json faces_json(const PlaneGraph& g);
Json cycle_json(const PlaneGraph& g, const CycleRecord& rec, bool classify);
Json remark1_json(const Remark1Report& rep);
Json match_json(const ConfigMatch& m);
Json surgery_json(const PlaneGraph& g, const Surgery& s, const SurgeryValidity& v);
Json ledger_json(const ChargeLedger& led);
Json audit_json(const AuditReport& rep);
Json reducibility_json(const ReducibilityHostReport& rep);

std::string dump_json(const Json& j);

} // namespace dlab
