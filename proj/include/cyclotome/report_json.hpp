#pragma once

// JSON emitters for the report types.  Key order is fixed (ordered_json) and
// numeric enclosures are emitted as decimal strings, so equal inputs produce
// byte-identical documents.

#include <string>

#include <gmpxx.h>

#include "json.hpp"

#include "cyclotome/cases.hpp"
#include "cyclotome/house.hpp"

namespace cyclotome {

nlohmann::ordered_json house_report_json(const HouseReport& rep);
nlohmann::ordered_json m_report_json(const std::string& input,
                                     const mpq_class& m);
nlohmann::ordered_json case_result_json(const CaseResult& r);

// Canonical rendering: two-space indent plus a trailing newline.
std::string json_text(const nlohmann::ordered_json& j);

}  // namespace cyclotome
