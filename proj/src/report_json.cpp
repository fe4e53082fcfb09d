#include "cyclotome/report_json.hpp"

#include <cmath>

namespace cyclotome {

nlohmann::ordered_json house_report_json(const HouseReport& rep) {
  nlohmann::ordered_json j;
  j["input"] = rep.input.str();
  j["conductor"] = rep.conductor;
  j["degree"] = rep.degree;
  j["house_mid"] = rep.house.mid_str();
  j["house_rad"] = rep.house.rad_str();
  j["status"] = status_name(rep.status);
  if (rep.status == HouseStatus::OnList)
    j["list_value"] = rep.list_value.str();
  else
    j["list_value"] = nullptr;
  j["witness_k"] = rep.witness_k;
  return j;
}

nlohmann::ordered_json m_report_json(const std::string& input,
                                     const mpq_class& m) {
  nlohmann::ordered_json j;
  j["input"] = input;
  j["m"] = m.get_str();
  return j;
}

nlohmann::ordered_json case_result_json(const CaseResult& r) {
  auto finite_or_null = [](double v) -> nlohmann::ordered_json {
    if (!std::isfinite(v)) return nullptr;
    return v;
  };
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["candidate_count"] = r.candidate_count;
  j["min_house_sq"] = finite_or_null(r.min_house_sq);
  j["max_house_sq"] = finite_or_null(r.max_house_sq);
  j["pass"] = r.pass;
  j["details"] = r.details;
  return j;
}

std::string json_text(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

}  // namespace cyclotome
