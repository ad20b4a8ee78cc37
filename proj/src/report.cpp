#include "bm/report.hpp"

#include <json.hpp>

namespace bm {

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["m"] = m;
  j["pass"] = pass;
  j["checked"] = checked;
  j["skipped_vacuous"] = skipped_vacuous;
  if (!note.empty()) j["note"] = note;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations)
    j["violations"].push_back({{"i", v.i}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return j.dump();
}

}  // namespace bm
