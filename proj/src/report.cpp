#include "crg/report.hpp"

namespace crg {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Erratum: return "erratum";
  }
  return "fail";
}

nlohmann::json to_json(const CheckRecord& r) {
  nlohmann::json j;
  j["subject"] = r.subject;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  if (r.residual_terms) j["residual_terms"] = *r.residual_terms;
  j["details"] = r.details;
  return j;
}

std::string to_text(const CheckRecord& r) {
  std::string out = "[" + to_string(r.status) + "] " + r.subject + " " + r.check;
  if (r.residual_terms) out += " residual=" + std::to_string(*r.residual_terms);
  for (std::size_t k = 0; k < r.details.size(); ++k) out += (k == 0 ? ": " : "; ") + r.details[k];
  return out;
}

}  // namespace crg
