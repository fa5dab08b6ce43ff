#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace crg {

enum class Status { Pass, Fail, Erratum };

std::string to_string(Status s);

/// One verification outcome. Errata record a printed formula that disagrees
/// with the derived one; they are not failures.
struct CheckRecord {
  std::string subject;
  std::string check;
  Status status = Status::Pass;
  std::optional<std::size_t> residual_terms;
  std::vector<std::string> details;

  bool failed() const noexcept { return status == Status::Fail; }
};

nlohmann::json to_json(const CheckRecord& r);
// "[pass] I closure residual=0: detail; detail"
std::string to_text(const CheckRecord& r);

}  // namespace crg
