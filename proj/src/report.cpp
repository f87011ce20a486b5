#include "fibsum/report.hpp"

#include <json.hpp>

namespace fibsum {

std::string VerificationReport::json_line() const {
  nlohmann::ordered_json j;
  j["entry_id"] = entry_id;
  j["params"] = {{"m", params.m}, {"n", params.n}, {"q", params.q}, {"p", params.p}, {"N", N}};
  j["status"] = status;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["tail"] = tail;
  j["ms"] = 0;  // pinned; identical runs must be byte-identical
  return j.dump();
}

}  // namespace fibsum
