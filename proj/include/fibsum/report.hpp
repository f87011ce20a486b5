#pragma once

#include <string>

#include "fibsum/catalog.hpp"

namespace fibsum {

/// Machine-readable outcome of one verification cell. Serialized as one
/// JSON object per line with fields exactly
///   entry_id, params{m,n,q,p,N}, status, lhs, rhs, tail, ms
/// in that order. The body `ms` field is pinned to 0 so identical runs are
/// byte-identical; wall-clock timing goes to the summary only (and only
/// when requested).
struct VerificationReport {
  std::string entry_id;
  Params params;
  long long N = 0;
  std::string status;  // "pass" | "fail" | "skipped-invalid-params"
  std::string lhs;     // exact value string, "" when absent
  std::string rhs;
  std::string tail;    // decimal tail bound, "" when absent
  long long elapsed_ms = 0;  // measured, not serialized in the body

  bool passed() const { return status == "pass"; }
  bool failed() const { return status == "fail"; }

  std::string json_line() const;
};

}  // namespace fibsum
