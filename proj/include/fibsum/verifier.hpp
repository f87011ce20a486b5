#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fibsum/config.hpp"
#include "fibsum/finite_identities.hpp"
#include "fibsum/identities.hpp"
#include "fibsum/report.hpp"

namespace fibsum {

/// Evaluates both sides of a displayed finite-N identity exactly.
/// Constraint violations yield status "skipped-invalid-params", not "fail".
VerificationReport verify_finite(Sequences& seq, const std::string& id, const Params& prm,
                                 long long N);

/// Certifies one catalog entry at one parameter tuple: computes S_{N_probe}
/// and S_{2*N_probe} exactly (midpoint partial sums for mean-convergent
/// entries) and passes iff
///   |S_{2N} - closed| < |S_N - closed| < threshold,
/// every comparison exact in Q(sqrt5). Requires N_probe >= 8.
VerificationReport verify_infinite(Sequences& seq, const std::string& entry_id,
                                   const Params& prm, long long N_probe,
                                   const BigRational& threshold);

struct ReferenceExample {
  std::string entry_id;
  Params params;
  std::string expected;  // printed value, stored verbatim
  std::string label;
};

const std::vector<ReferenceExample>& reference_examples();

/// One report per explicit printed example value: pass requires the closed
/// form to equal the printed rational exactly and the convergence
/// certificate at N_probe = 64 to hold. A value mismatch fails loudly with
/// both sides in the report.
std::vector<VerificationReport> reproduce_reference_examples(Sequences& seq);

enum class Scope { Identities, Finite, Infinite, Examples, All };

Scope parse_scope(const std::string& name);  // throws ParseError

struct ScopeCounts {
  long long pass = 0, fail = 0, skipped = 0;
};

struct SuiteSummary {
  std::map<std::string, ScopeCounts> by_family;  // catalog family / "identity" / "example"
  long long pass = 0, fail = 0, skipped = 0;
  long long elapsed_ms = 0;

  void tally(const std::string& family, const std::string& status);
};

struct SuiteOptions {
  Scope scope = Scope::All;
  bool timing = false;  // emit elapsed_ms in the summary object
};

/// Runs the selected verification scopes in deterministic order and writes
/// one JSON object per line to `out`, summary object last. Independent
/// cells may be computed in parallel (FIBSUM_THREADS caps the worker count,
/// 0 = auto); output order and content do not depend on the thread count.
SuiteSummary run_suite(Sequences& seq, const SuiteConfig& config, const SuiteOptions& options,
                       std::ostream& out);

/// Worker count resolved from FIBSUM_THREADS (unset or 0 = auto).
unsigned resolve_threads();

}  // namespace fibsum
