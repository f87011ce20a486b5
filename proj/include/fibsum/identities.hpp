#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibsum/rational.hpp"
#include "fibsum/sequences.hpp"

namespace fibsum {

/// One auxiliary product identity, stored as data: a pair of side
/// evaluators over the parameter vector plus the sampling constraint.
/// Parameters are (u, v) or (t, u, v) / (u, v, p) depending on arity.
struct Identity {
  std::string id;       // "8a" .. "14b"
  int arity = 2;        // 2 or 3 free integer parameters
  std::string formula;  // human-readable statement
  // index constraint, e.g. u >= v where F_{u-v} appears; named for errors
  std::function<bool(const std::array<long long, 3>&)> valid;
  std::string constraint;  // e.g. "u >= v"
  std::function<BigInt(Sequences&, const std::array<long long, 3>&)> lhs;
  std::function<BigInt(Sequences&, const std::array<long long, 3>&)> rhs;
};

const std::vector<Identity>& identities();
const Identity& identity(const std::string& id);  // throws UnknownIdError

/// True iff both sides agree exactly. Throws DomainError naming the violated
/// index constraint when the parameters are out of range.
bool check_identity(Sequences& seq, const std::string& id,
                    const std::array<long long, 3>& params);

struct SweepFailure {
  std::string id;
  std::array<long long, 3> params{};
};

struct SweepRow {
  std::string id;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
};

struct SweepReport {
  std::uint64_t range = 0, trials = 0, seed = 0;
  std::vector<SweepRow> rows;         // one per identity, table order
  std::vector<SweepFailure> failures; // expected empty
  bool pass() const { return failures.empty(); }
};

/// Runs check_identity for every identity over `trials` seeded-random valid
/// parameter tuples with indices up to `range`. Sampling is uniform with
/// constraints resolved by rejection; identical seeds give identical reports.
SweepReport sweep_identities(Sequences& seq, std::uint64_t range,
                             std::uint64_t trials, std::uint64_t seed);

}  // namespace fibsum
