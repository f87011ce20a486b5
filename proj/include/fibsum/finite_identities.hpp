#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fibsum/catalog.hpp"
#include "fibsum/rational.hpp"
#include "fibsum/sequences.hpp"

namespace fibsum {

/// One displayed finite-N summation identity. Both sides are exact
/// rationals; a check passes iff they are equal verbatim.
struct FiniteIdentity {
  std::string id;               // source anchor token or synthesized short id
  std::string description;
  std::string constraint_text;  // "" when unconstrained
  bool uses_p = false;
  bool uses_N = true;           // the cross identities have no N
  std::function<bool(const Params&)> valid;
  std::function<BigRational(Sequences&, const Params&, long long N)> lhs;
  std::function<BigRational(Sequences&, const Params&, long long N)> rhs;
};

const std::vector<FiniteIdentity>& finite_identities();
const FiniteIdentity* find_finite_identity(const std::string& id);
const FiniteIdentity& finite_identity(const std::string& id);  // throws UnknownIdError

}  // namespace fibsum
