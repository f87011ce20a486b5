#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibsum/quadratic.hpp"
#include "fibsum/rational.hpp"
#include "fibsum/sequences.hpp"

namespace fibsum {

enum class SeqKind { Fib, Lucas };

enum class SignMode {
  None,   // every term positive
  AltK,   // (-1)^(k-1)
  AltNK,  // (-1)^(nk-1)
};

/// How the series reaches its closed form. Most entries converge directly;
/// the four families whose summand magnitude tends to a nonzero constant
/// (F_{2nk+mnq} over m+1 first-power factors) oscillate around the closed
/// form and converge in the mean: (S_N + S_{N+1})/2 -> closed form.
enum class Summation { Direct, MeanOfPartials };

struct Params {
  long long m = 1, n = 1, q = 1, p = 0;
};

/// One factor of a bound summand: seq(k_coeff * k + offset)^power.
struct Factor {
  SeqKind kind;
  long long k_coeff = 1;
  long long offset = 0;
  int power = 1;
};

/// Factor family before parameter binding. Resolved index:
///   k_scale*n*k + j*j_step*n*q + mnq*(m*n*q) + np*(n*p) + cst
/// with j running over [j_lo_m*m + j_lo_c .. j_hi_m*m + j_hi_c] when
/// j_step != 0 (an empty range contributes no factors).
struct FactorTemplate {
  SeqKind kind;
  int k_scale = 1;
  int j_step = 0;
  int j_lo_m = 0, j_lo_c = 0;
  int j_hi_m = 0, j_hi_c = 0;
  int mnq = 0;
  int np = 0;
  int cst = 0;
  int power = 1;
};

/// Data description of one summand family: sign mode, numerator and
/// denominator factor templates (empty numerator evaluates to 1), and
/// which parameters are free.
struct SumSpec {
  SignMode sign = SignMode::None;
  std::vector<FactorTemplate> numerator;
  std::vector<FactorTemplate> denominator;
  bool uses_p = false;

  std::vector<Factor> bind(const std::vector<FactorTemplate>& templates,
                           const Params& prm) const;
};

struct CatalogEntry {
  std::string id;           // "A1" .. "N4L"
  std::string source;       // theorem anchor token, e.g. "vn8ph53"
  std::string parity_text;  // hypothesis, e.g. "m, n and q are positive odd integers"
  std::function<bool(const Params&)> parity;
  SumSpec lhs;
  std::function<QuadRat(Sequences&, const Params&)> rhs_builder;
  std::string rhs_text;
  Summation summation = Summation::Direct;
  std::optional<Params> frozen;  // closing fixed sums accept only this tuple
  std::string notes;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);    // nullptr if absent
const CatalogEntry& catalog_entry(const std::string& id); // throws UnknownIdError
std::vector<const CatalogEntry*> catalog_matching(const std::string& prefix);

/// Positivity plus the entry's parity predicate (and p >= 0 / frozen tuple).
bool validate_params(const CatalogEntry& entry, const Params& prm);

/// Exact summand value at index k >= 1, sign included.
/// Throws DomainError citing the parity text when the parameters are invalid.
BigRational term_at(Sequences& seq, const CatalogEntry& entry, const Params& prm,
                    long long k);

/// Exact closed form (RHS) of the entry's theorem.
QuadRat closed_form(Sequences& seq, const CatalogEntry& entry, const Params& prm);

/// Exact N-term partial sum S_N (ascending k).
BigRational partial_sum(Sequences& seq, const CatalogEntry& entry, const Params& prm,
                        long long N);

/// The convergence certificate value at N: S_N for Direct entries,
/// (S_N + S_{N+1})/2 for MeanOfPartials entries.
BigRational certified_partial(Sequences& seq, const CatalogEntry& entry,
                              const Params& prm, long long N);

/// Stable structured-text record for the CLI catalog dump.
std::string dump_entry(const CatalogEntry& entry);

}  // namespace fibsum
