#include "fibsum/verifier.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <thread>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// family key for summary grouping: the leading letter of the catalog id
std::string entry_family(const std::string& entry_id) {
  if (!entry_id.empty() && entry_id.front() >= 'A' && entry_id.front() <= 'Z') {
    return entry_id.substr(0, 1);
  }
  return entry_id;
}

const std::map<std::string, std::string>& finite_family_map() {
  static const std::map<std::string, std::string> m = {
      {"oy4215f", "A"}, {"bo7m7gb", "A"}, {"a6fin", "A"}, {"a7fin", "A"},
      {"rcy3566", "B"}, {"s11wekj", "B"}, {"b6fin", "B"}, {"b7fin", "B"},
      {"u640lbl", "E"}, {"bdnv59h", "E"}, {"medhcfp", "E"}, {"pmefb69", "E"},
      {"r78m8j9", "G"}, {"ans99dd", "G"}, {"en25r4r", "G"}, {"qa1qok6", "G"},
      {"h1fin", "H"},   {"h2fin", "H"},   {"h3fin", "H"},   {"h4fin", "H"},
      {"i1fin", "I"},   {"i2fin", "I"},   {"i3fin", "I"},   {"i4fin", "I"},
      {"j1fin", "J"},   {"j3fin", "J"},   {"l1fin", "L"},   {"m1fin", "M"},
      {"m2fin", "M"},   {"n1fin", "N"},   {"x1", "X"},      {"x2", "X"},
      {"x3", "X"}};
  return m;
}

std::string finite_family(const std::string& id) {
  auto it = finite_family_map().find(id);
  return it == finite_family_map().end() ? id : it->second;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = std::min<unsigned>(threads, static_cast<unsigned>(count));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

unsigned resolve_threads() {
  const char* env = std::getenv("FIBSUM_THREADS");
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (env == nullptr || *env == '\0') return std::min(hw, 8u);
  long v = std::strtol(env, nullptr, 10);
  if (v <= 0) return std::min(hw, 8u);
  return static_cast<unsigned>(v);
}

VerificationReport verify_finite(Sequences& seq, const std::string& id, const Params& prm,
                                 long long N) {
  const FiniteIdentity& ident = finite_identity(id);
  if (N < 1) throw DomainError("verify_finite: N must be >= 1");
  VerificationReport report;
  report.entry_id = id;
  report.params = prm;
  report.N = N;
  if (prm.m < 1 || prm.n < 1 || prm.q < 1 || prm.p < 0 || !ident.valid(prm)) {
    report.status = "skipped-invalid-params";
    return report;
  }
  auto start = Clock::now();
  BigRational lhs = ident.lhs(seq, prm, N);
  BigRational rhs = ident.rhs(seq, prm, N);
  report.lhs = lhs.str();
  report.rhs = rhs.str();
  report.status = (lhs == rhs) ? "pass" : "fail";
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_infinite(Sequences& seq, const std::string& entry_id,
                                   const Params& prm, long long N_probe,
                                   const BigRational& threshold) {
  if (N_probe < 8) throw DomainError("verify_infinite: N_probe must be >= 8");
  const CatalogEntry& entry = catalog_entry(entry_id);
  VerificationReport report;
  report.entry_id = entry_id;
  report.params = prm;
  report.N = N_probe;
  if (!validate_params(entry, prm)) {
    report.status = "skipped-invalid-params";
    return report;
  }
  auto start = Clock::now();
  QuadRat closed = closed_form(seq, entry, prm);
  QuadRat s1 = QuadRat(certified_partial(seq, entry, prm, N_probe));
  QuadRat s2 = QuadRat(certified_partial(seq, entry, prm, 2 * N_probe));
  QuadRat tail1 = (s1 - closed).abs();
  QuadRat tail2 = (s2 - closed).abs();
  bool ok = tail2.cmp(tail1) < 0 && tail1 < threshold;
  report.status = ok ? "pass" : "fail";
  report.lhs = s1.str();
  report.rhs = closed.str();
  report.tail = tail1.to_decimal(40);
  report.elapsed_ms = ms_since(start);
  return report;
}

const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> examples = {
      {"A3", {1, 1, 1, 0}, "1", "sum 1/(F_k F_{k+2})"},
      {"A3", {1, 1, 3, 0}, "143/960", "sum 1/(F_k F_{k+6})"},
      {"A3", {3, 1, 3, 0}, "938359017897442612/5579104720519492358676480",
       "sum 1/(F_k F_{k+3} F_{k+6} F_{k+12} F_{k+15} F_{k+18})"},
      {"A3", {5, 3, 1, 0}, "1/13970032097862115517068710877593600",
       "sum 1/(F_3k F_{3k+3} ... F_{3k+30}), ten factors"},
      {"A4", {1, 2, 1, 0}, "1/9", "alternating sum 1/(F_2k F_{2k+4})"},
      {"A4", {2, 1, 1, 0}, "1/18", "alternating sum 1/(F_k F_{k+1} F_{k+3} F_{k+4})"},
      {"A4", {2, 6, 1, 0}, "1/44444622716928",
       "alternating sum 1/(F_6k F_{6k+6} F_{6k+18} F_{6k+24})"},
      {"C1", {1, 2, 1, 0}, "1/3", "sum L_{2k+2}/(F_2k F_{2k+2} F_{2k+4})"},
      {"C1", {1, 1, 2, 0}, "5/6", "sum L_{k+2}/(F_k F_{k+2} F_{k+4})"},
      {"C1", {2, 7, 1, 0}, "1/6427623373464462",
       "sum L_{7k+14}/(F_7k F_{7k+7} F_{7k+14} F_{7k+21} F_{7k+28})"},
      {"C2", {1, 1, 2, 0}, "1/6", "alternating sum L_{k+2}/(F_k F_{k+2} F_{k+4})"},
      {"C2", {1, 3, 2, 0}, "271/156672", "alternating sum L_{3k+6}/(F_3k F_{3k+6} F_{3k+12})"},
      {"C2", {2, 4, 2, 0}, "177072540680427/166704475185956548320480",
       "alternating sum L_{4k+16}/(F_4k F_{4k+8} F_{4k+16} F_{4k+24} F_{4k+32})"},
      {"J1", {1, 1, 2, 0}, "2", "sum F_{2k+2}/(F_k^2 F_{k+2}^2)"},
      {"J1", {1, 2, 1, 0}, "1", "sum F_{4k+2}/(F_2k^2 F_{2k+2}^2)"},
      {"J1", {3, 2, 2, 0}, "1288981/35850395750400",
       "sum F_{4k+12}/(F_2k^2 F_{2k+4}^2 F_{2k+8}^2 F_{2k+12}^2)"},
      {"J1c", {1, 1, 1, 0}, "1", "sum L_{k+1}/(F_k^2 F_{k+1} F_{k+2}^2)"},
      {"J1c", {2, 1, 1, 0}, "1/108", "sum L_{k+2}/(F_k^2 F_{k+1}^2 F_{k+2} F_{k+3}^2 F_{k+4}^2)"},
      {"J1c", {3, 2, 2, 0},
       "636693716175181614930457/1701394375843622618689225675379000792710492054565683200",
       "sum L_{2k+12}/(F_2k^2 F_{2k+4}^2 F_{2k+8}^2 F_{2k+12} F_{2k+16}^2 F_{2k+20}^2 F_{2k+24}^2)"},
      {"N3", {1, 1, 1, 0}, "1/128", "sum F_{2k+3}/(F_k^4 F_{k+1}^3 F_{k+2}^3 F_{k+3}^4)"},
      {"N3L", {1, 1, 1, 0}, "1/829440", "sum F_{2k+3}/(L_k^4 L_{k+1}^3 L_{k+2}^3 L_{k+3}^4)"},
      {"N4", {1, 3, 1, 0}, "1/128", "sum F_{3k+1} F_{3k+2} F_{6k+3}/(F_3k^4 F_{3k+3}^4)"},
      {"N4L", {1, 3, 1, 0}, "1/10240", "sum L_{3k+1} L_{3k+2} F_{6k+3}/(L_3k^4 L_{3k+3}^4)"},
  };
  return examples;
}

std::vector<VerificationReport> reproduce_reference_examples(Sequences& seq) {
  const BigRational threshold = BigRational::parse("1/1000000000000000");
  std::vector<VerificationReport> reports(reference_examples().size());
  parallel_for(reference_examples().size(), resolve_threads(), [&](std::size_t i) {
    const ReferenceExample& ex = reference_examples()[i];
    auto start = Clock::now();
    const CatalogEntry& entry = catalog_entry(ex.entry_id);
    QuadRat closed = closed_form(seq, entry, ex.params);
    QuadRat expected = QuadRat(BigRational::parse(ex.expected));
    bool value_ok = closed == expected;
    VerificationReport cert = verify_infinite(seq, ex.entry_id, ex.params, 64, threshold);

    VerificationReport& report = reports[i];
    report.entry_id = ex.entry_id;
    report.params = ex.params;
    report.N = 64;
    report.lhs = closed.str();
    report.rhs = ex.expected;
    report.tail = cert.tail;
    report.status = (value_ok && cert.passed()) ? "pass" : "fail";
    report.elapsed_ms = ms_since(start);
  });
  return reports;
}

Scope parse_scope(const std::string& name) {
  if (name == "identities") return Scope::Identities;
  if (name == "finite") return Scope::Finite;
  if (name == "infinite") return Scope::Infinite;
  if (name == "examples") return Scope::Examples;
  if (name == "all") return Scope::All;
  throw ParseError("unknown verify scope: " + name +
                   " (expected identities|finite|infinite|examples|all)");
}

void SuiteSummary::tally(const std::string& family, const std::string& status) {
  ScopeCounts& c = by_family[family];
  if (status == "pass") {
    ++c.pass;
    ++pass;
  } else if (status == "fail") {
    ++c.fail;
    ++fail;
  } else {
    ++c.skipped;
    ++skipped;
  }
}

namespace {

struct FiniteCell {
  const FiniteIdentity* ident;
  Params prm;
  long long N;
};

struct InfiniteCell {
  const CatalogEntry* entry;
  Params prm;
};

void run_identity_sweep(Sequences& seq, const SuiteConfig& config, SuiteSummary& summary,
                        std::ostream& out) {
  SweepReport sweep = sweep_identities(seq, config.sweep_range, config.sweep_trials, config.seed);
  for (const auto& row : sweep.rows) {
    VerificationReport report;
    report.entry_id = "identity-" + row.id;
    report.N = static_cast<long long>(row.trials);
    report.lhs = std::to_string(row.trials);
    report.rhs = std::to_string(row.passed);
    report.status = (row.trials == row.passed) ? "pass" : "fail";
    out << report.json_line() << "\n";
    summary.tally("identity", report.status);
  }
  // witnesses for any failing tuples (expected: none)
  for (const auto& failure : sweep.failures) {
    const Identity& ident = identity(failure.id);
    VerificationReport report;
    report.entry_id = "identity-" + failure.id + "-witness";
    report.params = {failure.params[0], failure.params[1], failure.params[2], 0};
    report.status = "fail";
    report.lhs = ident.lhs(seq, failure.params).get_str();
    report.rhs = ident.rhs(seq, failure.params).get_str();
    out << report.json_line() << "\n";
  }
}

void run_finite_grid(Sequences& seq, const SuiteConfig& config, SuiteSummary& summary,
                     std::ostream& out) {
  std::vector<FiniteCell> cells;
  for (const auto& ident : finite_identities()) {
    if (!config.family_selected(finite_family(ident.id)) &&
        !config.family_selected(ident.id)) {
      continue;
    }
    long long p_hi = ident.uses_p ? config.finite_max_p : 0;
    long long n_hi = ident.uses_N ? config.finite_max_N : 1;
    for (long long m = 1; m <= config.finite_max_mnq; ++m)
      for (long long n = 1; n <= config.finite_max_mnq; ++n)
        for (long long q = 1; q <= config.finite_max_mnq; ++q)
          for (long long p = 0; p <= p_hi; ++p)
            for (long long N = 1; N <= n_hi; ++N) {
              Params prm{m, n, q, p};
              if (!ident.valid(prm)) {
                summary.tally(finite_family(ident.id), "skipped-invalid-params");
                continue;
              }
              cells.push_back({&ident, prm, N});
            }
  }
  std::vector<VerificationReport> reports(cells.size());
  parallel_for(cells.size(), resolve_threads(), [&](std::size_t i) {
    reports[i] = verify_finite(seq, cells[i].ident->id, cells[i].prm, cells[i].N);
  });
  for (const auto& report : reports) {
    out << report.json_line() << "\n";
    summary.tally(finite_family(report.entry_id), report.status);
  }
}

void run_infinite_grid(Sequences& seq, const SuiteConfig& config, SuiteSummary& summary,
                       std::ostream& out) {
  std::vector<InfiniteCell> cells;
  for (const auto& entry : catalog()) {
    if (!config.family_selected(entry.id)) continue;
    if (entry.frozen.has_value()) {
      cells.push_back({&entry, *entry.frozen});
      continue;
    }
    long long p_hi = entry.lhs.uses_p ? config.max_p : 0;
    for (long long m = 1; m <= config.max_m; ++m)
      for (long long n = 1; n <= config.max_n; ++n)
        for (long long q = 1; q <= config.max_q; ++q)
          for (long long p = 0; p <= p_hi; ++p) {
            Params prm{m, n, q, p};
            if (!validate_params(entry, prm)) {
              summary.tally(entry_family(entry.id), "skipped-invalid-params");
              continue;
            }
            cells.push_back({&entry, prm});
          }
  }
  std::vector<VerificationReport> reports(cells.size());
  parallel_for(cells.size(), resolve_threads(), [&](std::size_t i) {
    reports[i] =
        verify_infinite(seq, cells[i].entry->id, cells[i].prm, config.n_probe, config.threshold);
  });
  for (const auto& report : reports) {
    out << report.json_line() << "\n";
    summary.tally(entry_family(report.entry_id), report.status);
  }
}

void run_examples(Sequences& seq, const SuiteConfig& config, SuiteSummary& summary,
                  std::ostream& out) {
  auto reports = reproduce_reference_examples(seq);
  for (const auto& report : reports) {
    if (!config.family_selected(report.entry_id)) continue;
    out << report.json_line() << "\n";
    summary.tally("example", report.status);
  }
}

}  // namespace

SuiteSummary run_suite(Sequences& seq, const SuiteConfig& config, const SuiteOptions& options,
                       std::ostream& out) {
  auto start = Clock::now();
  SuiteSummary summary;
  Scope scope = options.scope;
  if (scope == Scope::Identities || scope == Scope::All) {
    run_identity_sweep(seq, config, summary, out);
  }
  if (scope == Scope::Finite || scope == Scope::All) {
    run_finite_grid(seq, config, summary, out);
  }
  if (scope == Scope::Infinite || scope == Scope::All) {
    run_infinite_grid(seq, config, summary, out);
  }
  if (scope == Scope::Examples || scope == Scope::All) {
    run_examples(seq, config, summary, out);
  }
  summary.elapsed_ms = ms_since(start);

  nlohmann::ordered_json fam;
  for (const auto& [family, counts] : summary.by_family) {
    fam[family] = {{"pass", counts.pass}, {"fail", counts.fail}, {"skipped", counts.skipped}};
  }
  nlohmann::ordered_json j;
  j["summary"] = {{"pass", summary.pass},
                  {"fail", summary.fail},
                  {"skipped", summary.skipped},
                  {"seed", config.seed},
                  {"by_family", fam}};
  if (options.timing) j["summary"]["elapsed_ms"] = summary.elapsed_ms;
  out << j.dump() << "\n";
  return summary;
}

}  // namespace fibsum
