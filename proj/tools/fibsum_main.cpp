// Command-line front end: list the catalog, evaluate one sum, or run the
// verification suites. Exit codes: 0 success, 1 verification failure,
// 2 usage/parameter error, 3 config parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fibsum/catalog.hpp"
#include "fibsum/config.hpp"
#include "fibsum/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;

int cmd_catalog(const std::string& prefix) {
  auto matches = fibsum::catalog_matching(prefix);
  for (const auto* entry : matches) {
    std::cout << fibsum::dump_entry(*entry) << "\n";
  }
  std::cout << matches.size() << " entries\n";
  return kExitOk;
}

int cmd_eval(const std::string& entry_id, long long m, long long n, long long q, long long p,
             long long terms, unsigned digits) {
  const fibsum::CatalogEntry* entry = fibsum::find_entry(entry_id);
  if (entry == nullptr) {
    std::cerr << "error: unknown entry \"" << entry_id << "\"\n";
    return kExitUsage;
  }
  fibsum::Params prm{m, n, q, p};
  if (!fibsum::validate_params(*entry, prm)) {
    std::cerr << "error: parameters (m=" << m << ", n=" << n << ", q=" << q << ", p=" << p
              << ") violate the hypothesis of " << entry->id << ": \"" << entry->parity_text
              << "\"\n";
    return kExitUsage;
  }
  if (terms < 1) {
    std::cerr << "error: --terms must be >= 1\n";
    return kExitUsage;
  }
  auto& seq = fibsum::shared_sequences();
  fibsum::BigRational partial = fibsum::partial_sum(seq, *entry, prm, terms);
  fibsum::BigRational certified = fibsum::certified_partial(seq, *entry, prm, terms);
  fibsum::QuadRat closed = fibsum::closed_form(seq, *entry, prm);
  fibsum::QuadRat tail = (fibsum::QuadRat(certified) - closed).abs();

  std::cout << "entry        " << entry->id << " (" << entry->source << ")\n";
  std::cout << "params       m=" << m << " n=" << n << " q=" << q << " p=" << p
            << " terms=" << terms << "\n";
  if (entry->summation == fibsum::Summation::MeanOfPartials) {
    std::cout << "summation    mean-of-partials (midpoint of S_N and S_{N+1})\n";
  }
  std::cout << "partial_sum  " << partial.str() << "\n";
  if (entry->summation == fibsum::Summation::MeanOfPartials) {
    std::cout << "certified    " << certified.str() << "\n";
  }
  std::cout << "closed_form  " << closed.str() << "\n";
  std::cout << "partial_dec  " << fibsum::QuadRat(certified).to_decimal(digits) << "\n";
  std::cout << "closed_dec   " << closed.to_decimal(digits) << "\n";
  std::cout << "tail_bound   " << tail.to_decimal(digits) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& scope_name, const std::string& config_path,
               std::optional<long long> seed, bool timing, const std::string& output_override) {
  fibsum::Scope scope;
  try {
    scope = fibsum::parse_scope(scope_name);
  } catch (const fibsum::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  fibsum::SuiteConfig config;
  if (!config_path.empty()) {
    try {
      config = fibsum::SuiteConfig::load(config_path);
    } catch (const fibsum::ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    }
  }
  if (seed.has_value()) config.seed = static_cast<std::uint64_t>(*seed);
  std::string output = output_override.empty() ? config.output : output_override;

  fibsum::SuiteOptions options;
  options.scope = scope;
  options.timing = timing;

  auto& seqs = fibsum::shared_sequences();
  fibsum::SuiteSummary summary;
  if (output == "-") {
    summary = fibsum::run_suite(seqs, config, options, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot open output file: " << output << "\n";
      return kExitUsage;
    }
    summary = fibsum::run_suite(seqs, config, options, out);
  }
  return summary.fail == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Fibonacci-Lucas reciprocal sum identities"};
  app.require_subcommand(1);

  // catalog [prefix]
  std::string prefix;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List catalog entries");
  catalog_cmd->add_option("prefix", prefix, "Entry-id prefix filter");

  // eval <entry> --m --n --q [--p] --terms [--digits]
  std::string entry_id;
  long long m = 1, n = 1, q = 1, p = 0, terms = 64;
  unsigned digits = 40;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one catalog sum");
  eval_cmd->add_option("entry", entry_id, "Catalog entry id")->required();
  eval_cmd->add_option("--m", m, "Parameter m")->required();
  eval_cmd->add_option("--n", n, "Parameter n")->required();
  eval_cmd->add_option("--q", q, "Parameter q")->required();
  eval_cmd->add_option("--p", p, "Parameter p (entries with an np offset)");
  eval_cmd->add_option("--terms", terms, "Number of series terms for the partial sum");
  eval_cmd->add_option("--digits", digits, "Fractional digits in decimal renderings")
      ->check(CLI::Range(1u, 10000u));

  // verify <scope> [--config path] [--seed s] [--timing] [--output path]
  std::string scope_name, config_path, output_override;
  std::optional<long long> seed;
  bool timing = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("scope", scope_name, "identities|finite|infinite|examples|all")
      ->required();
  verify_cmd->add_option("--config", config_path, "Suite config file (key=value lines)");
  verify_cmd->add_option("--seed", seed, "Override the config seed");
  verify_cmd->add_flag("--timing", timing, "Include elapsed_ms in the summary object");
  verify_cmd->add_option("--output", output_override, "Report destination (path or -)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(prefix);
    if (eval_cmd->parsed()) return cmd_eval(entry_id, m, n, q, p, terms, digits);
    if (verify_cmd->parsed()) return cmd_verify(scope_name, config_path, seed, timing, output_override);
  } catch (const fibsum::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
