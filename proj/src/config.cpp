#include "fibsum/config.hpp"

#include <fstream>
#include <sstream>

namespace fibsum {

bool SuiteConfig::family_selected(const std::string& id) const {
  for (const auto& fam : families) {
    if (fam == "all") return true;
    if (id.rfind(fam, 0) == 0) return true;
  }
  return false;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    long long out = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line) + ": invalid integer \"" + v + "\"");
  }
}

}  // namespace

SuiteConfig SuiteConfig::parse(const std::string& text) {
  SuiteConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line) + ": expected key=value, got \"" + s + "\"");
    }
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "families") {
      cfg.families.clear();
      std::istringstream fs(value);
      std::string fam;
      while (std::getline(fs, fam, ',')) {
        fam = trim(fam);
        if (!fam.empty()) cfg.families.push_back(fam);
      }
      if (cfg.families.empty()) {
        throw ConfigError("config line " + std::to_string(line) + ": families must not be empty");
      }
    } else if (key == "max_m") {
      cfg.max_m = parse_int(value, line);
    } else if (key == "max_n") {
      cfg.max_n = parse_int(value, line);
    } else if (key == "max_q") {
      cfg.max_q = parse_int(value, line);
    } else if (key == "max_p") {
      cfg.max_p = parse_int(value, line);
    } else if (key == "n_probe") {
      cfg.n_probe = parse_int(value, line);
      if (cfg.n_probe < 8) {
        throw ConfigError("config line " + std::to_string(line) + ": n_probe must be >= 8");
      }
    } else if (key == "threshold") {
      try {
        cfg.threshold = BigRational::parse(value);
      } catch (const ParseError&) {
        throw ConfigError("config line " + std::to_string(line) + ": invalid threshold \"" + value + "\"");
      }
      if (cfg.threshold.sign() <= 0) {
        throw ConfigError("config line " + std::to_string(line) + ": threshold must be positive");
      }
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, line));
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "finite_max_mnq") {
      cfg.finite_max_mnq = parse_int(value, line);
    } else if (key == "finite_max_p") {
      cfg.finite_max_p = parse_int(value, line);
    } else if (key == "finite_max_N") {
      cfg.finite_max_N = parse_int(value, line);
    } else if (key == "sweep_range") {
      cfg.sweep_range = static_cast<std::uint64_t>(parse_int(value, line));
    } else if (key == "sweep_trials") {
      cfg.sweep_trials = static_cast<std::uint64_t>(parse_int(value, line));
    } else {
      throw ConfigError("config line " + std::to_string(line) + ": unknown key \"" + key + "\"");
    }
  }
  return cfg;
}

SuiteConfig SuiteConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace fibsum
