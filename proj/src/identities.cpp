#include "fibsum/identities.hpp"

#include <random>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

using P = std::array<long long, 3>;

int pow_m1(long long e) { return (e % 2 == 0) ? 1 : -1; }

std::uint64_t u64(long long v) { return static_cast<std::uint64_t>(v); }

std::vector<Identity> build_table() {
  std::vector<Identity> t;
  auto F = [](Sequences& s, long long i) { return s.fib(u64(i)); };
  auto L = [](Sequences& s, long long i) { return s.lucas(u64(i)); };

  t.push_back({"8a", 2, "L_v*F_u = F_{u+v} + (-1)^v*F_{u-v}",
               [](const P& p) { return p[0] >= p[1]; }, "u >= v",
               [=](Sequences& s, const P& p) { return BigInt(L(s, p[1]) * F(s, p[0])); },
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[0] + p[1]) + pow_m1(p[1]) * F(s, p[0] - p[1]));
               }});
  t.push_back({"8b", 2, "F_v*L_u = F_{u+v} - (-1)^v*F_{u-v}",
               [](const P& p) { return p[0] >= p[1]; }, "u >= v",
               [=](Sequences& s, const P& p) { return BigInt(F(s, p[1]) * L(s, p[0])); },
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[0] + p[1]) - pow_m1(p[1]) * F(s, p[0] - p[1]));
               }});
  t.push_back({"9a", 2, "2*F_{u+v} = L_v*F_u + L_u*F_v",
               [](const P&) { return true; }, "",
               [=](Sequences& s, const P& p) { return BigInt(2 * F(s, p[0] + p[1])); },
               [=](Sequences& s, const P& p) {
                 return BigInt(L(s, p[1]) * F(s, p[0]) + L(s, p[0]) * F(s, p[1]));
               }});
  t.push_back({"9b", 2, "(-1)^v*2*F_{u-v} = F_u*L_v - L_u*F_v",
               [](const P& p) { return p[0] >= p[1]; }, "u >= v",
               [=](Sequences& s, const P& p) {
                 return BigInt(pow_m1(p[1]) * 2 * F(s, p[0] - p[1]));
               },
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[0]) * L(s, p[1]) - L(s, p[0]) * F(s, p[1]));
               }});
  t.push_back({"10a", 2, "L_v*L_u = L_{u+v} + (-1)^v*L_{u-v}",
               [](const P& p) { return p[0] >= p[1]; }, "u >= v",
               [=](Sequences& s, const P& p) { return BigInt(L(s, p[1]) * L(s, p[0])); },
               [=](Sequences& s, const P& p) {
                 return BigInt(L(s, p[0] + p[1]) + pow_m1(p[1]) * L(s, p[0] - p[1]));
               }});
  t.push_back({"10b", 2, "5*F_v*F_u = L_{u+v} - (-1)^v*L_{u-v}",
               [](const P& p) { return p[0] >= p[1]; }, "u >= v",
               [=](Sequences& s, const P& p) { return BigInt(5 * F(s, p[1]) * F(s, p[0])); },
               [=](Sequences& s, const P& p) {
                 return BigInt(L(s, p[0] + p[1]) - pow_m1(p[1]) * L(s, p[0] - p[1]));
               }});
  t.push_back({"11", 2,
               "(-1)^(u-1)*F_{v+u}*F_{v-u} = F_u^2*F_{v+1}*F_{v-1} - F_v^2*F_{u+1}*F_{u-1}",
               [](const P& p) { return p[1] >= p[0] && p[0] >= 1; }, "v >= u >= 1",
               [=](Sequences& s, const P& p) {
                 return BigInt(pow_m1(p[0] - 1) * F(s, p[1] + p[0]) * F(s, p[1] - p[0]));
               },
               [=](Sequences& s, const P& p) {
                 BigInt fu = F(s, p[0]), fv = F(s, p[1]);
                 return BigInt(fu * fu * F(s, p[1] + 1) * F(s, p[1] - 1) -
                               fv * fv * F(s, p[0] + 1) * F(s, p[0] - 1));
               }});
  t.push_back({"12a", 3, "(-1)^t*F_u*F_v = F_{t+u}*F_{t+v} - F_t*F_{t+u+v}",
               [](const P&) { return true; }, "",
               [=](Sequences& s, const P& p) {
                 return BigInt(pow_m1(p[0]) * F(s, p[1]) * F(s, p[2]));
               },
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[0] + p[1]) * F(s, p[0] + p[2]) -
                               F(s, p[0]) * F(s, p[0] + p[1] + p[2]));
               }});
  t.push_back({"12b", 3, "(-1)^(t+1)*5*F_u*F_v = L_{t+u}*L_{t+v} - L_t*L_{t+u+v}",
               [](const P&) { return true; }, "",
               [=](Sequences& s, const P& p) {
                 return BigInt(pow_m1(p[0] + 1) * 5 * F(s, p[1]) * F(s, p[2]));
               },
               [=](Sequences& s, const P& p) {
                 return BigInt(L(s, p[0] + p[1]) * L(s, p[0] + p[2]) -
                               L(s, p[0]) * L(s, p[0] + p[1] + p[2]));
               }});
  t.push_back({"13a", 2, "F_{u-v}*F_{u+v} = F_u^2 + (-1)^(u+v-1)*F_v^2",
               [](const P& p) { return p[0] >= p[1]; }, "u >= v",
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[0] - p[1]) * F(s, p[0] + p[1]));
               },
               [=](Sequences& s, const P& p) {
                 BigInt fu = F(s, p[0]), fv = F(s, p[1]);
                 return BigInt(fu * fu + pow_m1(p[0] + p[1] - 1) * fv * fv);
               }});
  t.push_back({"13b", 2, "5*F_{u-v}*F_{u+v} = L_u^2 + (-1)^(u+v-1)*L_v^2",
               [](const P& p) { return p[0] >= p[1]; }, "u >= v",
               [=](Sequences& s, const P& p) {
                 return BigInt(5 * F(s, p[0] - p[1]) * F(s, p[0] + p[1]));
               },
               [=](Sequences& s, const P& p) {
                 BigInt lu = L(s, p[0]), lv = L(s, p[1]);
                 return BigInt(lu * lu + pow_m1(p[0] + p[1] - 1) * lv * lv);
               }});
  t.push_back({"14a", 3, "F_v*F_{2u+v+p} = F_{u+v+p}*F_{u+v} + (-1)^(v+1)*F_{u+p}*F_u",
               [](const P&) { return true; }, "",
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[1]) * F(s, 2 * p[0] + p[1] + p[2]));
               },
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[0] + p[1] + p[2]) * F(s, p[0] + p[1]) +
                               pow_m1(p[1] + 1) * F(s, p[0] + p[2]) * F(s, p[0]));
               }});
  t.push_back({"14b", 3, "F_v*L_{2u+v+p} = L_{u+v+p}*F_{u+v} + (-1)^(v+1)*L_{u+p}*F_u",
               [](const P&) { return true; }, "",
               [=](Sequences& s, const P& p) {
                 return BigInt(F(s, p[1]) * L(s, 2 * p[0] + p[1] + p[2]));
               },
               [=](Sequences& s, const P& p) {
                 return BigInt(L(s, p[0] + p[1] + p[2]) * F(s, p[0] + p[1]) +
                               pow_m1(p[1] + 1) * L(s, p[0] + p[2]) * F(s, p[0]));
               }});
  return t;
}

}  // namespace

const std::vector<Identity>& identities() {
  static const std::vector<Identity> table = build_table();
  return table;
}

const Identity& identity(const std::string& id) {
  for (const auto& ident : identities()) {
    if (ident.id == id) return ident;
  }
  throw UnknownIdError("unknown identity id: " + id);
}

bool check_identity(Sequences& seq, const std::string& id,
                    const std::array<long long, 3>& params) {
  const Identity& ident = identity(id);
  for (int i = 0; i < ident.arity; ++i) {
    if (params[i] < 0) throw DomainError("identity " + id + ": parameters must be non-negative");
  }
  if (!ident.valid(params)) {
    throw DomainError("identity " + id + ": index underflow, requires " + ident.constraint);
  }
  return ident.lhs(seq, params) == ident.rhs(seq, params);
}

SweepReport sweep_identities(Sequences& seq, std::uint64_t range,
                             std::uint64_t trials, std::uint64_t seed) {
  if (range < 4) throw DomainError("sweep_identities: range must be >= 4");
  SweepReport report;
  report.range = range;
  report.trials = trials;
  report.seed = seed;

  // mt19937_64 is bit-exact across platforms; the modulo draw keeps the
  // stream deterministic (std::uniform_int_distribution is not portable)
  std::mt19937_64 rng(seed);
  auto draw = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  for (const auto& ident : identities()) {
    SweepRow row;
    row.id = ident.id;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      std::array<long long, 3> params{0, 0, 0};
      do {
        for (int i = 0; i < ident.arity; ++i) params[i] = draw(0, static_cast<long long>(range));
      } while (!ident.valid(params));
      ++row.trials;
      if (ident.lhs(seq, params) == ident.rhs(seq, params)) {
        ++row.passed;
      } else {
        report.failures.push_back({ident.id, params});
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace fibsum
