// Copyright 2026 The tropdelta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: table, verify, export, census.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or unsupported input,
// 3 I/O failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tropdelta/tropdelta.hpp"

namespace {

using namespace tropdelta;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> n;
  std::string range;
  std::string variant = "full-rel-cyclic";
  std::string mode;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = RationalRankOptions{}.seed;
  int primes = 2;
  bool long_running = false;
  bool no_timing = false;
  std::vector<std::string> checks{"all"};
  std::optional<int> degree;
  std::string sigma;
};

// "5", "4..6" or "4-6".
std::vector<int> parse_range(const RunConfig& cfg) {
  if (cfg.n && !cfg.range.empty()) throw UsageError("give either --n or --range, not both");
  if (cfg.n) return {*cfg.n};
  if (cfg.range.empty()) throw UsageError("missing --n or --range");
  std::string s = cfg.range;
  std::size_t sep = s.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = s.find('-', 1);
    skip = 1;
  }
  try {
    int lo = 0, hi = 0;
    if (sep == std::string::npos) {
      lo = hi = std::stoi(s);
    } else {
      lo = std::stoi(s.substr(0, sep));
      hi = std::stoi(s.substr(sep + skip));
    }
    if (lo > hi) throw UsageError("empty range " + s);
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + s + "'");
  }
}

RationalRankOptions rank_options(const RunConfig& cfg) {
  if (cfg.primes < 1) throw UsageError("--primes must be at least 1");
  RationalRankOptions opt;
  opt.seed = cfg.seed;
  opt.agreeing_primes = cfg.primes;
  opt.max_primes = std::max(opt.max_primes, 4 * cfg.primes);
  return opt;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) throw IoError("cannot open '" + cfg.out + "' for writing");
  os << text;
  if (!os) throw IoError("write to '" + cfg.out + "' failed");
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

int cmd_table(const RunConfig& cfg) {
  const auto ns = parse_range(cfg);
  TableMode mode = TableMode::kShortcut;
  if (cfg.mode == "direct") {
    mode = TableMode::kDirect;
  } else if (!cfg.mode.empty() && cfg.mode != "shortcut") {
    throw UsageError("table --mode must be shortcut or direct");
  }
  for (int n : ns) {
    require_supported_n(n, "table");
    if (n > kTableDefaultMaxN && !cfg.long_running) {
      throw UsageError("table: n = " + std::to_string(n) + " is long-running; pass --long");
    }
  }
  const auto opt = rank_options(cfg);
  json rows = json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "n,betti_top,betti_next,rank,c_top,c_next,c_low,runtime_ms\n";
  text << "n  H_{n+2}  H_{n+1}  rank  c_{n+2}  c_{n+1}  c_n\n";
  int status = kExitPass;
  for (int n : ns) {
    const auto start = std::chrono::steady_clock::now();
    TableRow row;
    try {
      row = table_row(n, mode, opt);
    } catch (const ContractViolation& e) {
      std::cerr << e.what() << "\n";
      status = kExitFail;
      continue;
    }
    const std::int64_t ms = cfg.no_timing ? 0 : elapsed_ms(start);
    if (row.rank_next) {
      std::cerr << "rank d" << n + 1 << " = " << *row.rank_next << " = c" << n << "\n";
    }
    json j = {{"n", n},
              {"betti_top", row.betti_top},
              {"betti_next", row.betti_next},
              {"rank", row.rank_top},
              {"c_top", row.c_top},
              {"c_next", row.c_next},
              {"c_low", row.c_low},
              {"runtime_ms", ms}};
    if (row.rank_next) j["rank_next"] = *row.rank_next;
    rows.push_back(j);
    csv << n << ',' << row.betti_top << ',' << row.betti_next << ',' << row.rank_top << ','
        << row.c_top << ',' << row.c_next << ',' << row.c_low << ',' << ms << '\n';
    text << n << "  " << row.betti_top << "  " << row.betti_next << "  " << row.rank_top << "  "
         << row.c_top << "  " << row.c_next << "  " << row.c_low << "\n";
  }
  if (cfg.format == "json") {
    emit(cfg, rows.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, csv.str());
  } else {
    emit(cfg, text.str());
  }
  return status;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> kChecks{"counts", "cyclic", "ddzero", "euler",
                                                "snf",    "vanishing", "witness"};
  return kChecks;
}

int check_cap(const std::string& check) {
  if (check == "vanishing") return kVanishingMaxN;
  if (check == "cyclic" || check == "snf" || check == "witness") return kSigmaSnfMaxN;
  if (check == "counts") return kCountsMaxN;
  if (check == "ddzero") return kDdZeroMaxN;
  return 12;  // euler: census mode is exact for any n with n! in range
}

CheckReport run_check(const std::string& check, int n, const RationalRankOptions& opt) {
  if (check == "euler") return verify_euler(n, opt);
  if (check == "cyclic") return verify_cyclic_theorem(n);
  if (check == "snf") return verify_snf_claims(n);
  if (check == "witness") return verify_torsion_witness(n);
  if (check == "vanishing") return verify_vanishing(n);
  if (check == "counts") return verify_counts(n);
  return verify_ddzero(n);
}

int cmd_verify(const RunConfig& cfg) {
  const auto ns = parse_range(cfg);
  const bool all = std::find(cfg.checks.begin(), cfg.checks.end(), "all") != cfg.checks.end();
  std::set<std::string> selected;
  for (const auto& c : cfg.checks) {
    if (c == "all") continue;
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
      throw UsageError("unknown check '" + c + "'");
    }
    selected.insert(c);
  }
  const auto opt = rank_options(cfg);
  std::vector<CheckReport> reports;
  for (int n : ns) {
    require_supported_n(n, "verify");
    for (const auto& check : known_checks()) {
      const bool explicit_pick = selected.count(check) > 0;
      if (!all && !explicit_pick) continue;
      if (n > check_cap(check)) {
        if (explicit_pick) {
          throw UsageError("check '" + check + "' is capped at n <= " +
                           std::to_string(check_cap(check)));
        }
        continue;
      }
      CheckReport r = run_check(check, n, opt);
      if (cfg.no_timing) r.runtime_ms = 0;
      reports.push_back(std::move(r));
    }
  }
  bool pass = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    arr.push_back(to_json(r));
    text << "n=" << r.n << ' ' << r.check << ' ' << (r.pass ? "pass" : "FAIL") << ' '
         << r.actual.dump() << '\n';
  }
  if (cfg.format == "text") {
    emit(cfg, text.str());
  } else if (cfg.format == "json") {
    emit(cfg, arr.dump(2) + "\n");
  } else {
    throw UsageError("verify supports --format json or text");
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_export(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("export needs --n");
  const int n = *cfg.n;
  require_supported_n(n, "export");
  const ComplexVariant variant = parse_variant(cfg.variant);
  const int degree = cfg.degree.value_or(n + 2);
  if (degree < n - 1 || degree > n + 2) {
    throw UsageError("--degree must lie in " + std::to_string(n - 1) + ".." +
                     std::to_string(n + 2));
  }
  std::optional<CyclicOrdering> sigma;
  if (variant == ComplexVariant::kCyclicSigma) {
    std::vector<Label> seq;
    if (cfg.sigma.empty()) {
      for (int i = 1; i <= n; ++i) seq.push_back(static_cast<Label>(i));
    } else {
      std::istringstream is(cfg.sigma);
      int x = 0;
      while (is >> x) {
        if (x < 1 || x > n) throw UsageError("--sigma entries must lie in 1.." + std::to_string(n));
        seq.push_back(static_cast<Label>(x));
      }
      if (static_cast<int>(seq.size()) != n) throw UsageError("--sigma needs n labels");
    }
    sigma = CyclicOrdering::from_sequence(seq);
  }
  const ChainComplex cx = build_complex(n, variant, sigma, {}, std::set<int>{degree});
  emit(cfg, cx.d(degree).to_triplet_text());
  if (!cfg.out.empty()) {
    RunConfig cells_cfg = cfg;
    cells_cfg.out = cfg.out + ".cells.json";
    json cells = {{"n", n},
                  {"variant", to_string(variant)},
                  {"degree", degree},
                  {"columns", cells_to_json(cx.cells(degree))},
                  {"rows", cells_to_json(cx.cells(degree - 1))}};
    if (sigma) cells["sigma"] = sigma->to_string();
    emit(cells_cfg, cells.dump(2) + "\n");
  }
  return kExitPass;
}

int cmd_census(const RunConfig& cfg) {
  json arr = json::array();
  for (int n : parse_range(cfg)) {
    if (n > kCountsMaxN && !cfg.long_running) {
      throw UsageError("census: n = " + std::to_string(n) + " is long-running; pass --long");
    }
    arr.push_back(to_json(census(n)));
  }
  emit(cfg, arr.dump(2) + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of the theta part of the tropical moduli space of genus-2 curves"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    sub->add_option("--seed", cfg.seed, "seed for the random primes of the rank computation");
    sub->add_option("--primes", cfg.primes, "number of primes that must agree on a rank");
    sub->add_flag("--long", cfg.long_running, "allow long-running sizes (n >= 7)");
    sub->add_flag("--no-timing", cfg.no_timing, "report runtime_ms as 0");
  };

  auto* table = app.add_subcommand("table", "top two rational Betti numbers");
  table->add_option("--n", cfg.n, "number of markings");
  table->add_option("--range", cfg.range, "range of n, e.g. 4..6");
  table->add_option("--mode", cfg.mode, "shortcut (default) or direct");
  add_common(table);

  auto* verify = app.add_subcommand("verify", "run checks, one JSON report per (n, check)");
  verify->add_option("n,--n", cfg.n, "number of markings");
  verify->add_option("which,--check", cfg.checks,
                     "all, euler, cyclic, snf, witness, vanishing, counts, ddzero");
  verify->add_option("--range", cfg.range, "range of n, e.g. 4..6");
  add_common(verify);

  auto* exp = app.add_subcommand("export", "write a boundary matrix and its cell lists");
  exp->add_option("--n", cfg.n, "number of markings")->required();
  exp->add_option("--variant", cfg.variant, "full, cyclic-sigma, cyclic-all, full-rel-cyclic");
  exp->add_option("--degree", cfg.degree, "source degree of the boundary (default n+2)");
  exp->add_option("--sigma", cfg.sigma, "cyclic ordering for cyclic-sigma, e.g. \"1 3 2 4\"");
  add_common(exp);

  auto* cen = app.add_subcommand("census", "cell counts by degree");
  cen->add_option("--n", cfg.n, "number of markings");
  cen->add_option("--range", cfg.range, "range of n, e.g. 4..8");
  add_common(cen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*exp) return cmd_export(cfg);
    return cmd_census(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedRange& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitFail;
  }
}
