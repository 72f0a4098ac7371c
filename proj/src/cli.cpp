#include "pslekr/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pslekr/char_table.hpp"
#include "pslekr/derangement.hpp"
#include "pslekr/error.hpp"
#include "pslekr/field.hpp"
#include "pslekr/group.hpp"
#include "pslekr/report.hpp"

namespace pslekr {

namespace {

struct VerifyConfig {
  std::vector<std::string> q_list;
  std::string suite = "all";
  std::string out_dir = "out";
  double budget_seconds = 0;
  int approx_digits = kDefaultApproxDigits;
  uint64_t seed = 0;
  bool allow_ekr_q9 = false;
};

struct DumpConfig {
  std::string what;
  std::string q;
  std::string out_dir = "out";
  int approx_digits = kDefaultApproxDigits;
};

struct ConfigError {
  std::string message;
};

int parse_q(const std::string& text) {
  int q = 0;
  size_t used = 0;
  try {
    q = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError{"q must be an integer: '" + text + "'"};
  }
  if (used != text.size()) throw ConfigError{"q must be an integer: '" + text + "'"};
  const auto pe = prime_power_decomposition(q);
  if (!pe || pe->first == 2) throw ConfigError{"q = " + text + " is not an odd prime power"};
  if (q > kDefaultMaxQ) throw ConfigError{"q = " + text + " exceeds the field size cap " + std::to_string(kDefaultMaxQ)};
  return q;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  f << content;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<int> qs;
  std::vector<Suite> suites;
  SuiteOptions opts;
  try {
    for (const auto& t : cfg.q_list) {
      std::stringstream ss(t);
      std::string item;
      while (std::getline(ss, item, ',')) qs.push_back(parse_q(item));
    }
    if (qs.empty()) throw ConfigError{"no q given"};
    if (cfg.suite == "all") {
      suites = {Suite::Table, Suite::Sums, Suite::Rank, Suite::Ekr};
    } else if (auto s = parse_suite(cfg.suite)) {
      suites = {*s};
    } else {
      throw ConfigError{"unknown suite '" + cfg.suite + "'"};
    }
    if (cfg.approx_digits < 1 || cfg.approx_digits > 17) throw ConfigError{"--approx-digits must be in [1, 17]"};
    if (cfg.budget_seconds < 0) throw ConfigError{"--budget-seconds must be >= 0"};
    opts.approx_digits = cfg.approx_digits;
    opts.seed = cfg.seed;
    opts.allow_ekr_q9 = cfg.allow_ekr_q9;
    if (cfg.suite != "all") {
      for (int q : qs) {
        if (auto why = suite_out_of_range(suites[0], q, opts))
          throw ConfigError{cfg.suite + " at q = " + std::to_string(q) + ": " + *why};
      }
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.message << "\n";
    return kExitInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  bool all_pass = true;
  for (int q : qs) {
    const ProjectiveGroup group(make_field_ctx_for_q(q));
    for (Suite suite : suites) {
      const std::string tag = "q=" + std::to_string(q) + " " + to_string(suite);
      if (auto why = suite_out_of_range(suite, q, opts)) {
        out << tag << " SKIP (" << *why << ")\n";
        continue;
      }
      if (cfg.budget_seconds > 0) {
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
        if (used.count() > cfg.budget_seconds) {
          err << "error: time budget of " << cfg.budget_seconds << " s exhausted before " << tag << "\n";
          return kExitFailure;
        }
      }
      SuiteReport rep;
      try {
        rep = run_suite(suite, group, opts);
      } catch (const Error& e) {
        err << tag << ": " << e.what() << "\n";
        return kExitFailure;
      }
      const auto path = std::filesystem::path(cfg.out_dir) / ("q" + std::to_string(q) + "_" + to_string(suite) + ".json");
      write_file(path, rep.json.dump(2) + "\n");
      if (rep.pass) {
        out << tag << " PASS\n";
      } else {
        out << tag << " FAIL (" << rep.first_failure << ")\n";
        all_pass = false;
      }
    }
  }
  return all_pass ? kExitOk : kExitFailure;
}

int cmd_dump(const DumpConfig& cfg, std::ostream& out, std::ostream& err) {
  int q = 0;
  try {
    q = parse_q(cfg.q);
    if (cfg.approx_digits < 1 || cfg.approx_digits > 17) throw ConfigError{"--approx-digits must be in [1, 17]"};
    if ((cfg.what == "table" || cfg.what == "legendre") && q < 5) throw ConfigError{cfg.what + " needs q >= 5"};
    if (cfg.what == "matrixN" || cfg.what == "matrixM") {
      if (q > kMaxRankQ) throw ConfigError{cfg.what + " limited to q <= " + std::to_string(kMaxRankQ)};
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.message << "\n";
    return kExitInvalid;
  }
  const ProjectiveGroup group(make_field_ctx_for_q(q));
  CsvTable csv;
  if (cfg.what == "table") {
    csv = table_csv(CharTable(group), cfg.approx_digits);
  } else if (cfg.what == "legendre") {
    csv = legendre_csv(group.field(), cfg.approx_digits);
  } else if (cfg.what == "matrixM") {
    csv = matrix_m_csv(group);
  } else {
    csv = matrix_n_csv(group);
  }
  const auto path = std::filesystem::path(cfg.out_dir) / ("q" + std::to_string(q) + "_" + cfg.what + ".csv");
  write_file(path, csv.str());
  out << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the PSL(2,q) derangement rank and EKR computations"};
  app.require_subcommand(1);

  VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "Run verification suites and write JSON reports");
  verify->add_option("--q", vcfg.q_list, "Comma separated odd prime powers")->required();
  verify->add_option("--suite", vcfg.suite, "table, sums, rank, ekr or all");
  verify->add_option("--out", vcfg.out_dir, "Report directory");
  verify->add_option("--budget-seconds", vcfg.budget_seconds, "Stop before a suite once exceeded (0: no cap)");
  verify->add_option("--approx-digits", vcfg.approx_digits, "Significant digits of approximations");
  verify->add_option("--seed", vcfg.seed, "Seed of the sampled property checks");
  verify->add_flag("--allow-ekr-q9", vcfg.allow_ekr_q9, "Run the EKR enumeration at q = 9");

  DumpConfig dcfg;
  auto* dump = app.add_subcommand("dump", "Write a CSV table");
  dump->add_option("what", dcfg.what, "table, legendre, matrixM or matrixN")
      ->required()
      ->check(CLI::IsMember({"table", "legendre", "matrixM", "matrixN"}));
  dump->add_option("--q", dcfg.q, "Odd prime power")->required();
  dump->add_option("--out", dcfg.out_dir, "Output directory");
  dump->add_option("--approx-digits", dcfg.approx_digits, "Significant digits of approximations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }
  if (verify->parsed()) return cmd_verify(vcfg, out, err);
  return cmd_dump(dcfg, out, err);
}

}  // namespace pslekr
