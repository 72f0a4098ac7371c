#pragma once

// Verification suites and their JSON reports, plus the CSV dumps.
// Reports carry no timings so that equal inputs give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pslekr/char_table.hpp"
#include "pslekr/cyclotomic.hpp"
#include "pslekr/group.hpp"

namespace pslekr {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr int kDefaultApproxDigits = 12;

enum class Suite { Table, Sums, Rank, Ekr };

std::string to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct SuiteOptions {
  int approx_digits = kDefaultApproxDigits;
  /// Drives the sampled property checks.
  uint64_t seed = 0;
  bool allow_ekr_q9 = false;
};

/// Why `suite` cannot run at q, or nullopt when it can.
std::optional<std::string> suite_out_of_range(Suite suite, int q, const SuiteOptions& opts);

struct SuiteReport {
  nlohmann::ordered_json json;
  bool pass = false;
  std::string first_failure;
};

/// Callers check suite_out_of_range first; the library errors propagate otherwise.
SuiteReport run_suite(Suite suite, const ProjectiveGroup& group, const SuiteOptions& opts);

/// Real part only for real values, otherwise "a+bi"; `digits` significant digits.
std::string approx_string(const CycNum& z, int digits);
nlohmann::ordered_json cyc_json(const CycNum& z, int digits);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// RFC 4180: CRLF line breaks, fields quoted when needed.
  std::string str() const;
};

std::string csv_field(std::string_view s);

/// One row per irreducible; per class an exact and an approximate column.
CsvTable table_csv(const CharTable& table, int digits);
/// One row per a in F_q; per basis element an exact and an approximate column.
CsvTable legendre_csv(const FieldCtx& ctx, int digits);
/// Rows are PSL derangements, columns pairs of Omega.
CsvTable matrix_m_csv(const ProjectiveGroup& group);
/// Rows and columns are pairs of Omega.
CsvTable matrix_n_csv(const ProjectiveGroup& group);

}  // namespace pslekr
