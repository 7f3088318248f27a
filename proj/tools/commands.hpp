// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xleg/family_key.hpp"
#include "xleg/json_io.hpp"

namespace xleg {
class XFamily;
}

namespace xleg::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kInadmissible = 3,
};

struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// "" -> {}, "1,2" -> {1, 2}. Throws std::invalid_argument.
std::vector<std::size_t> parse_index_list(std::string_view text);
/// "2,-8/5" -> {2, -8/5}. Throws std::invalid_argument.
std::vector<Rat> parse_rat_list(std::string_view text);
/// "0..5" or "3". Throws std::invalid_argument.
IndexRange parse_range(std::string_view text);
FamilyKey parse_key(std::string_view m_text, std::string_view t_text);

enum class Format { kJson, kCsv };

struct GenOptions {
  FamilyKey key;
  IndexRange range{0, 5};
  Format format = Format::kJson;
  std::string out;  // empty: stdout
};

io::FamilyRecord make_family_record(const XFamily& family, IndexRange range);
/// Columns: name,i,degree,power,coefficient; name is "tau" or "P".
void write_family_csv(const io::FamilyRecord& rec, std::ostream& os);
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

enum class Suite { kEigen, kOrtho, kFactor, kRecur, kDegree };
std::set<Suite> parse_suites(std::string_view text);
std::string suite_name(Suite s);

struct VerifyOptions {
  FamilyKey key;
  std::size_t max_i = 12;
  std::set<Suite> suites;
  std::string out;
  /// 0 selects the default probe degree.
  std::size_t probe_degree = 0;
};

/// Report: {"key", "original_key", "canonicalized", "suites", "entries", "pass"}.
struct VerifyResult {
  int exit_code = kPass;
  io::json report;
};
VerifyResult run_verify(const VerifyOptions& opt);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

struct WeightOptions {
  FamilyKey key;
  std::size_t samples = 1001;
  int precision = 17;
  std::string out;
};

/// (z_k, 1/tau(z_k)^2) on z_k = -1 + 2k/(samples-1), exact. Throws
/// InadmissibleError, std::invalid_argument for samples < 2.
std::vector<std::pair<Rat, Rat>> weight_samples(const XFamily& family, std::size_t samples);
int cmd_weight(const WeightOptions& opt, std::ostream& out, std::ostream& err);

struct DegreeRow {
  std::size_t i = 0;
  std::size_t predicted = 0;
  std::size_t actual = 0;
};

struct DegreeTable {
  std::size_t tau_degree = 0;
  std::vector<DegreeRow> rows;
  std::vector<std::size_t> missing;
  bool consistent() const;
};

/// Rows for i <= max_i; the missing set is built from actual degrees of
/// every P_{m;i} that can land below 2 sum(m) + n + max(m) + 1.
DegreeTable degree_table(const XFamily& family, std::size_t max_i);
int cmd_degrees(const FamilyKey& key, std::size_t max_i, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace xleg::cli
