// Copyright 2026 The rwrange Authors.
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


// Experiment configuration, dispatch and result files.
//
// Configs are flat `key = value` text; lists are comma separated. Every
// Monte Carlo experiment needs an explicit `seed`.

#ifndef RWRANGE_HARNESS_HPP
#define RWRANGE_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rwrange {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw key/value pairs with the line each key came from.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& source = "<config>");
  static Config load(const std::filesystem::path& path);

  /// Later sets win; `origin` is reported in errors.
  void set(const std::string& key, const std::string& value, const std::string& origin = "override");

  bool has(const std::string& key) const { return values_.contains(key); }
  const std::map<std::string, std::string>& values() const { return values_; }
  std::string origin(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::int64_t get_i64(const std::string& key) const;
  double get_double(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<std::uint64_t> get_u64_list(const std::string& key) const;
  /// Splits on commas outside parentheses, so "ball(1,2,3), point(4,5)" has
  /// two items.
  std::vector<std::string> get_list(const std::string& key) const;

  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;

 private:
  const std::string& raw(const std::string& key) const;
  [[noreturn]] void fail(const std::string& key, const std::string& what) const;

  std::map<std::string, std::string> values_;
  std::map<std::string, std::string> origins_;
};

/// Experiments: simulate, encode, decode, entropy, lemma-check, extract,
/// percolation, intersect. "intersection" is accepted for intersect.
std::string canonical_experiment(const std::string& name);
const std::vector<std::string>& experiment_names();

/// A validated config: known keys only, required keys present.
struct ExperimentConfig {
  std::string experiment;
  std::string name;  // output file stem
  Config values;
  unsigned threads = 0;
};

ExperimentConfig make_experiment(const std::string& experiment, Config config);

struct ResultRow {
  std::string experiment;
  int d = 0;
  std::uint64_t n = 0;
  std::string tag;
  std::uint64_t seed = 0;
  std::uint64_t reps = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::vector<std::pair<std::string, std::string>> extra;

  std::string extra_value(const std::string& key) const;
};

/// Column order: experiment,d,n,tag,seed,reps,estimate,stderr,extra.
/// Reals use 9 significant digits; extra is `k=v` pairs joined by ';'.
std::string format_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(const std::string& text);
std::string format_real(double v);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct RunOutput {
  std::vector<ResultRow> rows;
  std::string summary_json;
  std::vector<PlotSeries> plots;
  /// Additional files keyed by suffix, e.g. "bits.txt".
  std::map<std::string, std::string> attachments;
};

RunOutput run_experiment(const ExperimentConfig& config);

/// Writes <name>.csv, <name>.json, <name>.plot.tsv (when there are plots)
/// and <name>.<suffix> attachments. Files are staged and renamed into
/// place only after every one was written. Returns the paths.
std::vector<std::filesystem::path> write_outputs(const RunOutput& out, const std::filesystem::path& dir,
                                                 const std::string& name);

/// Readable summary of CSV result files (or directories of them) with
/// normalized ratios, bands and FAIL lines.
struct ReportResult {
  std::string text;
  std::size_t failures = 0;
};
ReportResult report(const std::vector<std::filesystem::path>& inputs);
ReportResult report_rows(const std::vector<ResultRow>& rows);

}  // namespace rwrange

#endif  // RWRANGE_HARNESS_HPP
