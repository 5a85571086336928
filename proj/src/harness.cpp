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


#include "rwrange/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include "json.hpp"
#include <set>
#include <sstream>

#include "rwrange/entropy.hpp"
#include "rwrange/extractor.hpp"
#include "rwrange/percolation.hpp"
#include "rwrange/potential.hpp"
#include "rwrange/range_codec.hpp"
#include "rwrange/range_set.hpp"
#include "rwrange/stats.hpp"

namespace rwrange {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

template <typename T>
std::optional<T> parse_number(const std::string& s) {
  T v{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_u64(const std::string& s) {
  // Accepts 2^k as a convenience for grids.
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    const auto base = parse_number<std::uint64_t>(s.substr(0, caret));
    const auto exp = parse_number<std::uint64_t>(s.substr(caret + 1));
    if (!base || !exp || *exp > 63) return std::nullopt;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < *exp; ++i) {
      if (v > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(*base, 1)) return std::nullopt;
      v *= *base;
    }
    return v;
  }
  return parse_number<std::uint64_t>(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// Config

Config Config::parse(const std::string& text, const std::string& source) {
  Config c;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ConfigError(where + ": empty key");
    if (c.has(key)) throw ConfigError(where + ": duplicate key '" + key + "' (first set at " + c.origin(key) + ")");
    c.set(key, trim(t.substr(eq + 1)), where);
  }
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

void Config::set(const std::string& key, const std::string& value, const std::string& origin) {
  values_[key] = value;
  origins_[key] = origin;
}

std::string Config::origin(const std::string& key) const {
  const auto it = origins_.find(key);
  return it == origins_.end() ? "?" : it->second;
}

const std::string& Config::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing required key '" + key + "'");
  return it->second;
}

void Config::fail(const std::string& key, const std::string& what) const {
  throw ConfigError(origin(key) + ": key '" + key + "': " + what + ", got '" + raw(key) + "'");
}

std::string Config::get_string(const std::string& key) const { return raw(key); }

std::uint64_t Config::get_u64(const std::string& key) const {
  const auto v = parse_u64(raw(key));
  if (!v) fail(key, "expected an unsigned integer");
  return *v;
}

std::int64_t Config::get_i64(const std::string& key) const {
  const auto v = parse_number<std::int64_t>(raw(key));
  if (!v) fail(key, "expected an integer");
  return *v;
}

double Config::get_double(const std::string& key) const {
  const auto v = parse_number<double>(raw(key));
  if (!v) fail(key, "expected a number");
  return *v;
}

bool Config::get_bool(const std::string& key) const {
  const std::string& v = raw(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(key, "expected true or false");
}

std::vector<std::uint64_t> Config::get_u64_list(const std::string& key) const {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_top_level(raw(key))) {
    const auto v = parse_u64(item);
    if (!v) fail(key, "expected a comma-separated list of unsigned integers");
    out.push_back(*v);
  }
  if (out.empty()) fail(key, "expected a non-empty list");
  return out;
}

std::vector<std::string> Config::get_list(const std::string& key) const {
  auto out = split_top_level(raw(key));
  if (out.empty() || std::any_of(out.begin(), out.end(), [](const auto& s) { return s.empty(); })) {
    fail(key, "expected a comma-separated list");
  }
  return out;
}

std::string Config::get_string_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

std::uint64_t Config::get_u64_or(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? get_u64(key) : fallback;
}

// ---------------------------------------------------------------------------
// Schema

namespace {

enum class KeyType { kString, kU64, kBool, kU64List, kList };

struct Schema {
  std::map<std::string, KeyType> keys;
  std::vector<std::string> required;
  std::vector<std::vector<std::string>> one_of;  // at least one of each group
  bool monte_carlo = true;
};

const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> s = [] {
    const std::map<std::string, KeyType> common = {{"experiment", KeyType::kString}, {"name", KeyType::kString},
                                                   {"seed", KeyType::kU64},          {"reps", KeyType::kU64},
                                                   {"threads", KeyType::kU64},       {"out", KeyType::kString}};
    auto with = [&](std::map<std::string, KeyType> extra) {
      extra.insert(common.begin(), common.end());
      return extra;
    };
    std::map<std::string, Schema> m;
    m["simulate"] = {with({{"d", KeyType::kU64}, {"n", KeyType::kU64}, {"n_grid", KeyType::kU64List}}),
                     {"seed", "reps"},
                     {{"n", "n_grid"}}};
    m["encode"] = {with({{"n", KeyType::kU64}, {"n_grid", KeyType::kU64List}, {"write_streams", KeyType::kBool},
                          {"write_rwrc", KeyType::kBool}}),
                   {"seed", "reps"},
                   {{"n", "n_grid"}}};
    m["decode"] = {with({{"input", KeyType::kString}}), {"input"}, {}, false};
    m["entropy"] = {with({{"d", KeyType::kU64},
                          {"n", KeyType::kU64},
                          {"n_grid", KeyType::kU64List},
                          {"mode", KeyType::kString},
                          {"budget", KeyType::kU64}}),
                    {},
                    {{"n", "n_grid"}}};
    m["lemma-check"] = {with({{"lemma", KeyType::kList}}), {"seed", "reps"}, {}};
    m["extract"] = {with({{"n", KeyType::kU64},
                          {"n_grid", KeyType::kU64List},
                          {"template", KeyType::kString},
                          {"templates", KeyType::kString}}),
                    {"seed", "reps"},
                    {{"n", "n_grid"}}};
    m["percolation"] = {with({{"L", KeyType::kU64}, {"L_grid", KeyType::kU64List}}), {"seed", "reps"}, {{"L", "L_grid"}}};
    m["intersect"] = {with({{"L", KeyType::kU64}, {"targets", KeyType::kList}}), {"seed", "reps", "L"}, {}};
    return m;
  }();
  return s;
}

std::vector<std::uint64_t> grid_of(const Config& c, const std::string& single, const std::string& list) {
  return c.has(list) ? c.get_u64_list(list) : std::vector<std::uint64_t>{c.get_u64(single)};
}

int dim_of(const Config& c, int fallback = 2) {
  const std::uint64_t d = c.get_u64_or("d", static_cast<std::uint64_t>(fallback));
  if (d < 1 || d > static_cast<std::uint64_t>(kMaxDim)) {
    throw ConfigError(c.origin("d") + ": key 'd': expected 1.." + std::to_string(kMaxDim));
  }
  return static_cast<int>(d);
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"simulate", "encode",      "decode",   "entropy",
                                                 "lemma-check", "extract", "percolation", "intersect"};
  return names;
}

std::string canonical_experiment(const std::string& name) {
  if (name == "intersection") return "intersect";
  if (name == "lemma_check") return "lemma-check";
  if (std::find(experiment_names().begin(), experiment_names().end(), name) == experiment_names().end()) {
    throw ConfigError("unknown experiment '" + name + "'");
  }
  return name;
}

ExperimentConfig make_experiment(const std::string& experiment, Config config) {
  ExperimentConfig ec;
  ec.experiment = canonical_experiment(experiment);
  if (config.has("experiment") && canonical_experiment(config.get_string("experiment")) != ec.experiment) {
    throw ConfigError(config.origin("experiment") + ": config is for experiment '" + config.get_string("experiment") +
                      "', not '" + ec.experiment + "'");
  }
  const Schema& schema = schemas().at(ec.experiment);
  for (const auto& [key, value] : config.values()) {
    const auto it = schema.keys.find(key);
    if (it == schema.keys.end()) {
      throw ConfigError(config.origin(key) + ": unknown key '" + key + "' for experiment " + ec.experiment);
    }
    switch (it->second) {
      case KeyType::kString: break;
      case KeyType::kU64: config.get_u64(key); break;
      case KeyType::kBool: config.get_bool(key); break;
      case KeyType::kU64List: config.get_u64_list(key); break;
      case KeyType::kList: config.get_list(key); break;
    }
  }
  std::vector<std::string> required = schema.required;
  if (ec.experiment == "entropy" && config.get_string_or("mode", "sandwich") != "exact") {
    required.insert(required.end(), {"seed", "reps"});
  }
  for (const auto& key : required) {
    if (!config.has(key)) {
      throw ConfigError("experiment " + ec.experiment + ": missing required key '" + key + "'" +
                        (key == "seed" ? " (Monte Carlo experiments need an explicit master seed)" : ""));
    }
  }
  for (const auto& group : schema.one_of) {
    if (std::none_of(group.begin(), group.end(), [&](const auto& k) { return config.has(k); })) {
      std::string names;
      for (const auto& k : group) names += (names.empty() ? "'" : " or '") + k + "'";
      throw ConfigError("experiment " + ec.experiment + ": needs " + names);
    }
  }
  ec.name = config.get_string_or("name", ec.experiment);
  if (ec.name.empty() || ec.name.find_first_of("/\\") != std::string::npos) {
    throw ConfigError("key 'name': must be a plain file stem");
  }
  ec.threads = static_cast<unsigned>(config.get_u64_or("threads", 0));
  ec.values = std::move(config);
  return ec;
}

// ---------------------------------------------------------------------------
// CSV

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string ResultRow::extra_value(const std::string& key) const {
  for (const auto& [k, v] : extra) {
    if (k == key) return v;
  }
  return {};
}

namespace {

const char* const kHeader = "experiment,d,n,tag,seed,reps,estimate,stderr,extra";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ConfigError("unterminated quote in CSV line");
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  const auto v = parse_number<double>(s);
  if (!v) throw ConfigError("bad number '" + s + "' in CSV");
  return *v;
}

}  // namespace

std::string format_csv(const std::vector<ResultRow>& rows) {
  std::string out = std::string(kHeader) + "\n";
  for (const auto& r : rows) {
    std::string extra;
    for (const auto& [k, v] : r.extra) extra += (extra.empty() ? "" : ";") + k + "=" + v;
    out += csv_field(r.experiment) + "," + std::to_string(r.d) + "," + std::to_string(r.n) + "," + csv_field(r.tag) +
           "," + std::to_string(r.seed) + "," + std::to_string(r.reps) + "," + format_real(r.estimate) + "," +
           format_real(r.std_error) + "," + csv_field(extra) + "\n";
  }
  return out;
}

std::vector<ResultRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kHeader) throw ConfigError("not a result CSV (bad header)");
  std::vector<ResultRow> rows;
  for (int lineno = 2; std::getline(in, line); ++lineno) {
    if (trim(line).empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw ConfigError("CSV line " + std::to_string(lineno) + ": expected 9 fields");
    ResultRow r;
    r.experiment = f[0];
    const auto d = parse_number<int>(f[1]);
    const auto n = parse_number<std::uint64_t>(f[2]);
    const auto seed = parse_number<std::uint64_t>(f[4]);
    const auto reps = parse_number<std::uint64_t>(f[5]);
    if (!d || !n || !seed || !reps) throw ConfigError("CSV line " + std::to_string(lineno) + ": bad integer field");
    r.d = *d;
    r.n = *n;
    r.tag = f[3];
    r.seed = *seed;
    r.reps = *reps;
    r.estimate = parse_real(f[6]);
    r.std_error = parse_real(f[7]);
    std::istringstream ex(f[8]);
    std::string kv;
    while (std::getline(ex, kv, ';')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("CSV line " + std::to_string(lineno) + ": bad extra field");
      r.extra.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

double log2_sq_over_n(std::uint64_t n) {
  const double l = std::log2(static_cast<double>(n));
  return l * l / static_cast<double>(n);
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (auto b : bytes) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

std::vector<std::uint8_t> from_hex(const std::string& s) {
  if (s.size() % 2) throw ConfigError("odd-length hex stream");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    const auto v = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw ConfigError("bad hex digit");
    };
    out.push_back(static_cast<std::uint8_t>(v(s[i]) * 16 + v(s[i + 1])));
  }
  return out;
}

struct Context {
  const ExperimentConfig& cfg;
  RunOutput out;
  std::uint64_t seed() const { return cfg.values.get_u64("seed"); }
  std::uint64_t reps() const { return cfg.values.get_u64("reps"); }
  ResultRow row(int d, std::uint64_t n, std::string tag) const {
    ResultRow r;
    r.experiment = cfg.experiment;
    r.d = d;
    r.n = n;
    r.tag = std::move(tag);
    if (cfg.values.has("seed")) r.seed = seed();
    return r;
  }
};

void run_simulate(Context& ctx) {
  const int d = dim_of(ctx.cfg.values);
  PlotSeries plot{"mean_range_size", {}};
  for (std::uint64_t n : grid_of(ctx.cfg.values, "n", "n_grid")) {
    struct Obs {
      double range, boundary, max_norm2, end_norm2;
    };
    const std::uint64_t seed = mix_seed(ctx.seed(), n);
    const auto obs = replicate(ctx.reps(), seed, ctx.cfg.threads, [&](RngStream& rng, std::uint64_t) {
      const Trajectory t = simulate_walk(d, n, rng);
      const RangeSet r = range_of(t);
      double mx = 0;
      for (const auto& p : t.points()) mx = std::max(mx, static_cast<double>(p.norm2()));
      return Obs{static_cast<double>(r.size()), static_cast<double>(inner_boundary(r).size()), mx,
                 static_cast<double>(t.endpoint().norm2())};
    });
    std::vector<double> sizes;
    for (std::size_t i = 0; i < obs.size(); ++i) {
      ResultRow row = ctx.row(d, n, "replica=" + std::to_string(i));
      row.reps = 1;
      row.estimate = obs[i].range;
      row.extra = {{"boundary", format_real(obs[i].boundary)},
                   {"max_norm2", format_real(obs[i].max_norm2)},
                   {"end_norm2", format_real(obs[i].end_norm2)}};
      ctx.out.rows.push_back(std::move(row));
      sizes.push_back(obs[i].range);
    }
    const Summary s = summarize(sizes);
    ResultRow mean = ctx.row(d, n, "mean_range");
    mean.reps = ctx.reps();
    mean.estimate = s.mean;
    mean.std_error = s.std_error;
    ctx.out.rows.push_back(std::move(mean));
    plot.points.emplace_back(static_cast<double>(n), s.mean);
  }
  ctx.out.plots.push_back(std::move(plot));
}

void run_encode(Context& ctx) {
  const bool streams = ctx.cfg.values.has("write_streams") && ctx.cfg.values.get_bool("write_streams");
  const bool rwrc = ctx.cfg.values.has("write_rwrc") && ctx.cfg.values.get_bool("write_rwrc");
  std::string stream_text;
  PlotSeries plot{"mean_bits_log2n_sq_over_n", {}};
  for (std::uint64_t n : grid_of(ctx.cfg.values, "n", "n_grid")) {
    struct Enc {
      std::uint64_t bits, hierarchy, fill, boundary, range;
      bool roundtrip;
      std::vector<std::uint8_t> bytes;
    };
    const std::uint64_t seed = mix_seed(ctx.seed(), n);
    const auto encs = replicate(ctx.reps(), seed, ctx.cfg.threads, [&](RngStream& rng, std::uint64_t) {
      const RangeSet r = range_of(simulate_walk(2, n, rng));
      const RangeBitStream s = encode_range(r, n);
      const auto breakdown = code_length_breakdown(r, n);
      const DecodedRange back = decode_range(s.to_bytes());
      return Enc{s.total_bits,
                 s.total_bits - breakdown.finite_components,
                 breakdown.finite_components,
                 inner_boundary(r).size(),
                 r.size(),
                 back.range == r && back.n == n,
                 streams || rwrc ? s.to_bytes() : std::vector<std::uint8_t>()};
    });
    std::vector<double> bits;
    for (std::size_t i = 0; i < encs.size(); ++i) {
      const Enc& e = encs[i];
      ResultRow row = ctx.row(2, n, "replica=" + std::to_string(i));
      row.reps = 1;
      row.estimate = static_cast<double>(e.bits);
      row.extra = {{"hierarchy_bits", std::to_string(e.hierarchy)},
                   {"fill_bits", std::to_string(e.fill)},
                   {"boundary", std::to_string(e.boundary)},
                   {"range", std::to_string(e.range)},
                   {"roundtrip", e.roundtrip ? "ok" : "mismatch"}};
      ctx.out.rows.push_back(std::move(row));
      bits.push_back(static_cast<double>(e.bits));
      if (streams) stream_text += std::to_string(n) + " " + std::to_string(i) + " " + to_hex(e.bytes) + "\n";
      if (rwrc) {
        ctx.out.attachments["n" + std::to_string(n) + "_r" + std::to_string(i) + ".rwrc"] =
            std::string(e.bytes.begin(), e.bytes.end());
      }
    }
    const Summary s = summarize(bits);
    ResultRow mean = ctx.row(2, n, "mean_bits");
    mean.reps = ctx.reps();
    mean.estimate = s.mean;
    mean.std_error = s.std_error;
    mean.extra = {{"normalized", format_real(s.mean * log2_sq_over_n(n))}};
    ctx.out.rows.push_back(std::move(mean));
    plot.points.emplace_back(static_cast<double>(n), s.mean * log2_sq_over_n(n));
  }
  ctx.out.plots.push_back(std::move(plot));
  if (streams) ctx.out.attachments["streams.txt"] = stream_text;
}

void run_decode(Context& ctx) {
  const std::string path = ctx.cfg.values.get_string("input");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read input " + path);
  std::string line, points;
  std::size_t index = 0;
  auto emit = [&](const DecodedRange& dr) {
    ResultRow row = ctx.row(2, dr.n, "stream=" + std::to_string(index));
    row.reps = 1;
    row.estimate = static_cast<double>(dr.range.size());
    row.extra = {{"boundary", std::to_string(inner_boundary(dr.range).size())}};
    ctx.out.rows.push_back(std::move(row));
    points += "# stream " + std::to_string(index) + " n=" + std::to_string(dr.n) + "\n";
    for (const auto& p : dr.range.sorted_points()) points += std::to_string(p[0]) + " " + std::to_string(p[1]) + "\n";
    ++index;
  };
  // A raw RWRC file holds exactly one range.
  if (char magic[4]{}; in.read(magic, 4) && std::string(magic, 4) == "RWRC") {
    std::vector<std::uint8_t> bytes(magic, magic + 4);
    bytes.insert(bytes.end(), std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    try {
      emit(decode_range(bytes));
    } catch (const CodecError& e) {
      throw ConfigError(path + ": " + e.what());
    }
    ctx.out.attachments["points.txt"] = points;
    return;
  }
  in.clear();
  in.seekg(0);
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    // Either "n replica hex" as written by encode, or a bare hex stream.
    std::istringstream ls(t);
    std::vector<std::string> parts;
    for (std::string w; ls >> w;) parts.push_back(w);
    const std::string& hex = parts.back();
    const DecodedRange dr = [&] {
      try {
        return decode_range(from_hex(hex));
      } catch (const CodecError& e) {
        throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }();
    emit(dr);
  }
  ctx.out.attachments["points.txt"] = points;
}

double normalize(int d, std::uint64_t n, double bits) {
  const double l = std::log2(static_cast<double>(n));
  if (d == 1) return bits / l;
  if (d == 2) return bits * l * l / static_cast<double>(n);
  return bits / static_cast<double>(n);
}

void run_entropy(Context& ctx) {
  const Config& c = ctx.cfg.values;
  const int d = dim_of(c);
  const std::string mode = c.get_string_or("mode", "sandwich");
  if (mode != "exact" && mode != "lower" && mode != "upper" && mode != "sandwich" && mode != "scaling") {
    throw ConfigError(c.origin("mode") + ": key 'mode': expected exact, lower, upper, sandwich or scaling");
  }
  if ((mode == "upper") && d != 2) throw ConfigError("codec upper bound needs d = 2");
  const auto grid = grid_of(c, "n", "n_grid");
  const bool want_exact = mode == "exact" || mode == "sandwich";
  const bool want_lower = mode == "lower" || mode == "sandwich" || mode == "scaling";
  const bool want_upper = d == 2 && (mode == "upper" || mode == "sandwich" || mode == "scaling");
  std::map<std::string, PlotSeries> plots;
  auto emit = [&](const EntropyEstimate& e, std::uint64_t reps) {
    const std::string kind = to_string(e.kind);
    ResultRow row = ctx.row(d, e.n, kind);
    row.reps = reps;
    row.estimate = e.value;
    row.std_error = e.std_error;
    row.extra = {{"kind", kind}, {"normalized", format_real(normalize(d, e.n, e.value))}};
    if (e.kind == EstimateKind::kExact) row.extra.emplace_back("trajectories", std::to_string(e.samples));
    ctx.out.rows.push_back(std::move(row));
    auto& p = plots[kind];
    p.label = kind;
    p.points.emplace_back(static_cast<double>(e.n), normalize(d, e.n, e.value));
  };
  std::vector<ScalingRow> scaling;
  if (want_lower || want_upper) scaling = scaling_experiment(d, grid, ctx.reps(), ctx.seed(), ctx.cfg.threads);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (want_exact) emit(exact_range_entropy(d, grid[i], c.get_u64_or("budget", kDefaultEnumerationBudget)), 0);
    if (want_lower) emit(scaling[i].lower, scaling[i].reps);
    if (want_upper) emit(scaling[i].upper, scaling[i].reps);
  }
  for (auto& [k, p] : plots) ctx.out.plots.push_back(std::move(p));
}

void run_lemma_check(Context& ctx) {
  std::vector<LemmaId> ids;
  const auto names = ctx.cfg.values.has("lemma") ? ctx.cfg.values.get_list("lemma") : std::vector<std::string>{"all"};
  for (const auto& name : names) {
    if (name == "all") {
      ids.insert(ids.end(), std::begin(kAllLemmas), std::end(kAllLemmas));
    } else {
      try {
        ids.push_back(parse_lemma_id(name));
      } catch (const InvalidArgument& e) {
        throw ConfigError(ctx.cfg.values.origin("lemma") + ": key 'lemma': " + e.what());
      }
    }
  }
  for (LemmaId id : ids) {
    const std::string lemma = to_string(id);
    const auto grid = default_lemma_grid(id);
    const auto rep = lemma_check(id, grid, ctx.reps(), mix_seed(ctx.seed(), static_cast<std::uint64_t>(id)),
                                 ctx.cfg.threads);
    PlotSeries plot{lemma + "_ratio", {}};
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      const auto& p = rep.points[i];
      ResultRow row = ctx.row(2, p.params.n, lemma + ": " + p.label);
      row.seed = p.seed;
      row.reps = p.reps;
      row.estimate = p.estimate;
      row.std_error = p.std_error;
      row.extra = {{"form", format_real(p.form)},
                   {"ratio", format_real(p.ratio)},
                   {"method", p.exact ? "mass_evolution" : "monte_carlo"}};
      if (p.skipped) row.extra.emplace_back("skipped", p.skip_reason);
      ctx.out.rows.push_back(std::move(row));
      if (!p.skipped) plot.points.emplace_back(static_cast<double>(i), p.ratio);
    }
    ResultRow fit = ctx.row(2, 0, lemma + ": fit");
    fit.seed = rep.master_seed;
    fit.reps = ctx.reps();
    fit.estimate = rep.fitted_constant;
    fit.extra = {{"band", format_real(rep.band)},
                 {"exponent", format_real(rep.fitted_exponent)},
                 {"direction", rep.direction_holds ? "holds" : "violated"},
                 {"stable", rep.stable ? "yes" : "no"},
                 {"pass", rep.passed() ? "yes" : "no"}};
    ctx.out.rows.push_back(std::move(fit));
    ctx.out.plots.push_back(std::move(plot));
  }
}

TemplatePair templates_for(const Config& c) {
  if (c.has("template")) {
    const std::string path = c.get_string("template");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read template " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return TemplatePair::parse(ss.str());
    } catch (const InvalidArgument& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
  const std::string which = c.get_string_or("templates", "default");
  if (which == "default") return default_templates();
  if (which == "triomino") return triomino_templates();
  throw ConfigError(c.origin("templates") + ": key 'templates': expected default or triomino");
}

void run_extract(Context& ctx) {
  const TemplatePair tp = templates_for(ctx.cfg.values);
  std::string bit_text;
  PlotSeries plot{"count_log2n_sq_over_n", {}};
  for (std::uint64_t n : grid_of(ctx.cfg.values, "n", "n_grid")) {
    const std::uint64_t seed = mix_seed(ctx.seed(), n);
    const auto results = replicate(ctx.reps(), seed, ctx.cfg.threads, [&](RngStream& rng, std::uint64_t) {
      return extract_bits(range_of(simulate_walk(2, n, rng)), tp).bits;
    });
    std::uint64_t ones = 0, total = 0;
    std::vector<double> counts;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& bits = results[i];
      const auto k = static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), 1));
      ones += k;
      total += bits.size();
      counts.push_back(static_cast<double>(bits.size()));
      ResultRow row = ctx.row(2, n, "replica=" + std::to_string(i));
      row.reps = 1;
      row.estimate = static_cast<double>(bits.size());
      row.extra = {{"ones", std::to_string(k)}, {"hex", bits_to_hex(bits)}};
      ctx.out.rows.push_back(std::move(row));
      bit_text += std::to_string(n) + " " + std::to_string(i) + " " + std::to_string(bits.size()) + " " +
                  bits_to_hex(bits) + "\n";
    }
    const double p = total ? static_cast<double>(ones) / static_cast<double>(total) : 0.0;
    double num = 0, pairs = 0;
    for (const auto& bits : results) {
      for (std::size_t i = 1; i < bits.size(); ++i) {
        num += (bits[i - 1] - p) * (bits[i] - p);
        pairs += 1;
      }
    }
    ResultRow bias = ctx.row(2, n, "bias");
    bias.reps = ctx.reps();
    bias.estimate = p;
    bias.std_error = total ? 0.5 / std::sqrt(static_cast<double>(total)) : 0.0;
    bias.extra = {{"bits", std::to_string(total)}};
    ResultRow lag = ctx.row(2, n, "lag1");
    lag.reps = ctx.reps();
    lag.estimate = pairs > 0 && p > 0 && p < 1 ? num / pairs / (p * (1 - p)) : 0.0;
    lag.std_error = pairs > 0 ? 1.0 / std::sqrt(pairs) : 0.0;
    lag.extra = {{"pairs", format_real(pairs)}};
    const Summary cs = summarize(counts);
    ResultRow count = ctx.row(2, n, "count");
    count.reps = ctx.reps();
    count.estimate = cs.mean;
    count.std_error = cs.std_error;
    count.extra = {{"normalized", format_real(cs.mean * log2_sq_over_n(n))}};
    ctx.out.rows.push_back(std::move(bias));
    ctx.out.rows.push_back(std::move(lag));
    ctx.out.rows.push_back(std::move(count));
    plot.points.emplace_back(static_cast<double>(n), cs.mean * log2_sq_over_n(n));
  }
  ctx.out.plots.push_back(std::move(plot));
  ctx.out.attachments["bits.txt"] = bit_text;
}

void run_percolation(Context& ctx) {
  PlotSeries plot{"tree_entropy_L2_over_4L", {}};
  for (std::uint64_t L64 : grid_of(ctx.cfg.values, "L", "L_grid")) {
    if (L64 < 1 || L64 > static_cast<std::uint64_t>(kMaxPercolationDepth)) {
      throw ConfigError("depth L must be in 1.." + std::to_string(kMaxPercolationDepth));
    }
    const int L = static_cast<int>(L64);
    const std::uint64_t n = std::uint64_t{1} << L;
    struct Obs {
      std::vector<double> counts;
      double log_prob;
      bool alive;
    };
    const auto obs = replicate(ctx.reps(), mix_seed(ctx.seed(), L64), ctx.cfg.threads, [&](RngStream& rng, std::uint64_t) {
      const PercolationTree t = sample_fractal(L, rng);
      Obs o;
      for (int k = 1; k <= L; ++k) o.counts.push_back(static_cast<double>(t.retained_count(k)));
      o.log_prob = tree_log_prob(t);
      o.alive = !t.empty();
      return o;
    });
    for (int k = 1; k <= L; ++k) {
      std::vector<double> v;
      for (const auto& o : obs) v.push_back(o.counts[static_cast<std::size_t>(k - 1)]);
      const Summary s = summarize(v);
      ResultRow row = ctx.row(2, n, "level=" + std::to_string(k));
      row.reps = ctx.reps();
      row.estimate = s.mean;
      row.std_error = s.std_error;
      row.extra = {{"expected", format_real(std::ldexp(1.0, 2 * k) / (k + 1))}};
      ctx.out.rows.push_back(std::move(row));
    }
    std::vector<double> lp;
    std::uint64_t alive = 0;
    for (const auto& o : obs) {
      lp.push_back(o.log_prob);
      alive += o.alive;
    }
    const Summary s = summarize(lp);
    const double exact = exact_tree_entropy(L);
    ResultRow row = ctx.row(2, n, "log_prob");
    row.reps = ctx.reps();
    row.estimate = s.mean;
    row.std_error = s.std_error;
    row.extra = {{"exact", format_real(exact)}, {"normalized", format_real(exact * L * L / std::ldexp(1.0, 2 * L))}};
    ctx.out.rows.push_back(std::move(row));
    const Summary sv = summarize_proportion(alive, ctx.reps());
    ResultRow surv = ctx.row(2, n, "survival");
    surv.reps = ctx.reps();
    surv.estimate = sv.mean;
    surv.std_error = sv.std_error;
    ctx.out.rows.push_back(std::move(surv));
    plot.points.emplace_back(static_cast<double>(L), exact * L * L / std::ldexp(1.0, 2 * L));
  }
  ctx.out.plots.push_back(std::move(plot));
}

void run_intersect(Context& ctx) {
  const std::uint64_t L64 = ctx.cfg.values.get_u64("L");
  if (L64 < 1 || L64 > static_cast<std::uint64_t>(kMaxPercolationDepth)) {
    throw ConfigError("depth L must be in 1.." + std::to_string(kMaxPercolationDepth));
  }
  const int L = static_cast<int>(L64);
  std::vector<TargetSet> targets;
  if (ctx.cfg.values.has("targets")) {
    for (const auto& t : ctx.cfg.values.get_list("targets")) {
      try {
        targets.push_back(TargetSet::parse(t));
      } catch (const InvalidArgument& e) {
        throw ConfigError(ctx.cfg.values.origin("targets") + ": key 'targets': " + e.what());
      }
    }
  } else {
    targets = default_targets(L);
  }
  const auto est = intersection_ratios(targets, L, ctx.reps(), ctx.seed(), ctx.cfg.threads);
  PlotSeries plot{"ratio", {}};
  for (std::size_t i = 0; i < est.size(); ++i) {
    const auto& e = est[i];
    ResultRow row = ctx.row(2, std::uint64_t{1} << L, e.target.to_string());
    row.reps = e.reps;
    row.estimate = e.ratio.value_or(std::numeric_limits<double>::quiet_NaN());
    row.std_error = e.ratio_se;
    row.extra = {{"p_fractal", format_real(e.p_fractal)}, {"se_fractal", format_real(e.se_fractal)},
                 {"p_walk", format_real(e.p_walk)},       {"se_walk", format_real(e.se_walk)},
                 {"ci_low", format_real(e.ci_low)},       {"ci_high", format_real(e.ci_high)},
                 {"available", e.ratio ? "yes" : "no"}};
    ctx.out.rows.push_back(std::move(row));
    if (e.ratio) plot.points.emplace_back(static_cast<double>(i), *e.ratio);
  }
  ctx.out.plots.push_back(std::move(plot));
}

}  // namespace

RunOutput run_experiment(const ExperimentConfig& config) {
  Context ctx{config, {}};
  try {
    const std::string& e = config.experiment;
    if (e == "simulate") run_simulate(ctx);
    else if (e == "encode") run_encode(ctx);
    else if (e == "decode") run_decode(ctx);
    else if (e == "entropy") run_entropy(ctx);
    else if (e == "lemma-check") run_lemma_check(ctx);
    else if (e == "extract") run_extract(ctx);
    else if (e == "percolation") run_percolation(ctx);
    else if (e == "intersect") run_intersect(ctx);
    else throw ConfigError("unknown experiment '" + e + "'");
  } catch (const InvalidArgument& e) {
    throw ConfigError(config.experiment + ": " + e.what());
  } catch (const BudgetExceeded& e) {
    throw ConfigError(config.experiment + ": " + e.what());
  }

  const ReportResult rep = report_rows(ctx.out.rows);
  ordered_json j;
  j["experiment"] = config.experiment;
  j["name"] = config.name;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : config.values.values()) {
    if (k != "threads" && k != "out") cfg[k] = v;
  }
  j["config"] = cfg;
  j["rows"] = ctx.out.rows.size();
  j["failures"] = rep.failures;
  ordered_json plots = ordered_json::array();
  for (const auto& p : ctx.out.plots) plots.push_back(p.label);
  j["plots"] = plots;
  j["report"] = rep.text;
  ctx.out.summary_json = j.dump(2) + "\n";
  return std::move(ctx.out);
}

std::vector<std::filesystem::path> write_outputs(const RunOutput& out, const std::filesystem::path& dir,
                                                 const std::string& name) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::pair<fs::path, std::string>> files;
  files.emplace_back(dir / (name + ".csv"), format_csv(out.rows));
  files.emplace_back(dir / (name + ".json"), out.summary_json);
  if (!out.plots.empty()) {
    std::string tsv = "series\tx\ty\n";
    for (const auto& p : out.plots) {
      for (const auto& [x, y] : p.points) tsv += p.label + "\t" + format_real(x) + "\t" + format_real(y) + "\n";
    }
    files.emplace_back(dir / (name + ".plot.tsv"), tsv);
  }
  for (const auto& [suffix, text] : out.attachments) files.emplace_back(dir / (name + "." + suffix), text);

  std::vector<fs::path> staged;
  try {
    for (const auto& [path, text] : files) {
      fs::path tmp = path;
      tmp += ".partial";
      std::ofstream f(tmp, std::ios::binary);
      f << text;
      f.close();
      if (!f) throw ConfigError("cannot write " + tmp.string());
      staged.push_back(tmp);
    }
  } catch (...) {
    for (const auto& p : staged) fs::remove(p);
    throw;
  }
  std::vector<fs::path> written;
  for (std::size_t i = 0; i < files.size(); ++i) {
    fs::rename(staged[i], files[i].first);
    written.push_back(files[i].first);
  }
  return written;
}

// ---------------------------------------------------------------------------
// Report

namespace {

double extra_real(const ResultRow& r, const std::string& key) {
  const std::string v = r.extra_value(key);
  return v.empty() ? std::numeric_limits<double>::quiet_NaN() : parse_real(v);
}

struct Reporter {
  std::ostringstream text;
  std::size_t failures = 0;

  void check(bool ok, const std::string& what) {
    text << (ok ? "PASS " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  }

  void band(const std::string& what, const std::vector<double>& values, double limit) {
    if (values.size() < 2) return;
    const double b = band_ratio(values);
    check(b < limit, what + " band max/min = " + format_real(b) + " (limit " + format_real(limit) + ")");
  }
};

void report_entropy(Reporter& r, const std::vector<const ResultRow*>& rows) {
  std::map<int, std::map<std::string, std::map<std::uint64_t, const ResultRow*>>> by;
  for (const auto* row : rows) by[row->d][row->extra_value("kind")][row->n] = row;
  for (const auto& [d, kinds] : by) {
    const char* scale = d == 1 ? "bits/log2 n" : d == 2 ? "bits*log2(n)^2/n" : "bits/n";
    r.text << "entropy d=" << d << " (normalized = " << scale << ")\n";
    r.text << "  kind          n            bits         stderr       normalized\n";
    for (const auto& [kind, rows_by_n] : kinds) {
      std::vector<double> norm;
      for (const auto& [n, row] : rows_by_n) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-12s  %-11llu  %-11s  %-11s  %s\n", kind.c_str(),
                      static_cast<unsigned long long>(n), format_real(row->estimate).c_str(),
                      format_real(row->std_error).c_str(), format_real(extra_real(*row, "normalized")).c_str());
        r.text << line;
        norm.push_back(extra_real(*row, "normalized"));
      }
      if (kind != "exact") r.band("entropy d=" + std::to_string(d) + " " + kind, norm, d == 3 ? 2.0 : 4.0);
    }
    if (kinds.contains("exact")) {
      for (const auto& [n, exact] : kinds.at("exact")) {
        for (const std::string kind : {"lower_bound", "upper_bound"}) {
          if (!kinds.contains(kind) || !kinds.at(kind).contains(n)) continue;
          const ResultRow* b = kinds.at(kind).at(n);
          const double slack = 3.0 * b->std_error;
          const bool lower = kind == "lower_bound";
          const bool ok = lower ? b->estimate - slack <= exact->estimate : exact->estimate <= b->estimate + slack;
          r.check(ok, "sandwich d=" + std::to_string(d) + " n=" + std::to_string(n) + " " + kind + " " +
                          format_real(b->estimate) + (lower ? " <= " : " >= ") + "exact " +
                          format_real(exact->estimate) + " (3 sigma)");
        }
      }
    }
  }
}

void report_lemmas(Reporter& r, const std::vector<const ResultRow*>& rows) {
  for (const auto* row : rows) {
    if (row->tag.size() < 5 || row->tag.substr(row->tag.size() - 5) != ": fit") {
      if (!row->extra_value("skipped").empty()) r.text << "  skipped " << row->tag << ": " << row->extra_value("skipped") << "\n";
      continue;
    }
    r.check(row->extra_value("pass") == "yes",
            row->tag.substr(0, row->tag.size() - 5) + ": constant " + format_real(row->estimate) + ", band " +
                row->extra_value("band") + ", direction " + row->extra_value("direction"));
  }
}

void report_extract(Reporter& r, const std::vector<const ResultRow*>& rows) {
  std::vector<double> norm;
  for (const auto* row : rows) {
    const std::string at = " n=" + std::to_string(row->n);
    if (row->tag == "bias") {
      r.check(std::abs(row->estimate - 0.5) <= 3.0 * row->std_error,
              "extract bias" + at + ": p=" + format_real(row->estimate) + " sigma=" + format_real(row->std_error));
    } else if (row->tag == "lag1") {
      r.check(std::abs(row->estimate) <= 3.0 * row->std_error,
              "extract lag-1" + at + ": rho=" + format_real(row->estimate) + " sigma=" + format_real(row->std_error));
    } else if (row->tag == "count") {
      r.text << "  count" << at << ": " << format_real(row->estimate) << " per walk, normalized "
             << row->extra_value("normalized") << "\n";
      norm.push_back(extra_real(*row, "normalized"));
    }
  }
  r.band("extract count*log2(n)^2/n", norm, 4.0);
}

void report_percolation(Reporter& r, const std::vector<const ResultRow*>& rows) {
  std::vector<double> norm;
  for (const auto* row : rows) {
    const std::string at = " n=" + std::to_string(row->n);
    if (row->tag.rfind("level=", 0) == 0) {
      const double expected = extra_real(*row, "expected");
      r.check(std::abs(row->estimate - expected) <= 3.0 * row->std_error,
              "percolation" + at + " " + row->tag + ": mean " + format_real(row->estimate) + " vs " + format_real(expected));
    } else if (row->tag == "log_prob") {
      const double exact = extra_real(*row, "exact");
      r.check(std::abs(row->estimate - exact) <= 3.0 * row->std_error,
              "percolation" + at + " mean log-prob " + format_real(row->estimate) + " vs exact " + format_real(exact));
      norm.push_back(extra_real(*row, "normalized"));
    } else if (row->tag == "survival") {
      r.text << "  survival" << at << ": " << format_real(row->estimate) << "\n";
    }
  }
  r.band("tree entropy*L^2/4^L", norm, 4.0);
}

void report_intersect(Reporter& r, const std::vector<const ResultRow*>& rows) {
  for (const auto* row : rows) {
    const bool available = row->extra_value("available") == "yes";
    r.check(available && row->estimate >= 1.0 / 20.0 && row->estimate <= 20.0,
            "intersection " + row->tag + ": ratio " + (available ? format_real(row->estimate) : "unavailable") +
                " (Q " + row->extra_value("p_fractal") + ", R " + row->extra_value("p_walk") + ")");
  }
}

void report_counts(Reporter& r, const std::string& experiment, const std::vector<const ResultRow*>& rows) {
  std::map<std::uint64_t, std::vector<double>> by_n;
  std::size_t mismatches = 0;
  for (const auto* row : rows) {
    if (row->tag.rfind("replica=", 0) == 0 || row->tag.rfind("stream=", 0) == 0) by_n[row->n].push_back(row->estimate);
    if (row->extra_value("roundtrip") == "mismatch") ++mismatches;
  }
  for (const auto& [n, v] : by_n) {
    const Summary s = summarize(v);
    r.text << "  " << experiment << " n=" << n << ": " << v.size() << " rows, mean " << format_real(s.mean);
    if (experiment == "encode") r.text << " bits, normalized " << format_real(s.mean * log2_sq_over_n(n));
    r.text << "\n";
  }
  if (experiment == "encode") r.check(mismatches == 0, "codec round trip (" + std::to_string(mismatches) + " mismatches)");
}

}  // namespace

ReportResult report_rows(const std::vector<ResultRow>& rows) {
  Reporter r;
  if (rows.empty()) {
    r.text << "no rows\n";
    return {r.text.str(), 0};
  }
  std::map<std::string, std::vector<const ResultRow*>> by;
  for (const auto& row : rows) by[row.experiment].push_back(&row);
  for (const auto& [experiment, group] : by) {
    r.text << "== " << experiment << " (" << group.size() << " rows)\n";
    if (experiment == "entropy") report_entropy(r, group);
    else if (experiment == "lemma-check") report_lemmas(r, group);
    else if (experiment == "extract") report_extract(r, group);
    else if (experiment == "percolation") report_percolation(r, group);
    else if (experiment == "intersect") report_intersect(r, group);
    else report_counts(r, experiment, group);
  }
  r.text << (r.failures ? std::to_string(r.failures) + " FAIL line(s)\n" : "all checks passed\n");
  return {r.text.str(), r.failures};
}

ReportResult report(const std::vector<std::filesystem::path>& inputs) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.path().extension() == ".csv") files.push_back(e.path());
      }
    } else if (fs::exists(in)) {
      files.push_back(in);
    } else {
      throw ConfigError("no such result file " + in.string());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<ResultRow> rows;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      auto part = parse_csv(ss.str());
      rows.insert(rows.end(), part.begin(), part.end());
    } catch (const ConfigError& e) {
      throw ConfigError(f.string() + ": " + e.what());
    }
  }
  return report_rows(rows);
}

}  // namespace rwrange
