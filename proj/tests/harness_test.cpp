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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rwrange/harness.hpp"

namespace rwrange {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rwrange_harness_" + name);
  fs::remove_all(dir);
  return dir;
}

ExperimentConfig make(const std::string& experiment, const std::string& text) {
  return make_experiment(experiment, Config::parse(text, "test.cfg"));
}

std::string error_of(const std::string& experiment, const std::string& text) {
  try {
    make(experiment, text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

TEST(Config, ParsesTypedValues) {
  const Config c = Config::parse("# comment\nn_grid = 2^10, 2^12,4096\nseed=7\nflag = yes\n\ntargets = point(1,2), ball(3,4,5)\n");
  EXPECT_EQ(c.get_u64_list("n_grid"), (std::vector<std::uint64_t>{1024, 4096, 4096}));
  EXPECT_EQ(c.get_u64("seed"), 7u);
  EXPECT_TRUE(c.get_bool("flag"));
  EXPECT_EQ(c.get_list("targets"), (std::vector<std::string>{"point(1,2)", "ball(3,4,5)"}));
  EXPECT_EQ(c.origin("seed"), "<config>:3");
}

TEST(Config, ErrorsNameTheLine) {
  EXPECT_THROW(Config::parse("just words\n"), ConfigError);
  EXPECT_THROW(Config::parse("a = 1\na = 2\n"), ConfigError);
  const Config c = Config::parse("x\t= 12a\n", "f.cfg");
  try {
    c.get_u64("x");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("f.cfg:1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("12a"), std::string::npos);
  }
}

TEST(Experiment, MissingSeedIsAnError) {
  EXPECT_NE(error_of("simulate", "n = 10\nreps = 2\n").find("seed"), std::string::npos);
  EXPECT_NE(error_of("extract", "n = 10\nreps = 2\n").find("seed"), std::string::npos);
  EXPECT_TRUE(error_of("entropy", "n = 4\nmode = exact\n").empty());
  EXPECT_NE(error_of("entropy", "n = 4\nmode = lower\nreps = 40\n").find("seed"), std::string::npos);
}

TEST(Experiment, SchemaRejectsUnknownAndMistyped) {
  EXPECT_NE(error_of("simulate", "n = 10\nreps = 2\nseed = 1\nstep = 3\n").find("unknown key 'step'"), std::string::npos);
  EXPECT_NE(error_of("simulate", "n = ten\nreps = 2\nseed = 1\n").find("key 'n'"), std::string::npos);
  EXPECT_NE(error_of("simulate", "reps = 2\nseed = 1\n").find("'n' or 'n_grid'"), std::string::npos);
  EXPECT_THROW(make("warp", "seed = 1\n"), ConfigError);
  EXPECT_THROW(make("simulate", "experiment = encode\nn = 4\nreps = 1\nseed = 1\n"), ConfigError);
  EXPECT_EQ(make("intersection", "L = 4\nreps = 1000\nseed = 1\n").experiment, "intersect");
}

TEST(Csv, RoundTripsQuotedFields) {
  ResultRow r;
  r.experiment = "lemma-check";
  r.d = 2;
  r.n = 4096;
  r.tag = "x: z=(1,0) \"q\"";
  r.seed = 18446744073709551615ull;
  r.reps = 10;
  r.estimate = 0.1234567891234;
  r.std_error = std::numeric_limits<double>::quiet_NaN();
  r.extra = {{"a", "1"}, {"b", "x,y"}};
  const auto back = parse_csv(format_csv({r}));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].tag, r.tag);
  EXPECT_EQ(back[0].seed, r.seed);
  EXPECT_EQ(back[0].extra_value("b"), "x,y");
  EXPECT_DOUBLE_EQ(back[0].estimate, 0.123456789);
  EXPECT_TRUE(std::isnan(back[0].std_error));
  EXPECT_THROW(parse_csv("not,a,header\n"), ConfigError);
}

TEST(Run, ExactEntropyRow) {
  const auto out = run_experiment(make("entropy", "d = 2\nn = 8\nmode = exact\n"));
  ASSERT_EQ(out.rows.size(), 1u);
  EXPECT_EQ(out.rows[0].extra_value("kind"), "exact");
  EXPECT_EQ(out.rows[0].std_error, 0.0);
  EXPECT_GT(out.rows[0].estimate, 0.0);
}

TEST(Run, ScalingGridGivesOneRowPerKind) {
  const auto out = run_experiment(make("entropy", "d = 2\nn_grid = 2^10,2^11,2^12,2^13,2^14,2^15,2^16\nmode = scaling\nreps = 30\nseed = 4\n"));
  EXPECT_EQ(out.rows.size(), 14u);
  std::map<std::string, int> kinds;
  for (const auto& r : out.rows) ++kinds[r.extra_value("kind")];
  EXPECT_EQ(kinds.size(), 2u);
  for (const auto& [k, c] : kinds) EXPECT_EQ(c, 7) << k;
}

TEST(Run, IdenticalFilesAcrossRunsAndThreads) {
  const std::string text = "n_grid = 256,1024\nreps = 12\nseed = 99\nwrite_streams = true\n";
  const fs::path a = scratch("a"), b = scratch("b");
  const auto one = write_outputs(run_experiment(make("encode", text + "threads = 1\n")), a, "enc");
  const auto two = write_outputs(run_experiment(make("encode", text + "threads = 3\n")), b, "enc");
  ASSERT_EQ(one.size(), two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].filename(), two[i].filename());
    EXPECT_EQ(slurp(one[i]), slurp(two[i])) << one[i];
  }
  const auto rows = parse_csv(slurp(a / "enc.csv"));
  EXPECT_EQ(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.tag.rfind("replica=", 0) == 0; }), 24);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Run, DecodeReadsEncodedStreams) {
  const fs::path dir = scratch("dec");
  const auto enc = run_experiment(make("encode", "n = 300\nreps = 5\nseed = 1\nwrite_streams = true\nwrite_rwrc = true\n"));
  write_outputs(enc, dir, "enc");
  const auto dec = run_experiment(make("decode", "input = " + (dir / "enc.streams.txt").string() + "\n"));
  ASSERT_EQ(dec.rows.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(dec.rows[i].estimate, std::stod(enc.rows[i].extra_value("range")));
  const auto one = run_experiment(make("decode", "input = " + (dir / "enc.n300_r2.rwrc").string() + "\n"));
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_EQ(one.rows[0].estimate, dec.rows[2].estimate);
  fs::remove_all(dir);
}

TEST(Run, FailedRunWritesNothing) {
  const fs::path dir = scratch("fail");
  EXPECT_THROW(run_experiment(make("intersect", "L = 4\nreps = 1000\nseed = 1\ntargets = point(99,99)\n")), ConfigError);
  EXPECT_FALSE(fs::exists(dir));
}

TEST(Report, NoRows) {
  const auto r = report_rows({});
  EXPECT_EQ(r.text, "no rows\n");
  EXPECT_EQ(r.failures, 0u);
}

TEST(Report, FlagsSandwichViolation) {
  auto row = [](const std::string& kind, double v, double se) {
    ResultRow r;
    r.experiment = "entropy";
    r.d = 2;
    r.n = 8;
    r.tag = kind;
    r.estimate = v;
    r.std_error = se;
    r.extra = {{"kind", kind}, {"normalized", "1"}};
    return r;
  };
  const auto ok = report_rows({row("exact", 10, 0), row("lower_bound", 9, 0.1), row("upper_bound", 30, 0.1)});
  EXPECT_EQ(ok.failures, 0u);
  const auto bad = report_rows({row("exact", 10, 0), row("lower_bound", 11, 0.1), row("upper_bound", 9, 0.1)});
  EXPECT_EQ(bad.failures, 2u);
  EXPECT_NE(bad.text.find("FAIL sandwich"), std::string::npos);
}

TEST(Report, ReadsFilesAndRejectsGarbage) {
  const fs::path dir = scratch("rep");
  write_outputs(run_experiment(make("percolation", "L = 3\nreps = 500\nseed = 2\n")), dir, "perc");
  const auto r = report({dir});
  EXPECT_NE(r.text.find("== percolation"), std::string::npos);
  std::ofstream(dir / "junk.csv") << "hello\n";
  EXPECT_THROW(report({dir}), ConfigError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace rwrange
