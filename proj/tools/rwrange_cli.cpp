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


#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "rwrange/harness.hpp"

namespace {

struct Options {
  std::string config;
  std::string seed;
  std::string reps;
  std::string threads;
  std::string out;
  std::vector<std::string> sets;
};

std::string env_or(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

// Precedence: --flag, then RWR_<FLAG>, then the config file.
int run(const std::string& experiment, const Options& opt) {
  using rwrange::Config;
  const std::string config_path = opt.config.empty() ? env_or("RWR_CONFIG") : opt.config;
  Config cfg = config_path.empty() ? Config{} : Config::load(config_path);
  auto apply = [&](const std::string& key, const std::string& flag, const char* env) {
    if (!flag.empty()) {
      cfg.set(key, flag, "--" + key);
    } else if (const std::string e = env_or(env); !e.empty()) {
      cfg.set(key, e, env);
    }
  };
  apply("seed", opt.seed, "RWR_SEED");
  apply("reps", opt.reps, "RWR_REPS");
  apply("threads", opt.threads, "RWR_THREADS");
  apply("out", opt.out, "RWR_OUT");
  for (const auto& kv : opt.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw rwrange::ConfigError("--set expects key=value, got '" + kv + "'");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1), "--set");
  }
  const std::string out_dir = cfg.get_string_or("out", "results");
  const auto ec = rwrange::make_experiment(experiment, cfg);
  const auto result = rwrange::run_experiment(ec);
  for (const auto& p : rwrange::write_outputs(result, out_dir, ec.name)) std::cerr << "wrote " << p.string() << "\n";
  std::cout << rwrange::report_rows(result.rows).text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walk range experiments"};
  app.require_subcommand(1);

  Options opt;
  for (const auto& name : rwrange::experiment_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", opt.config, "key = value config file");
    sub->add_option("--seed", opt.seed, "master seed (u64)");
    sub->add_option("--reps", opt.reps, "replicas");
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--threads", opt.threads, "worker threads; results do not depend on it");
    sub->add_option("--set", opt.sets, "override any config key, key=value")->take_all();
    sub->callback([name, &opt] { std::exit(run(name, opt)); });
  }

  std::vector<std::string> inputs;
  auto* rep = app.add_subcommand("report", "summarize result CSV files or directories");
  rep->add_option("paths", inputs, "result files or directories")->required();
  rep->callback([&inputs] {
    const auto r = rwrange::report({inputs.begin(), inputs.end()});
    std::cout << r.text;
    std::exit(r.failures ? 3 : 0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const rwrange::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
