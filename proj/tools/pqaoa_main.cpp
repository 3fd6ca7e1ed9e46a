// Copyright 2026 The pqaoa developers
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

// pqaoa command-line runner. Batch commands are assembled into a JSON config
// and executed through the shared C API; a config file (--config) provides
// defaults that explicit flags override. Exit codes: 0 success, 1 runtime
// failure, 2 usage/config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqaoa/pqaoa.h"

namespace {

using nlohmann::json;

int exit_code_for(pq_status s) {
  switch (s) {
    case PQ_OK: return 0;
    case PQ_ERR_INVALID_ARGUMENT:
    case PQ_ERR_PARSE: return 2;
    default: return 1;
  }
}

int fail_with(pq_status s) {
  std::cerr << "error: " << pq_last_error() << "\n";
  return exit_code_for(s);
}

bool write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return out.good();
}

struct CommonFlags {
  std::string config_file;
  std::string out = "-";
  std::string topology = "complete";
  std::vector<int> n;
  std::vector<int> p;
  int instances = 0;
  uint64_t seed = 0;
  int m_bases = 0;
  std::string objective;
  std::string mode;
  int shots = 0;
  std::string method;
  int n_init = 0;
  int n_mc = 0;
  double temperature = 0.0;
  double step_halfwidth = 0.0;
  int stop_size = 0;
  int workers = 0;
  bool timing = false;
  std::vector<std::string> instance_files;
  std::string mapping_file;
  std::vector<std::string> kinds;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_file, "JSON config file; flags override its keys");
  cmd->add_option("--out", f.out, "output path, '-' for stdout")->capture_default_str();
  cmd->add_option("--seed", f.seed, "base seed for all derived streams");
  cmd->add_option("--workers", f.workers, "worker threads (0 = hardware)");
}

// Merge: start from the config file (if any), overlay explicitly set flags.
json build_config(const CLI::App* cmd, const CommonFlags& f, const std::string& command) {
  json j;
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in.good()) throw CLI::ValidationError("--config", "cannot open " + f.config_file);
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw CLI::ValidationError("--config", e.what());
    }
  }
  j["command"] = command;
  auto set_if = [&](const char* flag, const char* key, auto value) {
    if (cmd->count(flag) > 0) j[key] = value;
  };
  set_if("--topology", "topology", f.topology);
  set_if("--n", "n", f.n);
  set_if("--p", "p", f.p);
  set_if("--instances", "instances", f.instances);
  set_if("--seed", "seed", f.seed);
  set_if("--m-bases", "m_bases", f.m_bases);
  set_if("--objective", "objective", f.objective);
  set_if("--mode", "mode", f.mode);
  set_if("--shots", "shots", f.shots);
  set_if("--method", "method", f.method);
  set_if("--n-init", "n_init", f.n_init);
  set_if("--n-mc", "n_mc", f.n_mc);
  set_if("--temperature", "temperature", f.temperature);
  set_if("--step-halfwidth", "step_halfwidth", f.step_halfwidth);
  set_if("--stop-size", "stop_size", f.stop_size);
  set_if("--workers", "workers", f.workers);
  set_if("--in", "instance_files", f.instance_files);
  set_if("--mapping", "mapping_file", f.mapping_file);
  set_if("--kind", "kinds", f.kinds);
  if (cmd->count("--timing") > 0) j["timing"] = true;
  return j;
}

int run_batch(const CLI::App* cmd, const CommonFlags& f, const std::string& command) {
  json config;
  try {
    config = build_config(cmd, f, command);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  char* csv = nullptr;
  const pq_status s = pq_run_experiment(config.dump().c_str(), &csv);
  if (s != PQ_OK) return fail_with(s);
  const bool ok = write_output(f.out, csv);
  pq_string_free(csv);
  return ok ? 0 : 1;
}

int run_gen(const CommonFlags& f) {
  const int n = f.n.empty() ? 7 : f.n.front();
  const int count = f.instances > 0 ? f.instances : 1;
  for (int k = 0; k < count; ++k) {
    pq_instance* inst = nullptr;
    const uint64_t seed = f.seed + uint64_t(k);
    pq_status s = pq_instance_random(f.topology.c_str(), n, seed, &inst);
    if (s != PQ_OK) return fail_with(s);
    char* text = nullptr;
    s = pq_instance_to_json(inst, &text);
    pq_instance_free(inst);
    if (s != PQ_OK) return fail_with(s);
    std::string path = f.out;
    if (count > 1 && path != "-") {
      char suffix[32];
      std::snprintf(suffix, sizeof suffix, "_%04d.json", k);
      const auto dot = path.rfind(".json");
      path = (dot == std::string::npos ? path : path.substr(0, dot)) + suffix;
    }
    const bool ok = write_output(path, text);
    pq_string_free(text);
    if (!ok) return 1;
  }
  return 0;
}

int run_encode(const CommonFlags& f, const std::string& builtin) {
  pq_mapping* m = nullptr;
  pq_status s;
  if (!builtin.empty()) {
    s = pq_mapping_builtin(builtin.c_str(), &m);
  } else {
    const int n = f.n.empty() ? 7 : f.n.front();
    s = pq_mapping_encode_complete(n, &m);
  }
  if (s != PQ_OK) return fail_with(s);
  char* text = nullptr;
  s = pq_mapping_to_json(m, &text);
  pq_mapping_free(m);
  if (s != PQ_OK) return fail_with(s);
  const bool ok = write_output(f.out, text);
  pq_string_free(text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pqaoa: QAOA workbench for signed Max-Cut on the parity architecture"};
  app.require_subcommand(1);

  CommonFlags f;

  auto* gen = app.add_subcommand("gen", "generate random problem instances");
  add_common(gen, f);
  gen->add_option("--topology", f.topology, "complete | regular4_fig3 | hypergraph_fig9");
  gen->add_option("--n", f.n, "vertex count (complete topology)")->delimiter(',');
  gen->add_option("--instances", f.instances, "number of files to write");

  std::string builtin;
  auto* encode = app.add_subcommand("encode", "emit a parity mapping as JSON");
  add_common(encode, f);
  encode->add_option("--n", f.n, "complete-graph size")->delimiter(',');
  encode->add_option("--builtin", builtin, "fig3 | fig9 (bundled reconstructed mappings)");

  const char* batch_names[] = {"lower-bound", "census", "qaoa", "rqaoa", "resources"};
  const char* batch_help[] = {
      "Clifford classical-state lower bounds over instance samples",
      "exhaustive constraint-violation-pattern census",
      "QAOA parameter optimization sweeps",
      "recursive QAOA sweeps",
      "analytic and measured CNOT depth/count tables"};
  std::vector<CLI::App*> batch;
  for (int i = 0; i < 5; ++i) {
    auto* cmd = app.add_subcommand(batch_names[i], batch_help[i]);
    add_common(cmd, f);
    cmd->add_option("--topology", f.topology, "complete | regular4_fig3 | hypergraph_fig9");
    cmd->add_option("--n", f.n, "problem sizes")->delimiter(',');
    cmd->add_option("--p", f.p, "QAOA layer counts")->delimiter(',');
    cmd->add_option("--instances", f.instances, "instances per size");
    cmd->add_option("--m-bases", f.m_bases, "readout bases used for decoding (0 = default)");
    cmd->add_option("--objective", f.objective, "mean | best | best-per-shot");
    cmd->add_option("--mode", f.mode, "exact | shots");
    cmd->add_option("--shots", f.shots, "shots per estimate in shot mode");
    cmd->add_option("--method", f.method, "vanilla | parity | both");
    cmd->add_option("--n-init", f.n_init, "optimizer restarts");
    cmd->add_option("--n-mc", f.n_mc, "Monte-Carlo proposals per restart");
    cmd->add_option("--temperature", f.temperature, "Metropolis temperature");
    cmd->add_option("--step-halfwidth", f.step_halfwidth, "proposal halfwidth");
    cmd->add_option("--stop-size", f.stop_size, "RQAOA brute-force threshold");
    cmd->add_option("--in", f.instance_files, "instance JSON files")->delimiter(',');
    cmd->add_option("--mapping", f.mapping_file, "parity mapping JSON file");
    cmd->add_option("--kind", f.kinds, "resource kinds")->delimiter(',');
    cmd->add_flag("--timing", f.timing, "fill the wall_ms column");
    batch.push_back(cmd);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(f);
    if (encode->parsed()) return run_encode(f, builtin);
    for (int i = 0; i < 5; ++i)
      if (batch[i]->parsed()) return run_batch(batch[i], f, batch_names[i]);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
