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

#include "experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rng.hpp"

namespace pq {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Config {
  std::string command;
  Topology topology = Topology::Complete;
  std::vector<int> n_list;
  std::vector<int> p_list;
  int instances = 20;
  uint64_t seed = 1;
  int m_bases = 0;
  ObjectiveKind objective = ObjectiveKind::Best;
  bool exact = true;
  int shots = 10000;
  std::string method = "both";
  OptimizerConfig opt;
  int stop_size = 8;
  int workers = 0;
  bool timing = false;
  std::vector<std::string> instance_files;
  std::string mapping_file;
  std::vector<std::string> kinds;
  json echo;
};

std::vector<int> int_list(const json& j, const char* key, std::vector<int> dflt) {
  if (!j.contains(key)) return dflt;
  const auto& v = j.at(key);
  if (v.is_number_integer()) return {v.get<int>()};
  require(v.is_array(), ErrorCode::Parse, std::string(key) + " must be an int or int list");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(x.get<int>());
  require(!out.empty(), ErrorCode::Parse, std::string(key) + " must not be empty");
  return out;
}

Config parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::Parse, std::string("config parse error: ") + e.what());
  }
  static const std::set<std::string> known = {
      "command", "topology", "n", "p", "instances", "seed", "m_bases", "objective",
      "mode", "shots", "method", "n_init", "n_mc", "temperature", "step_halfwidth",
      "stop_size", "workers", "timing", "instance_files", "mapping_file", "kinds"};
  for (const auto& [key, _] : j.items())
    require(known.count(key) > 0, ErrorCode::Parse, "unknown config key: " + key);

  Config c;
  c.command = j.value("command", std::string{});
  require(!c.command.empty(), ErrorCode::Parse, "config needs a command");
  c.topology = topology_from_string(j.value("topology", std::string("complete")));
  const int default_n = c.topology == Topology::Complete ? 7 : 8;
  c.n_list = int_list(j, "n", {default_n});
  if (c.topology != Topology::Complete)
    for (int n : c.n_list)
      require(n == 8, ErrorCode::Parse, "bundled graph topologies are fixed at n = 8");
  c.p_list = int_list(j, "p", {1});
  c.instances = j.value("instances", 20);
  require(c.instances >= 1, ErrorCode::Parse, "instances must be >= 1");
  c.seed = j.value("seed", uint64_t{1});
  c.m_bases = j.value("m_bases", 0);
  c.objective = objective_kind_from_string(j.value("objective", std::string("best")));
  const std::string mode = j.value("mode", std::string("exact"));
  require(mode == "exact" || mode == "shots", ErrorCode::Parse, "mode must be exact or shots");
  c.exact = mode == "exact";
  c.shots = j.value("shots", 10000);
  c.method = j.value("method", std::string("both"));
  require(c.method == "vanilla" || c.method == "parity" || c.method == "both", ErrorCode::Parse,
          "method must be vanilla, parity or both");
  c.opt.n_init = j.value("n_init", 10);
  c.opt.n_mc = j.value("n_mc", 400);
  c.opt.temperature = j.value("temperature", 0.2);
  c.opt.step_halfwidth = j.value("step_halfwidth", 0.25);
  c.opt.shots = c.exact ? 0 : c.shots;
  c.stop_size = j.value("stop_size", 8);
  c.workers = j.value("workers", 0);
  c.timing = j.value("timing", false);
  c.instance_files = j.value("instance_files", std::vector<std::string>{});
  c.mapping_file = j.value("mapping_file", std::string{});
  c.kinds = j.value("kinds", std::vector<std::string>{});

  // Echo with defaults filled; keys are emitted sorted, so the header is
  // stable for identical configs.
  c.echo = j;
  c.echo["command"] = c.command;
  c.echo["topology"] = topology_to_string(c.topology);
  c.echo["n"] = c.n_list;
  c.echo["p"] = c.p_list;
  c.echo["instances"] = c.instances;
  c.echo["seed"] = c.seed;
  c.echo["objective"] = objective_kind_to_string(c.objective);
  c.echo["mode"] = mode;
  c.echo["method"] = c.method;
  return c;
}

int effective_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Deterministic indexed parallelism: slot i only ever holds fn(i).
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto drain = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
}

struct MappingBundle {
  ParityMapping mapping;
  std::vector<ReadoutBasis> bases;
};

MappingBundle mapping_for(const Config& c, int n) {
  MappingBundle b;
  if (!c.mapping_file.empty()) {
    std::ifstream in(c.mapping_file);
    require(in.good(), ErrorCode::InvalidArgument, "cannot open mapping file " + c.mapping_file);
    std::stringstream ss;
    ss << in.rdbuf();
    b.mapping = mapping_from_json(ss.str());
  } else {
    switch (c.topology) {
      case Topology::Complete: b.mapping = encode_complete(n); break;
      case Topology::Regular4Fig3: b.mapping = fig3_mapping(); break;
      case Topology::HypergraphFig9: b.mapping = fig9_mapping(); break;
    }
  }
  b.bases = b.mapping.readout_bases;
  require(!b.bases.empty(), ErrorCode::InvalidArgument, "mapping carries no readout bases");
  int m = c.m_bases;
  if (m == 0) m = c.topology == Topology::Regular4Fig3 && c.mapping_file.empty() ? 5
                                                                                 : int(b.bases.size());
  require(m >= 1 && m <= int(b.bases.size()), ErrorCode::InvalidArgument,
          "m_bases out of range for this mapping");
  b.bases.resize(m);
  return b;
}

std::vector<Instance> load_or_sample(const Config& c, int n) {
  if (!c.instance_files.empty()) {
    std::vector<Instance> out;
    for (const auto& path : c.instance_files) {
      std::ifstream in(path);
      require(in.good(), ErrorCode::InvalidArgument, "cannot open instance file " + path);
      std::stringstream ss;
      ss << in.rdbuf();
      out.push_back(instance_from_json(ss.str()));
      require(out.back().n == n || c.n_list.size() == 1, ErrorCode::InvalidArgument,
              "instance file size does not match requested n");
    }
    return out;
  }
  return sample_instances(c.topology, n, c.instances, c.seed);
}

std::string csv_header(const Config& c) {
  return "# " + c.echo.dump() + "\n";
}

struct Welford {
  int64_t count = 0;
  double sum = 0, sq = 0;
  void add(double x) {
    ++count;
    sum += x;
    sq += x * x;
  }
  double mean() const { return count ? sum / double(count) : 0.0; }
  double two_se() const {
    if (count < 2) return 0.0;
    const double var = std::max(0.0, (sq - sum * sum / double(count)) / double(count - 1));
    return 2.0 * std::sqrt(var / double(count));
  }
};

std::string cmd_lower_bound(const Config& c) {
  std::ostringstream out;
  out << csv_header(c);
  out << "topology,n,n_even,p,kind,samples,mean_r0,two_se,solved_fraction\n";
  for (int n : c.n_list) {
    const MappingBundle mb = mapping_for(c, n);
    const auto instances = load_or_sample(c, n);
    for (int p : c.p_list) {
      std::vector<CliffordBound> bounds(instances.size());
      parallel_for(int(instances.size()), effective_workers(c.workers), [&](int i) {
        bounds[i] = lower_bound(instances[i], mb.mapping, mb.bases, p, ObjectiveKind::Mean);
      });
      for (ObjectiveKind kind : {ObjectiveKind::Mean, ObjectiveKind::Best}) {
        Welford r0;
        int64_t solved = 0;
        for (const auto& b : bounds) {
          r0.add(kind == ObjectiveKind::Mean ? b.r0_mean : b.r0_best);
          if (b.solved) ++solved;
        }
        out << topology_to_string(c.topology) << ',' << n << ',' << (n % 2 == 0 ? 1 : 0) << ','
            << p << ',' << objective_kind_to_string(kind) << ',' << instances.size() << ','
            << fmt_double(r0.mean()) << ',' << fmt_double(r0.two_se()) << ','
            << fmt_double(double(solved) / double(instances.size())) << '\n';
      }
    }
  }
  return out.str();
}

std::string cmd_census(const Config& c) {
  require(c.topology != Topology::HypergraphFig9, ErrorCode::InvalidArgument,
          "census topologies: complete (n=7) or regular4_fig3");
  const int n = c.topology == Topology::Complete ? c.n_list.front() : 8;
  const MappingBundle mb = mapping_for(c, n);
  const auto rows = constraint_pattern_census(mb.mapping, mb.bases, c.p_list,
                                              effective_workers(c.workers));
  std::ostringstream out;
  out << csv_header(c);
  out << "# provenance=" << mb.mapping.provenance << " m_bases=" << mb.bases.size() << "\n";
  out << "p,total_classes,non_trivial,percent,mirror_orbits\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.total_classes << ',' << r.non_trivial << ',' << fmt_percent(r.percent)
        << ',';
    if (r.mirror_orbits >= 0) out << r.mirror_orbits;
    out << '\n';
  }
  return out.str();
}

struct AnalyticCols {
  bool present = false;
  ResourceReport report;
};

AnalyticCols analytic_for(const Config& c, const std::string& method, int n, int p) {
  AnalyticCols a;
  if (!c.instance_files.empty() || !c.mapping_file.empty()) return a;
  ResourceKind kind;
  if (c.topology == Topology::Complete)
    kind = method == "vanilla" ? ResourceKind::VanillaComplete : ResourceKind::ParityComplete;
  else if (c.topology == Topology::Regular4Fig3)
    kind = method == "vanilla" ? ResourceKind::VanillaFig3 : ResourceKind::ParityFig3;
  else
    kind = method == "vanilla" ? ResourceKind::VanillaFig9 : ResourceKind::ParityFig9;
  a.present = true;
  a.report = analytic_resources(kind, n, p);
  return a;
}

const char* kSweepHeader =
    "instance_id,n,p,method,objective_kind,energy,r,lb_r,cnot_depth_measured,"
    "cnot_count_measured,cnot_depth_analytic,cnot_count_analytic,seed,wall_ms\n";

void append_sweep_row(std::ostringstream& out, int id, int n, int p, const std::string& method,
                      const std::string& kind, const std::string& energy, double r,
                      const std::string& lb_r, const ResourceReport& measured,
                      const AnalyticCols& analytic, uint64_t seed, int64_t wall_ms) {
  out << id << ',' << n << ',' << p << ',' << method << ',' << kind << ',' << energy << ','
      << fmt_double(r) << ',' << lb_r << ',' << measured.cnot_depth << ','
      << measured.cnot_count << ',';
  if (analytic.present)
    out << analytic.report.cnot_depth << ',' << analytic.report.cnot_count;
  else
    out << ',';
  out << ',' << seed << ',' << wall_ms << '\n';
}

std::vector<std::string> methods_of(const Config& c) {
  if (c.method == "both") {
    if (c.topology == Topology::HypergraphFig9) return {"parity"};
    return {"vanilla", "parity"};
  }
  require(!(c.method == "vanilla" && c.topology == Topology::HypergraphFig9),
          ErrorCode::InvalidArgument,
          "the SWAP-network builder is pairwise only; use method=parity for hypergraphs");
  return {c.method};
}

std::string cmd_qaoa(const Config& c) {
  std::ostringstream out;
  out << csv_header(c);
  out << kSweepHeader;
  const auto methods = methods_of(c);
  for (int n : c.n_list) {
    const MappingBundle mb = mapping_for(c, n);
    const auto instances = load_or_sample(c, n);
    for (int p : c.p_list) {
      // Lower bound reference per instance (full scan covers both kinds).
      std::vector<CliffordBound> lb(instances.size());
      parallel_for(int(instances.size()), effective_workers(c.workers), [&](int i) {
        lb[i] = lower_bound(instances[i], mb.mapping, mb.bases, p, ObjectiveKind::Mean);
      });
      for (const auto& method : methods) {
        std::vector<QaoaResult> results(instances.size());
        std::vector<int64_t> wall(instances.size(), 0);
        parallel_for(int(instances.size()), effective_workers(c.workers), [&](int i) {
          OptimizerConfig oc = c.opt;
          oc.seed = derive_seed(c.seed, uint64_t(i));
          const auto t0 = std::chrono::steady_clock::now();
          results[i] = method == "vanilla"
                           ? run_vanilla_qaoa(instances[i], p, oc)
                           : run_parity_qaoa(instances[i], mb.mapping, mb.bases, p, c.objective,
                                             oc);
          if (c.timing)
            wall[i] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        });
        const AnalyticCols analytic = analytic_for(c, method, n, p);
        for (size_t i = 0; i < instances.size(); ++i) {
          const double lb_r =
              c.objective == ObjectiveKind::Mean ? lb[i].r0_mean : lb[i].r0_best;
          append_sweep_row(out, int(i), n, p, method,
                           method == "parity" ? objective_kind_to_string(c.objective) : "",
                           fmt_double(results[i].best_objective), results[i].ratio,
                           fmt_double(lb_r), results[i].measured, analytic,
                           instances[i].seed.value_or(0), wall[i]);
        }
      }
    }
  }
  return out.str();
}

std::string cmd_rqaoa(const Config& c) {
  require(c.topology != Topology::HypergraphFig9, ErrorCode::InvalidArgument,
          "RQAOA runs on pairwise instances");
  std::ostringstream out;
  out << csv_header(c);
  out << kSweepHeader;
  const auto methods = methods_of(c);
  for (int n : c.n_list) {
    const auto instances = load_or_sample(c, n);
    for (int p : c.p_list) {
      for (const auto& method : methods) {
        const RqaoaVariant variant =
            method == "vanilla" ? RqaoaVariant::Vanilla : RqaoaVariant::Parity;
        std::vector<RqaoaResult> results(instances.size());
        std::vector<int64_t> wall(instances.size(), 0);
        parallel_for(int(instances.size()), effective_workers(c.workers), [&](int i) {
          OptimizerConfig oc = c.opt;
          oc.seed = derive_seed(c.seed, uint64_t(i));
          const auto t0 = std::chrono::steady_clock::now();
          results[i] = run_rqaoa(instances[i], variant, p, c.stop_size, c.objective, oc);
          if (c.timing)
            wall[i] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        });
        const AnalyticCols analytic = analytic_for(c, method, n, p);
        for (size_t i = 0; i < instances.size(); ++i)
          append_sweep_row(out, int(i), n, p, "rqaoa_" + method,
                           method == "parity" ? objective_kind_to_string(c.objective) : "",
                           std::to_string(results[i].energy), results[i].ratio, "",
                           results[i].first_step_measured, analytic,
                           instances[i].seed.value_or(0), wall[i]);
      }
    }
  }
  return out.str();
}

std::string cmd_resources(const Config& c) {
  std::vector<std::string> kinds = c.kinds;
  if (kinds.empty())
    kinds = {"vanilla_complete", "parity_complete", "vanilla_fig3",
             "parity_fig3",     "vanilla_fig9",    "parity_fig9"};
  std::ostringstream out;
  out << csv_header(c);
  out << "kind,n,p,cnot_depth_analytic,cnot_count_analytic,cnot_depth_measured,"
         "cnot_count_measured\n";
  for (const auto& kind_name : kinds) {
    const ResourceKind kind = resource_kind_from_string(kind_name);
    const bool complete_kind =
        kind == ResourceKind::VanillaComplete || kind == ResourceKind::ParityComplete;
    const std::vector<int> sizes = complete_kind ? c.n_list : std::vector<int>{8};
    for (int n : sizes) {
      for (int p : c.p_list) {
        const ResourceReport analytic = analytic_resources(kind, n, p);
        out << kind_name << ',' << n << ',' << p << ',' << analytic.cnot_depth << ','
            << analytic.cnot_count << ',';
        // Measured counterpart from the shipped builders where one exists.
        ParamVector zeros;
        zeros.gammas.assign(p, 0.0);
        zeros.betas.assign(p, 0.0);
        if (kind == ResourceKind::VanillaComplete || kind == ResourceKind::VanillaFig3) {
          Instance inst = kind == ResourceKind::VanillaComplete
                              ? random_instance(Topology::Complete, n, 0)
                              : random_instance(Topology::Regular4Fig3, 8, 0);
          for (auto& e : inst.edges) e.weight = 1;
          const ResourceReport mr = cnot_metrics(build_vanilla_circuit(inst, zeros));
          out << mr.cnot_depth << ',' << mr.cnot_count;
        } else if (kind != ResourceKind::VanillaFig9) {
          zeros.omegas.assign(p, 0.0);
          ParityMapping m;
          if (kind == ResourceKind::ParityComplete)
            m = encode_complete(n);
          else if (kind == ResourceKind::ParityFig3)
            m = fig3_mapping();
          else
            m = fig9_mapping();
          const std::vector<int> fields(m.num_qubits(), 1);
          const ResourceReport mr = cnot_metrics(build_parity_circuit(m, fields, zeros));
          out << mr.cnot_depth << ',' << mr.cnot_count;
        } else {
          out << ',';  // no pairwise builder covers the hypergraph
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace

std::vector<Instance> sample_instances(Topology topology, int n, int count, uint64_t seed) {
  std::vector<Instance> out;
  const uint64_t nbase = derive_seed(seed, uint64_t(n));
  for (int k = 0; k < count; ++k) {
    const uint64_t kbase = derive_seed(nbase, uint64_t(k));
    for (uint64_t attempt = 0;; ++attempt) {
      require(attempt < 64, ErrorCode::Runtime, "instance redraw did not converge");
      Instance inst = random_instance(topology, n, derive_seed(kbase, attempt));
      const Extrema ex = brute_force_extrema(inst);
      if (ex.c_max > ex.c_min) {
        out.push_back(std::move(inst));
        break;
      }
    }
  }
  return out;
}

std::string run_experiment(const std::string& config_json) {
  const Config c = parse_config(config_json);
  if (c.command == "lower-bound") return cmd_lower_bound(c);
  if (c.command == "census") return cmd_census(c);
  if (c.command == "qaoa") return cmd_qaoa(c);
  if (c.command == "rqaoa") return cmd_rqaoa(c);
  if (c.command == "resources") return cmd_resources(c);
  fail(ErrorCode::Parse, "unknown command: " + c.command);
}

}  // namespace pq
