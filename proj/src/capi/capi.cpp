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

#include "pqaoa/pqaoa.h"

#include <cstring>
#include <string>

#include "core/decode.hpp"
#include "core/experiments.hpp"

struct pq_instance {
  pq::Instance value;
};
struct pq_mapping {
  pq::ParityMapping value;
};

namespace {

thread_local std::string g_last_error;

pq_status to_status(const pq::Error& e) {
  switch (e.code()) {
    case pq::ErrorCode::InvalidArgument: return PQ_ERR_INVALID_ARGUMENT;
    case pq::ErrorCode::Parse: return PQ_ERR_PARSE;
    case pq::ErrorCode::Guard: return PQ_ERR_GUARD;
    case pq::ErrorCode::Validation: return PQ_ERR_VALIDATION;
    case pq::ErrorCode::NotBasisState: return PQ_ERR_NOT_BASIS_STATE;
    case pq::ErrorCode::Runtime: return PQ_ERR_RUNTIME;
  }
  return PQ_ERR_RUNTIME;
}

template <typename Fn>
pq_status guarded(Fn&& fn) {
  try {
    fn();
    return PQ_OK;
  } catch (const pq::Error& e) {
    g_last_error = e.what();
    return to_status(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PQ_ERR_RUNTIME;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

pq::BitString bits_from_array(const uint8_t* bits, int len) {
  pq::require(bits != nullptr && len >= 1, pq::ErrorCode::InvalidArgument, "null bit array");
  pq::BitString b(len);
  for (int i = 0; i < len; ++i)
    if (bits[i]) b.set(i, true);
  return b;
}

pq_status invalid(const char* what) {
  g_last_error = what;
  return PQ_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

void pq_version(int* major, int* minor) {
  if (major) *major = PQAOA_VERSION_MAJOR;
  if (minor) *minor = PQAOA_VERSION_MINOR;
}

const char* pq_last_error(void) { return g_last_error.c_str(); }

void pq_string_free(char* s) { delete[] s; }

pq_status pq_instance_random(const char* topology, int n, uint64_t seed, pq_instance** out) {
  if (!topology || !out) return invalid("null argument");
  return guarded([&] {
    *out = new pq_instance{pq::random_instance(pq::topology_from_string(topology), n, seed)};
  });
}

pq_status pq_instance_from_json(const char* json_text, pq_instance** out) {
  if (!json_text || !out) return invalid("null argument");
  return guarded([&] { *out = new pq_instance{pq::instance_from_json(json_text)}; });
}

pq_status pq_instance_to_json(const pq_instance* inst, char** json_out) {
  if (!inst || !json_out) return invalid("null argument");
  return guarded([&] { *json_out = dup_string(pq::instance_to_json(inst->value)); });
}

void pq_instance_free(pq_instance* inst) { delete inst; }

pq_status pq_instance_counts(const pq_instance* inst, int* n, int* num_edges) {
  if (!inst) return invalid("null argument");
  if (n) *n = inst->value.n;
  if (num_edges) *num_edges = int(inst->value.edges.size());
  return PQ_OK;
}

pq_status pq_instance_objective(const pq_instance* inst, const uint8_t* bits, int len,
                                int64_t* energy) {
  if (!inst || !energy) return invalid("null argument");
  return guarded(
      [&] { *energy = pq::objective_value(inst->value, bits_from_array(bits, len)); });
}

pq_status pq_instance_extrema(const pq_instance* inst, int64_t* c_min, int64_t* c_max,
                              int* ground_states) {
  if (!inst) return invalid("null argument");
  return guarded([&] {
    const pq::Extrema ex = pq::brute_force_extrema(inst->value);
    if (c_min) *c_min = ex.c_min;
    if (c_max) *c_max = ex.c_max;
    if (ground_states) *ground_states = int(ex.ground_states.size());
  });
}

pq_status pq_approximation_ratio(int64_t c_min, int64_t c_max, double energy, double* ratio) {
  if (!ratio) return invalid("null argument");
  return guarded([&] {
    pq::Extrema ex;
    ex.c_min = c_min;
    ex.c_max = c_max;
    *ratio = pq::approximation_ratio(ex, energy);
  });
}

pq_status pq_mapping_encode_complete(int n, pq_mapping** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new pq_mapping{pq::encode_complete(n)}; });
}

pq_status pq_mapping_builtin(const char* name, pq_mapping** out) {
  if (!name || !out) return invalid("null argument");
  return guarded([&] {
    const std::string s = name;
    if (s == "fig3")
      *out = new pq_mapping{pq::fig3_mapping()};
    else if (s == "fig9")
      *out = new pq_mapping{pq::fig9_mapping()};
    else
      pq::fail(pq::ErrorCode::InvalidArgument, "unknown builtin mapping: " + s);
  });
}

pq_status pq_mapping_from_json(const char* json_text, pq_mapping** out) {
  if (!json_text || !out) return invalid("null argument");
  return guarded([&] { *out = new pq_mapping{pq::mapping_from_json(json_text)}; });
}

pq_status pq_mapping_to_json(const pq_mapping* m, char** json_out) {
  if (!m || !json_out) return invalid("null argument");
  return guarded([&] { *json_out = dup_string(pq::mapping_to_json(m->value)); });
}

void pq_mapping_free(pq_mapping* m) { delete m; }

pq_status pq_mapping_counts(const pq_mapping* m, int* n_logical, int* num_qubits,
                            int* num_constraints, int* degeneracy) {
  if (!m) return invalid("null argument");
  if (n_logical) *n_logical = m->value.n_logical;
  if (num_qubits) *num_qubits = m->value.num_qubits();
  if (num_constraints) *num_constraints = m->value.num_constraints();
  if (degeneracy) *degeneracy = m->value.degeneracy;
  return PQ_OK;
}

pq_status pq_mapping_tree_coverage(const pq_mapping* m, int num_bases, double* coverage) {
  if (!m || !coverage) return invalid("null argument");
  return guarded([&] { *coverage = pq::tree_coverage(m->value, num_bases); });
}

pq_status pq_encode_logical_state(const pq_mapping* m, const uint8_t* logical, int n,
                                  uint8_t* physical_out) {
  if (!m || !physical_out) return invalid("null argument");
  return guarded([&] {
    const pq::BitString phys =
        pq::encode_logical_state(m->value, bits_from_array(logical, n));
    for (int q = 0; q < phys.size(); ++q) physical_out[q] = phys.get(q) ? 1 : 0;
  });
}

pq_status pq_decode_basis(const pq_mapping* m, int basis_index, const uint8_t* physical, int k,
                          uint8_t* logical_out) {
  if (!m || !logical_out) return invalid("null argument");
  return guarded([&] {
    pq::require(basis_index >= 0 && basis_index < int(m->value.readout_bases.size()),
                pq::ErrorCode::InvalidArgument, "basis index out of range");
    const pq::BitString logical = pq::decode_basis(
        m->value, m->value.readout_bases[basis_index], bits_from_array(physical, k));
    for (int i = 0; i < logical.size(); ++i) logical_out[i] = logical.get(i) ? 1 : 0;
  });
}

pq_status pq_analytic_resources(const char* kind, int n, int p, int64_t* cnot_depth,
                                int64_t* cnot_count) {
  if (!kind) return invalid("null argument");
  return guarded([&] {
    const pq::ResourceReport r =
        pq::analytic_resources(pq::resource_kind_from_string(kind), n, p);
    if (cnot_depth) *cnot_depth = r.cnot_depth;
    if (cnot_count) *cnot_count = r.cnot_count;
  });
}

pq_status pq_run_experiment(const char* config_json, char** csv_out) {
  if (!config_json || !csv_out) return invalid("null argument");
  return guarded([&] { *csv_out = dup_string(pq::run_experiment(config_json)); });
}

}  // extern "C"
