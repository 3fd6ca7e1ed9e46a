/* Copyright 2026 The pqaoa developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the pqaoa workbench: signed Max-Cut instances, parity (LHZ)
 * encodings, and the batch experiment runner. All functions return a
 * pq_status; outputs are written through pointers. Returned strings are
 * heap-allocated and must be released with pq_string_free. Handles are
 * opaque and freed with their matching *_free function. The library keeps
 * the last error message per thread; query it with pq_last_error.
 */

#ifndef PQAOA_PQAOA_H_
#define PQAOA_PQAOA_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pq_status {
  PQ_OK = 0,
  PQ_ERR_INVALID_ARGUMENT = 1,
  PQ_ERR_PARSE = 2,
  PQ_ERR_GUARD = 3,
  PQ_ERR_VALIDATION = 4,
  PQ_ERR_NOT_BASIS_STATE = 5,
  PQ_ERR_RUNTIME = 6
} pq_status;

typedef struct pq_instance pq_instance;
typedef struct pq_mapping pq_mapping;

/* ---- library ---- */

void pq_version(int* major, int* minor);
const char* pq_last_error(void); /* thread-local; valid until the next call */
void pq_string_free(char* s);

/* ---- problem instances ---- */

/* topology: "complete" | "regular4_fig3" | "hypergraph_fig9" */
pq_status pq_instance_random(const char* topology, int n, uint64_t seed, pq_instance** out);
pq_status pq_instance_from_json(const char* json_text, pq_instance** out);
pq_status pq_instance_to_json(const pq_instance* inst, char** json_out);
void pq_instance_free(pq_instance* inst);

pq_status pq_instance_counts(const pq_instance* inst, int* n, int* num_edges);
/* bits[i] in {0,1}, length n */
pq_status pq_instance_objective(const pq_instance* inst, const uint8_t* bits, int len,
                                int64_t* energy);
pq_status pq_instance_extrema(const pq_instance* inst, int64_t* c_min, int64_t* c_max,
                              int* ground_states);
pq_status pq_approximation_ratio(int64_t c_min, int64_t c_max, double energy, double* ratio);

/* ---- parity mappings ---- */

pq_status pq_mapping_encode_complete(int n, pq_mapping** out);
/* name: "fig3" | "fig9" (bundled reconstructed mappings) */
pq_status pq_mapping_builtin(const char* name, pq_mapping** out);
pq_status pq_mapping_from_json(const char* json_text, pq_mapping** out);
pq_status pq_mapping_to_json(const pq_mapping* m, char** json_out);
void pq_mapping_free(pq_mapping* m);

pq_status pq_mapping_counts(const pq_mapping* m, int* n_logical, int* num_qubits,
                            int* num_constraints, int* degeneracy);
pq_status pq_mapping_tree_coverage(const pq_mapping* m, int num_bases, double* coverage);

/* physical_out must hold num_qubits entries */
pq_status pq_encode_logical_state(const pq_mapping* m, const uint8_t* logical, int n,
                                  uint8_t* physical_out);
/* logical_out must hold n_logical entries */
pq_status pq_decode_basis(const pq_mapping* m, int basis_index, const uint8_t* physical, int k,
                          uint8_t* logical_out);

/* ---- resources ---- */

/* kind: "vanilla_complete" | "parity_complete" | "vanilla_fig3" |
 * "parity_fig3" | "vanilla_fig9" | "parity_fig9" */
pq_status pq_analytic_resources(const char* kind, int n, int p, int64_t* cnot_depth,
                                int64_t* cnot_count);

/* ---- batch experiments ---- */

/* config_json: see the README for keys; returns a CSV document. */
pq_status pq_run_experiment(const char* config_json, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* PQAOA_PQAOA_H_ */
