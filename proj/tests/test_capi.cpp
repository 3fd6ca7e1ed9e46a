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

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "pqaoa/pqaoa.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { pq_string_free(p); }
};

}  // namespace

TEST_CASE("version and error text") {
  int major = -1, minor = -1;
  pq_version(&major, &minor);
  CHECK(major == 0);
  CHECK(minor >= 1);
  CHECK(pq_last_error() != nullptr);
}

TEST_CASE("instance lifecycle through the C surface") {
  pq_instance* inst = nullptr;
  REQUIRE(pq_instance_random("complete", 4, 7, &inst) == PQ_OK);
  int n = 0, edges = 0;
  CHECK(pq_instance_counts(inst, &n, &edges) == PQ_OK);
  CHECK(n == 4);
  CHECK(edges == 6);

  const uint8_t bits[4] = {0, 0, 1, 0};
  int64_t energy = 99;
  CHECK(pq_instance_objective(inst, bits, 4, &energy) == PQ_OK);

  int64_t c_min = 0, c_max = 0;
  int ground = 0;
  CHECK(pq_instance_extrema(inst, &c_min, &c_max, &ground) == PQ_OK);
  CHECK(c_min <= energy);
  CHECK(energy <= c_max);
  CHECK(ground >= 1);

  double ratio = -1;
  REQUIRE(pq_approximation_ratio(c_min, c_max, double(c_min), &ratio) == PQ_OK);
  CHECK(ratio == doctest::Approx(1.0));

  Str text;
  REQUIRE(pq_instance_to_json(inst, &text.p) == PQ_OK);
  pq_instance* back = nullptr;
  REQUIRE(pq_instance_from_json(text.p, &back) == PQ_OK);
  Str text2;
  REQUIRE(pq_instance_to_json(back, &text2.p) == PQ_OK);
  CHECK(std::string(text.p) == text2.p);
  pq_instance_free(back);
  pq_instance_free(inst);
}

TEST_CASE("error codes carry messages") {
  pq_instance* inst = nullptr;
  CHECK(pq_instance_random("complete", 2, 1, &inst) == PQ_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(pq_last_error()) > 0);
  CHECK(pq_instance_random("hexagonal", 5, 1, &inst) == PQ_ERR_INVALID_ARGUMENT);
  CHECK(pq_instance_from_json("{oops", &inst) == PQ_ERR_PARSE);
  CHECK(pq_instance_random(nullptr, 5, 1, &inst) == PQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("mapping encode, decode and counts") {
  pq_mapping* m = nullptr;
  REQUIRE(pq_mapping_encode_complete(4, &m) == PQ_OK);
  int n = 0, k = 0, l = 0, d = 0;
  CHECK(pq_mapping_counts(m, &n, &k, &l, &d) == PQ_OK);
  CHECK(n == 4);
  CHECK(k == 6);
  CHECK(l == 3);
  CHECK(d == 1);

  double coverage = 0;
  CHECK(pq_mapping_tree_coverage(m, 4, &coverage) == PQ_OK);
  CHECK(coverage == doctest::Approx(2.0));

  const uint8_t logical[4] = {0, 1, 0, 1};
  std::vector<uint8_t> physical(6, 0xff);
  REQUIRE(pq_encode_logical_state(m, logical, 4, physical.data()) == PQ_OK);
  std::vector<uint8_t> decoded(4, 0xff);
  REQUIRE(pq_decode_basis(m, 0, physical.data(), 6, decoded.data()) == PQ_OK);
  // Canonical completion pins bit 0; (0,1,0,1) already has bit 0 clear.
  for (int i = 0; i < 4; ++i) CHECK(decoded[i] == logical[i]);
  CHECK(pq_decode_basis(m, 99, physical.data(), 6, decoded.data()) ==
        PQ_ERR_INVALID_ARGUMENT);

  Str text;
  REQUIRE(pq_mapping_to_json(m, &text.p) == PQ_OK);
  pq_mapping* back = nullptr;
  REQUIRE(pq_mapping_from_json(text.p, &back) == PQ_OK);
  pq_mapping_free(back);
  pq_mapping_free(m);

  pq_mapping* builtin = nullptr;
  REQUIRE(pq_mapping_builtin("fig3", &builtin) == PQ_OK);
  CHECK(pq_mapping_counts(builtin, &n, &k, &l, &d) == PQ_OK);
  CHECK(k == 17);
  CHECK(l == 10);
  pq_mapping_free(builtin);
  CHECK(pq_mapping_builtin("fig4", &builtin) == PQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("analytic resources and experiments run through the C surface") {
  int64_t depth = 0, count = 0;
  REQUIRE(pq_analytic_resources("parity_complete", 7, 1, &depth, &count) == PQ_OK);
  CHECK(depth == 10);
  CHECK(count == 40);
  CHECK(pq_analytic_resources("warp_drive", 7, 1, &depth, &count) ==
        PQ_ERR_INVALID_ARGUMENT);

  Str csv;
  REQUIRE(pq_run_experiment(
              R"({"command":"lower-bound","n":[4],"p":[1],"instances":3,"seed":1})",
              &csv.p) == PQ_OK);
  CHECK(std::string(csv.p).find("solved_fraction") != std::string::npos);
  char* bad = nullptr;
  CHECK(pq_run_experiment(R"({"command":"nope"})", &bad) == PQ_ERR_PARSE);
}
