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

#include "parity_map.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "rng.hpp"

namespace pq {

int ParityMapping::qubit_index(const std::vector<int>& logical_set) const {
  for (int i = 0; i < num_qubits(); ++i)
    if (physical_qubits[i] == logical_set) return i;
  return -1;
}

Gf2Matrix ParityMapping::qubit_matrix() const {
  Gf2Matrix m(num_qubits(), n_logical);
  for (int q = 0; q < num_qubits(); ++q)
    for (int v : physical_qubits[q]) m.set(q, v, true);
  return m;
}

static BitString constraint_parity_set(const ParityMapping& m, const Constraint& c) {
  BitString acc(m.n_logical);
  for (int q : c.members)
    for (int v : m.physical_qubits[q]) acc.flip(v);
  return acc;
}

static Gf2Matrix constraint_matrix(const ParityMapping& m) {
  Gf2Matrix cm(m.num_constraints(), m.num_qubits());
  for (int l = 0; l < m.num_constraints(); ++l)
    for (int q : m.constraints[l].members) cm.set(l, q, true);
  return cm;
}

void validate_mapping(const ParityMapping& m) {
  const int K = m.num_qubits();
  require(m.n_logical >= 2 && K >= 1, ErrorCode::Validation, "mapping too small");
  require(int(m.ancilla.size()) == K, ErrorCode::Validation, "ancilla flag count mismatch");

  std::set<std::vector<int>> seen;
  for (const auto& s : m.physical_qubits) {
    require(s.size() >= 2, ErrorCode::Validation, "parity set needs >= 2 logical qubits");
    require(std::is_sorted(s.begin(), s.end()), ErrorCode::Validation, "parity set not sorted");
    require(std::adjacent_find(s.begin(), s.end()) == s.end(), ErrorCode::Validation,
            "parity set has repeated vertex");
    require(s.front() >= 0 && s.back() < m.n_logical, ErrorCode::Validation,
            "parity set vertex out of range");
    require(seen.insert(s).second, ErrorCode::Validation, "duplicate parity set");
  }

  const int rank = m.qubit_matrix().rank();
  require(m.degeneracy >= 1, ErrorCode::Validation, "degeneracy must be >= 1");
  require(rank == m.n_logical - m.degeneracy, ErrorCode::Validation,
          "parity-set rank does not match declared degeneracy");

  const int L = m.num_constraints();
  require(L == K - m.n_logical + m.degeneracy, ErrorCode::Validation,
          "constraint count L != K - N + D");
  for (const auto& c : m.constraints) {
    require(c.members.size() == 3 || c.members.size() == 4, ErrorCode::Validation,
            "constraint size must be 3 or 4");
    std::set<int> mem(c.members.begin(), c.members.end());
    require(int(mem.size()) == int(c.members.size()), ErrorCode::Validation,
            "constraint members must be distinct");
    require(*mem.begin() >= 0 && *mem.rbegin() < K, ErrorCode::Validation,
            "constraint member out of range");
    require(c.sign == 1 || c.sign == -1, ErrorCode::Validation, "constraint sign must be +-1");
    require(!constraint_parity_set(m, c).any(), ErrorCode::Validation,
            "constraint is not a parity cycle");
  }
  if (L > 0)
    require(constraint_matrix(m).rank() == L, ErrorCode::Validation,
            "constraints are not independent over GF(2)");

  for (const auto& b : m.readout_bases) {
    require(int(b.members.size()) == m.n_logical - m.degeneracy, ErrorCode::Validation,
            "readout basis must have N - D members");
    Gf2Matrix bm(int(b.members.size()), m.n_logical);
    for (size_t r = 0; r < b.members.size(); ++r) {
      int q = b.members[r];
      require(q >= 0 && q < K, ErrorCode::Validation, "readout member out of range");
      require(!m.ancilla[q], ErrorCode::Validation, "readout bases never include ancillas");
      for (int v : m.physical_qubits[q]) bm.set(int(r), v, true);
    }
    require(bm.rank() == m.n_logical - m.degeneracy, ErrorCode::Validation,
            "readout basis is not decodable (rank deficient)");
  }
}

ParityMapping encode_complete(int n) {
  require(n >= 3, ErrorCode::InvalidArgument, "encode_complete needs n >= 3");
  ParityMapping m;
  m.n_logical = n;
  m.degeneracy = 1;
  m.provenance = "paper_layout";

  // Qubit (i,j), i<j, in lexicographic (row-major) order; staircase position
  // (column i, row j-i-1).
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      index[{i, j}] = m.num_qubits();
      m.physical_qubits.push_back({i, j});
      m.positions.push_back({i, j - i - 1});
    }
  m.ancilla.assign(m.num_qubits(), false);

  // Plaquette P(i,j): {(i,j), (i,j-1), (i+1,j)} plus (i+1,j-1) when it
  // exists; the j = i+2 boundary gives the 3-body terms.
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      Constraint c;
      c.members = {index[{i, j}], index[{i, j - 1}], index[{i + 1, j}]};
      if (i + 1 < j - 1) c.members.push_back(index[{i + 1, j - 1}]);
      std::sort(c.members.begin(), c.members.end());
      m.constraints.push_back(std::move(c));
    }

  m.readout_bases = logical_lines(m);
  validate_mapping(m);
  return m;
}

std::vector<ReadoutBasis> logical_lines(const ParityMapping& m) {
  const int n = m.n_logical;
  require(m.num_qubits() == n * (n - 1) / 2, ErrorCode::InvalidArgument,
          "logical lines require a complete-graph mapping");
  std::vector<ReadoutBasis> bases(n);
  for (int i = 0; i < n; ++i) bases[i].logical_line = i;
  for (int q = 0; q < m.num_qubits(); ++q) {
    const auto& s = m.physical_qubits[q];
    require(s.size() == 2, ErrorCode::InvalidArgument,
            "logical lines require pairwise parity sets");
    bases[s[0]].members.push_back(q);
    bases[s[1]].members.push_back(q);
  }
  for (auto& b : bases)
    require(int(b.members.size()) == n - 1, ErrorCode::InvalidArgument,
            "mapping does not cover all pairs");
  return bases;
}

std::vector<Constraint> find_constraints(int n_logical,
                                         const std::vector<std::vector<int>>& physical_qubits) {
  const int K = int(physical_qubits.size());
  require(K >= 1 && K <= 128, ErrorCode::Guard, "cycle-basis search guarded at K <= 128");

  std::vector<BitString> sets(K, BitString(n_logical));
  for (int q = 0; q < K; ++q)
    for (int v : physical_qubits[q]) {
      require(v >= 0 && v < n_logical, ErrorCode::InvalidArgument, "vertex out of range");
      sets[q].flip(v);
    }

  Gf2Matrix qm(K, n_logical);
  for (int q = 0; q < K; ++q) qm.set_row(q, sets[q]);
  const int rank = qm.rank();
  const int D = n_logical - rank;
  require(D >= 1, ErrorCode::InvalidArgument,
          "parity sets have full rank; no logical degeneracy");
  const int target = K - n_logical + D;  // = K - rank

  // All 3- and 4-subsets whose parity sets XOR to zero, via the pairwise-XOR
  // table. Candidates are ordered by (size, members) so the greedy pick is
  // deterministic.
  std::map<BitString, std::vector<std::pair<int, int>>> by_xor;
  for (int a = 0; a < K; ++a)
    for (int b = a + 1; b < K; ++b) {
      BitString x = sets[a];
      x ^= sets[b];
      by_xor[x].push_back({a, b});
    }
  std::set<std::vector<int>> found;
  for (int c = 0; c < K; ++c) {
    auto it = by_xor.find(sets[c]);
    if (it == by_xor.end()) continue;
    for (auto [a, b] : it->second) {
      if (a == c || b == c) continue;
      std::vector<int> mem = {a, b, c};
      std::sort(mem.begin(), mem.end());
      found.insert(mem);
    }
  }
  for (const auto& [x, pairs] : by_xor) {
    if (!x.any()) continue;  // duplicate sets are rejected upstream
    for (size_t u = 0; u < pairs.size(); ++u)
      for (size_t v = u + 1; v < pairs.size(); ++v) {
        auto [a, b] = pairs[u];
        auto [c, d] = pairs[v];
        if (a == c || a == d || b == c || b == d) continue;
        std::vector<int> mem = {a, b, c, d};
        std::sort(mem.begin(), mem.end());
        found.insert(mem);
      }
  }

  std::vector<std::vector<int>> candidates(found.begin(), found.end());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });

  // Greedy independent picks over the K-dimensional cycle space.
  std::vector<BitString> echelon;  // rows kept in reduced form
  std::vector<int> pivots;
  std::vector<Constraint> out;
  for (const auto& mem : candidates) {
    if (int(out.size()) == target) break;
    BitString v(K);
    for (int q : mem) v.set(q, true);
    for (size_t r = 0; r < echelon.size(); ++r)
      if (v.get(pivots[r])) v ^= echelon[r];
    if (!v.any()) continue;
    int piv = 0;
    while (!v.get(piv)) ++piv;
    echelon.push_back(v);
    pivots.push_back(piv);
    out.push_back({mem, 1});
  }
  require(int(out.size()) == target, ErrorCode::InvalidArgument,
          "no basis of short (<=4) parity cycles exists for these qubits");
  return out;
}

std::vector<ReadoutBasis> find_readout_bases(const ParityMapping& m, int count, uint64_t seed) {
  const int K = m.num_qubits();
  const int need = m.n_logical - m.degeneracy;
  std::vector<ReadoutBasis> bases;
  std::set<std::vector<int>> distinct;
  uint64_t attempt = 0;
  while (int(bases.size()) < count) {
    require(attempt < uint64_t(count) * 64, ErrorCode::Runtime,
            "readout basis search did not converge");
    Rng rng(derive_seed(derive_seed(seed, stream::kBasisSearch), attempt++));
    std::vector<int> order;
    for (int q = 0; q < K; ++q)
      if (!m.ancilla[q]) order.push_back(q);
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.next_below(i)]);

    std::vector<BitString> echelon;
    std::vector<int> pivots;
    std::vector<int> members;
    for (int q : order) {
      if (int(members.size()) == need) break;
      BitString v(m.n_logical);
      for (int x : m.physical_qubits[q]) v.set(x, true);
      for (size_t r = 0; r < echelon.size(); ++r)
        if (v.get(pivots[r])) v ^= echelon[r];
      if (!v.any()) continue;
      int piv = 0;
      while (!v.get(piv)) ++piv;
      echelon.push_back(v);
      pivots.push_back(piv);
      members.push_back(q);
    }
    if (int(members.size()) != need) continue;
    std::sort(members.begin(), members.end());
    if (!distinct.insert(members).second) continue;
    bases.push_back({members, -1});
  }
  return bases;
}

std::vector<int> physical_fields(const Instance& inst, const ParityMapping& m,
                                 bool allow_missing) {
  require(inst.n == m.n_logical, ErrorCode::InvalidArgument,
          "instance size does not match mapping");
  std::map<std::vector<int>, int> weight_of;
  for (const auto& e : inst.edges) weight_of[e.vertices] = e.weight;

  std::vector<int> fields(m.num_qubits(), 0);
  size_t matched = 0;
  for (int q = 0; q < m.num_qubits(); ++q) {
    if (m.ancilla[q]) continue;
    auto it = weight_of.find(m.physical_qubits[q]);
    if (it == weight_of.end()) {
      require(allow_missing, ErrorCode::InvalidArgument,
              "physical qubit has no matching edge in the instance");
      continue;
    }
    fields[q] = it->second;
    ++matched;
  }
  require(matched == inst.edges.size(), ErrorCode::InvalidArgument,
          "instance has edges not represented by any physical qubit");
  return fields;
}

BitString encode_logical_state(const ParityMapping& m, const BitString& logical) {
  require(logical.size() == m.n_logical, ErrorCode::InvalidArgument,
          "logical state length mismatch");
  BitString phys(m.num_qubits());
  for (int q = 0; q < m.num_qubits(); ++q) {
    int par = 0;
    for (int v : m.physical_qubits[q]) par ^= logical.get(v);
    if (par) phys.set(q, true);
  }
  return phys;
}

double tree_coverage(const ParityMapping& m, int num_bases) {
  require(num_bases >= 1, ErrorCode::InvalidArgument, "tree coverage needs >= 1 basis");
  return double(num_bases) * double(m.n_logical - 1) / double(m.num_qubits());
}

std::string mapping_to_json(const ParityMapping& m) {
  nlohmann::json j;
  j["n_logical"] = m.n_logical;
  j["degeneracy"] = m.degeneracy;
  j["physical_qubits"] = m.physical_qubits;
  std::vector<int> anc;
  for (int q = 0; q < m.num_qubits(); ++q)
    if (m.ancilla[q]) anc.push_back(q);
  j["ancillas"] = anc;
  j["constraints"] = nlohmann::json::array();
  for (const auto& c : m.constraints)
    j["constraints"].push_back({{"qubits", c.members}, {"sign", c.sign}});
  j["readout_bases"] = nlohmann::json::array();
  for (const auto& b : m.readout_bases) j["readout_bases"].push_back(b.members);
  if (!m.positions.empty()) {
    auto pos = nlohmann::json::array();
    for (const auto& p : m.positions) pos.push_back({p[0], p[1]});
    j["positions"] = pos;
  }
  j["provenance"] = m.provenance;
  return j.dump(2) + "\n";
}

ParityMapping mapping_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::Parse, std::string("mapping JSON parse error: ") + e.what());
  }
  ParityMapping m;
  try {
    m.n_logical = j.at("n_logical").get<int>();
    m.degeneracy = j.value("degeneracy", 1);
    m.physical_qubits = j.at("physical_qubits").get<std::vector<std::vector<int>>>();
    m.ancilla.assign(m.physical_qubits.size(), false);
    for (int q : j.value("ancillas", std::vector<int>{})) {
      require(q >= 0 && q < m.num_qubits(), ErrorCode::Parse, "ancilla index out of range");
      m.ancilla[q] = true;
    }
    for (const auto& jc : j.at("constraints")) {
      Constraint c;
      c.members = jc.at("qubits").get<std::vector<int>>();
      c.sign = jc.value("sign", 1);
      m.constraints.push_back(std::move(c));
    }
    for (const auto& jb : j.value("readout_bases", nlohmann::json::array()))
      m.readout_bases.push_back({jb.get<std::vector<int>>(), -1});
    if (j.contains("positions"))
      for (const auto& jp : j.at("positions"))
        m.positions.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
    m.provenance = j.value("provenance", std::string("imported"));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::Parse, std::string("mapping JSON field error: ") + e.what());
  }
  validate_mapping(m);
  return m;
}

const std::vector<std::vector<std::vector<int>>>& fig3_spanning_trees() {
  static const std::vector<std::vector<std::vector<int>>> trees = {
      {{0, 2}, {0, 1}, {0, 6}, {0, 7}, {3, 7}, {3, 5}, {4, 5}},
      {{0, 2}, {0, 7}, {5, 7}, {4, 5}, {4, 6}, {3, 4}, {1, 4}},
      {{3, 6}, {3, 7}, {2, 7}, {5, 7}, {1, 5}, {0, 1}, {1, 4}},
      {{2, 7}, {2, 6}, {1, 2}, {0, 6}, {3, 6}, {1, 5}, {4, 6}},
      {{2, 6}, {1, 2}, {3, 4}, {3, 5}, {0, 6}, {3, 6}, {2, 7}},
      {{0, 2}, {0, 1}, {2, 6}, {1, 5}, {5, 7}, {3, 5}, {4, 5}},
      {{1, 2}, {0, 7}, {1, 4}, {1, 5}, {3, 4}, {3, 7}, {4, 6}},
      {{1, 2}, {0, 6}, {0, 7}, {0, 1}, {3, 4}, {3, 5}, {3, 7}}};
  return trees;
}

ParityMapping fig3_mapping() {
  ParityMapping m;
  m.n_logical = 8;
  m.degeneracy = 1;
  m.provenance = "reconstructed";
  m.physical_qubits = fig3_edge_sets();
  m.physical_qubits.push_back({1, 6});  // compiler ancilla
  m.ancilla.assign(m.num_qubits(), false);
  m.ancilla.back() = true;
  m.constraints = find_constraints(m.n_logical, m.physical_qubits);
  for (const auto& tree : fig3_spanning_trees()) {
    ReadoutBasis b;
    for (const auto& edge : tree) {
      int q = m.qubit_index(edge);
      require(q >= 0, ErrorCode::Runtime, "spanning tree edge missing from qubit list");
      b.members.push_back(q);
    }
    std::sort(b.members.begin(), b.members.end());
    m.readout_bases.push_back(std::move(b));
  }
  validate_mapping(m);
  return m;
}

ParityMapping fig9_mapping() {
  ParityMapping m;
  m.n_logical = 8;
  m.degeneracy = 1;
  m.provenance = "reconstructed";
  m.physical_qubits = fig9_edge_sets();
  m.physical_qubits.push_back({5, 6});        // ancillas added by the
  m.physical_qubits.push_back({0, 1, 4, 5});  // plaquette reconstruction
  m.ancilla.assign(m.num_qubits(), false);
  m.ancilla[m.num_qubits() - 2] = true;
  m.ancilla[m.num_qubits() - 1] = true;
  m.constraints = find_constraints(m.n_logical, m.physical_qubits);
  m.readout_bases = find_readout_bases(m, 5, 20260127);
  validate_mapping(m);
  return m;
}

}  // namespace pq
