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

#include <set>

#include "core/clifford_sim.hpp"
#include "core/dense_sim.hpp"
#include "core/rng.hpp"
#include "support/oracles.hpp"

using namespace pq;

namespace {

// Matrix equality up to a global phase.
bool equal_up_to_phase(const oracle::Mat& a, const oracle::Mat& b) {
  oracle::cd phase{0, 0};
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (std::abs(b[i][j]) > 1e-9) {
        phase = a[i][j] / b[i][j];
        goto found;
      }
found:
  if (std::abs(std::abs(phase) - 1.0) > 1e-9) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j] - phase * b[i][j]) > 1e-9) return false;
  return true;
}

const oracle::Mat kX = {{oracle::cd{0}, oracle::cd{1}}, {oracle::cd{1}, oracle::cd{0}}};
const oracle::Mat kY = {{oracle::cd{0}, oracle::cd{0, -1}}, {oracle::cd{0, 1}, oracle::cd{0}}};
const oracle::Mat kZ = {{oracle::cd{1}, oracle::cd{0}}, {oracle::cd{0}, oracle::cd{-1}}};

oracle::Mat axis_swap(const oracle::Mat& a, const oracle::Mat& b) {
  // (A + B)/sqrt(2): the Hadamard variant exchanging the two axes.
  oracle::Mat m(2, std::vector<oracle::cd>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = (a[i][j] + b[i][j]) / std::sqrt(2.0);
  return m;
}

ParamVector parity_pv(std::vector<double> g, std::vector<double> o, std::vector<double> b) {
  ParamVector pv;
  pv.gammas = std::move(g);
  pv.omegas = std::move(o);
  pv.betas = std::move(b);
  return pv;
}

}  // namespace

TEST_CASE("published Clifford decompositions hold for the angle conventions") {
  // Uz(pi/4) on one qubit with J=+1 is exp(-i pi/4 Z) = H_xy X (exactly);
  // the others hold up to a global phase.
  const oracle::Mat uz4 = oracle::rz_matrix(M_PI / 2);          // exp(-i pi/4 Z)
  const oracle::Mat uzm4 = oracle::rz_matrix(-M_PI / 2);        // exp(+i pi/4 Z)
  const oracle::Mat uz2 = oracle::rz_matrix(M_PI);              // exp(-i pi/2 Z)
  const oracle::Mat ux2 = oracle::rx_matrix(M_PI);              // exp(-i pi/2 X)
  const oracle::Mat ux4 = oracle::rx_matrix(M_PI / 2);          // exp(-i pi/4 X)
  const oracle::Mat hxy = axis_swap(kX, kY);
  const oracle::Mat hyz = axis_swap(kY, kZ);
  CHECK(equal_up_to_phase(uz4, oracle::mul(hxy, kX)));
  CHECK(equal_up_to_phase(uzm4, oracle::mul(kX, hxy)));
  CHECK(equal_up_to_phase(uz2, oracle::mul(kY, kX)));
  CHECK(equal_up_to_phase(ux2, oracle::mul(kZ, kY)));
  CHECK(equal_up_to_phase(ux4, oracle::mul(kZ, hyz)));
}

TEST_CASE("rotation tableau actions match dense single-qubit simulation") {
  // For each Clifford angle k*pi/4, compare tableau-evolved deterministic
  // bits of h->rz->rx chains against dense amplitudes on one qubit.
  for (int kz = 0; kz < 8; ++kz) {
    for (int kx = 0; kx < 8; ++kx) {
      Circuit c;
      c.width = 1;
      c.gates.push_back(Gate::h(0));
      c.gates.push_back(Gate::rz(0, kz * M_PI / 2));  // phi = kz * pi/4
      c.gates.push_back(Gate::rx(0, kx * M_PI / 2));
      const StateVector dense = simulate(c);
      const Tableau t = clifford_simulate(c);
      const double p1 = std::norm(dense.amps[1]);
      const auto bits = t.deterministic_bits();
      if (p1 < 1e-12) {
        CHECK(bits[0] == 0);
      } else if (p1 > 1.0 - 1e-12) {
        CHECK(bits[0] == 1);
      } else {
        CHECK(bits[0] == -1);
      }
    }
  }
}

TEST_CASE("plus layer alone leaves every measurement random") {
  Circuit c;
  c.width = 4;
  for (int q = 0; q < 4; ++q) c.gates.push_back(Gate::h(q));
  const Tableau t = clifford_simulate(c);
  CHECK_FALSE(t.x_free());
  for (int b : t.deterministic_bits()) CHECK(b == -1);
  CHECK_THROWS_AS(t.basis_state(), Error);
}

TEST_CASE("non-Clifford angles are rejected") {
  Circuit c;
  c.width = 1;
  c.gates.push_back(Gate::rz(0, 0.3));
  CHECK_THROWS_AS(clifford_simulate(c), Error);
}

TEST_CASE("classical vector counts follow 2^(p+1)") {
  for (int p = 1; p <= 10; ++p) {
    const auto vecs = classical_vectors(p);
    CHECK(vecs.size() == (size_t{1} << (p + 1)));
    std::set<std::vector<double>> distinct;
    for (const auto& v : vecs) {
      CHECK(v.layers() == p);
      CHECK(v.clifford());
      std::vector<double> flat = v.gammas;
      flat.insert(flat.end(), v.omegas.begin(), v.omegas.end());
      flat.insert(flat.end(), v.betas.begin(), v.betas.end());
      distinct.insert(flat);
    }
    CHECK(distinct.size() == vecs.size());  // no duplicates
  }
}

TEST_CASE("the four depth-1 vectors are the published ones") {
  const auto vecs = classical_vectors(1);
  REQUIRE(vecs.size() == 4);
  const double g4 = M_PI / 4, g2 = M_PI / 2;
  const std::vector<std::array<double, 3>> expected = {
      {g4, 0, g4}, {g4, g2, g4}, {-g4, 0, g4}, {-g4, g2, g4}};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(vecs[i].gammas[0] == doctest::Approx(expected[i][0]));
    CHECK(vecs[i].omegas[0] == doctest::Approx(expected[i][1]));
    CHECK(vecs[i].betas[0] == doctest::Approx(expected[i][2]));
  }
}

TEST_CASE("depth-4 vectors reproduce the published table") {
  const auto vecs = classical_vectors(4);
  CHECK(vecs.size() == 32);
  const double g4 = M_PI / 4, g2 = M_PI / 2;
  std::set<std::vector<double>> got;
  for (const auto& v : vecs) {
    if (v.exact_depth() != 4) continue;
    std::vector<double> flat;
    for (int l = 0; l < 4; ++l) {
      flat.push_back(v.gammas[l]);
      flat.push_back(v.omegas[l]);
      flat.push_back(v.betas[l]);
    }
    got.insert(flat);
  }
  CHECK(got.size() == 16);
  std::set<std::vector<double>> expected;
  for (double g3 : {0.0, g2})
    for (double o3 : {g4, -g4})
      for (double gl : {g4, -g4})
        for (double ol : {g4, -g4})
          expected.insert({0, g4, g4, 0, g4, g2, g3, o3, g4, gl, ol, g4});
  CHECK(got == expected);
}

TEST_CASE("trailing zero layers act as the identity") {
  const Instance inst = random_instance(Topology::Complete, 5, 2);
  const ParityMapping m = encode_complete(5);
  const auto fields = physical_fields(inst, m);
  for (const auto& v : classical_vectors(3)) {
    ParamVector padded = v;
    padded.gammas.resize(5, 0.0);
    padded.omegas.resize(5, 0.0);
    padded.betas.resize(5, 0.0);
    // Simulate the padded circuit in full; must match the trimmed state.
    const Circuit c = build_parity_circuit(m, fields, padded);
    const BitString full_state = clifford_simulate(c).basis_state();
    CHECK(full_state == classical_state(m, fields, v));
  }
}

TEST_CASE("classical states follow the local-field ground-state rule") {
  const Instance inst = random_instance(Topology::Complete, 5, 8);
  const ParityMapping m = encode_complete(5);
  const auto fields = physical_fields(inst, m);
  const auto vecs = classical_vectors(1);

  // theta_3 = (-pi/4, 0, pi/4): bit = 1 iff the field is +1.
  const BitString q3 = classical_state(m, fields, vecs[2]);
  for (int q = 0; q < m.num_qubits(); ++q) CHECK(q3.get(q) == (fields[q] == 1));
  // theta_1 is the global complement.
  const BitString q1 = classical_state(m, fields, vecs[0]);
  for (int q = 0; q < m.num_qubits(); ++q) CHECK(q1.get(q) != q3.get(q));
  // All fields -1 and theta_3: the all-zeros state.
  const BitString zeros = classical_state(m, std::vector<int>(10, -1), vecs[2]);
  CHECK(zeros == BitString(10));
  // theta_2 and theta_4 differ by a global flip as well.
  const BitString q2 = classical_state(m, fields, vecs[1]);
  const BitString q4 = classical_state(m, fields, vecs[3]);
  for (int q = 0; q < m.num_qubits(); ++q) CHECK(q2.get(q) != q4.get(q));
}

TEST_CASE("tableau basis states equal dense simulation for p <= 3") {
  for (int n : {4, 5}) {
    const Instance inst = random_instance(Topology::Complete, n, 19 + n);
    const ParityMapping m = encode_complete(n);
    const auto fields = physical_fields(inst, m);
    for (const auto& v : classical_vectors(3)) {
      const BitString state = classical_state(m, fields, v);
      const StateVector dense =
          simulate(build_parity_circuit(m, fields, v.truncated(v.exact_depth())));
      CHECK(std::norm(dense.amps[state.to_index()]) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("lower bound solves every n=4 instance at p=1 with the best objective") {
  const ParityMapping m = encode_complete(4);
  const auto bases = logical_lines(m);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = random_instance(Topology::Complete, 4, seed);
    const Extrema ex = brute_force_extrema(inst);
    if (ex.c_max == ex.c_min) continue;
    const CliffordBound b = lower_bound(inst, m, bases, 1, ObjectiveKind::Best);
    CHECK(b.solved);
    CHECK(b.r0 == doctest::Approx(1.0));
    CHECK(objective_value(inst, b.best_logical) == ex.c_min);
  }
}

TEST_CASE("best-kind bound dominates the mean-kind bound") {
  const ParityMapping m = encode_complete(6);
  const auto bases = logical_lines(m);
  for (uint64_t seed = 40; seed < 46; ++seed) {
    const Instance inst = random_instance(Topology::Complete, 6, seed);
    if (brute_force_extrema(inst).c_max == brute_force_extrema(inst).c_min) continue;
    const CliffordBound b = lower_bound(inst, m, bases, 2, ObjectiveKind::Mean);
    CHECK(b.r0_best >= b.r0_mean - 1e-12);
  }
}

TEST_CASE("census representatives violate exactly the requested pattern") {
  const ParityMapping m = encode_complete(7);
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const uint64_t pattern = rng.next_below(uint64_t{1} << m.num_constraints());
    const auto fields = census_representative_fields(m, pattern);
    // q~3 has bit 1 exactly on +1 fields; a constraint is violated iff the
    // parity of those bits over its members is odd.
    for (int l = 0; l < m.num_constraints(); ++l) {
      int par = 0;
      for (int q : m.constraints[l].members) par ^= fields[q] == 1;
      CHECK(par == int(pattern >> l & 1));
    }
  }
}

TEST_CASE("small census: every n=4 class is trivial at p = 1") {
  const ParityMapping m = encode_complete(4);
  const auto rows = constraint_pattern_census(m, logical_lines(m), {1}, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].total_classes == 8);
  CHECK(rows[0].non_trivial == 0);
  CHECK(rows[0].percent == doctest::Approx(0.0));
  CHECK(rows[0].mirror_orbits == 0);
}

TEST_CASE("census worker count does not change the outcome") {
  const ParityMapping m = encode_complete(5);
  const auto bases = logical_lines(m);
  const auto a = constraint_pattern_census(m, bases, {1, 2}, 1);
  const auto b = constraint_pattern_census(m, bases, {1, 2}, 3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].non_trivial == b[i].non_trivial);
    CHECK(a[i].mirror_orbits == b[i].mirror_orbits);
  }
}

TEST_CASE("triviality on the bundled 4-regular mapping with published trees") {
  const ParityMapping m = fig3_mapping();
  std::vector<ReadoutBasis> five(m.readout_bases.begin(), m.readout_bases.begin() + 5);
  const Instance inst = random_instance(Topology::Regular4Fig3, 8, 123);
  // Just exercises the ancilla-aware deterministic-bit path end to end.
  const CliffordBound b = lower_bound(inst, m, five, 2, ObjectiveKind::Mean);
  CHECK(b.r0_best >= 0.0);
  CHECK(b.r0_best <= 1.0);
  CHECK((b.first_solve_depth == -1 || b.first_solve_depth >= 1));
}
