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

#pragma once

#include <string>
#include <vector>

#include "params.hpp"
#include "parity_map.hpp"
#include "problem.hpp"

namespace pq {

// rz(theta) = exp(-i (theta/2) Z) and rx(theta) = exp(-i (theta/2) X).
// Builders pass 2*gamma*J and 2*Omega so circuits implement exp(-i gamma H)
// and exp(-i Omega H_plaquette) exactly.
enum class GateKind { H, RX, RZ, PlaquetteRZ, PauliX, PauliY, PauliZ, CNOT, ZZ };

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;         // CNOT target / second ZZ qubit
  double angle = 0.0;  // radians, rotation kinds only

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
  static Gate plaquette_rz(int q, double a) { return {GateKind::PlaquetteRZ, q, -1, a}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t, 0.0}; }
  static Gate zz(int a, int b, double ang) { return {GateKind::ZZ, a, b, ang}; }
  static Gate pauli(char axis, int q);

  bool two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::ZZ; }
};

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
  // final_permutation[i] = wire position of original qubit i after the
  // circuit (identity unless a SWAP network ran).
  std::vector<int> final_permutation;
};

struct ResourceReport {
  enum class Source { Measured, Analytic };
  int64_t cnot_depth = 0;
  int64_t cnot_count = 0;
  Source source = Source::Measured;
};

// One h layer, then per QAOA layer an odd-even transposition SWAP network
// covering every pair once via fused ZZ+SWAP blocks (3 CNOTs each), then the
// rx mixer. Each layer reverses the qubit order.
Circuit build_vanilla_circuit(const Instance& inst, const ParamVector& params);

// One h layer, then per layer: rz local fields, plaquette CNOT chains
// (greedily grouped into disjoint-support batches), rx mixer.
Circuit build_parity_circuit(const ParityMapping& m, const std::vector<int>& fields,
                             const ParamVector& params);

// As-soon-as-possible layering over qubit conflicts; depth counts only
// layers containing at least one CNOT.
ResourceReport cnot_metrics(const Circuit& c);

enum class ResourceKind {
  VanillaComplete,
  ParityComplete,
  VanillaFig3,
  ParityFig3,
  VanillaFig9,
  ParityFig9,
};

ResourceKind resource_kind_from_string(const std::string& s);

// Published per-layer CNOT depth/count constants, multiplied by p.
ResourceReport analytic_resources(ResourceKind kind, int n, int p);

// Debug dump; not a stability-guaranteed format.
std::string circuit_to_json(const Circuit& c);

}  // namespace pq
