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

#include <cmath>
#include <vector>

#include "error.hpp"

namespace pq {

// Per-layer QAOA angles. Vanilla circuits use (gamma, beta); parity circuits
// additionally use the plaquette angle omega.
struct ParamVector {
  std::vector<double> gammas;
  std::vector<double> omegas;  // empty for vanilla
  std::vector<double> betas;

  int layers() const { return int(gammas.size()); }
  bool has_omegas() const { return !omegas.empty(); }

  void check(bool parity) const {
    require(!gammas.empty() && gammas.size() == betas.size(), ErrorCode::InvalidArgument,
            "parameter vector needs p >= 1 layers of (gamma, beta)");
    require(parity ? omegas.size() == gammas.size() : omegas.empty(), ErrorCode::InvalidArgument,
            parity ? "parity parameters need one omega per layer"
                   : "vanilla parameters carry no omegas");
    for (const auto* v : {&gammas, &omegas, &betas})
      for (double x : *v)
        require(std::isfinite(x), ErrorCode::InvalidArgument, "parameter is not finite");
  }

  // Number of leading layers up to the last one with any nonzero angle;
  // trailing all-zero layers act as the identity.
  int exact_depth() const {
    int d = 0;
    for (int l = 0; l < layers(); ++l) {
      bool nz = gammas[l] != 0.0 || betas[l] != 0.0;
      if (has_omegas() && omegas[l] != 0.0) nz = true;
      if (nz) d = l + 1;
    }
    return d;
  }

  ParamVector truncated(int depth) const {
    ParamVector t;
    t.gammas.assign(gammas.begin(), gammas.begin() + depth);
    if (has_omegas()) t.omegas.assign(omegas.begin(), omegas.begin() + depth);
    t.betas.assign(betas.begin(), betas.begin() + depth);
    return t;
  }

  // True when every angle lies in the Clifford set {-pi/4, 0, pi/4, pi/2}.
  bool clifford() const {
    auto in_set = [](double x) {
      const double pi4 = M_PI / 4;
      for (double a : {-pi4, 0.0, pi4, 2 * pi4})
        if (std::abs(x - a) < 1e-12) return true;
      return false;
    };
    for (const auto* v : {&gammas, &omegas, &betas})
      for (double x : *v)
        if (!in_set(x)) return false;
    return true;
  }
};

}  // namespace pq
