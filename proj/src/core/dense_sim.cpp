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

#include "dense_sim.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace pq {

namespace {

using cd = std::complex<double>;

void apply_single(std::vector<cd>& a, int q, cd m00, cd m01, cd m10, cd m11) {
  const uint64_t bit = uint64_t{1} << q;
  for (uint64_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    const cd x = a[i], y = a[i | bit];
    a[i] = m00 * x + m01 * y;
    a[i | bit] = m10 * x + m11 * y;
  }
}

void apply_phase_on_bit(std::vector<cd>& a, int q, cd ph0, cd ph1) {
  const uint64_t bit = uint64_t{1} << q;
  for (uint64_t i = 0; i < a.size(); ++i) a[i] *= (i & bit) ? ph1 : ph0;
}

}  // namespace

double StateVector::norm_sq() const {
  double s = 0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

StateVector simulate(const Circuit& c) {
  require(c.width >= 1 && c.width <= kDenseWidthGuard, ErrorCode::Guard,
          "dense simulation guarded at width <= 26");
  StateVector s;
  s.width = c.width;
  s.amps.assign(uint64_t{1} << c.width, cd{0, 0});
  s.amps[0] = 1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        apply_single(s.amps, g.q0, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        break;
      case GateKind::RX: {
        const double h = g.angle / 2;
        const cd c0{std::cos(h), 0}, s0{0, -std::sin(h)};
        apply_single(s.amps, g.q0, c0, s0, s0, c0);
        break;
      }
      case GateKind::RZ:
      case GateKind::PlaquetteRZ: {
        const double h = g.angle / 2;
        apply_phase_on_bit(s.amps, g.q0, std::polar(1.0, -h), std::polar(1.0, h));
        break;
      }
      case GateKind::PauliX:
        apply_single(s.amps, g.q0, 0, 1, 1, 0);
        break;
      case GateKind::PauliY:
        apply_single(s.amps, g.q0, 0, cd{0, -1}, cd{0, 1}, 0);
        break;
      case GateKind::PauliZ:
        apply_phase_on_bit(s.amps, g.q0, 1, -1);
        break;
      case GateKind::CNOT: {
        const uint64_t cb = uint64_t{1} << g.q0, tb = uint64_t{1} << g.q1;
        for (uint64_t i = 0; i < s.amps.size(); ++i)
          if ((i & cb) && !(i & tb)) std::swap(s.amps[i], s.amps[i | tb]);
        break;
      }
      case GateKind::ZZ: {
        const double h = g.angle / 2;
        const cd even = std::polar(1.0, -h), odd = std::polar(1.0, h);
        const uint64_t mask = (uint64_t{1} << g.q0) | (uint64_t{1} << g.q1);
        for (uint64_t i = 0; i < s.amps.size(); ++i)
          s.amps[i] *= (std::popcount(i & mask) & 1) ? odd : even;
        break;
      }
    }
  }
  return s;
}

std::vector<BitString> sample(const StateVector& s, int shots, uint64_t seed) {
  require(shots >= 1, ErrorCode::InvalidArgument, "shots must be >= 1");
  std::vector<double> cdf(s.amps.size());
  double acc = 0;
  for (size_t i = 0; i < s.amps.size(); ++i) {
    acc += std::norm(s.amps[i]);
    cdf[i] = acc;
  }
  Rng rng(derive_seed(seed, stream::kSampling));
  std::vector<BitString> out;
  out.reserve(shots);
  for (int k = 0; k < shots; ++k) {
    const double u = rng.next_double() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    uint64_t idx = uint64_t(it - cdf.begin());
    if (idx >= s.amps.size()) idx = s.amps.size() - 1;
    out.push_back(BitString::from_index(s.width, idx));
  }
  return out;
}

double expectation_zstring(const StateVector& s, const std::vector<int>& support) {
  uint64_t mask = 0;
  for (int q : support) {
    require(q >= 0 && q < s.width, ErrorCode::InvalidArgument, "support qubit out of range");
    mask |= uint64_t{1} << q;
  }
  double acc = 0;
  for (uint64_t i = 0; i < s.amps.size(); ++i) {
    const double p = std::norm(s.amps[i]);
    acc += (std::popcount(i & mask) & 1) ? -p : p;
  }
  return acc;
}

// Constraints whose members intersect the support.
static std::vector<int> touching_constraints(const ParityMapping& m,
                                             const std::vector<int>& support) {
  std::vector<bool> in_support(m.num_qubits(), false);
  for (int q : support) in_support[q] = true;
  std::vector<int> touching;
  for (int l = 0; l < m.num_constraints(); ++l)
    for (int q : m.constraints[l].members)
      if (in_support[q]) {
        touching.push_back(l);
        break;
      }
  return touching;
}

double lightcone_zstring_expectation(const ParityMapping& m, const std::vector<int>& fields,
                                     double gamma, double omega, double beta,
                                     const std::vector<int>& support) {
  require(int(fields.size()) == m.num_qubits(), ErrorCode::InvalidArgument,
          "field vector length must equal qubit count");
  const auto touching = touching_constraints(m, support);

  std::vector<int> cone = support;
  for (int l : touching)
    for (int q : m.constraints[l].members) cone.push_back(q);
  std::sort(cone.begin(), cone.end());
  cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
  require(int(cone.size()) <= kDenseWidthGuard, ErrorCode::Guard,
          "causal cone exceeds the dense width guard");

  std::vector<int> local(m.num_qubits(), -1);
  for (size_t i = 0; i < cone.size(); ++i) local[cone[i]] = int(i);

  Circuit sub;
  sub.width = int(cone.size());
  for (int q = 0; q < sub.width; ++q) sub.gates.push_back(Gate::h(q));
  for (int q : cone) {
    const double angle = 2.0 * gamma * fields[q];
    if (angle != 0.0) sub.gates.push_back(Gate::rz(local[q], angle));
  }
  for (int l : touching) {
    const auto& ct = m.constraints[l];
    const int last = int(ct.members.size()) - 1;
    for (int i = 0; i < last; ++i)
      sub.gates.push_back(Gate::cnot(local[ct.members[i]], local[ct.members[i + 1]]));
    sub.gates.push_back(Gate::plaquette_rz(local[ct.members[last]], 2.0 * omega * ct.sign));
    for (int i = last - 1; i >= 0; --i)
      sub.gates.push_back(Gate::cnot(local[ct.members[i]], local[ct.members[i + 1]]));
  }
  for (int q = 0; q < sub.width; ++q) sub.gates.push_back(Gate::rx(q, 2.0 * beta));

  std::vector<int> local_support;
  for (int q : support) local_support.push_back(local[q]);
  return expectation_zstring(simulate(sub), local_support);
}

double p1_zstring_expectation(const ParityMapping& m, const std::vector<int>& fields,
                              double gamma, double omega, double beta,
                              const std::vector<int>& support) {
  require(int(fields.size()) == m.num_qubits(), ErrorCode::InvalidArgument,
          "field vector length must equal qubit count");
  require(support.size() <= 16, ErrorCode::Guard, "closed form guarded at |support| <= 16");
  const auto touching = touching_constraints(m, support);
  require(touching.size() <= 24, ErrorCode::Guard, "closed form guarded at 24 plaquettes");

  // Local universe: support plus the touching constraints' members, so all
  // surviving characters index into one small mask space.
  std::vector<int> universe = support;
  for (int l : touching)
    for (int q : m.constraints[l].members) universe.push_back(q);
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  require(universe.size() <= 64, ErrorCode::Guard, "cone too large for closed form");
  std::vector<int> local(m.num_qubits(), -1);
  for (size_t i = 0; i < universe.size(); ++i) local[universe[i]] = int(i);

  uint64_t support_mask = 0;
  for (int q : support) support_mask |= uint64_t{1} << local[q];
  std::vector<uint64_t> plaq_mask(touching.size(), 0);
  std::vector<int> plaq_sign(touching.size(), 1);
  for (size_t k = 0; k < touching.size(); ++k) {
    for (int q : m.constraints[touching[k]].members)
      plaq_mask[k] |= uint64_t{1} << local[q];
    plaq_sign[k] = m.constraints[touching[k]].sign;
  }

  const double cb = std::cos(2 * beta), sb = std::sin(2 * beta);
  const double co = std::cos(2 * omega), so = std::sin(2 * omega);
  const std::complex<double> mi{0, -1};

  std::complex<double> total{0, 0};
  const int ns = int(support.size());
  for (uint64_t bsel = 0; bsel < (uint64_t{1} << ns); ++bsel) {
    uint64_t b_mask = 0;
    int bsize = 0;
    std::complex<double> outer{1, 0};
    for (int i = 0; i < ns; ++i)
      if (bsel >> i & 1) {
        b_mask |= uint64_t{1} << local[support[size_t(i)]];
        ++bsize;
      }
    outer *= std::pow(cb, ns - bsize) * std::pow(sb, bsize);
    for (int i = 0; i < bsize; ++i) outer *= std::complex<double>{0, 1};
    if (outer == std::complex<double>{0, 0}) continue;

    // Plaquettes overlapping B on an odd number of qubits survive the
    // conjugate-product cancellation.
    std::vector<int> odd;
    for (size_t k = 0; k < touching.size(); ++k)
      if (std::popcount(plaq_mask[k] & b_mask) & 1) odd.push_back(int(k));
    require(odd.size() <= 24, ErrorCode::Guard, "closed form guarded at 24 odd plaquettes");

    std::complex<double> inner{0, 0};
    for (uint64_t lsel = 0; lsel < (uint64_t{1} << odd.size()); ++lsel) {
      uint64_t x = 0;
      std::complex<double> w{1, 0};
      int picked = 0;
      for (size_t k = 0; k < odd.size(); ++k)
        if (lsel >> k & 1) {
          x ^= plaq_mask[odd[k]];
          w *= mi * so * double(plaq_sign[odd[k]]);
          ++picked;
        }
      w *= std::pow(co, double(odd.size() - picked));
      // Character balance: qubits carrying a net (-1)^x factor must be
      // exactly matched by sin-terms available on B.
      const uint64_t b_req = support_mask ^ x;
      if (b_req & ~b_mask) continue;
      std::complex<double> qf{1, 0};
      for (int i = 0; i < ns; ++i) {
        const uint64_t bit = uint64_t{1} << local[support[size_t(i)]];
        if (!(b_mask & bit)) continue;
        const double a = 2.0 * gamma * fields[support[size_t(i)]];
        qf *= (b_req & bit) ? mi * std::sin(a) : std::complex<double>{std::cos(a), 0};
      }
      inner += w * qf;
    }
    total += outer * inner;
  }
  require(std::abs(total.imag()) < 1e-9, ErrorCode::Runtime,
          "closed-form expectation has a nonzero imaginary part");
  return total.real();
}

}  // namespace pq
