/* Copyright 2026 The VQSVD Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "vqsvd/circuit.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "vqsvd/kernels/kernels.hpp"

namespace vqsvd {

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw std::invalid_argument("StateVector::basis: index out of range");
  }
  StateVector s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(dim, cplx{});
  s.amplitudes[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amplitudes) {
    s += std::norm(a);
  }
  return std::sqrt(s);
}

Gate Gate::ry(int qubit, int slot) {
  Gate g;
  g.kind = Kind::Ry;
  g.qubit = qubit;
  g.slot = slot;
  return g;
}

Gate Gate::rz(int qubit, int slot) {
  Gate g;
  g.kind = Kind::Rz;
  g.qubit = qubit;
  g.slot = slot;
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = Kind::Cnot;
  g.control = control;
  g.target = target;
  return g;
}

Gate Gate::fixed_unitary(DenseMatrix u, std::vector<int> qubits) {
  Gate g;
  g.kind = Kind::FixedUnitary;
  g.fixed = std::move(u);
  g.qubits = std::move(qubits);
  return g;
}

void ParamCircuit::validate() const {
  std::vector<int> slot_uses(param_count, 0);
  auto check_qubit = [&](int q, const char* what) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument(std::string("ParamCircuit: ") + what +
                                  " qubit out of range");
    }
  };
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::Ry:
      case Gate::Kind::Rz:
        check_qubit(g.qubit, "rotation");
        if (g.slot < 0 || static_cast<std::size_t>(g.slot) >= param_count) {
          throw std::invalid_argument("ParamCircuit: slot out of range");
        }
        ++slot_uses[static_cast<std::size_t>(g.slot)];
        break;
      case Gate::Kind::Cnot:
        check_qubit(g.control, "control");
        check_qubit(g.target, "target");
        if (g.control == g.target) {
          throw std::invalid_argument("ParamCircuit: CNOT control == target");
        }
        break;
      case Gate::Kind::FixedUnitary: {
        if (g.qubits.empty()) {
          throw std::invalid_argument("ParamCircuit: fixed unitary without qubits");
        }
        const std::size_t k = g.qubits.size();
        const std::size_t want = std::size_t{1} << k;
        if (g.fixed.rows() != want || g.fixed.cols() != want) {
          throw std::invalid_argument(
              "ParamCircuit: fixed unitary dimension does not match qubit count");
        }
        for (std::size_t a = 0; a < k; ++a) {
          check_qubit(g.qubits[a], "fixed-unitary");
          for (std::size_t b = a + 1; b < k; ++b) {
            if (g.qubits[a] == g.qubits[b]) {
              throw std::invalid_argument(
                  "ParamCircuit: fixed unitary qubits must be distinct");
            }
          }
        }
        break;
      }
    }
  }
  for (int uses : slot_uses) {
    if (uses != 1) {
      throw std::invalid_argument(
          "ParamCircuit: every slot must be used exactly once");
    }
  }
}

namespace {

inline std::size_t qubit_stride(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

void apply_fixed(const Gate& g, int n_qubits, std::span<cplx> amps) {
  const std::size_t k = g.qubits.size();
  const std::size_t block = std::size_t{1} << k;
  std::vector<std::size_t> strides(k);
  std::size_t block_mask = 0;
  for (std::size_t a = 0; a < k; ++a) {
    strides[a] = qubit_stride(n_qubits, g.qubits[a]);
    block_mask |= strides[a];
  }
  std::vector<std::size_t> offsets(block);
  for (std::size_t gidx = 0; gidx < block; ++gidx) {
    std::size_t off = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if ((gidx >> (k - 1 - a)) & 1) off |= strides[a];
    }
    offsets[gidx] = off;
  }
  std::vector<cplx> scratch(block);
  const std::size_t n = amps.size();
  for (std::size_t base = 0; base < n; ++base) {
    if (base & block_mask) continue;
    for (std::size_t r = 0; r < block; ++r) {
      cplx acc{};
      for (std::size_t c = 0; c < block; ++c) {
        acc += g.fixed(r, c) * amps[base + offsets[c]];
      }
      scratch[r] = acc;
    }
    for (std::size_t r = 0; r < block; ++r) {
      amps[base + offsets[r]] = scratch[r];
    }
  }
}

}  // namespace

void apply_circuit_inplace(const ParamCircuit& circuit,
                           std::span<const double> params,
                           std::span<cplx> amps) {
  if (params.size() != circuit.param_count) {
    throw std::invalid_argument("apply_circuit: wrong parameter count");
  }
  if (amps.size() != (std::size_t{1} << circuit.n_qubits)) {
    throw std::invalid_argument("apply_circuit: state dimension mismatch");
  }
  const auto& k = kernels::active_kernels();
  const std::size_t n = amps.size();
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::Ry: {
        const double half = 0.5 * params[static_cast<std::size_t>(g.slot)];
        const double c = std::cos(half), s = std::sin(half);
        k.apply_2x2(amps.data(), n, qubit_stride(circuit.n_qubits, g.qubit),
                    cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0});
        break;
      }
      case Gate::Kind::Rz: {
        const double half = 0.5 * params[static_cast<std::size_t>(g.slot)];
        const cplx d0{std::cos(half), -std::sin(half)};
        k.apply_diag(amps.data(), n, qubit_stride(circuit.n_qubits, g.qubit),
                     d0, std::conj(d0));
        break;
      }
      case Gate::Kind::Cnot:
        k.apply_cnot(amps.data(), n,
                     qubit_stride(circuit.n_qubits, g.control),
                     qubit_stride(circuit.n_qubits, g.target));
        break;
      case Gate::Kind::FixedUnitary:
        apply_fixed(g, circuit.n_qubits, amps);
        break;
    }
  }
}

StateVector apply_circuit(const ParamCircuit& circuit,
                          std::span<const double> params,
                          const StateVector& input) {
  if (input.n_qubits != circuit.n_qubits) {
    throw std::invalid_argument("apply_circuit: qubit count mismatch");
  }
  StateVector out = input;
  apply_circuit_inplace(circuit, params, out.amplitudes);
  return out;
}

DenseMatrix realize_unitary(const ParamCircuit& circuit,
                            std::span<const double> params) {
  const std::size_t dim = std::size_t{1} << circuit.n_qubits;
  DenseMatrix u(dim, dim);
  std::vector<cplx> col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(col.begin(), col.end(), cplx{});
    col[j] = 1.0;
    apply_circuit_inplace(circuit, params, col);
    for (std::size_t i = 0; i < dim; ++i) {
      u(i, j) = col[i];
    }
  }
  return u;
}

namespace {

void add_rotation(ParamCircuit& c, int qubit, RotationMode mode,
                  std::size_t& slot) {
  if (mode == RotationMode::kReal) {
    c.gates.push_back(Gate::ry(qubit, static_cast<int>(slot++)));
  } else {
    c.gates.push_back(Gate::rz(qubit, static_cast<int>(slot++)));
    c.gates.push_back(Gate::ry(qubit, static_cast<int>(slot++)));
    c.gates.push_back(Gate::rz(qubit, static_cast<int>(slot++)));
  }
}

void add_rotation_column(ParamCircuit& c, RotationMode mode,
                         std::size_t& slot) {
  for (int q = 0; q < c.n_qubits; ++q) {
    add_rotation(c, q, mode, slot);
  }
}

void add_cnot_chain(ParamCircuit& c) {
  for (int q = 0; q + 1 < c.n_qubits; ++q) {
    c.gates.push_back(Gate::cnot(q, q + 1));
  }
}

}  // namespace

ParamCircuit ansatz_hardware_efficient(int n_qubits, int depth,
                                       RotationMode mode) {
  if (n_qubits < 2) {
    throw std::invalid_argument("ansatz_hardware_efficient: need >= 2 qubits");
  }
  if (depth < 1) {
    throw std::invalid_argument("ansatz_hardware_efficient: need depth >= 1");
  }
  ParamCircuit c;
  c.n_qubits = n_qubits;
  std::size_t slot = 0;
  for (int d = 0; d < depth; ++d) {
    add_rotation_column(c, mode, slot);
    add_cnot_chain(c);
  }
  c.param_count = slot;
  return c;
}

ParamCircuit ansatz_candidate(AnsatzCandidate which, int n_qubits, int blocks,
                              RotationMode mode) {
  if (n_qubits < 2) {
    throw std::invalid_argument("ansatz_candidate: need >= 2 qubits");
  }
  if (blocks < 1) {
    throw std::invalid_argument("ansatz_candidate: need blocks >= 1");
  }
  if (which == AnsatzCandidate::kD && n_qubits < 3) {
    throw std::invalid_argument("ansatz_candidate: candidate (d) needs >= 3 qubits");
  }
  ParamCircuit c;
  c.n_qubits = n_qubits;
  std::size_t slot = 0;
  for (int b = 0; b < blocks; ++b) {
    switch (which) {
      case AnsatzCandidate::kA:
        add_rotation_column(c, mode, slot);
        add_cnot_chain(c);
        break;
      case AnsatzCandidate::kB:
        // Dressed CNOTs: rotations on both sides of each chain CNOT.
        for (int q = 0; q + 1 < n_qubits; ++q) {
          add_rotation(c, q, mode, slot);
          add_rotation(c, q + 1, mode, slot);
          c.gates.push_back(Gate::cnot(q, q + 1));
          add_rotation(c, q, mode, slot);
          add_rotation(c, q + 1, mode, slot);
        }
        break;
      case AnsatzCandidate::kC:
        add_rotation_column(c, mode, slot);
        add_cnot_chain(c);
        c.gates.push_back(Gate::cnot(n_qubits - 1, 0));
        break;
      case AnsatzCandidate::kD:
        add_rotation_column(c, mode, slot);
        add_cnot_chain(c);
        add_rotation_column(c, mode, slot);
        c.gates.push_back(Gate::cnot(n_qubits - 1, 0));
        c.gates.push_back(Gate::cnot(n_qubits - 1, 1));
        break;
    }
  }
  c.param_count = slot;
  return c;
}

void write_circuit(std::ostream& out, const ParamCircuit& circuit) {
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::Ry:
        out << "RY " << g.qubit << ' ' << g.slot << '\n';
        break;
      case Gate::Kind::Rz:
        out << "RZ " << g.qubit << ' ' << g.slot << '\n';
        break;
      case Gate::Kind::Cnot:
        out << "CNOT " << g.control << ' ' << g.target << '\n';
        break;
      case Gate::Kind::FixedUnitary: {
        out << "FIXED";
        for (int q : g.qubits) out << ' ' << q;
        out << '\n';
        break;
      }
    }
  }
}

}  // namespace vqsvd
