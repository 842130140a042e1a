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
#ifndef VQSVD_CIRCUIT_HPP_
#define VQSVD_CIRCUIT_HPP_

#include <iosfwd>
#include <span>
#include <vector>

#include "vqsvd/linalg.hpp"

namespace vqsvd {

/// Dense statevector over n qubits. Qubit 0 is the most significant bit of
/// the basis index, repo-wide.
struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amplitudes;

  static StateVector basis(int n_qubits, std::size_t index);
  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

/// Rotation gates realize exp(-i theta P / 2) for P in {Y, Z}; each rotation
/// owns one parameter slot. FixedUnitary applies an explicit matrix on an
/// ordered qubit subset (qubits[0] = most significant index bit of the block).
struct Gate {
  enum class Kind { Ry, Rz, Cnot, FixedUnitary };

  Kind kind = Kind::Ry;
  int qubit = -1;    // Ry/Rz
  int slot = -1;     // Ry/Rz parameter index
  int control = -1;  // Cnot
  int target = -1;   // Cnot
  DenseMatrix fixed;          // FixedUnitary
  std::vector<int> qubits;    // FixedUnitary

  static Gate ry(int qubit, int slot);
  static Gate rz(int qubit, int slot);
  static Gate cnot(int control, int target);
  static Gate fixed_unitary(DenseMatrix u, std::vector<int> qubits);
};

struct ParamCircuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::size_t param_count = 0;

  /// Checks slot/qubit ranges and that every slot is used exactly once.
  void validate() const;
};

/// Applies the circuit to `amps` (length 2^n) in place.
void apply_circuit_inplace(const ParamCircuit& circuit,
                           std::span<const double> params,
                           std::span<cplx> amps);

StateVector apply_circuit(const ParamCircuit& circuit,
                          std::span<const double> params,
                          const StateVector& input);

/// Column j is the circuit applied to basis state j.
DenseMatrix realize_unitary(const ParamCircuit& circuit,
                            std::span<const double> params);

enum class RotationMode { kReal, kComplex };  // Ry vs Rz.Ry.Rz per qubit

/// Fig-3 style layered ansatz: depth repetitions of one rotation column plus
/// a CNOT chain over adjacent qubits. param_count = n*depth (real mode) or
/// 3*n*depth (complex mode).
ParamCircuit ansatz_hardware_efficient(int n_qubits, int depth,
                                       RotationMode mode);

enum class AnsatzCandidate { kA, kB, kC, kD };

/// Benchmark family: (a) hardware-efficient block, (b) dressed-CNOT block,
/// (c) = (a) plus a wrap-around CNOT, (d) two rotation columns with chain +
/// wrap CNOTs. For 3 qubits in real mode the per-block parameter counts are
/// a:3, b:8, c:3, d:6.
ParamCircuit ansatz_candidate(AnsatzCandidate which, int n_qubits, int blocks,
                              RotationMode mode);

/// Debug listing, one gate per line: "RY q slot", "RZ q slot", "CNOT c t".
void write_circuit(std::ostream& out, const ParamCircuit& circuit);

}  // namespace vqsvd

#endif  // VQSVD_CIRCUIT_HPP_
