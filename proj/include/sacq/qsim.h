// Copyright 2026 The sacq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SACQ_QSIM_H
#define SACQ_QSIM_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sacq/boolfn.h"

namespace sacq {

inline constexpr int kMaxQubits = 26;

using Amplitude = std::complex<double>;

enum class GateKind { H, X, Z, CZ, CNOT };

const char *gate_name(GateKind kind);

/// A single elementary gate. Qubits are 1-based; for CZ and CNOT `a` is the
/// control and `b` the target.
struct GateOp {
    GateKind kind;
    int a;
    int b = 0;

    static GateOp h(int q) {
        return {GateKind::H, q};
    }
    static GateOp x(int q) {
        return {GateKind::X, q};
    }
    static GateOp z(int q) {
        return {GateKind::Z, q};
    }
    static GateOp cz(int control, int target) {
        return {GateKind::CZ, control, target};
    }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, control, target};
    }

    bool two_qubit() const {
        return kind == GateKind::CZ || kind == GateKind::CNOT;
    }
    bool operator==(const GateOp &) const = default;
};

/// Dense state vector over q qubits. Qubit 1 is the most significant bit of
/// the basis index, matching the truth-table index convention, so with inputs
/// on qubits 1..n and the target on qubit n+1 an input x sits at index 2x + t.
///
/// Mutated in place; one writer at a time.
class QState {
   public:
    /// |0...0> on q qubits, 1 <= q <= kMaxQubits.
    explicit QState(int q);

    /// Takes an arbitrary amplitude vector of power-of-two length. Must be
    /// normalized within 1e-10.
    static QState from_amplitudes(std::vector<Amplitude> amps);

    int num_qubits() const noexcept {
        return q_;
    }
    std::span<const Amplitude> amps() const noexcept {
        return amps_;
    }
    Amplitude operator[](std::size_t k) const {
        return amps_[k];
    }
    /// Basis-index bit of a 1-based qubit.
    std::size_t mask(int qubit) const {
        return std::size_t{1} << (q_ - qubit);
    }
    double norm_squared() const;

    void apply(const GateOp &gate);

    /// |x>|e> -> |x>|e ^ F(x)>, with inputs[0] holding x1. A pure permutation
    /// of amplitudes.
    void apply_bit_oracle(const BooleanFunction &f, std::span<const int> inputs, int target);

    /// |x> -> (-1)^F(x) |x> on the listed inputs, no ancilla.
    void apply_phase_oracle(const BooleanFunction &f, std::span<const int> inputs);

   private:
    QState() = default;
    void check_qubit(int qubit) const;
    void check_register(std::span<const int> qubits) const;
    /// Maps each basis index to the value of the listed register, first qubit most significant.
    std::size_t gather(std::size_t k, std::span<const int> qubits) const;

    int q_ = 0;
    std::vector<Amplitude> amps_;
};

QState zero_state(int q);
QState apply_gate(QState state, const GateOp &gate);
QState apply_bit_oracle(QState state, const BooleanFunction &f, std::span<const int> inputs, int target);

/// Marginal distribution of the listed qubits, indexed with the first listed
/// qubit as most significant bit. The state is not collapsed.
std::vector<double> probabilities(const QState &state, std::span<const int> qubits);

/// Draws `shots` i.i.d. outcomes from a distribution by inverse-CDF lookup on
/// `uniform01` draws of a `Prng` seeded with `seed`. Returns a count per outcome.
std::vector<std::uint64_t> sample(std::span<const double> distribution, std::uint64_t shots, std::uint64_t seed);
std::vector<std::uint64_t> sample(
    const QState &state, std::span<const int> qubits, std::uint64_t shots, std::uint64_t seed);

}  // namespace sacq

#endif
