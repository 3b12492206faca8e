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

#ifndef SACQ_CIRCUITS_H
#define SACQ_CIRCUITS_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sacq/boolfn.h"
#include "sacq/qsim.h"

namespace sacq {

enum class Algorithm { Classical, Qsac, Direct, Forrelation };

const char *algorithm_name(Algorithm a);
/// Accepts "classical", "qsac", "direct", "forrelation" (case-insensitive).
Algorithm parse_algorithm(const std::string &name);

/// A black-box oracle invocation. Bit oracles act on inputs plus a target;
/// phase oracles act on the inputs alone.
struct OracleCall {
    enum class Kind { Bit, Phase };
    Kind kind;
    std::shared_ptr<const BooleanFunction> fn;
    std::vector<int> inputs;
    int target = 0;
    std::string label;
};

using CircuitStep = std::variant<GateOp, OracleCall>;

/// Oracle calls, non-oracle gates, qubits, and measured qubits of one circuit.
struct CircuitCost {
    int oracle_calls;
    int gates;
    int qubits;
    int measured_qubits;

    bool operator==(const CircuitCost &) const = default;
};

/// An ordered gate list over a fixed register, ending in a measurement of
/// `measured()`.
class Circuit {
   public:
    explicit Circuit(int num_qubits);

    void gate(const GateOp &g);
    void bit_oracle(std::shared_ptr<const BooleanFunction> fn, std::vector<int> inputs, int target, std::string label);
    void phase_oracle(std::shared_ptr<const BooleanFunction> fn, std::vector<int> inputs, std::string label);
    void measure(std::vector<int> qubits);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<CircuitStep> &steps() const {
        return steps_;
    }
    const std::vector<int> &measured() const {
        return measured_;
    }

    CircuitCost cost() const;

    /// Runs from |0...0>. Throws InvariantError if the norm drifts past 1e-10.
    QState run() const;

    /// One step per line, e.g. "H 1", "CZ 2 5", "U_F[bit] 1..4 -> 5".
    std::string to_text() const;

   private:
    int num_qubits_;
    std::vector<CircuitStep> steps_;
    std::vector<int> measured_;
};

/// QSAC iteration i: H on inputs, X then H on the target, U_F, H on inputs,
/// CZ(i -> target), H on the target, measure the target.
Circuit qsac_circuit(const BooleanFunction &f, int i);

/// Deutsch-Jozsa on the derivative at e_i: H on inputs, X then H on the
/// target, U_F, X_i, U_F, X_i, H on inputs, measure the inputs.
Circuit direct_circuit(const BooleanFunction &f, int i);

/// 3-fold Forrelation Phi(g, h, g) with g the derivative at e_i (two U_F
/// sandwiching X_i, then X_i again) and h the n-input NOR as a phase oracle.
Circuit forrelation_circuit(const BooleanFunction &f, int i);

struct SampledCounts {
    std::vector<std::uint64_t> counts;
    std::uint64_t shots;
    std::uint64_t seed;
};

struct CircuitResult {
    Algorithm algorithm;
    int iteration;
    /// Distribution over the measured register (1 qubit for QSAC, n otherwise).
    std::vector<double> exact;
    /// <0_n, -| psi> for DIRECT and FORRELATION, whose target ends in |->.
    std::optional<Amplitude> zero_amplitude;
    std::optional<SampledCounts> counts;
};

CircuitResult qsac_iteration(const BooleanFunction &f, int i);
CircuitResult direct_iteration(const BooleanFunction &f, int i);
CircuitResult forrelation_iteration(const BooleanFunction &f, int i);

/// Dispatches on a quantum algorithm tag.
CircuitResult run_iteration(Algorithm algorithm, const BooleanFunction &f, int i);

/// Fills `counts` by sampling the exact distribution.
void attach_samples(CircuitResult &result, std::uint64_t shots, std::uint64_t seed);

/// H(x) = 1 iff x = 0.
BooleanFunction nor_function(int n);

inline constexpr int kMaxForrelationBruteForceVars = 6;

/// 2^-2n sum over (x1, x2, x3) of f1(x1) (-1)^(x1.x2) f2(x2) (-1)^(x2.x3) f3(x3),
/// by direct summation over all 2^3n triples.
double forrelation_bruteforce(const BooleanFunction &f1, const BooleanFunction &f2, const BooleanFunction &f3);

}  // namespace sacq

#endif
