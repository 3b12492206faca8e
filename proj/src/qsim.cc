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

#include "sacq/qsim.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sacq/errors.h"
#include "sacq/rng.h"

namespace sacq {

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

QState::QState(int q) : q_(q) {
    if (q < 1 || q > kMaxQubits) {
        throw SizeLimitError(
            "qubit count " + std::to_string(q) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << q, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

QState QState::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0) {
        throw std::invalid_argument("amplitude vector length must be a power of two");
    }
    int q = 0;
    while ((std::size_t{1} << q) < amps.size()) {
        ++q;
    }
    if (q < 1 || q > kMaxQubits) {
        throw SizeLimitError("qubit count " + std::to_string(q) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    QState s;
    s.q_ = q;
    s.amps_ = std::move(amps);
    if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
}

double QState::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void QState::check_qubit(int qubit) const {
    if (qubit < 1 || qubit > q_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside [1, " + std::to_string(q_) + "]");
    }
}

void QState::check_register(std::span<const int> qubits) const {
    std::size_t seen = 0;
    for (int qubit : qubits) {
        check_qubit(qubit);
        if (seen & mask(qubit)) {
            throw std::invalid_argument("qubit " + std::to_string(qubit) + " listed twice");
        }
        seen |= mask(qubit);
    }
}

std::size_t QState::gather(std::size_t k, std::span<const int> qubits) const {
    std::size_t out = 0;
    for (int qubit : qubits) {
        out = (out << 1) | ((k & mask(qubit)) ? 1 : 0);
    }
    return out;
}

void QState::apply(const GateOp &gate) {
    check_qubit(gate.a);
    if (gate.two_qubit()) {
        check_qubit(gate.b);
        if (gate.a == gate.b) {
            throw std::invalid_argument("control and target must differ");
        }
    }
    const std::size_t ma = mask(gate.a);
    const std::size_t len = amps_.size();
    switch (gate.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (std::size_t k = 0; k < len; ++k) {
                if (k & ma) {
                    continue;
                }
                Amplitude lo = amps_[k];
                Amplitude hi = amps_[k | ma];
                amps_[k] = (lo + hi) * r;
                amps_[k | ma] = (lo - hi) * r;
            }
            break;
        }
        case GateKind::X:
            for (std::size_t k = 0; k < len; ++k) {
                if (!(k & ma)) {
                    std::swap(amps_[k], amps_[k | ma]);
                }
            }
            break;
        case GateKind::Z:
            for (std::size_t k = 0; k < len; ++k) {
                if (k & ma) {
                    amps_[k] = -amps_[k];
                }
            }
            break;
        case GateKind::CZ: {
            const std::size_t both = ma | mask(gate.b);
            for (std::size_t k = 0; k < len; ++k) {
                if ((k & both) == both) {
                    amps_[k] = -amps_[k];
                }
            }
            break;
        }
        case GateKind::CNOT: {
            const std::size_t mb = mask(gate.b);
            for (std::size_t k = 0; k < len; ++k) {
                if ((k & ma) && !(k & mb)) {
                    std::swap(amps_[k], amps_[k | mb]);
                }
            }
            break;
        }
    }
}

void QState::apply_bit_oracle(const BooleanFunction &f, std::span<const int> inputs, int target) {
    if (static_cast<int>(inputs.size()) != f.num_vars()) {
        throw std::invalid_argument(
            "oracle arity " + std::to_string(f.num_vars()) + " but " + std::to_string(inputs.size()) + " inputs given");
    }
    check_register(inputs);
    check_qubit(target);
    const std::size_t mt = mask(target);
    for (int qubit : inputs) {
        if (qubit == target) {
            throw std::invalid_argument("oracle target collides with an input qubit");
        }
    }
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (!(k & mt) && f.value(static_cast<Vec>(gather(k, inputs)))) {
            std::swap(amps_[k], amps_[k | mt]);
        }
    }
}

void QState::apply_phase_oracle(const BooleanFunction &f, std::span<const int> inputs) {
    if (static_cast<int>(inputs.size()) != f.num_vars()) {
        throw std::invalid_argument(
            "oracle arity " + std::to_string(f.num_vars()) + " but " + std::to_string(inputs.size()) + " inputs given");
    }
    check_register(inputs);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (f.value(static_cast<Vec>(gather(k, inputs)))) {
            amps_[k] = -amps_[k];
        }
    }
}

QState zero_state(int q) {
    return QState(q);
}

QState apply_gate(QState state, const GateOp &gate) {
    state.apply(gate);
    return state;
}

QState apply_bit_oracle(QState state, const BooleanFunction &f, std::span<const int> inputs, int target) {
    state.apply_bit_oracle(f, inputs, target);
    return state;
}

std::vector<double> probabilities(const QState &state, std::span<const int> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("probabilities need at least one qubit");
    }
    std::size_t seen = 0;
    for (int qubit : qubits) {
        if (qubit < 1 || qubit > state.num_qubits()) {
            throw std::out_of_range("qubit " + std::to_string(qubit) + " outside the register");
        }
        if (seen & state.mask(qubit)) {
            throw std::invalid_argument("qubit " + std::to_string(qubit) + " listed twice");
        }
        seen |= state.mask(qubit);
    }
    std::vector<double> out(std::size_t{1} << qubits.size(), 0.0);
    auto amps = state.amps();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        std::size_t outcome = 0;
        for (int qubit : qubits) {
            outcome = (outcome << 1) | ((k & state.mask(qubit)) ? 1 : 0);
        }
        out[outcome] += std::norm(amps[k]);
    }
    return out;
}

std::vector<std::uint64_t> sample(std::span<const double> distribution, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (distribution.empty()) {
        throw std::invalid_argument("empty distribution");
    }
    std::vector<double> cdf(distribution.size());
    double acc = 0.0;
    std::size_t last_support = 0;
    for (std::size_t k = 0; k < distribution.size(); ++k) {
        if (distribution[k] < 0.0) {
            throw std::invalid_argument("negative probability");
        }
        acc += distribution[k];
        cdf[k] = acc;
        if (distribution[k] > 0.0) {
            last_support = k;
        }
    }
    if (acc <= 0.0) {
        throw std::invalid_argument("distribution has no mass");
    }

    Prng rng(seed);
    std::vector<std::uint64_t> counts(distribution.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = uniform01(rng) * acc;
        auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (k >= cdf.size()) {
            k = last_support;
        }
        ++counts[k];
    }
    return counts;
}

std::vector<std::uint64_t> sample(
    const QState &state, std::span<const int> qubits, std::uint64_t shots, std::uint64_t seed) {
    auto dist = probabilities(state, qubits);
    return sample(dist, shots, seed);
}

}  // namespace sacq
