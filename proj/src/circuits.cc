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

#include "sacq/circuits.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sacq/errors.h"

namespace sacq {

const char *algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Classical:
            return "classical";
        case Algorithm::Qsac:
            return "qsac";
        case Algorithm::Direct:
            return "direct";
        case Algorithm::Forrelation:
            return "forrelation";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string &name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto a : {Algorithm::Classical, Algorithm::Qsac, Algorithm::Direct, Algorithm::Forrelation}) {
        if (lower == algorithm_name(a)) {
            return a;
        }
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeLimitError("circuit needs " + std::to_string(num_qubits) + " qubits; limit is " +
                             std::to_string(kMaxQubits));
    }
}

void Circuit::gate(const GateOp &g) {
    steps_.emplace_back(g);
}

void Circuit::bit_oracle(
    std::shared_ptr<const BooleanFunction> fn, std::vector<int> inputs, int target, std::string label) {
    steps_.emplace_back(OracleCall{OracleCall::Kind::Bit, std::move(fn), std::move(inputs), target, std::move(label)});
}

void Circuit::phase_oracle(std::shared_ptr<const BooleanFunction> fn, std::vector<int> inputs, std::string label) {
    steps_.emplace_back(OracleCall{OracleCall::Kind::Phase, std::move(fn), std::move(inputs), 0, std::move(label)});
}

void Circuit::measure(std::vector<int> qubits) {
    measured_ = std::move(qubits);
}

CircuitCost Circuit::cost() const {
    CircuitCost c{0, 0, num_qubits_, static_cast<int>(measured_.size())};
    for (const auto &step : steps_) {
        if (std::holds_alternative<OracleCall>(step)) {
            ++c.oracle_calls;
        } else {
            ++c.gates;
        }
    }
    return c;
}

QState Circuit::run() const {
    QState state(num_qubits_);
    for (const auto &step : steps_) {
        if (const auto *g = std::get_if<GateOp>(&step)) {
            state.apply(*g);
        } else {
            const auto &call = std::get<OracleCall>(step);
            if (call.kind == OracleCall::Kind::Bit) {
                state.apply_bit_oracle(*call.fn, call.inputs, call.target);
            } else {
                state.apply_phase_oracle(*call.fn, call.inputs);
            }
        }
    }
    double drift = std::abs(state.norm_squared() - 1.0);
    if (drift > 1e-10) {
        std::ostringstream ss;
        ss << "state norm drifted by " << drift;
        throw InvariantError(ss.str());
    }
    return state;
}

std::string Circuit::to_text() const {
    std::ostringstream ss;
    auto span_text = [](const std::vector<int> &qs) {
        std::ostringstream r;
        bool contiguous = qs.size() > 2;
        for (std::size_t k = 1; k < qs.size(); ++k) {
            contiguous = contiguous && qs[k] == qs[k - 1] + 1;
        }
        if (contiguous) {
            r << qs.front() << ".." << qs.back();
        } else {
            for (std::size_t k = 0; k < qs.size(); ++k) {
                r << (k ? "," : "") << qs[k];
            }
        }
        return r.str();
    };
    for (const auto &step : steps_) {
        if (const auto *g = std::get_if<GateOp>(&step)) {
            ss << gate_name(g->kind) << " " << g->a;
            if (g->two_qubit()) {
                ss << " " << g->b;
            }
        } else {
            const auto &call = std::get<OracleCall>(step);
            ss << call.label << (call.kind == OracleCall::Kind::Bit ? "[bit] " : "[phase] ") << span_text(call.inputs);
            if (call.kind == OracleCall::Kind::Bit) {
                ss << " -> " << call.target;
            }
        }
        ss << "\n";
    }
    ss << "M " << span_text(measured_) << "\n";
    return ss.str();
}

namespace {

void check_coordinate(const BooleanFunction &f, int i) {
    if (i < 1 || i > f.num_vars()) {
        throw std::out_of_range(
            "coordinate " + std::to_string(i) + " outside [1, " + std::to_string(f.num_vars()) + "]");
    }
    if (f.num_vars() + 1 > kMaxQubits) {
        throw SizeLimitError("function too large to simulate");
    }
}

std::vector<int> input_register(int n) {
    std::vector<int> qs(n);
    for (int k = 0; k < n; ++k) {
        qs[k] = k + 1;
    }
    return qs;
}

void hadamard_layer(Circuit &c, int n) {
    for (int q = 1; q <= n; ++q) {
        c.gate(GateOp::h(q));
    }
}

/// Target qubit n+1 from |0> to |->.
void prepare_minus(Circuit &c, int target) {
    c.gate(GateOp::x(target));
    c.gate(GateOp::h(target));
}

/// U_g for g = D_{e_i} F, built from two U_F calls.
void derivative_oracle(Circuit &c, const std::shared_ptr<const BooleanFunction> &fn, int i) {
    const int n = fn->num_vars();
    c.bit_oracle(fn, input_register(n), n + 1, "U_F");
    c.gate(GateOp::x(i));
    c.bit_oracle(fn, input_register(n), n + 1, "U_F");
    c.gate(GateOp::x(i));
}

}  // namespace

Circuit qsac_circuit(const BooleanFunction &f, int i) {
    check_coordinate(f, i);
    const int n = f.num_vars();
    const int target = n + 1;
    auto fn = std::make_shared<const BooleanFunction>(f);
    Circuit c(n + 1);
    hadamard_layer(c, n);
    prepare_minus(c, target);
    c.bit_oracle(fn, input_register(n), target, "U_F");
    hadamard_layer(c, n);
    c.gate(GateOp::cz(i, target));
    c.gate(GateOp::h(target));
    c.measure({target});
    return c;
}

Circuit direct_circuit(const BooleanFunction &f, int i) {
    check_coordinate(f, i);
    const int n = f.num_vars();
    auto fn = std::make_shared<const BooleanFunction>(f);
    Circuit c(n + 1);
    hadamard_layer(c, n);
    prepare_minus(c, n + 1);
    derivative_oracle(c, fn, i);
    hadamard_layer(c, n);
    c.measure(input_register(n));
    return c;
}

Circuit forrelation_circuit(const BooleanFunction &f, int i) {
    check_coordinate(f, i);
    const int n = f.num_vars();
    auto fn = std::make_shared<const BooleanFunction>(f);
    auto nor = std::make_shared<const BooleanFunction>(nor_function(n));
    Circuit c(n + 1);
    hadamard_layer(c, n);
    prepare_minus(c, n + 1);
    derivative_oracle(c, fn, i);
    hadamard_layer(c, n);
    c.phase_oracle(nor, input_register(n), "U_h");
    hadamard_layer(c, n);
    derivative_oracle(c, fn, i);
    hadamard_layer(c, n);
    c.measure(input_register(n));
    return c;
}

namespace {

CircuitResult evaluate(Algorithm algorithm, int i, const Circuit &c) {
    QState state = c.run();
    CircuitResult r{algorithm, i, probabilities(state, c.measured()), std::nullopt, std::nullopt};
    if (algorithm != Algorithm::Qsac) {
        // Target is the last qubit and the least significant index bit.
        r.zero_amplitude = (state[0] - state[1]) / std::sqrt(2.0);
    }
    return r;
}

}  // namespace

CircuitResult qsac_iteration(const BooleanFunction &f, int i) {
    return evaluate(Algorithm::Qsac, i, qsac_circuit(f, i));
}

CircuitResult direct_iteration(const BooleanFunction &f, int i) {
    return evaluate(Algorithm::Direct, i, direct_circuit(f, i));
}

CircuitResult forrelation_iteration(const BooleanFunction &f, int i) {
    return evaluate(Algorithm::Forrelation, i, forrelation_circuit(f, i));
}

CircuitResult run_iteration(Algorithm algorithm, const BooleanFunction &f, int i) {
    switch (algorithm) {
        case Algorithm::Qsac:
            return qsac_iteration(f, i);
        case Algorithm::Direct:
            return direct_iteration(f, i);
        case Algorithm::Forrelation:
            return forrelation_iteration(f, i);
        case Algorithm::Classical:
            break;
    }
    throw std::invalid_argument("classical estimation has no circuit");
}

void attach_samples(CircuitResult &result, std::uint64_t shots, std::uint64_t seed) {
    result.counts = SampledCounts{sample(result.exact, shots, seed), shots, seed};
}

BooleanFunction nor_function(int n) {
    return BooleanFunction::from_predicate(n, [](Vec x) { return x == 0; });
}

double forrelation_bruteforce(const BooleanFunction &f1, const BooleanFunction &f2, const BooleanFunction &f3) {
    const int n = f1.num_vars();
    if (f2.num_vars() != n || f3.num_vars() != n) {
        throw std::invalid_argument("forrelation needs functions of equal arity");
    }
    if (n > kMaxForrelationBruteForceVars) {
        throw SizeLimitError("brute-force forrelation refuses n > " + std::to_string(kMaxForrelationBruteForceVars));
    }
    const Vec len = Vec{1} << n;
    std::int64_t total = 0;
    for (Vec x1 = 0; x1 < len; ++x1) {
        for (Vec x2 = 0; x2 < len; ++x2) {
            int left = f1.character(x1) * f2.character(x2) * (dot_parity(x1, x2) ? -1 : 1);
            for (Vec x3 = 0; x3 < len; ++x3) {
                total += left * f3.character(x3) * (dot_parity(x2, x3) ? -1 : 1);
            }
        }
    }
    return std::ldexp(static_cast<double>(total), -2 * n);
}

}  // namespace sacq
