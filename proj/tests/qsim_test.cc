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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "sacq/errors.h"
#include "sacq/rng.h"

using namespace sacq;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

std::vector<int> range_qubits(int first, int last) {
    std::vector<int> out;
    for (int q = first; q <= last; ++q) {
        out.push_back(q);
    }
    return out;
}

void expect_amps(const QState &s, const std::vector<Amplitude> &expected, double tol = 1e-12) {
    ASSERT_EQ(s.amps().size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_NEAR(s[k].real(), expected[k].real(), tol) << "index " << k;
        EXPECT_NEAR(s[k].imag(), expected[k].imag(), tol) << "index " << k;
    }
}

/// Dense 2^q x 2^q matrix of a single-qubit gate, qubit 1 leftmost in the Kronecker product.
std::vector<std::vector<double>> single_qubit_matrix(int q, int target, const double g[2][2]) {
    std::vector<std::vector<double>> m{{1.0}};
    for (int k = 1; k <= q; ++k) {
        double id[2][2] = {{1, 0}, {0, 1}};
        const double(*factor)[2] = k == target ? g : id;
        std::vector<std::vector<double>> next(m.size() * 2, std::vector<double>(m.size() * 2));
        for (std::size_t r = 0; r < m.size(); ++r) {
            for (std::size_t c = 0; c < m.size(); ++c) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        next[2 * r + a][2 * c + b] = m[r][c] * factor[a][b];
                    }
                }
            }
        }
        m = std::move(next);
    }
    return m;
}

QState random_state(int q, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << q);
    double norm = 0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return QState::from_amplitudes(amps);
}

GateOp random_gate(int q, std::mt19937_64 &rng) {
    int kind = static_cast<int>(rng() % 5);
    int a = 1 + static_cast<int>(rng() % q);
    if (kind < 3 || q == 1) {
        return GateOp{static_cast<GateKind>(kind % 3), a};
    }
    int b = a;
    while (b == a) {
        b = 1 + static_cast<int>(rng() % q);
    }
    return GateOp{static_cast<GateKind>(kind), a, b};
}

}  // namespace

TEST(QState, zero_state) {
    expect_amps(zero_state(1), {1, 0});
    auto s = zero_state(3);
    ASSERT_EQ(s.amps().size(), 8u);
    ASSERT_EQ(s[0], Amplitude(1));
    ASSERT_DOUBLE_EQ(s.norm_squared(), 1.0);
    ASSERT_THROW(zero_state(0), SizeLimitError);
    ASSERT_THROW(zero_state(kMaxQubits + 1), SizeLimitError);
}

TEST(Gates, hadamard_and_minus) {
    expect_amps(apply_gate(zero_state(1), GateOp::h(1)), {kR, kR});
    auto minus = apply_gate(apply_gate(zero_state(1), GateOp::x(1)), GateOp::h(1));
    expect_amps(minus, {kR, -kR});
}

TEST(Gates, cz_turns_minus_into_plus_when_control_set) {
    QState s(2);
    s.apply(GateOp::x(1));
    s.apply(GateOp::x(2));
    s.apply(GateOp::h(2));
    expect_amps(s, {0, 0, kR, -kR});
    s.apply(GateOp::cz(1, 2));
    expect_amps(s, {0, 0, kR, kR});

    QState off(2);
    off.apply(GateOp::x(2));
    off.apply(GateOp::h(2));
    off.apply(GateOp::cz(1, 2));
    expect_amps(off, {kR, -kR, 0, 0});
}

TEST(Gates, cnot_flips_target_on_control) {
    QState s(3);
    s.apply(GateOp::x(2));
    s.apply(GateOp::cnot(2, 3));
    // |010> -> |011>
    ASSERT_EQ(s[3], Amplitude(1));
    s.apply(GateOp::cnot(1, 3));
    ASSERT_EQ(s[3], Amplitude(1));
}

TEST(Gates, single_qubit_gates_match_kronecker_products) {
    const double h[2][2] = {{kR, kR}, {kR, -kR}};
    const double x[2][2] = {{0, 1}, {1, 0}};
    const double z[2][2] = {{1, 0}, {0, -1}};
    std::mt19937_64 rng(1);
    for (int q = 1; q <= 4; ++q) {
        for (int target = 1; target <= q; ++target) {
            for (auto [kind, mat] : {std::pair{GateKind::H, h}, std::pair{GateKind::X, x}, std::pair{GateKind::Z, z}}) {
                auto s = random_state(q, rng);
                auto m = single_qubit_matrix(q, target, mat);
                auto out = apply_gate(s, GateOp{kind, target});
                for (std::size_t r = 0; r < m.size(); ++r) {
                    Amplitude expected = 0;
                    for (std::size_t c = 0; c < m.size(); ++c) {
                        expected += m[r][c] * s[c];
                    }
                    ASSERT_NEAR(std::abs(out[r] - expected), 0.0, 1e-12);
                }
            }
        }
    }
}

TEST(Gates, invalid_operands) {
    QState s(2);
    ASSERT_THROW(s.apply(GateOp::h(0)), std::out_of_range);
    ASSERT_THROW(s.apply(GateOp::h(3)), std::out_of_range);
    ASSERT_THROW(s.apply(GateOp::cz(1, 1)), std::invalid_argument);
    ASSERT_THROW(s.apply(GateOp::cnot(1, 5)), std::out_of_range);
}

TEST(Gates, random_sequences_preserve_norm_and_invert) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        int q = 1 + static_cast<int>(rng() % 6);
        auto start = random_state(q, rng);
        auto s = start;
        std::vector<GateOp> seq;
        int len = 1 + static_cast<int>(rng() % 20);
        for (int k = 0; k < len; ++k) {
            seq.push_back(random_gate(q, rng));
            s.apply(seq.back());
            ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10);
        }
        // Every gate in the set is self-inverse.
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            s.apply(*it);
        }
        for (std::size_t k = 0; k < s.amps().size(); ++k) {
            ASSERT_NEAR(std::abs(s[k] - start[k]), 0.0, 1e-10);
        }
    }
}

TEST(BitOracle, examples) {
    auto and2 = parse_binary("0001");
    std::vector<int> inputs{1, 2};
    QState s(3);
    s.apply(GateOp::x(1));
    s.apply(GateOp::x(2));
    s.apply_bit_oracle(and2, inputs, 3);
    ASSERT_EQ(s[0b111], Amplitude(1));

    std::mt19937_64 rng(2);
    auto r = random_state(3, rng);
    auto same = apply_bit_oracle(r, BooleanFunction::constant(2, false), inputs, 3);
    for (std::size_t k = 0; k < 8; ++k) {
        ASSERT_EQ(same[k], r[k]);
    }
}

TEST(BitOracle, kickback_negates_x1_branches) {
    QState s(3);
    s.apply(GateOp::h(1));
    s.apply(GateOp::h(2));
    s.apply(GateOp::x(3));
    s.apply(GateOp::h(3));
    s.apply_bit_oracle(parse_anf("x1", 2), std::vector<int>{1, 2}, 3);
    const double a = 0.5 * kR;
    expect_amps(s, {a, -a, a, -a, -a, a, -a, a});
}

TEST(BitOracle, errors) {
    QState s(3);
    auto f = parse_binary("0001");
    ASSERT_THROW(s.apply_bit_oracle(f, std::vector<int>{1}, 3), std::invalid_argument);
    ASSERT_THROW(s.apply_bit_oracle(f, std::vector<int>{1, 3}, 3), std::invalid_argument);
    ASSERT_THROW(s.apply_bit_oracle(f, std::vector<int>{1, 1}, 3), std::invalid_argument);
    ASSERT_THROW(s.apply_bit_oracle(f, std::vector<int>{1, 2}, 4), std::out_of_range);
}

TEST(BitOracle, involution) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto f = sacq::testing::random_function(n, rng);
        auto start = random_state(n + 1, rng);
        auto inputs = range_qubits(1, n);
        auto s = apply_bit_oracle(apply_bit_oracle(start, f, inputs, n + 1), f, inputs, n + 1);
        for (std::size_t k = 0; k < s.amps().size(); ++k) {
            ASSERT_EQ(s[k], start[k]);
        }
    }
}

TEST(BitOracle, phase_kickback_exhaustive) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto &f : enumerate_functions(n)) {
            QState s(n + 1);
            for (int q = 1; q <= n; ++q) {
                s.apply(GateOp::h(q));
            }
            s.apply(GateOp::x(n + 1));
            s.apply(GateOp::h(n + 1));
            s.apply_bit_oracle(f, range_qubits(1, n), n + 1);
            const double scale = std::ldexp(1.0, -n);
            for (Vec x = 0; x < f.size(); ++x) {
                // Branch |x>|-> carries 2^-n/2 f(x); its |0> and |1> target parts are +-1/sqrt2 of that.
                Amplitude branch = (s[2 * x] - s[2 * x + 1]) * kR;
                ASSERT_NEAR(branch.real(), std::sqrt(scale) * f.character(x), 1e-12);
                ASSERT_NEAR(std::abs(s[2 * x] + s[2 * x + 1]), 0.0, 1e-12);
            }
        }
    }
}

TEST(BitOracle, hadamard_sandwich_yields_walsh_spectrum) {
    for (const auto &f : enumerate_functions(3)) {
        QState s(4);
        for (int q = 1; q <= 3; ++q) {
            s.apply(GateOp::h(q));
        }
        s.apply(GateOp::x(4));
        s.apply(GateOp::h(4));
        s.apply_bit_oracle(f, range_qubits(1, 3), 4);
        for (int q = 1; q <= 3; ++q) {
            s.apply(GateOp::h(q));
        }
        auto spectrum = sacq::testing::direct_walsh(f);
        for (Vec w = 0; w < 8; ++w) {
            Amplitude input_amp = (s[2 * w] - s[2 * w + 1]) * kR;
            ASSERT_NEAR(input_amp.real(), spectrum[w], 1e-12);
            ASSERT_NEAR(input_amp.imag(), 0.0, 1e-12);
        }
    }
}

TEST(PhaseOracle, matches_bit_oracle_with_minus_target) {
    std::mt19937_64 rng(21);
    auto f = sacq::testing::random_function(3, rng);
    QState a(4);
    for (int q = 1; q <= 3; ++q) {
        a.apply(GateOp::h(q));
    }
    a.apply(GateOp::x(4));
    a.apply(GateOp::h(4));
    QState b = a;
    a.apply_bit_oracle(f, range_qubits(1, 3), 4);
    b.apply_phase_oracle(f, range_qubits(1, 3));
    for (std::size_t k = 0; k < 16; ++k) {
        ASSERT_NEAR(std::abs(a[k] - b[k]), 0.0, 1e-15);
    }
}

TEST(Probabilities, examples) {
    std::vector<int> both{1, 2};
    auto p = probabilities(zero_state(2), both);
    ASSERT_EQ(p, (std::vector<double>{1, 0, 0, 0}));
    auto plus = apply_gate(zero_state(1), GateOp::h(1));
    auto q = probabilities(plus, std::vector<int>{1});
    ASSERT_NEAR(q[0], 0.5, 1e-15);
    ASSERT_NEAR(q[1], 0.5, 1e-15);
    ASSERT_THROW(probabilities(plus, std::vector<int>{}), std::invalid_argument);
    ASSERT_THROW(probabilities(plus, std::vector<int>{2}), std::out_of_range);
}

TEST(Probabilities, marginal_order_follows_listed_qubits) {
    QState s(3);
    s.apply(GateOp::x(3));
    ASSERT_EQ(probabilities(s, std::vector<int>{3, 1}), (std::vector<double>{0, 0, 1, 0}));
    ASSERT_EQ(probabilities(s, std::vector<int>{1, 3}), (std::vector<double>{0, 1, 0, 0}));
    std::mt19937_64 rng(4);
    auto r = random_state(5, rng);
    auto m = probabilities(r, std::vector<int>{2, 5, 4});
    double total = 0;
    for (double v : m) {
        total += v;
    }
    ASSERT_NEAR(total, 1.0, 1e-10);
}

TEST(Sample, deterministic_distribution) {
    std::vector<double> d{1.0, 0.0};
    ASSERT_EQ(sample(d, 100, 9), (std::vector<std::uint64_t>{100, 0}));
    std::vector<double> last{0.0, 0.0, 1.0, 0.0};
    ASSERT_EQ(sample(last, 50, 9), (std::vector<std::uint64_t>{0, 0, 50, 0}));
}

TEST(Sample, reproducible_and_within_five_sigma) {
    std::vector<double> d{0.5, 0.5};
    auto a = sample(d, 100000, 1234);
    auto b = sample(d, 100000, 1234);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a[0] + a[1], 100000u);
    // 5 sigma of Binomial(1e5, 1/2).
    const double tol = 5.0 * std::sqrt(0.25 * 1e5);
    ASSERT_LE(std::abs(static_cast<double>(a[0]) - 50000.0), tol);
    ASSERT_NE(sample(d, 100000, 1235), a);
}

TEST(Sample, frozen_stream) {
    // The standard pins the 10000th output of a default-constructed mt19937_64.
    Prng reference;
    reference.discard(9999);
    ASSERT_EQ(reference(), 9981545732273789042ULL);

    std::vector<double> d{0.25, 0.25, 0.25, 0.25};
    auto counts = sample(d, 16, 2026);
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    ASSERT_EQ(total, 16u);
    Prng rng(2026);
    std::vector<std::uint64_t> replay(4, 0);
    for (int k = 0; k < 16; ++k) {
        ++replay[static_cast<std::size_t>(static_cast<double>(rng() >> 11) * 0x1.0p-53 * 4.0)];
    }
    ASSERT_EQ(counts, replay);
}

TEST(Sample, errors) {
    std::vector<double> d{0.5, 0.5};
    ASSERT_THROW(sample(d, 0, 1), std::invalid_argument);
    ASSERT_THROW(sample(std::vector<double>{}, 1, 1), std::invalid_argument);
    ASSERT_THROW(sample(std::vector<double>{0.0, 0.0}, 1, 1), std::invalid_argument);
}
