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

#ifndef SACQ_COMPLEXITY_H
#define SACQ_COMPLEXITY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sacq/boolfn.h"
#include "sacq/circuits.h"

namespace sacq {

/// One row of the complexity comparison. Each quantity carries its symbolic
/// form and its value at the requested (n, t, delta).
struct ComplexityRow {
    std::string algorithm;

    std::string query_symbolic;
    std::uint64_t query;

    /// Per-iteration (oracle calls m, non-oracle gates k). Classical rows
    /// have no gates; their m is per sample.
    std::string cost_symbolic;
    int cost_oracles;
    std::optional<int> cost_gates;

    std::string sample_symbolic;
    double sample_value;
    std::uint64_t sample_ceil;

    std::string qubits_symbolic;
    std::optional<int> qubits;

    /// False for the autocorrelation estimator, which is analytic only.
    bool simulated;
};

/// Classical, QSAC, Direct, Forrelation, Autocorrelation, in that order. n >= 2.
std::vector<ComplexityRow> table1(int n, double t, double delta);

inline constexpr const char *kCountingConvention =
    "k counts every non-oracle gate in the circuit, including target preparation (X then H) and the "
    "final target H; measurements are excluded; m counts each U_F and U_h invocation";

struct AuditEntry {
    std::string algorithm;
    int coordinate;
    CircuitCost expected;
    CircuitCost observed;

    bool matches() const {
        return expected == observed;
    }
};

struct AuditRecord {
    int n;
    std::string convention;
    std::vector<AuditEntry> entries;

    bool all_match() const;
};

inline constexpr int kMaxAuditVars = 12;

/// Builds every QSAC, direct and Forrelation circuit for f (all coordinates)
/// and compares their gate and oracle counts with the table's per-iteration costs.
AuditRecord audit_against_simulation(const BooleanFunction &f);

}  // namespace sacq

#endif
