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

#include "sacq/complexity.h"

#include <stdexcept>

#include "sacq/errors.h"
#include "sacq/estimators.h"

namespace sacq {

std::vector<ComplexityRow> table1(int n, double t, double delta) {
    if (n < 2) {
        throw std::invalid_argument("complexity table needs n >= 2");
    }
    check_margin(t, delta);
    const auto un = static_cast<std::uint64_t>(n);
    auto sample = [&](SampleVariant v) { return sample_formula(t, delta, v, n); };
    auto ceil_of = [&](SampleVariant v) { return plan_samples(t, delta, v, n); };

    const char *one_qubit = "(1/2t^2) log(2/delta)";
    const char *n_qubit = "((2^n-1)/2t^2) log(2/delta)";
    std::vector<ComplexityRow> rows;
    rows.push_back({"Classical", "2n", 2 * un, "(2, -)", 2, std::nullopt, "(2^n/t^2) log(2/delta)",
                    sample(SampleVariant::Classical), ceil_of(SampleVariant::Classical), "-", std::nullopt, true});
    rows.push_back({"QSAC", "n", un, "(1, 2n+4)", 1, 2 * n + 4, one_qubit, sample(SampleVariant::Qsac),
                    ceil_of(SampleVariant::Qsac), "n+1", n + 1, true});
    rows.push_back({"Direct", "2n", 2 * un, "(2, 2n+4)", 2, 2 * n + 4, n_qubit, sample(SampleVariant::NQubit),
                    ceil_of(SampleVariant::NQubit), "n+1", n + 1, true});
    rows.push_back({"Forrelation", "5n", 5 * un, "(5, 4n+6)", 5, 4 * n + 6, n_qubit, sample(SampleVariant::NQubit),
                    ceil_of(SampleVariant::NQubit), "n+1", n + 1, true});
    rows.push_back({"Autocorrelation", "2n", 2 * un, "(2, 5n+6)", 2, 5 * n + 6, one_qubit,
                    sample(SampleVariant::Qsac), ceil_of(SampleVariant::Qsac), "2n+3", 2 * n + 3, false});
    return rows;
}

bool AuditRecord::all_match() const {
    for (const auto &e : entries) {
        if (!e.matches()) {
            return false;
        }
    }
    return !entries.empty();
}

AuditRecord audit_against_simulation(const BooleanFunction &f) {
    const int n = f.num_vars();
    if (n > kMaxAuditVars) {
        throw SizeLimitError("circuit audit refuses n > " + std::to_string(kMaxAuditVars));
    }
    if (n < 2) {
        throw std::invalid_argument("circuit audit needs n >= 2");
    }
    auto rows = table1(n, 0.05, 0.05);
    auto expected_for = [&](const std::string &name, int measured) {
        for (const auto &row : rows) {
            if (row.algorithm == name) {
                return CircuitCost{row.cost_oracles, row.cost_gates.value_or(0), row.qubits.value_or(0), measured};
            }
        }
        throw std::logic_error("missing complexity row " + name);
    };

    AuditRecord record{n, kCountingConvention, {}};
    for (int i = 1; i <= n; ++i) {
        record.entries.push_back({"QSAC", i, expected_for("QSAC", 1), qsac_circuit(f, i).cost()});
        record.entries.push_back({"Direct", i, expected_for("Direct", n), direct_circuit(f, i).cost()});
        record.entries.push_back({"Forrelation", i, expected_for("Forrelation", n), forrelation_circuit(f, i).cost()});
    }
    return record;
}

}  // namespace sacq
