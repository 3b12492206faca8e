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

#ifndef SACQ_REPORT_H
#define SACQ_REPORT_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sacq/boolfn.h"
#include "sacq/complexity.h"
#include "sacq/estimators.h"

namespace sacq {

inline constexpr const char *kToolVersion = "0.1.0";

enum class Format { Text, Csv, Json };

/// "text", "csv", or "json".
Format parse_format(const std::string &name);

/// How the CLI was told about the function.
struct SourceSpec {
    enum class Kind { File, Anf, Bits, Hex };
    Kind kind;
    std::string value;
    std::optional<int> n;

    nlohmann::json to_json() const;
    static SourceSpec from_json(const nlohmann::json &j);
};

BooleanFunction load_source(const SourceSpec &spec);

/// Everything needed to reproduce an estimate run.
struct RunManifest {
    std::string command = "estimate";
    SourceSpec source;
    Algorithm algorithm = Algorithm::Qsac;
    int n = 0;
    double t = 0.05;
    double delta = 0.05;
    /// Samples per direction actually used.
    std::uint64_t shots = 0;
    /// True when --shots was given rather than planned from (t, delta).
    bool shots_explicit = false;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::string tool_version = kToolVersion;
    std::string timestamp;

    nlohmann::json to_json() const;
    /// Accepts either a bare manifest or a full report containing one.
    static RunManifest from_json(const nlohmann::json &j);

    ExperimentConfig config() const;
};

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

std::string render_analysis(const BooleanFunction &f, Format format);

nlohmann::json estimate_report_json(const EstimateReport &report, const RunManifest &manifest);
std::string render_estimate(const EstimateReport &report, const RunManifest &manifest, Format format);

/// The report with the manifest timestamp removed; equal payloads mean a reproduced run.
nlohmann::json report_payload(nlohmann::json report);

/// Runs an estimate from a manifest (timestamp refreshed) and returns the JSON report.
nlohmann::json rerun_manifest(const RunManifest &manifest);

std::string render_plan(double t, double delta, int n, Format format);
std::string render_table(int n, double t, double delta, Format format);
std::string render_audit(const AuditRecord &audit, Format format);
std::string render_bound_audit(const DistanceBoundAudit &audit, Format format);

/// RFC 4180 field quoting.
std::string csv_field(const std::string &s);

}  // namespace sacq

#endif
