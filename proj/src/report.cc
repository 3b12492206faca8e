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

#include "sacq/report.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sacq/errors.h"
#include "sacq/rng.h"

namespace sacq {

using nlohmann::json;

Format parse_format(const std::string &name) {
    if (name == "text") {
        return Format::Text;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or json)");
}

namespace {

const char *source_kind_name(SourceSpec::Kind k) {
    switch (k) {
        case SourceSpec::Kind::File:
            return "file";
        case SourceSpec::Kind::Anf:
            return "anf";
        case SourceSpec::Kind::Bits:
            return "bits";
        case SourceSpec::Kind::Hex:
            return "hex";
    }
    return "?";
}

std::string num(double v) {
    std::ostringstream ss;
    ss << std::setprecision(12) << v;
    return ss.str();
}

std::string bits_of(Vec v, int n) {
    std::string s(n, '0');
    for (int i = 1; i <= n; ++i) {
        if (v & unit_direction(n, i)) {
            s[i - 1] = '1';
        }
    }
    return s;
}

/// Left-aligned text table with two spaces between columns.
std::string aligned(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> width;
    for (const auto &row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::ostringstream ss;
    for (const auto &row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line += std::string(width[c] - row[c].size() + 2, ' ');
            }
        }
        ss << line << "\n";
    }
    return ss.str();
}

std::string csv(const std::vector<std::vector<std::string>> &rows) {
    std::ostringstream ss;
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            ss << (c ? "," : "") << csv_field(row[c]);
        }
        ss << "\n";
    }
    return ss.str();
}

json interval_json(const Interval &iv) {
    return json::array({iv.lo, iv.hi});
}

}  // namespace

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

json SourceSpec::to_json() const {
    json j{{"kind", source_kind_name(kind)}, {"value", value}};
    j["n"] = n.has_value() ? json(*n) : json(nullptr);
    return j;
}

SourceSpec SourceSpec::from_json(const json &j) {
    SourceSpec s;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "file") {
        s.kind = Kind::File;
    } else if (kind == "anf") {
        s.kind = Kind::Anf;
    } else if (kind == "bits") {
        s.kind = Kind::Bits;
    } else if (kind == "hex") {
        s.kind = Kind::Hex;
    } else {
        throw std::invalid_argument("unknown source kind '" + kind + "'");
    }
    s.value = j.at("value").get<std::string>();
    if (j.contains("n") && !j.at("n").is_null()) {
        s.n = j.at("n").get<int>();
    }
    return s;
}

BooleanFunction load_source(const SourceSpec &spec) {
    switch (spec.kind) {
        case SourceSpec::Kind::File: {
            BooleanFunction f = load_truth_table_file(spec.value);
            if (spec.n.has_value() && *spec.n != f.num_vars()) {
                throw ParseError("file declares n=" + std::to_string(f.num_vars()) + " but --n " +
                                 std::to_string(*spec.n) + " was given");
            }
            return f;
        }
        case SourceSpec::Kind::Anf:
            return parse_anf(spec.value, spec.n);
        case SourceSpec::Kind::Bits:
            return parse_binary(spec.value, spec.n);
        case SourceSpec::Kind::Hex:
            return parse_hex(spec.value, spec.n);
    }
    throw std::invalid_argument("unknown source kind");
}

json RunManifest::to_json() const {
    return json{
        {"command", command},
        {"source", source.to_json()},
        {"algorithm", algorithm_name(algorithm)},
        {"n", n},
        {"t", t},
        {"delta", delta},
        {"shots", shots},
        {"shots_explicit", shots_explicit},
        {"exhaustive", exhaustive},
        {"seed", seed},
        {"prng", kPrngName},
        {"seed_split", kSeedSplitName},
        {"tool_version", tool_version},
        {"timestamp", timestamp},
    };
}

RunManifest RunManifest::from_json(const json &in) {
    const json &j = in.contains("manifest") ? in.at("manifest") : in;
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    if (m.command != "estimate") {
        throw std::invalid_argument("only estimate manifests can be rerun");
    }
    m.source = SourceSpec::from_json(j.at("source"));
    m.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    m.n = j.at("n").get<int>();
    m.t = j.at("t").get<double>();
    m.delta = j.at("delta").get<double>();
    m.shots = j.at("shots").get<std::uint64_t>();
    m.shots_explicit = j.at("shots_explicit").get<bool>();
    m.exhaustive = j.at("exhaustive").get<bool>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.tool_version = j.value("tool_version", std::string(kToolVersion));
    m.timestamp = j.value("timestamp", std::string());
    return m;
}

ExperimentConfig RunManifest::config() const {
    ExperimentConfig cfg;
    cfg.algorithm = algorithm;
    cfg.t = t;
    cfg.delta = delta;
    if (shots_explicit) {
        cfg.samples = shots;
    }
    cfg.exhaustive = exhaustive;
    cfg.seed = seed;
    return cfg;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

std::string render_analysis(const BooleanFunction &f, Format format) {
    const int n = f.num_vars();
    auto spectrum = walsh_spectrum(f);
    auto halves = spectral_halves(spectrum);
    auto report = sac_report(f);

    if (format == Format::Json) {
        json dirs = json::array();
        for (int i = 1; i <= n; ++i) {
            dirs.push_back({{"coordinate", i},
                            {"direction", bits_of(unit_direction(n, i), n)},
                            {"autocorrelation", report.directional[i - 1]},
                            {"spectral_half_zero", halves[i - 1].zero},
                            {"spectral_half_one", halves[i - 1].one}});
        }
        json j{{"n", n},
               {"weight", f.weight()},
               {"bias", bias(f)},
               {"per_direction", dirs},
               {"verdict", {{"is_sac", report.is_sac}, {"epsilon_exact", report.epsilon_exact}}}};
        return j.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"coordinate", "direction", "autocorrelation", "sum_w_i=0", "sum_w_i=1"});
    for (int i = 1; i <= n; ++i) {
        rows.push_back({std::to_string(i), bits_of(unit_direction(n, i), n), std::to_string(report.directional[i - 1]),
                        num(halves[i - 1].zero), num(halves[i - 1].one)});
    }
    if (format == Format::Csv) {
        return csv(rows);
    }
    std::ostringstream ss;
    ss << "n: " << n << "  weight: " << f.weight() << "  bias: " << bias(f) << "\n";
    ss << aligned(rows);
    ss << "verdict: " << (report.is_sac ? "SAC" : "not SAC") << "\n";
    ss << "epsilon: " << report.epsilon_exact << "\n";
    return ss.str();
}

json estimate_report_json(const EstimateReport &r, const RunManifest &manifest) {
    json dirs = json::array();
    for (const auto &d : r.directions) {
        dirs.push_back({{"coordinate", d.coordinate},
                        {"direction", bits_of(d.direction, r.n)},
                        {"sample_mean", d.sample_mean},
                        {"interval", interval_json(d.interval)},
                        {"bias_estimate", d.bias_estimate},
                        {"abs_bias_interval", interval_json(d.abs_bias_interval)}});
    }
    const bool classical = r.algorithm == Algorithm::Classical;
    json intervals{
        {"delta", r.delta},
        {"units", classical ? "bias" : "probability"},
        {"halfwidth", r.halfwidth},
        {"tabulated_halfwidth", r.tabulated_halfwidth.has_value() ? json(*r.tabulated_halfwidth) : json(nullptr)},
        {"aggregate", "half the sum of per-direction |bias| intervals; joint confidence >= 1 - n*delta"},
    };
    json samples{
        {"m", r.samples},
        {"exhaustive", r.exhaustive},
        {"oracle_calls", r.oracle_calls},
    };
    json verdict{{"sac_consistent", r.sac_consistent}};
    if (r.note.has_value()) {
        verdict["note"] = *r.note;
    }
    return json{
        {"manifest", manifest.to_json()},
        {"algorithm", algorithm_name(r.algorithm)},
        {"n", r.n},
        {"per_direction", dirs},
        {"aggregate", {{"epsilon_estimate", r.epsilon_estimate}, {"epsilon_interval", interval_json(r.epsilon_interval)}}},
        {"intervals", intervals},
        {"samples", samples},
        {"verdict", verdict},
    };
}

std::string render_estimate(const EstimateReport &r, const RunManifest &manifest, Format format) {
    if (format == Format::Json) {
        return estimate_report_json(r, manifest).dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"coordinate", "direction", "sample_mean", "interval_lo", "interval_hi", "bias_estimate",
                    "abs_bias_lo", "abs_bias_hi"});
    for (const auto &d : r.directions) {
        rows.push_back({std::to_string(d.coordinate), bits_of(d.direction, r.n), num(d.sample_mean),
                        num(d.interval.lo), num(d.interval.hi), num(d.bias_estimate), num(d.abs_bias_interval.lo),
                        num(d.abs_bias_interval.hi)});
    }
    if (format == Format::Csv) {
        return csv(rows);
    }
    std::ostringstream ss;
    ss << "algorithm: " << algorithm_name(r.algorithm) << "  n: " << r.n << "  seed: " << r.seed
       << "  prng: " << kPrngName << "\n";
    if (r.exhaustive) {
        ss << "mode: " << (r.algorithm == Algorithm::Classical ? "exhaustive sweep" : "exact distribution") << "\n";
    } else {
        ss << "samples per direction: " << r.samples << "  delta: " << num(r.delta)
           << "  halfwidth: " << num(r.halfwidth);
        if (r.tabulated_halfwidth.has_value()) {
            ss << "  tabulated-form halfwidth: " << num(*r.tabulated_halfwidth);
        }
        ss << "\n";
    }
    ss << aligned(rows);
    ss << "epsilon estimate: " << num(r.epsilon_estimate) << "  interval: [" << num(r.epsilon_interval.lo) << ", "
       << num(r.epsilon_interval.hi) << "]\n";
    ss << "oracle calls: " << r.oracle_calls << "\n";
    ss << "verdict: " << (r.sac_consistent ? "consistent with SAC" : "not SAC") << "\n";
    if (r.note.has_value()) {
        ss << "note: " << *r.note << "\n";
    }
    return ss.str();
}

json report_payload(json report) {
    if (report.contains("manifest")) {
        report["manifest"].erase("timestamp");
    }
    return report;
}

json rerun_manifest(const RunManifest &manifest) {
    BooleanFunction f = load_source(manifest.source);
    if (f.num_vars() != manifest.n) {
        throw InvariantError("manifest records n=" + std::to_string(manifest.n) + " but the source now has n=" +
                             std::to_string(f.num_vars()));
    }
    RunManifest m = manifest;
    m.timestamp = utc_timestamp();
    EstimateReport r = estimate(f, m.config());
    if (r.samples != manifest.shots) {
        throw InvariantError("rerun used a different sample count than the manifest");
    }
    return estimate_report_json(r, m);
}

std::string render_plan(double t, double delta, int n, Format format) {
    check_margin(t, delta);
    BooleanFunction::check_vars(n);
    std::set<int> columns{n};
    for (int c : {2, 4, 8, 12, 16, 20, 24}) {
        if (c <= n) {
            columns.insert(c);
        }
    }
    const std::vector<std::pair<SampleVariant, std::string>> variants{
        {SampleVariant::Qsac, "(1/2t^2) ln(2/delta)"},
        {SampleVariant::Classical, "(2^n/t^2) ln(2/delta)"},
        {SampleVariant::NQubit, "((2^n-1)/2t^2) ln(2/delta)"},
    };
    const char *note = "QSAC sample count does not depend on n";

    if (format == Format::Json) {
        json rows = json::array();
        for (const auto &[v, formula] : variants) {
            json per_n = json::object();
            for (int c : columns) {
                per_n[std::to_string(c)] = plan_samples(t, delta, v, c);
            }
            rows.push_back({{"variant", variant_name(v)}, {"formula", formula}, {"m", plan_samples(t, delta, v, n)},
                            {"m_by_n", per_n}});
        }
        return json{{"t", t}, {"delta", delta}, {"n", n}, {"variants", rows}, {"note", note}}.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"variant", "formula"};
    for (int c : columns) {
        header.push_back("n=" + std::to_string(c));
    }
    rows.push_back(header);
    for (const auto &[v, formula] : variants) {
        std::vector<std::string> row{variant_name(v), formula};
        for (int c : columns) {
            row.push_back(std::to_string(plan_samples(t, delta, v, c)));
        }
        rows.push_back(row);
    }
    if (format == Format::Csv) {
        return csv(rows);
    }
    std::ostringstream ss;
    ss << "t: " << num(t) << "  delta: " << num(delta) << "  (natural log)\n" << aligned(rows) << "note: " << note
       << "\n";
    return ss.str();
}

std::string render_table(int n, double t, double delta, Format format) {
    auto rows = table1(n, t, delta);
    if (format == Format::Json) {
        json out = json::array();
        for (const auto &r : rows) {
            out.push_back({
                {"algorithm", r.algorithm},
                {"query", {{"symbolic", r.query_symbolic}, {"value", r.query}}},
                {"per_iteration",
                 {{"symbolic", r.cost_symbolic},
                  {"oracle_calls", r.cost_oracles},
                  {"gates", r.cost_gates.has_value() ? json(*r.cost_gates) : json(nullptr)}}},
                {"sample_complexity",
                 {{"symbolic", r.sample_symbolic}, {"value", r.sample_value}, {"ceil", r.sample_ceil}}},
                {"qubits",
                 {{"symbolic", r.qubits_symbolic}, {"value", r.qubits.has_value() ? json(*r.qubits) : json(nullptr)}}},
                {"simulated", r.simulated},
            });
        }
        return json{{"n", n}, {"t", t}, {"delta", delta}, {"log", "natural"}, {"rows", out}}.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> table;
    table.push_back({"algorithm", "query", "query_value", "per_iteration", "sample_complexity", "samples",
                     "qubits", "qubits_value", "simulated"});
    for (const auto &r : rows) {
        table.push_back({r.algorithm, r.query_symbolic, std::to_string(r.query), r.cost_symbolic, r.sample_symbolic,
                         std::to_string(r.sample_ceil), r.qubits_symbolic,
                         r.qubits.has_value() ? std::to_string(*r.qubits) : "-", r.simulated ? "yes" : "no"});
    }
    if (format == Format::Csv) {
        return csv(table);
    }
    std::ostringstream ss;
    ss << "n: " << n << "  t: " << num(t) << "  delta: " << num(delta) << "  (log is natural)\n" << aligned(table);
    return ss.str();
}

std::string render_audit(const AuditRecord &audit, Format format) {
    auto pair = [](const CircuitCost &c) {
        return "(" + std::to_string(c.oracle_calls) + ", " + std::to_string(c.gates) + ")";
    };
    if (format == Format::Json) {
        json entries = json::array();
        for (const auto &e : audit.entries) {
            entries.push_back({{"algorithm", e.algorithm},
                               {"coordinate", e.coordinate},
                               {"expected", {{"oracle_calls", e.expected.oracle_calls},
                                             {"gates", e.expected.gates},
                                             {"qubits", e.expected.qubits},
                                             {"measured_qubits", e.expected.measured_qubits}}},
                               {"observed", {{"oracle_calls", e.observed.oracle_calls},
                                             {"gates", e.observed.gates},
                                             {"qubits", e.observed.qubits},
                                             {"measured_qubits", e.observed.measured_qubits}}},
                               {"matches", e.matches()}});
        }
        return json{{"n", audit.n}, {"convention", audit.convention}, {"entries", entries},
                    {"all_match", audit.all_match()}}
                   .dump(2) +
               "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"algorithm", "coordinate", "expected", "observed", "qubits", "measured", "match"});
    for (const auto &e : audit.entries) {
        rows.push_back({e.algorithm, std::to_string(e.coordinate), pair(e.expected), pair(e.observed),
                        std::to_string(e.observed.qubits), std::to_string(e.observed.measured_qubits),
                        e.matches() ? "yes" : "NO"});
    }
    if (format == Format::Csv) {
        return csv(rows);
    }
    std::ostringstream ss;
    ss << "n: " << audit.n << "\nconvention: " << audit.convention << "\n"
       << aligned(rows) << "result: " << (audit.all_match() ? "all costs match" : "MISMATCH") << "\n";
    return ss.str();
}

std::string render_bound_audit(const DistanceBoundAudit &audit, Format format) {
    if (format == Format::Json) {
        json ces = json::array();
        for (const auto &c : audit.counterexamples) {
            ces.push_back({{"table", c.f.to_binary_string()}, {"distance", c.distance}, {"epsilon", c.epsilon}});
        }
        return json{{"n", audit.n},
                    {"functions_checked", audit.functions_checked},
                    {"sac_functions", audit.sac_functions},
                    {"tight", audit.tight},
                    {"holds", audit.holds()},
                    {"counterexamples", ces}}
                   .dump(2) +
               "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"table", "distance", "epsilon"});
    for (const auto &c : audit.counterexamples) {
        rows.push_back({c.f.to_binary_string(), std::to_string(c.distance), std::to_string(c.epsilon)});
    }
    if (format == Format::Csv) {
        return csv(rows);
    }
    std::ostringstream ss;
    ss << "n: " << audit.n << "  functions: " << audit.functions_checked << "  SAC functions: " << audit.sac_functions
       << "  tight: " << audit.tight << "\n";
    if (audit.holds()) {
        ss << "bound holds: distance to the nearest SAC function <= epsilon for every function\n";
    } else {
        ss << "COUNTEREXAMPLES (" << audit.counterexamples.size() << "):\n" << aligned(rows);
    }
    return ss.str();
}

}  // namespace sacq
