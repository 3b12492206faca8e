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

// Command-line front end.
//
// Exit codes: 0 success, 2 usage or parse error, 3 size limit exceeded,
// 4 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sacq/boolfn.h"
#include "sacq/complexity.h"
#include "sacq/errors.h"
#include "sacq/estimators.h"
#include "sacq/report.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;
constexpr int kExitInvariant = 4;

struct SourceOptions {
    std::optional<int> n;
    std::string fn_file;
    std::string anf;
    std::string bits;
    std::string hex;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--n", n, "Variable count");
        auto *file = cmd->add_option("--fn-file", fn_file, "Truth-table file (n=<k> header, then bits or 0x hex)");
        auto *a = cmd->add_option("--anf", anf, "ANF expression, e.g. \"x1*x2 + x3*x4\"");
        auto *b = cmd->add_option("--bits", bits, "Binary truth table, x1 most significant");
        auto *h = cmd->add_option("--hex", hex, "Hex truth table");
        file->excludes(a)->excludes(b)->excludes(h);
        a->excludes(b)->excludes(h);
        b->excludes(h);
    }

    std::optional<sacq::SourceSpec> spec() const {
        using K = sacq::SourceSpec::Kind;
        if (!fn_file.empty()) {
            return sacq::SourceSpec{K::File, fn_file, n};
        }
        if (!anf.empty()) {
            return sacq::SourceSpec{K::Anf, anf, n};
        }
        if (!bits.empty()) {
            return sacq::SourceSpec{K::Bits, bits, n};
        }
        if (!hex.empty()) {
            return sacq::SourceSpec{K::Hex, hex, n};
        }
        return std::nullopt;
    }

    sacq::SourceSpec required() const {
        auto s = spec();
        if (!s.has_value()) {
            throw std::invalid_argument("one of --fn-file, --anf, --bits, --hex is required");
        }
        return *s;
    }
};

std::pair<double, double> parse_plan(const std::string &text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--plan expects t,delta");
    }
    std::size_t used = 0;
    double t = std::stod(text.substr(0, comma), &used);
    if (used != comma) {
        throw std::invalid_argument("--plan: bad margin");
    }
    std::string rest = text.substr(comma + 1);
    double delta = std::stod(rest, &used);
    if (used != rest.size()) {
        throw std::invalid_argument("--plan: bad uncertainty");
    }
    return {t, delta};
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::invalid_argument("cannot write '" + out_path + "'");
    }
    out << text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Strict avalanche criterion analysis and estimation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sacq::kToolVersion));

    std::string format_name = "text";
    std::string out_path;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--format", format_name, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", out_path, "Write output to a file instead of stdout");
    };

    SourceOptions source;

    auto *analyze = app.add_subcommand("analyze", "Exact autocorrelation, spectral halves and SAC verdict");
    source.add_to(analyze);
    add_common(analyze);

    auto *estimate = app.add_subcommand("estimate", "Run the classical, qsac, direct or forrelation estimator");
    source.add_to(estimate);
    add_common(estimate);
    std::string algorithm = "qsac";
    std::optional<std::uint64_t> shots;
    std::string plan_text;
    double estimate_delta = 0.05;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    estimate->add_option("--algorithm", algorithm, "classical, qsac, direct or forrelation");
    estimate->add_option("--shots", shots, "Samples per direction");
    estimate->add_option("--plan", plan_text, "Plan samples from margin and uncertainty, e.g. 0.05,0.05");
    estimate->add_option("--delta", estimate_delta, "Uncertainty for intervals when --shots is given");
    estimate->add_flag("--exhaustive", exhaustive, "Classical: sweep all inputs. Quantum: exact distribution");
    estimate->add_option("--seed", seed, "PRNG seed");

    auto *plan = app.add_subcommand("plan", "Hoeffding sample sizes for every variant");
    double t = 0.05;
    double delta = 0.05;
    int plan_n = 4;
    plan->add_option("--t", t, "Margin of error");
    plan->add_option("--delta", delta, "Uncertainty");
    plan->add_option("--n", plan_n, "Variable count");
    add_common(plan);

    auto *table = app.add_subcommand("table", "Complexity comparison table");
    int table_n = 4;
    table->add_option("--n", table_n, "Variable count");
    table->add_option("--t", t, "Margin of error");
    table->add_option("--delta", delta, "Uncertainty");
    add_common(table);

    auto *audit = app.add_subcommand("audit", "Count gates and oracle calls in the constructed circuits");
    source.add_to(audit);
    add_common(audit);

    auto *bound = app.add_subcommand("check-bound", "Exhaustively test the SAC distance bound");
    int bound_n = 3;
    bound->add_option("--n", bound_n, "Variable count (<= 3)");
    add_common(bound);

    auto *rerun = app.add_subcommand("rerun", "Re-execute an estimate from its report or manifest");
    std::string manifest_path;
    rerun->add_option("--manifest", manifest_path, "Report or manifest JSON")->required();
    rerun->add_option("--out", out_path, "Write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const sacq::Format format = sacq::parse_format(format_name);
        if (*analyze) {
            auto f = sacq::load_source(source.required());
            emit(sacq::render_analysis(f, format), out_path);
        } else if (*estimate) {
            sacq::SourceSpec spec = source.required();
            auto f = sacq::load_source(spec);
            sacq::RunManifest m;
            m.source = spec;
            m.algorithm = sacq::parse_algorithm(algorithm);
            m.n = f.num_vars();
            m.delta = estimate_delta;
            if (!plan_text.empty()) {
                std::tie(m.t, m.delta) = parse_plan(plan_text);
            }
            m.exhaustive = exhaustive;
            m.seed = seed;
            m.timestamp = sacq::utc_timestamp();
            if (shots.has_value()) {
                m.shots_explicit = true;
                m.shots = *shots;
            }
            sacq::ExperimentConfig cfg = m.config();
            auto report = sacq::estimate(f, cfg);
            m.shots = report.samples;
            emit(sacq::render_estimate(report, m, format), out_path);
        } else if (*plan) {
            emit(sacq::render_plan(t, delta, plan_n, format), out_path);
        } else if (*table) {
            emit(sacq::render_table(table_n, t, delta, format), out_path);
        } else if (*audit) {
            auto spec = source.spec();
            sacq::BooleanFunction f = spec.has_value() ? sacq::load_source(*spec)
                                                       : sacq::BooleanFunction::constant(source.n.value_or(4), false);
            auto record = sacq::audit_against_simulation(f);
            emit(sacq::render_audit(record, format), out_path);
            if (!record.all_match()) {
                return kExitInvariant;
            }
        } else if (*bound) {
            auto result = sacq::audit_distance_bound(bound_n);
            emit(sacq::render_bound_audit(result, format), out_path);
        } else if (*rerun) {
            std::ifstream in(manifest_path);
            if (!in) {
                throw std::invalid_argument("cannot open '" + manifest_path + "'");
            }
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception &e) {
                throw sacq::ParseError(std::string("manifest is not valid JSON: ") + e.what());
            }
            auto m = sacq::RunManifest::from_json(j);
            emit(sacq::rerun_manifest(m).dump(2) + "\n", out_path);
        }
    } catch (const sacq::SizeLimitError &e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSize;
    } catch (const sacq::InvariantError &e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const sacq::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "bad manifest: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
