// Copyright 2026 The mcrsp Authors
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

#include "mcrsp/cli.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "mcrsp/acceptance.h"
#include "mcrsp/engine.h"
#include "mcrsp/metrics.h"
#include "mcrsp/oracle.h"

namespace mcrsp {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return f;
}

void close_output(std::ofstream &f, const std::filesystem::path &path) {
    f.close();
    if (!f) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::filesystem::path out_dir(const RunConfig &config) {
    std::filesystem::path dir = config.out.empty() ? "." : config.out;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!std::filesystem::is_directory(dir)) {
        throw IoError("output directory '" + dir.string() + "' is not usable");
    }
    return dir;
}

const CorrectionTable &printed_table(const RunConfig &config, std::optional<CorrectionTable> &storage) {
    if (config.paper_table.empty()) {
        return paper_table();
    }
    try {
        storage = load_table(config.paper_table, Provenance::paper);
    } catch (const ValidationError &) {
        throw;
    } catch (const std::exception &e) {
        throw IoError(e.what());
    }
    return *storage;
}

const CorrectionTable &table_of(const RunConfig &config, std::optional<CorrectionTable> &storage) {
    return config.source == CorrectionSource::oracle ? oracle_table() : printed_table(config, storage);
}

// Maps the documented error classes onto exit codes.
template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << '\n';
        return EXIT_VALIDATION;
    } catch (const DerivationError &e) {
        err << "verification failure: " << e.what() << '\n';
        return EXIT_VERIFICATION;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << '\n';
        return EXIT_IO;
    }
}

}  // namespace

int cmd_enumerate(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        std::optional<CorrectionTable> storage;
        auto report = enumerate_branches(config.target, config.channels, table_of(config, storage));
        report.correction_source = config.source;
        if (config.out.empty()) {
            write_branch_csv(out, report);
        } else {
            auto f = open_output(config.out);
            write_branch_csv(f, report);
            close_output(f, config.out);
        }
        double expected = tsp_formula(config.channels.a1, config.channels.b1);
        out << "tsp=" << fixed12(report.tsp) << '\n';
        out << "expected_tsp=" << fixed12(expected) << '\n';
        out << "ccc=" << report.ccc << '\n';
        out << "min_success_fidelity=" << fixed12(report.min_success_fidelity()) << '\n';
        out << "branches=" << report.branches.size() << '\n';
        out << "correction_source=" << source_name(config.source) << '\n';
        if (std::abs(report.tsp - expected) > config.tolerance) {
            err << "verification failure: tsp deviates from 4(a1 b1)^2 by " << std::abs(report.tsp - expected)
                << " (tolerance " << config.tolerance << ")\n";
            return static_cast<int>(EXIT_VERIFICATION);
        }
        return static_cast<int>(EXIT_OK);
    });
}

int cmd_mc(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        std::optional<CorrectionTable> storage;
        const auto &table = table_of(config, storage);
        auto est = monte_carlo(config.target, config.channels, table, config.trials, config.seed);
        double exact = enumerate_branches(config.target, config.channels, table).tsp;
        out << "estimate=" << fixed12(est.estimate) << " +- " << fixed12(est.std_error) << '\n';
        out << "successes=" << est.successes << " trials=" << est.trials << " seed=" << config.seed << '\n';
        out << "exact_tsp=" << fixed12(exact) << '\n';
        if (std::abs(est.estimate - exact) > 4 * est.std_error + config.tolerance) {
            err << "verification failure: estimate is more than 4 standard errors from the exact tsp\n";
            return static_cast<int>(EXIT_VERIFICATION);
        }
        return static_cast<int>(EXIT_OK);
    });
}

int cmd_table(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        std::optional<CorrectionTable> storage;
        const auto &printed = printed_table(config, storage);
        auto derived = derive_correction_table(generic_derivation_target(), generic_derivation_channels());
        auto diff = compare_with_paper(derived, printed);

        auto dir = out_dir(config);
        auto table_path = dir / "derived_table.txt";
        auto diff_path = dir / "table_diff.csv";
        auto tf = open_output(table_path);
        write_table(tf, derived);
        close_output(tf, table_path);
        auto df = open_output(diff_path);
        write_diff_csv(df, diff);
        close_output(df, diff_path);

        out << "derived table: " << table_path.string() << '\n';
        out << "diff: " << diff_path.string() << '\n';
        out << "mismatches=" << diff.entries.size() << " non_unique=" << diff.non_unique_count()
            << " failing=" << diff.error_count() << '\n';
        return static_cast<int>(EXIT_OK);
    });
}

int cmd_metrics(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        config.validate();
        auto dir = out_dir(config);
        auto write = [&](const std::filesystem::path &path, auto &&emit) {
            auto f = open_output(path);
            emit(f);
            close_output(f, path);
            out << "wrote " << path.string() << '\n';
        };
        write(dir / "tsp_sweep.csv", [&](std::ostream &f) {
            write_sweep_csv(f, tsp_sweep(config.resolution));
        });
        write(dir / "entropy_curve.csv", [&](std::ostream &f) {
            write_entropy_csv(f, entropy_curve(config.resolution));
        });
        auto rows = comparison_table();
        write(dir / "comparison_table.csv", [&](std::ostream &f) {
            write_comparison_csv(f, rows);
        });
        write(dir / "comparison_table.txt", [&](std::ostream &f) {
            write_comparison_text(f, rows);
        });
        write_comparison_text(out, rows);
        return static_cast<int>(EXIT_OK);
    });
}

int cmd_verify(std::ostream &out) {
    auto results = run_acceptance();
    print_acceptance(out, results);
    return all_passed(results) ? EXIT_OK : EXIT_VERIFICATION;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multiparty-controlled remote state preparation simulator", "mcrsp"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<size_t> trials;
    std::optional<std::string> source;
    std::optional<std::string> out_path;
    std::optional<int> resolution;
    std::optional<std::string> table_path;

    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--trials", trials, "Monte Carlo trials");
    app.add_option("--source", source, "correction table: oracle or paper");
    app.add_option("--out", out_path, "output file (enumerate) or directory (table, metrics)");
    app.add_option("--resolution", resolution, "grid points per axis for metrics");
    app.add_option("--paper-table", table_path, "replacement for the built-in printed correction table");

    auto *enumerate = app.add_subcommand("enumerate", "enumerate every measurement branch");
    auto *mc = app.add_subcommand("mc", "Monte Carlo estimate of the total success probability");
    auto *table = app.add_subcommand("table", "derive Bob's correction table and diff it against the printed one");
    auto *metrics = app.add_subcommand("metrics", "write TSP sweep, entropy curve and efficiency comparison");
    auto *verify = app.add_subcommand("verify", "run the acceptance suite");
    for (auto *sub : {enumerate, mc, table, metrics, verify}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return EXIT_VALIDATION;
    }

    if (verify->parsed()) {
        return cmd_verify(out);
    }

    RunConfig config;
    int rc = guarded(err, [&] {
        ConfigEntries entries;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                throw IoError("cannot open config file '" + config_path + "'");
            }
            entries = parse_config_entries(f);
        }
        if (source) {
            entries["source"] = *source;
        }
        if (out_path) {
            entries["out"] = *out_path;
        }
        if (table_path) {
            entries["paper_table"] = *table_path;
        }
        config = apply_config(entries);
        if (seed) {
            config.seed = *seed;
        }
        if (trials) {
            config.trials = *trials;
        }
        if (resolution) {
            config.resolution = *resolution;
        }
        config.validate();
        return static_cast<int>(EXIT_OK);
    });
    if (rc != EXIT_OK) {
        return rc;
    }

    if (enumerate->parsed()) {
        return cmd_enumerate(config, out, err);
    }
    if (mc->parsed()) {
        return cmd_mc(config, out, err);
    }
    if (table->parsed()) {
        return cmd_table(config, out, err);
    }
    return cmd_metrics(config, out, err);
}

}  // namespace mcrsp
