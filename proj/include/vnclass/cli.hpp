#pragma once

// Command-line front end. Everything except argument parsing lives in the
// cmd_* functions so tests can drive them without spawning a process.
//
// Exit codes: 0 success, 1 failed verification or internal error,
// 2 invalid arguments, 3 resource limit, 4 unwritable output file.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bench.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "verify.hpp"

namespace vnclass::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInvalidArgument = 2,
    kResourceError = 3,
    kUnwritable = 4,
};

enum class OutputFormat { decimal, json };

struct ComputeMode {
    enum Kind { exact, modular, log10 } kind = exact;
    std::uint64_t modulus = 0;

    std::string to_string() const
    {
        switch (kind) {
        case modular: return "mod:" + std::to_string(modulus);
        case log10: return "log10";
        default: return "exact";
        }
    }
};

inline ComputeMode parse_mode(std::string_view text)
{
    if (text == "exact")
        return {ComputeMode::exact, 0};
    if (text == "log10")
        return {ComputeMode::log10, 0};
    if (text.starts_with("mod:")) {
        auto digits = text.substr(4);
        std::uint64_t m = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
            throw invalid_argument("bad modulus in mode '" + std::string(text) + "'");
        return {ComputeMode::modular, m};
    }
    throw invalid_argument("unknown mode '" + std::string(text) +
                           "' (expected exact, log10 or mod:<prime>)");
}

inline OutputFormat parse_format(std::string_view text)
{
    if (text == "decimal")
        return OutputFormat::decimal;
    if (text == "json")
        return OutputFormat::json;
    throw invalid_argument("unknown format '" + std::string(text) + "'");
}

struct ComputeArgs {
    unsigned n = 0;
    std::string mode = "exact";
    std::string format = "decimal";
    unsigned threads = 0;
    std::uint64_t memory_budget_mib = kDefaultMemoryBudget >> 20;
};

struct TableArgs {
    unsigned max_n = 0;
    std::string format = "decimal";
    unsigned threads = 0;
    std::uint64_t memory_budget_mib = kDefaultMemoryBudget >> 20;
};

struct BenchArgs {
    unsigned max_n = 0;
    std::string csv_path;
    unsigned threads = 0;
    std::uint64_t memory_budget_mib = kDefaultMemoryBudget >> 20;
};

namespace detail {

inline std::string format_log10(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

/// Maps library exceptions onto exit codes, reporting on err.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kInvalidArgument;
    } catch (const resource_error& ex) {
        err << "error: " << ex.what() << '\n';
        return kResourceError;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kResourceError;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kFailure;
    }
}

inline VnOptions options(unsigned threads, std::uint64_t budget_mib)
{
    return {threads, budget_mib << 20};
}

} // namespace detail

inline int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const ComputeMode mode = parse_mode(args.mode);
        const OutputFormat format = parse_format(args.format);
        const VnOptions opts = detail::options(args.threads, args.memory_budget_mib);

        std::string value;
        std::size_t num_partitions = 0;
        double t_total = 0, t_cycle = 0;
        switch (mode.kind) {
        case ComputeMode::exact: {
            auto r = v_n(args.n, opts);
            value = r.value.get_str();
            num_partitions = r.num_partitions;
            t_total = r.elapsed_total;
            t_cycle = r.elapsed_cycle_index;
            break;
        }
        case ComputeMode::modular: {
            auto r = v_n_mod(args.n, mode.modulus, opts);
            value = std::to_string(r.residue);
            num_partitions = r.num_partitions;
            t_total = r.elapsed_total;
            t_cycle = r.elapsed_cycle_index;
            break;
        }
        case ComputeMode::log10: {
            auto r = log10_v_n(args.n, opts);
            value = detail::format_log10(r.value);
            num_partitions = r.num_partitions;
            t_total = r.elapsed_total;
            t_cycle = r.elapsed_cycle_index;
            break;
        }
        }

        if (format == OutputFormat::json) {
            nlohmann::ordered_json j;
            j["n"] = args.n;
            j["mode"] = mode.to_string();
            j["value"] = value;
            j["num_partitions"] = num_partitions;
            j["t_total_s"] = t_total;
            j["t_cycle_index_s"] = t_cycle;
            out << j.dump() << '\n';
        } else {
            out << value << '\n';
        }
        return int{kOk};
    });
}

inline int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const OutputFormat format = parse_format(args.format);
        if (args.max_n < 1 || args.max_n > kMaxVariables)
            throw invalid_argument("--max must be in [1, " + std::to_string(kMaxVariables) + "]");
        const VnOptions opts = detail::options(args.threads, args.memory_budget_mib);

        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (unsigned n = 1; n <= args.max_n; ++n) {
            std::string value = v_n(n, opts).value.get_str();
            if (format == OutputFormat::json)
                rows.push_back({{"n", n}, {"value", value}});
            else
                out << n << ' ' << value << '\n';
        }
        if (format == OutputFormat::json)
            out << rows.dump() << '\n';
        return int{kOk};
    });
}

/// `e` replaces the e-sequence handed to the suites; nullopt uses the real one.
inline int cmd_verify(VerifyLevel level, std::ostream& out, std::ostream& err,
                      const std::optional<ESequence>& e = std::nullopt, unsigned threads = 0,
                      bool verbose = false)
{
    return detail::guarded(err, [&] {
        auto results = run_verification(level, e ? *e : e_sequence(kMaxESequence), threads);
        print_report(out, results, verbose);
        bool ok = all_passed(results);
        out << (ok ? "all suites passed" : "verification FAILED") << '\n';
        return int{ok ? kOk : kFailure};
    });
}

inline int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        if (args.max_n < 1 || args.max_n > kMaxVariables)
            throw invalid_argument("--max must be in [1, " + std::to_string(kMaxVariables) + "]");
        std::ofstream csv(args.csv_path, std::ios::binary | std::ios::trunc);
        if (!csv) {
            err << "error: cannot write " << args.csv_path << '\n';
            return int{kUnwritable};
        }
        const VnOptions opts = detail::options(args.threads, args.memory_budget_mib);
        auto records = run_bench(args.max_n, opts, [&](const BenchRecord& r) {
            err << "n=" << r.n << " total " << r.t_total_s << " s, cycle index "
                << r.t_cycle_index_s << " s\n";
        });
        write_bench_csv(csv, records);
        csv.flush();
        if (!csv) {
            err << "error: failed writing " << args.csv_path << '\n';
            return int{kUnwritable};
        }
        out << "wrote " << records.size() << " rows to " << args.csv_path << '\n';
        return int{kOk};
    });
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr)
{
    CLI::App app{"Count equivalence classes of invertible maps {0,1}^n -> {0,1}^n under "
                 "permutation of input and output variables."};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Compute V_n");
    c->add_option("--n", compute.n, "number of variables")->required();
    c->add_option("--mode", compute.mode, "exact | mod:<prime> | log10")->capture_default_str();
    c->add_option("--format", compute.format, "decimal | json")->capture_default_str();
    c->add_option("--threads", compute.threads, "worker threads (0 = all cores)");
    c->add_option("--memory-budget", compute.memory_budget_mib, "exact-mode budget in MiB")
        ->capture_default_str();

    TableArgs table;
    auto* t = app.add_subcommand("table", "Print exact V_1 .. V_max");
    t->add_option("--max", table.max_n, "largest n")->required();
    t->add_option("--format", table.format, "decimal | json")->capture_default_str();
    t->add_option("--threads", table.threads, "worker threads (0 = all cores)");
    t->add_option("--memory-budget", table.memory_budget_mib, "exact-mode budget in MiB")
        ->capture_default_str();

    std::string level = "quick";
    unsigned verify_threads = 0;
    bool verbose = false;
    auto* v = app.add_subcommand("verify", "Run the self-check suites");
    v->add_option("--level", level, "quick | full")->capture_default_str();
    v->add_option("--threads", verify_threads, "worker threads (0 = all cores)");
    v->add_flag("--verbose", verbose, "print every check");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time exact V_1 .. V_max and write a CSV");
    b->add_option("--max", bench.max_n, "largest n")->required();
    b->add_option("--csv", bench.csv_path, "output CSV path")->required();
    b->add_option("--threads", bench.threads, "worker threads (0 = all cores)");
    b->add_option("--memory-budget", bench.memory_budget_mib, "exact-mode budget in MiB")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? int{kOk} : int{kInvalidArgument};
    }

    if (c->parsed())
        return cmd_compute(compute, out, err);
    if (t->parsed())
        return cmd_table(table, out, err);
    if (v->parsed()) {
        if (level != "quick" && level != "full") {
            err << "error: --level must be quick or full\n";
            return kInvalidArgument;
        }
        return cmd_verify(level == "full" ? VerifyLevel::full : VerifyLevel::quick, out, err,
                          std::nullopt, verify_threads, verbose);
    }
    return cmd_bench(bench, out, err);
}

} // namespace vnclass::cli
