#pragma once

// Self-checks run by `vnclass verify`: published values, the brute-force
// oracles, the induced-cycle-index cross-checks and the cross-mode checks.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "counting.hpp"
#include "cycle_index.hpp"
#include "known_values.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"

namespace vnclass {

enum class VerifyLevel { quick, full };

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;
    double seconds = 0;

    void check(bool ok, std::string line)
    {
        passed = passed && ok;
        lines.push_back((ok ? "ok   " : "FAIL ") + std::move(line));
    }
};

/// Primes above every n the checks use, spread over the 64-bit range.
inline constexpr std::array<std::uint64_t, 3> kCheckPrimes = {1000000007ULL, 998244353ULL,
                                                               18446744073709551557ULL};

inline double log10_of(const mpz_class& v)
{
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log10(mant) + static_cast<double>(exp) * std::log10(2.0);
}

namespace suites {

inline void e_sequence_identity(SuiteResult& r, const ESequence& e)
{
    for (unsigned k = 1; k <= kMaxESequence; ++k) {
        bool ok = e.divisor_sum_holds(k);
        if (!ok || k == kMaxESequence)
            r.check(ok, "sum_{d|k} d e(d) == 2^k for k = 1.." + std::to_string(k));
        if (!ok)
            return;
    }
}

inline void known_values(SuiteResult& r, unsigned max_n, unsigned threads)
{
    for (unsigned n = 1; n <= max_n; ++n) {
        std::string got = v_n(n, {threads}).value.get_str();
        r.check(got == kKnownValues[n - 1], "V_" + std::to_string(n) + " (" +
                                                std::to_string(got.size()) + " digits)");
    }
}

inline void a000653(SuiteResult& r, unsigned threads)
{
    for (unsigned n = 1; n <= kA000653.size(); ++n) {
        std::string got = v_n(n, {threads}).value.get_str();
        r.check(got == kA000653[n - 1], "A000653(" + std::to_string(n) + ")");
    }
}

inline void orbit_oracle(SuiteResult& r, unsigned n, unsigned threads)
{
    mpz_class burnside = orbit_count_bruteforce(n, OrbitStrategy::burnside);
    mpz_class merged = orbit_count_bruteforce(n, OrbitStrategy::union_find);
    mpz_class formula = v_n(n, {threads}).value;
    r.check(burnside == merged, "orbit n=" + std::to_string(n) + " strategies: " +
                                    burnside.get_str() + " == " + merged.get_str());
    r.check(burnside == formula, "orbit n=" + std::to_string(n) + ": " + burnside.get_str() +
                                     " == " + formula.get_str());
}

inline void induced_spec_equivalence(SuiteResult& r, unsigned max_n, const ESequence& e)
{
    for (unsigned n = 1; n <= max_n; ++n) {
        std::size_t bad = 0;
        auto parts = partitions(n);
        for (const auto& p : parts) {
            try {
                auto fast = induced_spec(p, e, InducedSpecMode::optimized);
                auto slow = induced_spec(p, e, InducedSpecMode::reference);
                auto direct = spec_of_permutation(sigma_prime(VariablePermutation::canonical(p)));
                bad += !(fast == slow && slow == direct);
            } catch (const std::exception&) {
                ++bad;
            }
        }
        r.check(bad == 0, "n=" + std::to_string(n) + ": " +
                              std::to_string(parts.size() - bad) + "/" +
                              std::to_string(parts.size()) + " partitions match explicit sigma'");
    }
}

inline void fixed_point_enumeration(SuiteResult& r, unsigned n, const ESequence& e)
{
    auto parts = partitions(n);
    for (const auto& p : parts) {
        for (const auto& q : parts) {
            auto count = fixed_points_count(VariablePermutation::canonical(p),
                                            VariablePermutation::canonical(q));
            mpz_class expected = (p == q) ? n_p(induced_spec(p, e)) : mpz_class(0);
            r.check(expected == count, "n=" + std::to_string(n) + " " + p.to_string() + " x " +
                                           q.to_string() + ": " + std::to_string(count) +
                                           " fixed maps, expected " + expected.get_str());
        }
    }
}

inline void cross_mode(SuiteResult& r, unsigned max_n, unsigned threads)
{
    for (unsigned n = 1; n <= max_n; ++n) {
        mpz_class exact = v_n(n, {threads}).value;
        for (std::uint64_t m : kCheckPrimes) {
            mpz_class expect = exact % mpz_class(std::to_string(m));
            std::uint64_t got = v_n_mod(n, m, {threads}).residue;
            r.check(expect == mpz_class(std::to_string(got)),
                    "n=" + std::to_string(n) + " mod " + std::to_string(m));
        }
        double want = log10_of(exact);
        double got = log10_v_n(n, {threads}).value;
        double rel = std::abs(got - want) / std::abs(want);
        r.check(rel <= 1e-6, "n=" + std::to_string(n) + " log10 relative error " +
                                 std::to_string(rel));
    }
}

} // namespace suites

/// Runs every suite of the given level. `e` is the e-sequence handed to the
/// suites that consume one directly; pass e_sequence(64) for a real check.
inline std::vector<SuiteResult> run_verification(VerifyLevel level, const ESequence& e,
                                                 unsigned threads = 0)
{
    std::vector<SuiteResult> results;
    auto run = [&](std::string name, const std::function<void(SuiteResult&)>& body) {
        SuiteResult r;
        r.name = std::move(name);
        auto start = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& ex) {
            r.check(false, std::string("exception: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    };

    run("e-sequence divisor sum", [&](auto& r) { suites::e_sequence_identity(r, e); });
    run("known values n<=6", [&](auto& r) { suites::known_values(r, 6, threads); });
    run("A000653 n<=6", [&](auto& r) { suites::a000653(r, threads); });
    run("orbit oracle n<=2", [&](auto& r) {
        suites::orbit_oracle(r, 1, threads);
        suites::orbit_oracle(r, 2, threads);
    });
    run("induced spec n<=8", [&](auto& r) { suites::induced_spec_equivalence(r, 8, e); });
    if (level == VerifyLevel::quick)
        return results;

    run("known values n<=9", [&](auto& r) { suites::known_values(r, 9, threads); });
    run("orbit oracle n=3", [&](auto& r) { suites::orbit_oracle(r, 3, threads); });
    run("induced spec n<=12", [&](auto& r) { suites::induced_spec_equivalence(r, 12, e); });
    run("fixed points n=2,3", [&](auto& r) {
        suites::fixed_point_enumeration(r, 2, e);
        suites::fixed_point_enumeration(r, 3, e);
    });
    run("cross-mode n<=12", [&](auto& r) { suites::cross_mode(r, 12, threads); });
    return results;
}

inline bool all_passed(const std::vector<SuiteResult>& results)
{
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

inline void print_report(std::ostream& os, const std::vector<SuiteResult>& results,
                         bool verbose = false)
{
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds << " s)\n";
        for (const auto& line : r.lines)
            if (verbose || line.starts_with("FAIL") || line.starts_with("ok   orbit"))
                os << "    " << line << '\n';
    }
}

} // namespace vnclass
