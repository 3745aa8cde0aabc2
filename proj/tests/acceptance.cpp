// End-to-end acceptance run: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vnclass/cli.hpp"
#include "vnclass/vnclass.hpp"

using namespace vnclass;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

template <class Fn>
double timed(Fn&& fn)
{
    auto t = std::chrono::steady_clock::now();
    fn();
    return seconds_since(t);
}

mpz_class fact(unsigned long k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

std::string fmt(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

// 1 -------------------------------------------------------------------------
Outcome known_values_one_to_nine()
{
    Outcome o;
    double secs = timed([&] {
        for (unsigned n = 1; n <= 9; ++n)
            o.require(v_n(n).value.get_str() == kKnownValues[n - 1], "V_" + std::to_string(n));
    });
    o.require(secs < 10.0, "took " + fmt(secs) + " (limit 10 s)");
    // The stored n=6 entry is the printed table value with its missing digit restored.
    mpz_class printed{std::string(kPrintedV6)};
    mpz_class f64, f6;
    mpz_fac_ui(f64.get_mpz_t(), 64);
    mpz_fac_ui(f6.get_mpz_t(), 6);
    o.require(printed * f6 * f6 < f64, "printed V_6 not below (64)!/(6!)^2");
    o.detail = o.ok ? "9/9 values digit-exact in " + fmt(secs) +
                          " (n=6 against the table value with one dropped digit restored)"
                    : o.detail;
    return o;
}

// 2 -------------------------------------------------------------------------
Outcome a000653_in_quick_verify()
{
    Outcome o;
    std::ostringstream out, err;
    int code = cli::cmd_verify(VerifyLevel::quick, out, err);
    o.require(code == 0, "verify quick exit " + std::to_string(code));
    o.require(out.str().find("[PASS] A000653 n<=6") != std::string::npos, "A000653 suite missing or failed");
    if (o.ok)
        o.detail = "verify quick passes, A000653 suite green";
    return o;
}

// 3 -------------------------------------------------------------------------
Outcome orbit_oracle()
{
    Outcome o;
    const char* want[] = {"2", "7", "1172"};
    double secs = timed([&] {
        for (unsigned n = 1; n <= 3; ++n) {
            auto a = orbit_count_bruteforce(n, OrbitStrategy::burnside);
            auto b = orbit_count_bruteforce(n, OrbitStrategy::union_find);
            auto f = v_n(n).value;
            o.require(a == b, "strategies disagree at n=" + std::to_string(n));
            o.require(a == f && a.get_str() == want[n - 1], "n=" + std::to_string(n) + " got " + a.get_str());
        }
    });
    o.require(secs < 120.0, "took " + fmt(secs) + " (limit 120 s)");
    if (o.ok)
        o.detail = "2, 7, 1172 by Burnside enumeration and union-find in " + fmt(secs);
    return o;
}

// 4 -------------------------------------------------------------------------
Outcome induced_spec_equivalence()
{
    Outcome o;
    std::size_t checked = 0;
    double secs = timed([&] {
        auto e = e_sequence(12);
        for (unsigned n = 1; n <= 12; ++n) {
            for (const auto& p : partitions(n)) {
                auto direct = spec_of_permutation(sigma_prime(VariablePermutation::canonical(p)));
                o.require(induced_spec(p, e, InducedSpecMode::optimized) == direct, "optimized " + p.to_string());
                o.require(induced_spec(p, e, InducedSpecMode::reference) == direct, "reference " + p.to_string());
                ++checked;
            }
        }
    });
    o.require(secs < 60.0, "took " + fmt(secs) + " (limit 60 s)");
    if (o.ok)
        o.detail = std::to_string(checked) + " partitions, both modes, in " + fmt(secs);
    return o;
}

// 5 -------------------------------------------------------------------------
Outcome fixed_point_facts()
{
    Outcome o;
    std::size_t pairs = 0;
    double secs = timed([&] {
        for (unsigned n : {2u, 3u}) {
            auto e = e_sequence(n);
            for (const auto& p : partitions(n)) {
                for (const auto& q : partitions(n)) {
                    auto count = fixed_points_count(VariablePermutation::canonical(p),
                                                    VariablePermutation::canonical(q));
                    mpz_class want = p == q ? n_p(induced_spec(p, e)) : mpz_class(0);
                    o.require(want == static_cast<unsigned long>(count),
                              p.to_string() + "x" + q.to_string());
                    ++pairs;
                }
            }
        }
    });
    o.require(secs < 120.0, "took " + fmt(secs) + " (limit 120 s)");
    if (o.ok)
        o.detail = std::to_string(pairs) + " class pairs at n=2,3 in " + fmt(secs);
    return o;
}

// 6 -------------------------------------------------------------------------
Outcome e_sequence_identity()
{
    Outcome o;
    auto e = e_sequence(kMaxESequence);
    for (unsigned k = 1; k <= kMaxESequence; ++k)
        o.require(e.divisor_sum_holds(k), "k=" + std::to_string(k));
    const std::uint64_t first[] = {2, 1, 2, 3, 6, 9};
    for (unsigned k = 1; k <= 6; ++k)
        o.require(e(k) == first[k - 1], "e(" + std::to_string(k) + ")");
    if (o.ok)
        o.detail = "identity holds for k<=64, e(1..6) = 2,1,2,3,6,9";
    return o;
}

// 7 -------------------------------------------------------------------------
Outcome integrality_and_bound()
{
    Outcome o;
    double secs = timed([&] {
        for (unsigned n = 1; n <= 16; ++n) {
            auto e = e_sequence(n);
            mpq_class sum = 0;
            for (const auto& p : partitions(n))
                sum += term_for_partition(p, e).term;
            sum.canonicalize();
            o.require(sum.get_den() == 1, "rational sum not integral at n=" + std::to_string(n));
            mpz_class value = v_n(n).value;
            o.require(sum.get_num() == value, "routes disagree at n=" + std::to_string(n));
            mpz_class nf = fact(n);
            o.require(value * nf * nf >= fact(1ul << n), "bound fails at n=" + std::to_string(n));
        }
    });
    if (o.ok)
        o.detail = "denominator 1 and value*(n!)^2 >= (2^n)! for n<=16 (" + fmt(secs) + ")";
    return o;
}

// 8 -------------------------------------------------------------------------
Outcome cross_mode()
{
    Outcome o;
    double worst = 0;
    for (unsigned n = 1; n <= 12; ++n) {
        mpz_class exact = v_n(n).value;
        for (std::uint64_t m : kCheckPrimes) {
            mpz_class want = exact % mpz_class(static_cast<unsigned long>(m));
            o.require(v_n_mod(n, m).residue == want.get_ui(),
                      "mod " + std::to_string(m) + " at n=" + std::to_string(n));
        }
        double want = log10_of(exact);
        double rel = std::abs(log10_v_n(n).value - want) / want;
        worst = std::max(worst, rel);
        o.require(rel <= 1e-6, "log10 at n=" + std::to_string(n));
    }
    if (o.ok) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "3 primes agree for n<=12; worst log10 relative error %.2e", worst);
        o.detail = buf;
    }
    return o;
}

// 9 -------------------------------------------------------------------------
Outcome determinism()
{
    Outcome o;
    auto one = v_n(14, {1});
    auto four = v_n(14, {4});
    o.require(one.value == four.value, "V_14 differs between 1 and 4 workers");
    if (o.ok)
        o.detail = "V_14 bit-identical with 1 and 4 workers (" +
                   std::to_string(mpz_sizeinbase(one.value.get_mpz_t(), 10)) + " digits)";
    return o;
}

// 10 ------------------------------------------------------------------------
Outcome desk_scale_performance()
{
    Outcome o;
    double t16 = timed([&] { v_n(16); });
    o.require(t16 < 60.0, "V_16 took " + fmt(t16));
    double t20 = timed([&] { v_n(20); });
    o.require(t20 < 900.0, "V_20 took " + fmt(t20));

    auto path = std::filesystem::temp_directory_path() / "vnclass_acceptance_bench.csv";
    std::ostringstream out, err;
    int code = cli::cmd_bench({16, path.string(), 0, kDefaultMemoryBudget >> 20}, out, err);
    o.require(code == 0, "bench exit " + std::to_string(code));
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    o.require(line == "n,t_total_s,t_cycle_index_s", "bad CSV header");
    std::vector<double> fraction(17, -1);
    unsigned rows = 0;
    while (std::getline(in, line)) {
        unsigned n;
        double total, ci;
        if (std::sscanf(line.c_str(), "%u,%lf,%lf", &n, &total, &ci) != 3 || n != rows + 1) {
            o.require(false, "malformed row '" + line + "'");
            break;
        }
        o.require(ci <= total, "t_cycle_index_s > t_total_s at n=" + std::to_string(n));
        fraction[n] = total > 0 ? ci / total : 1.0;
        ++rows;
    }
    o.require(rows == 16, "expected 16 rows, got " + std::to_string(rows));
    if (rows == 16)
        o.require(fraction[16] < fraction[8], "cycle-index fraction did not shrink from n=8 to n=16");
    std::filesystem::remove(path);
    if (o.ok) {
        char buf[192];
        std::snprintf(buf, sizeof buf,
                      "V_16 %.2f s, V_20 %.2f s; CSV ok, cycle-index fraction %.4f (n=8) > %.6f (n=16)",
                      t16, t20, fraction[8], fraction[16]);
        o.detail = buf;
    }
    return o;
}

// 11 ------------------------------------------------------------------------
Outcome thirty_variables()
{
    Outcome o;
    double lg = 0;
    double t_log = timed([&] { lg = log10_v_n(30).value; });
    o.require(std::isfinite(lg) && lg > 0, "log10 estimate not finite and positive");
    o.require(t_log < 1.0, "log10 took " + fmt(t_log));

    const std::uint64_t m = kCheckPrimes[2];
    std::uint64_t residue = 0;
    double t_mod = timed([&] { residue = v_n_mod(30, m).residue; });
    o.require(t_mod < 600.0, "modular took " + fmt(t_mod));

    bool refused = false;
    try {
        v_n(30);
    } catch (const resource_error&) {
        refused = true;
    }
    o.require(refused, "exact V_30 did not raise a resource error");
    if (o.ok) {
        char buf[192];
        std::snprintf(buf, sizeof buf,
                      "log10 V_30 = %.6f in %.3f s; V_30 mod %llu = %llu in %.1f s; exact refused",
                      lg, t_log, static_cast<unsigned long long>(m),
                      static_cast<unsigned long long>(residue), t_mod);
        o.detail = buf;
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1  known values n=1..9", known_values_one_to_nine},
        {"AC2  A000653 n<=6 in verify quick", a000653_in_quick_verify},
        {"AC3  brute-force orbit oracle n<=3", orbit_oracle},
        {"AC4  induced cycle index vs explicit sigma' n<=12", induced_spec_equivalence},
        {"AC5  fixed-point enumeration n=2,3", fixed_point_facts},
        {"AC6  e-sequence identity k<=64", e_sequence_identity},
        {"AC7  integrality and lower bound n<=16", integrality_and_bound},
        {"AC8  modular and log10 consistency n<=12", cross_mode},
        {"AC9  determinism across worker counts", determinism},
        {"AC10 desk-scale performance and bench CSV", desk_scale_performance},
        {"AC11 n=30 log10, modular, exact refusal", thirty_variables},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& ex) {
            o.ok = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        failed += !o.ok;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << " : " << o.detail << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
              << std::endl;
    return failed ? 1 : 0;
}
