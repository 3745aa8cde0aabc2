#pragma once

// Orbit count V_n of invertible maps {0,1}^n -> {0,1}^n under permutation of
// input and output variables:
//
//   V_n = sum over partitions p of n of  N_p / z_p^2,
//
// where z_p = prod i^{p_i} p_i! and N_p = prod i^{p'_i} p'_i! is taken over
// the cycle type p' that a permutation of type p induces on {0,1}^n.
// Exact, modular and log10 evaluations are provided.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "cycle_index.hpp"
#include "errors.hpp"
#include "numtheory.hpp"
#include "parallel.hpp"

namespace vnclass {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;

struct VnOptions {
    unsigned threads = 0;                               ///< 0 selects all hardware threads
    std::uint64_t memory_budget = kDefaultMemoryBudget; ///< bytes, exact mode only
};

struct TermReport {
    Partition partition;
    CycleIndexMonomial spec_prime;
    mpz_class numerator;   ///< N_p
    mpz_class denominator; ///< z_p^2
    mpq_class term;        ///< numerator / denominator, canonical
};

struct VnResult {
    unsigned n = 0;
    mpz_class value;
    std::size_t num_partitions = 0;
    double elapsed_cycle_index = 0; ///< seconds spent on partitions and induced cycle indices
    double elapsed_total = 0;       ///< seconds end to end
};

struct VnModResult {
    unsigned n = 0;
    std::uint64_t modulus = 0;
    std::uint64_t residue = 0;
    std::size_t num_partitions = 0;
    double elapsed_cycle_index = 0;
    double elapsed_total = 0;
};

struct VnLog10Result {
    unsigned n = 0;
    double value = 0; ///< log10 V_n
    std::size_t num_partitions = 0;
    double elapsed_cycle_index = 0;
    double elapsed_total = 0;
};

namespace detail {

using clock = std::chrono::steady_clock;

inline double seconds_since(clock::time_point start)
{
    return std::chrono::duration<double>(clock::now() - start).count();
}

/// Balanced product; consumes the factors.
inline mpz_class product_tree(std::vector<mpz_class>& factors)
{
    if (factors.empty())
        return 1;
    while (factors.size() > 1) {
        std::size_t half = (factors.size() + 1) / 2;
        for (std::size_t i = 0; i + half < factors.size(); ++i)
            factors[i] *= factors[i + half];
        factors.resize(half);
    }
    return std::move(factors.front());
}

inline void check_n(unsigned n)
{
    if (n < 1 || n > kMaxVariables)
        throw invalid_argument("n must be in [1, " + std::to_string(kMaxVariables) + "], got " +
                               std::to_string(n));
}

/// Induced cycle index for every partition of n, in partition order.
inline std::vector<CycleIndexMonomial> induced_specs(const std::vector<Partition>& parts,
                                                     const ESequence& e, unsigned threads)
{
    std::vector<CycleIndexMonomial> specs(parts.size());
    parallel_for(parts.size(), threads,
                 [&](unsigned, std::size_t i) { specs[i] = induced_spec(parts[i], e); });
    return specs;
}

} // namespace detail

/// N_p = prod over cycle lengths i of i^{m_i} * m_i!, the number of maps F
/// fixed by a pair (rho, sigma) of equal cycle type with induced index spec.
inline mpz_class n_p(const CycleIndexMonomial& spec, FactorialCache* cache = nullptr)
{
    std::vector<mpz_class> factors;
    factors.reserve(2 * spec.size());
    for (auto [len, mult] : spec.terms()) {
        if (len > 1) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), len, mult);
            factors.push_back(std::move(pw));
        }
        if (mult > 1)
            factors.push_back(cache ? cache->get(mult) : factorial(mult));
    }
    return detail::product_tree(factors);
}

inline TermReport term_for_partition(const Partition& p, const ESequence& e)
{
    TermReport r{p, induced_spec(p, e), 0, 0, 0};
    r.numerator = n_p(r.spec_prime);
    mpz_class z = centralizer_order(p);
    r.denominator = z * z;
    r.term = mpq_class(r.numerator, r.denominator);
    r.term.canonicalize();
    return r;
}

/// log2 of (2^n)!, the size in bits of the largest factorial exact mode needs.
inline double log2_largest_factorial(unsigned n)
{
    return std::lgamma(std::ldexp(1.0, static_cast<int>(n)) + 1.0) / std::log(2.0);
}

/// Rough peak heap use of v_n, as a multiple of the size of (2^n)!. Measured
/// peaks are about 8x on one worker; each extra worker holds another product
/// and partial sum.
inline std::uint64_t estimate_exact_peak_bytes(unsigned n, unsigned threads)
{
    if (threads == 0)
        threads = default_thread_count();
    double bytes = log2_largest_factorial(n) / 8.0;
    double factor = 8.0 + 2.0 * threads;
    double est = bytes * factor;
    if (est >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(est);
}

/// Exact V_n. The sum is carried over the common denominator (n!)^2:
/// sum_p N_p * |S_{n,p}|^2, then divided exactly.
inline VnResult v_n(unsigned n, const VnOptions& opts = {})
{
    detail::check_n(n);
    const unsigned threads = opts.threads ? opts.threads : default_thread_count();
    const std::uint64_t need = estimate_exact_peak_bytes(n, threads);
    if (need > opts.memory_budget)
        throw resource_error("exact V_" + std::to_string(n) + " needs an estimated " +
                             std::to_string(need >> 20) + " MiB, over the budget of " +
                             std::to_string(opts.memory_budget >> 20) +
                             " MiB; use log10 or mod:<prime> mode instead");

    const auto start = detail::clock::now();
    VnResult result;
    result.n = n;

    const auto parts = partitions(n);
    const ESequence e = e_sequence(n);
    const auto specs = detail::induced_specs(parts, e, threads);
    result.num_partitions = parts.size();
    result.elapsed_cycle_index = detail::seconds_since(start);

    // Factorial arguments shared between partitions are computed once and
    // evicted after their last use.
    std::unordered_map<std::uint64_t, std::atomic<std::uint32_t>> uses;
    for (const auto& s : specs)
        for (auto [len, mult] : s.terms())
            if (mult > 1)
                ++uses[mult];
    FactorialCache cache;

    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), n);

    // Integer addition is exact and commutative, so per-worker partial sums
    // give the same total for any schedule.
    std::vector<mpz_class> partial(threads, 0);
    parallel_for(parts.size(), threads, [&](unsigned worker, std::size_t i) {
        mpz_class size = class_size(parts[i]);
        mpz_class contribution = n_p(specs[i], &cache);
        for (auto [len, mult] : specs[i].terms())
            if (mult > 1 && --uses.at(mult) == 0)
                cache.erase(mult);
        contribution *= size;
        contribution *= size;
        partial[worker] += contribution;
    });

    mpz_class total = 0;
    for (auto& s : partial)
        total += s;
    mpz_class denom = n_fact * n_fact;
    if (!mpz_divisible_p(total.get_mpz_t(), denom.get_mpz_t()))
        throw invariant_violation("V_" + std::to_string(n) + ": orbit sum is not an integer");
    mpz_divexact(result.value.get_mpz_t(), total.get_mpz_t(), denom.get_mpz_t());

    result.elapsed_total = detail::seconds_since(start);
    return result;
}

/// V_n mod m for a prime m > n, entirely in modular arithmetic.
inline VnModResult v_n_mod(unsigned n, std::uint64_t m, const VnOptions& opts = {})
{
    detail::check_n(n);
    if (m <= n)
        throw invalid_argument("modulus must exceed n");
    if (!is_prime(m))
        throw invalid_argument("modulus " + std::to_string(m) + " is not prime");

    const unsigned threads = opts.threads ? opts.threads : default_thread_count();
    const auto start = detail::clock::now();
    VnModResult result;
    result.n = n;
    result.modulus = m;

    const auto parts = partitions(n);
    const ESequence e = e_sequence(n);
    const auto specs = detail::induced_specs(parts, e, threads);
    result.num_partitions = parts.size();
    result.elapsed_cycle_index = detail::seconds_since(start);

    // One ascending sweep of k! mod m, sampled at every argument needed.
    std::set<std::uint64_t> args;
    for (const auto& s : specs)
        for (auto [len, mult] : s.terms())
            args.insert(mult);
    std::unordered_map<std::uint64_t, std::uint64_t> fact;
    fact.reserve(args.size());
    std::uint64_t acc = 1 % m, k = 1;
    for (std::uint64_t target : args) {
        if (acc == 0) {
            fact[target] = 0; // k! for k >= m
            continue;
        }
        for (; k < target; ) {
            ++k;
            acc = mulmod(acc, k % m, m);
            if (acc == 0)
                break;
        }
        fact[target] = acc;
    }

    std::vector<std::uint64_t> partial(threads, 0);
    parallel_for(parts.size(), threads, [&](unsigned worker, std::size_t i) {
        std::uint64_t num = 1 % m;
        for (auto [len, mult] : specs[i].terms())
            num = mulmod(mulmod(num, powmod(len % m, mult, m), m), fact.at(mult), m);
        std::uint64_t z = 1 % m;
        for (auto [len, count] : parts[i].groups()) {
            z = mulmod(z, powmod(len, count, m), m);
            for (unsigned j = 2; j <= count; ++j)
                z = mulmod(z, j, m);
        }
        std::uint64_t zi = invmod(z, m);
        std::uint64_t term = mulmod(num, mulmod(zi, zi, m), m);
        partial[worker] = addmod(partial[worker], term, m);
    });
    std::uint64_t sum = 0;
    for (std::uint64_t s : partial)
        sum = addmod(sum, s, m);
    result.residue = sum;
    result.elapsed_total = detail::seconds_since(start);
    return result;
}

/// log10 V_n through log-gamma and a log-sum-exp over the partition terms.
/// Each term carries roughly 1e-15 relative error from lgammal, so the
/// estimate is good to about 1e-12 relative for every supported n.
inline VnLog10Result log10_v_n(unsigned n, const VnOptions& opts = {})
{
    detail::check_n(n);
    const unsigned threads = opts.threads ? opts.threads : default_thread_count();
    const auto start = detail::clock::now();
    VnLog10Result result;
    result.n = n;

    const auto parts = partitions(n);
    const ESequence e = e_sequence(n);
    const auto specs = detail::induced_specs(parts, e, threads);
    result.num_partitions = parts.size();
    result.elapsed_cycle_index = detail::seconds_since(start);

    const long double ln10 = std::log(10.0L);
    auto log10_fact = [&](long double k) { return std::lgamma(k + 1.0L) / ln10; };

    std::vector<long double> terms(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        long double t = 0;
        for (auto [len, mult] : specs[i].terms())
            t += static_cast<long double>(mult) * std::log10(static_cast<long double>(len)) +
                 log10_fact(static_cast<long double>(mult));
        for (auto [len, count] : parts[i].groups())
            t -= 2.0L * (count * std::log10(static_cast<long double>(len)) + log10_fact(count));
        terms[i] = t;
    }
    long double top = *std::max_element(terms.begin(), terms.end());
    long double scaled = 0;
    for (long double t : terms)
        scaled += std::pow(10.0L, t - top);
    result.value = static_cast<double>(top + std::log10(scaled));
    result.elapsed_total = detail::seconds_since(start);
    return result;
}

} // namespace vnclass
