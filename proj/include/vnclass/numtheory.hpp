#pragma once

// Scalar substrate: checked 64-bit arithmetic, divisors, integer partitions,
// the e(k) sequence, factorials and small modular arithmetic helpers.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace vnclass {

/// Largest number of variables accepted anywhere in the library. 2^34 and
/// every multiplicity of an induced cycle index stay well inside uint64.
inline constexpr unsigned kMaxVariables = 34;

/// Largest k for which e(k) is available (2^64 still fits a 128-bit check).
inline constexpr unsigned kMaxESequence = 64;

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("64-bit multiplication overflow: " + std::to_string(a) + " * " +
                             std::to_string(b));
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("64-bit addition overflow: " + std::to_string(a) + " + " +
                             std::to_string(b));
    return r;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b)
{
    return checked_mul(a / std::gcd(a, b), b);
}

inline std::vector<std::uint64_t> divisors(std::uint64_t k)
{
    if (k == 0)
        throw invalid_argument("divisors: k must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d <= k / d; ++d) {
        if (k % d != 0)
            continue;
        low.push_back(d);
        if (d != k / d)
            high.push_back(k / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

// ---------------------------------------------------------------------------
// Partitions

/// A partition of n, held both as the multiplicity vector (p_1, ..., p_n) and
/// as the non-increasing list of summands.
class Partition {
public:
    /// Summands may come in any order; they are stored non-increasing.
    static Partition from_summands(std::vector<unsigned> summands)
    {
        if (summands.empty())
            throw invalid_argument("partition needs at least one summand");
        unsigned n = 0;
        for (unsigned s : summands) {
            if (s == 0)
                throw invalid_argument("partition summands must be positive");
            n += s;
        }
        std::vector<unsigned> counts(n, 0);
        for (unsigned s : summands)
            ++counts[s - 1];
        std::sort(summands.begin(), summands.end(), std::greater<>());
        return Partition(n, std::move(counts), std::move(summands));
    }

    /// counts[i - 1] is the number of parts equal to i.
    static Partition from_counts(std::vector<unsigned> counts)
    {
        std::vector<unsigned> summands;
        for (std::size_t i = counts.size(); i-- > 0;)
            summands.insert(summands.end(), counts[i], static_cast<unsigned>(i + 1));
        return from_summands(std::move(summands));
    }

    unsigned n() const { return n_; }

    /// Number of parts equal to `length` (p_length); zero outside 1..n.
    unsigned count(unsigned length) const
    {
        return (length >= 1 && length <= n_) ? counts_[length - 1] : 0;
    }

    std::span<const unsigned> counts() const { return counts_; }
    std::span<const unsigned> summands() const { return summands_; }

    /// (length, count) for each distinct part, longest first.
    std::vector<std::pair<unsigned, unsigned>> groups() const
    {
        std::vector<std::pair<unsigned, unsigned>> out;
        for (unsigned len = n_; len >= 1; --len)
            if (counts_[len - 1] != 0)
                out.emplace_back(len, counts_[len - 1]);
        return out;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < summands_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(summands_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Partition(unsigned n, std::vector<unsigned> counts, std::vector<unsigned> summands)
        : n_(n), counts_(std::move(counts)), summands_(std::move(summands))
    {
    }

    unsigned n_;
    std::vector<unsigned> counts_;
    std::vector<unsigned> summands_;
};

/// Every partition of n, summand lists in lexicographically decreasing order
/// ([n] first, [1,...,1] last).
inline std::vector<Partition> partitions(unsigned n, unsigned max_n = kMaxVariables)
{
    if (n < 1 || n > max_n)
        throw invalid_argument("partitions: n must be in [1, " + std::to_string(max_n) + "], got " +
                               std::to_string(n));
    std::vector<Partition> out;
    std::vector<unsigned> parts{n};
    for (;;) {
        out.push_back(Partition::from_summands(parts));
        // Rightmost part larger than one; everything after it is a 1.
        auto it = std::find_if(parts.rbegin(), parts.rend(), [](unsigned v) { return v > 1; });
        if (it == parts.rend())
            break;
        std::size_t pos = static_cast<std::size_t>(parts.rend() - it) - 1;
        unsigned rest = static_cast<unsigned>(parts.size() - pos - 1) + 1;
        unsigned v = --parts[pos];
        parts.resize(pos + 1);
        while (rest > 0) {
            unsigned take = std::min(v, rest);
            parts.push_back(take);
            rest -= take;
        }
    }
    return out;
}

/// Order of the centraliser of a permutation with cycle type p:
/// prod_i i^{p_i} * p_i!.
inline mpz_class centralizer_order(const Partition& p)
{
    mpz_class z = 1;
    for (unsigned i = 1; i <= p.n(); ++i) {
        unsigned c = p.count(i);
        if (c == 0)
            continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), i, c);
        z *= t;
        mpz_fac_ui(t.get_mpz_t(), c);
        z *= t;
    }
    return z;
}

/// Number of permutations of S_n with cycle type p: n! / centralizer_order(p).
inline mpz_class class_size(const Partition& p)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), p.n());
    mpz_class z = centralizer_order(p);
    if (!mpz_divisible_p(f.get_mpz_t(), z.get_mpz_t()))
        throw invariant_violation("class_size: n! not divisible by centraliser order");
    mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), z.get_mpz_t());
    return f;
}

// ---------------------------------------------------------------------------
// e(k): number of d-cycles a single k-cycle of variables induces on 2^k points

class ESequence {
public:
    ESequence() = default;

    /// Wraps raw values e(1), e(2), ... without validating them. Use
    /// e_sequence() for the real thing; this exists so callers can probe
    /// consumers with a deliberately wrong sequence.
    explicit ESequence(std::vector<std::uint64_t> values) : values_(std::move(values)) {}

    unsigned k_max() const { return static_cast<unsigned>(values_.size()); }

    std::uint64_t operator()(unsigned k) const
    {
        if (k < 1 || k > values_.size())
            throw invalid_argument("e-sequence does not cover k = " + std::to_string(k));
        return values_[k - 1];
    }

    std::span<const std::uint64_t> values() const { return values_; }

    /// Checks sum_{d|k} d * e(d) == 2^k.
    bool divisor_sum_holds(unsigned k) const
    {
        if (k < 1 || k > values_.size() || k > kMaxESequence)
            return false;
        unsigned __int128 sum = 0;
        for (std::uint64_t d : divisors(k))
            sum += static_cast<unsigned __int128>(d) * values_[d - 1];
        return sum == (static_cast<unsigned __int128>(1) << k);
    }

private:
    std::vector<std::uint64_t> values_;
};

inline ESequence e_sequence(unsigned k_max)
{
    if (k_max < 1 || k_max > kMaxESequence)
        throw invalid_argument("e_sequence: k_max must be in [1, 64], got " +
                               std::to_string(k_max));
    std::vector<std::uint64_t> e(k_max);
    e[0] = 2;
    for (unsigned k = 2; k <= k_max; ++k) {
        unsigned __int128 rest = static_cast<unsigned __int128>(1) << k;
        for (std::uint64_t d : divisors(k)) {
            if (d == k)
                break;
            rest -= static_cast<unsigned __int128>(d) * e[d - 1];
        }
        if (rest % k != 0)
            throw invariant_violation("e_sequence: non-integral e(" + std::to_string(k) + ")");
        e[k - 1] = static_cast<std::uint64_t>(rest / k);
    }
    return ESequence(std::move(e));
}

// ---------------------------------------------------------------------------
// Factorials

namespace detail {

inline mpz_class range_product(std::uint64_t lo, std::uint64_t hi)
{
    if (lo > hi)
        return 1;
    if (hi - lo < 32) {
        mpz_class acc = 1;
        std::uint64_t word = 1;
        for (std::uint64_t k = lo;; ++k) {
            std::uint64_t next;
            if (__builtin_mul_overflow(word, k, &next)) {
                mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), word);
                word = k;
            } else {
                word = next;
            }
            if (k == hi)
                break;
        }
        mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), word);
        return acc;
    }
    std::uint64_t mid = lo + (hi - lo) / 2;
    mpz_class left = range_product(lo, mid);
    mpz_class right = range_product(mid + 1, hi);
    left *= right;
    return left;
}

} // namespace detail

/// k! by balanced binary splitting of the range 2..k.
inline mpz_class factorial(std::uint64_t k)
{
    return detail::range_product(2, k);
}

/// Thread-safe memo of factorials; each argument is computed at most once
/// and returned references stay valid for the cache's lifetime.
class FactorialCache {
public:
    const mpz_class& get(std::uint64_t k)
    {
        Entry* entry;
        {
            std::lock_guard lock(mutex_);
            auto& slot = entries_[k];
            if (!slot)
                slot = std::make_unique<Entry>();
            entry = slot.get();
        }
        std::call_once(entry->once, [&] { entry->value = factorial(k); });
        return entry->value;
    }

    /// Drops a memoised value. The caller guarantees no reference to it is
    /// still in use; a later get() recomputes it.
    void erase(std::uint64_t k)
    {
        std::lock_guard lock(mutex_);
        entries_.erase(k);
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return entries_.size();
    }

private:
    struct Entry {
        std::once_flag once;
        mpz_class value;
    };

    mutable std::mutex mutex_;
    std::unordered_map<std::uint64_t, std::unique_ptr<Entry>> entries_;
};

// ---------------------------------------------------------------------------
// Arithmetic modulo a 64-bit prime

/// (a + b) mod m for a, b < m, without 64-bit wraparound.
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return a >= m - b ? a - (m - b) : a + b;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin for the whole 64-bit range.
inline bool is_prime(std::uint64_t m)
{
    if (m < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (m % p == 0)
            return m == p;
    }
    std::uint64_t d = m - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, m);
        if (x == 1 || x == m - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Inverse of a modulo the prime m; a must not be a multiple of m.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m)
{
    if (a % m == 0)
        throw invariant_violation("invmod: value is not invertible");
    return powmod(a, m - 2, m);
}

} // namespace vnclass
