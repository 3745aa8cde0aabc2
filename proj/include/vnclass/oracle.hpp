#pragma once

// Brute-force ground truth for small n. Points of {0,1}^n are encoded as
// integers with x_1 in the least significant bit: X = sum x_i 2^{i-1}.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cycle_index.hpp"
#include "errors.hpp"
#include "numtheory.hpp"

namespace vnclass {

/// Largest n for which the induced permutation is materialised as a table.
inline constexpr unsigned kMaxExplicitVariables = 24;

/// Largest n for which maps {0,1}^n -> {0,1}^n are enumerated one by one.
inline constexpr unsigned kMaxEnumerationVariables = 3;

/// A permutation of {0, ..., size-1} stored as its image table.
class ExplicitPermutation {
public:
    explicit ExplicitPermutation(std::vector<std::uint32_t> table) : table_(std::move(table))
    {
        std::vector<bool> seen(table_.size(), false);
        for (auto v : table_) {
            if (v >= table_.size() || seen[v])
                throw invalid_argument("explicit permutation table is not a bijection");
            seen[v] = true;
        }
    }

    static ExplicitPermutation identity(std::size_t size)
    {
        std::vector<std::uint32_t> t(size);
        std::iota(t.begin(), t.end(), 0u);
        return ExplicitPermutation(std::move(t));
    }

    std::size_t size() const { return table_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
    std::span<const std::uint32_t> table() const { return table_; }

    friend bool operator==(const ExplicitPermutation&, const ExplicitPermutation&) = default;

private:
    std::vector<std::uint32_t> table_;
};

/// A permutation sigma of the variable positions. Positions are 0-based
/// here: image(i) == sigma(i + 1) - 1.
class VariablePermutation {
public:
    explicit VariablePermutation(std::vector<unsigned> images) : images_(std::move(images))
    {
        if (images_.empty())
            throw invalid_argument("variable permutation needs n >= 1");
        std::vector<bool> seen(images_.size(), false);
        for (unsigned v : images_) {
            if (v >= images_.size() || seen[v])
                throw invalid_argument("variable permutation is not a bijection");
            seen[v] = true;
        }
    }

    /// From the usual 1-based image list sigma(1), ..., sigma(n).
    static VariablePermutation from_one_based(std::vector<unsigned> images)
    {
        for (auto& v : images) {
            if (v == 0)
                throw invalid_argument("1-based images must be positive");
            --v;
        }
        return VariablePermutation(std::move(images));
    }

    static VariablePermutation identity(unsigned n)
    {
        std::vector<unsigned> im(n);
        std::iota(im.begin(), im.end(), 0u);
        return VariablePermutation(std::move(im));
    }

    /// Cycles of p laid out over consecutive positions, longest cycle first.
    static VariablePermutation canonical(const Partition& p)
    {
        std::vector<unsigned> im(p.n());
        unsigned base = 0;
        for (unsigned k : p.summands()) {
            for (unsigned j = 0; j < k; ++j)
                im[base + j] = base + (j + 1) % k;
            base += k;
        }
        return VariablePermutation(std::move(im));
    }

    unsigned n() const { return static_cast<unsigned>(images_.size()); }
    unsigned operator()(unsigned i) const { return images_[i]; }
    std::span<const unsigned> images() const { return images_; }

    Partition cycle_type() const
    {
        std::vector<unsigned> lengths;
        std::vector<bool> seen(images_.size(), false);
        for (unsigned s = 0; s < images_.size(); ++s) {
            if (seen[s])
                continue;
            unsigned len = 0;
            for (unsigned x = s; !seen[x]; x = images_[x]) {
                seen[x] = true;
                ++len;
            }
            lengths.push_back(len);
        }
        return Partition::from_summands(std::move(lengths));
    }

    friend bool operator==(const VariablePermutation&, const VariablePermutation&) = default;

private:
    std::vector<unsigned> images_;
};

/// Every permutation of n positions, in lexicographic order of image lists.
inline std::vector<VariablePermutation> all_variable_permutations(unsigned n)
{
    if (n < 1 || n > 10)
        throw resource_error("all_variable_permutations: n must be in [1, 10]");
    std::vector<unsigned> im(n);
    std::iota(im.begin(), im.end(), 0u);
    std::vector<VariablePermutation> out;
    do
        out.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
    return out;
}

/// sigma'(X) = (x_{sigma(1)}, ..., x_{sigma(n)}) as a table on 2^n points.
inline ExplicitPermutation sigma_prime(const VariablePermutation& sigma)
{
    const unsigned n = sigma.n();
    if (n > kMaxExplicitVariables)
        throw resource_error("sigma_prime: n = " + std::to_string(n) + " exceeds the table limit");
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<std::uint32_t> table(size);
    for (std::uint32_t x = 0; x < size; ++x) {
        std::uint32_t y = 0;
        for (unsigned i = 0; i < n; ++i)
            y |= ((x >> sigma(i)) & 1u) << i;
        table[x] = y;
    }
    return ExplicitPermutation(std::move(table));
}

/// Cycle lengths of perm, found by walking and marking each cycle.
inline CycleIndexMonomial spec_of_permutation(const ExplicitPermutation& perm)
{
    CycleIndexMonomial spec;
    std::vector<bool> seen(perm.size(), false);
    for (std::uint32_t s = 0; s < perm.size(); ++s) {
        if (seen[s])
            continue;
        std::uint64_t len = 0;
        for (std::uint32_t x = s; !seen[x]; x = perm(x)) {
            seen[x] = true;
            ++len;
        }
        spec.add(len, 1);
    }
    return spec;
}

namespace detail {

inline void check_enumerable(unsigned n, const char* what)
{
    if (n < 1 || n > kMaxEnumerationVariables)
        throw resource_error(std::string(what) + ": enumerating all maps is limited to n <= 3");
}

using PointTable = std::array<std::uint8_t, 8>;

/// 2^n for an enumerable n; bounded by the PointTable capacity.
inline std::size_t point_count(unsigned n)
{
    const std::size_t size = std::size_t{1} << n;
    if (size > std::tuple_size_v<PointTable>)
        throw resource_error("too many points for brute-force enumeration");
    return size;
}

inline PointTable small_table(const ExplicitPermutation& p)
{
    PointTable t{};
    for (std::uint32_t x = 0; x < p.size(); ++x)
        t[x] = static_cast<std::uint8_t>(p(x));
    return t;
}

/// Lexicographic rank of a permutation of {0, ..., size-1}.
inline std::uint32_t permutation_rank(const PointTable& f, std::size_t size)
{
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < size; ++i) {
        std::uint32_t smaller = 0;
        for (std::size_t j = i + 1; j < size; ++j)
            smaller += f[j] < f[i];
        rank = rank * static_cast<std::uint32_t>(size - i) + smaller;
    }
    return rank;
}

} // namespace detail

/// Number of invertible F on {0,1}^n with F(X) = rho'(F(sigma'(X))) for all X.
inline std::uint64_t fixed_points_count(const VariablePermutation& rho,
                                        const VariablePermutation& sigma)
{
    if (rho.n() != sigma.n())
        throw invalid_argument("fixed_points_count: rho and sigma act on different n");
    detail::check_enumerable(rho.n(), "fixed_points_count");
    const std::size_t size = detail::point_count(rho.n());
    const auto r = detail::small_table(sigma_prime(rho));
    const auto s = detail::small_table(sigma_prime(sigma));

    detail::PointTable f{};
    std::iota(f.begin(), f.begin() + size, std::uint8_t{0});
    std::uint64_t count = 0;
    do {
        bool fixed = true;
        for (std::size_t x = 0; x < size && fixed; ++x)
            fixed = f[x] == r[f[s[x]]];
        count += fixed;
    } while (std::next_permutation(f.begin(), f.begin() + size));
    return count;
}

enum class OrbitStrategy {
    /// Average of enumerated fixed-point counts over all (rho, sigma).
    burnside,
    /// Union-find over all maps, merging F with rho' o F o sigma'.
    union_find,
};

inline mpz_class orbit_count_bruteforce(unsigned n, OrbitStrategy strategy)
{
    detail::check_enumerable(n, "orbit_count_bruteforce");
    const auto group = all_variable_permutations(n);

    if (strategy == OrbitStrategy::burnside) {
        mpz_class total = 0;
        for (const auto& rho : group)
            for (const auto& sigma : group)
                total += fixed_points_count(rho, sigma);
        mpz_class order = static_cast<unsigned long>(group.size() * group.size());
        if (!mpz_divisible_p(total.get_mpz_t(), order.get_mpz_t()))
            throw invariant_violation("Burnside sum is not divisible by the group order");
        return total / order;
    }

    const std::size_t size = detail::point_count(n);
    std::vector<detail::PointTable> induced;
    for (const auto& g : group)
        induced.push_back(detail::small_table(sigma_prime(g)));

    std::uint32_t maps = 1;
    for (std::uint32_t k = 2; k <= size; ++k)
        maps *= k;
    std::vector<std::uint32_t> parent(maps);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    detail::PointTable f{}, g{};
    std::iota(f.begin(), f.begin() + size, std::uint8_t{0});
    do {
        const std::uint32_t fr = detail::permutation_rank(f, size);
        for (const auto& r : induced) {
            for (const auto& s : induced) {
                for (std::size_t x = 0; x < size; ++x)
                    g[x] = r[f[s[x]]];
                std::uint32_t a = find(fr), b = find(detail::permutation_rank(g, size));
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
    } while (std::next_permutation(f.begin(), f.begin() + size));

    std::uint64_t roots = 0;
    for (std::uint32_t x = 0; x < maps; ++x)
        roots += find(x) == x;
    return static_cast<unsigned long>(roots);
}

/// Runs both strategies and insists they agree.
inline mpz_class orbit_count_bruteforce(unsigned n)
{
    mpz_class a = orbit_count_bruteforce(n, OrbitStrategy::burnside);
    mpz_class b = orbit_count_bruteforce(n, OrbitStrategy::union_find);
    if (a != b)
        throw invariant_violation("orbit oracles disagree for n = " + std::to_string(n) + ": " +
                                  a.get_str() + " vs " + b.get_str());
    return a;
}

} // namespace vnclass
