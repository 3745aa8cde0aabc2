#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace vnclass {

/// A single cycle index monomial f_1^{m_1} f_2^{m_2} ..., i.e. the multiset of
/// cycle lengths of one permutation. Zero multiplicities are never stored.
class CycleIndexMonomial {
public:
    using map_type = std::map<std::uint64_t, std::uint64_t>;

    CycleIndexMonomial() = default;

    CycleIndexMonomial(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> terms)
    {
        for (auto [len, mult] : terms)
            add(len, mult);
    }

    /// f_length^multiplicity
    static CycleIndexMonomial power(std::uint64_t length, std::uint64_t multiplicity)
    {
        CycleIndexMonomial m;
        m.add(length, multiplicity);
        return m;
    }

    /// f_1, the neutral element of varprod.
    static CycleIndexMonomial unit() { return power(1, 1); }

    void add(std::uint64_t length, std::uint64_t multiplicity)
    {
        if (length == 0)
            throw invalid_argument("cycle length must be positive");
        if (multiplicity == 0)
            return;
        auto& slot = terms_[length];
        slot = checked_add(slot, multiplicity);
    }

    std::uint64_t multiplicity(std::uint64_t length) const
    {
        auto it = terms_.find(length);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Size of the permuted set: sum of length * multiplicity.
    std::uint64_t weight() const
    {
        std::uint64_t w = 0;
        for (auto [len, mult] : terms_)
            w = checked_add(w, checked_mul(len, mult));
        return w;
    }

    const map_type& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// [[length,multiplicity],...] sorted by length, e.g. [[1,4],[2,6]].
    std::string to_string() const
    {
        std::string s = "[";
        bool first = true;
        for (auto [len, mult] : terms_) {
            if (!first)
                s += ',';
            first = false;
            s += '[' + std::to_string(len) + ',' + std::to_string(mult) + ']';
        }
        return s + "]";
    }

    friend bool operator==(const CycleIndexMonomial&, const CycleIndexMonomial&) = default;

private:
    map_type terms_;
};

/// Cycle index monomial of sigma' when sigma is a single k-cycle:
/// prod_{d|k} f_d^{e(d)}.
inline CycleIndexMonomial cycle_monomial_of_cycle(std::uint64_t k, const ESequence& e)
{
    if (k < 1)
        throw invalid_argument("cycle_monomial_of_cycle: k must be positive");
    if (k > e.k_max())
        throw invalid_argument("cycle_monomial_of_cycle: e-sequence too short for k = " +
                               std::to_string(k));
    CycleIndexMonomial m;
    for (std::uint64_t d : divisors(k))
        m.add(d, e(static_cast<unsigned>(d)));
    return m;
}

/// Cycle index of the componentwise action of two permutations on the
/// product set: f_p^j x f_q^k = f_{lcm(p,q)}^{j k gcd(p,q)}, extended over
/// every term pair.
inline CycleIndexMonomial varprod(const CycleIndexMonomial& a, const CycleIndexMonomial& b)
{
    CycleIndexMonomial out;
    for (auto [p, j] : a.terms()) {
        for (auto [q, k] : b.terms()) {
            std::uint64_t g = std::gcd(p, q);
            out.add(checked_mul(p / g, q), checked_mul(checked_mul(j, k), g));
        }
    }
    return out;
}

/// t-fold varprod of a with itself, by repeated squaring.
inline CycleIndexMonomial varprod_power(CycleIndexMonomial a, std::uint64_t t)
{
    if (t < 1)
        throw invalid_argument("varprod_power: exponent must be positive");
    CycleIndexMonomial result = CycleIndexMonomial::unit();
    for (;;) {
        if (t & 1)
            result = varprod(result, a);
        t >>= 1;
        if (t == 0)
            break;
        a = varprod(a, a);
    }
    return result;
}

enum class InducedSpecMode {
    /// Group equal cycle lengths and combine each group with varprod_power.
    optimized,
    /// Walk the full Cartesian product of divisor tuples, one divisor per cycle.
    reference,
};

namespace detail {

inline CycleIndexMonomial induced_spec_reference(const Partition& p, const ESequence& e)
{
    auto summands = p.summands();
    std::vector<std::vector<std::uint64_t>> divsets;
    divsets.reserve(summands.size());
    for (unsigned k : summands)
        divsets.push_back(divisors(k));

    CycleIndexMonomial spec;
    std::vector<std::size_t> idx(divsets.size(), 0);
    for (;;) {
        // Each divisor z of a k-cycle contributes e(z) cycles of length z; a
        // tuple of such cycles spans z_1 e(z_1) ... z_m e(z_m) points, cut
        // into cycles of length lcm(z_1, ..., z_m).
        std::uint64_t lcm = 1, points = 1;
        for (std::size_t i = 0; i < divsets.size(); ++i) {
            std::uint64_t z = divsets[i][idx[i]];
            lcm = checked_lcm(lcm, z);
            points = checked_mul(points, checked_mul(z, e(static_cast<unsigned>(z))));
        }
        if (points % lcm != 0)
            throw invariant_violation("induced_spec: point count not divisible by cycle length");
        spec.add(lcm, points / lcm);

        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < divsets[i].size())
                break;
            idx[i] = 0;
        }
        if (i == idx.size())
            break;
    }
    return spec;
}

inline CycleIndexMonomial induced_spec_optimized(const Partition& p, const ESequence& e)
{
    CycleIndexMonomial spec = CycleIndexMonomial::unit();
    for (auto [length, count] : p.groups())
        spec = varprod(spec, varprod_power(cycle_monomial_of_cycle(length, e), count));
    return spec;
}

} // namespace detail

/// spec(sigma') for any sigma with cycle type p: the cycle index of the
/// permutation that sigma induces on the 2^n points of {0,1}^n.
inline CycleIndexMonomial induced_spec(const Partition& p, const ESequence& e,
                                       InducedSpecMode mode = InducedSpecMode::optimized)
{
    if (p.n() > e.k_max())
        throw invalid_argument("induced_spec: e-sequence shorter than n = " +
                               std::to_string(p.n()));
    return mode == InducedSpecMode::reference ? detail::induced_spec_reference(p, e)
                                              : detail::induced_spec_optimized(p, e);
}

} // namespace vnclass
