#pragma once

#include "weights.hpp"

namespace agd {

namespace detail {

inline void same_rank(const Weight& a, const Weight& b, const Weight& c)
{
    if (a.size() != b.size() || a.size() != c.size())
        throw invalid_input("local rule: rank mismatch");
}

inline Weight sort_sum(const Weight& a, const Weight& b, const Weight& c)
{
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i] - c[i];
    return sort_desc(r);
}

} // namespace detail

// Square with nw = nu, ne = mu, sw = lambda; returns se.
inline Weight affine_rule(const Weight& lambda, const Weight& mu, const Weight& nu)
{
    detail::same_rank(lambda, mu, nu);
    if (!minuscule_step(nu, lambda) || !minuscule_step(nu, mu))
        throw invalid_input("affine_rule: inputs are not minuscule steps from nw");
    Weight rho = detail::sort_sum(lambda, mu, nu);
    if (!minuscule_step(lambda, rho) || !minuscule_step(mu, rho))
        throw invalid_input("affine_rule: output is not a minuscule step away");
    return rho;
}

// Same formula read from the SE corner, recovers nw.
inline Weight affine_rule_reverse(const Weight& lambda, const Weight& mu, const Weight& rho)
{
    detail::same_rank(lambda, mu, rho);
    if (!minuscule_step(lambda, rho) || !minuscule_step(mu, rho))
        throw invalid_input("affine_rule_reverse: inputs are not minuscule steps to se");
    Weight nu = detail::sort_sum(lambda, mu, rho);
    if (!minuscule_step(nu, lambda) || !minuscule_step(nu, mu))
        throw invalid_input("affine_rule_reverse: output is not a minuscule step away");
    return nu;
}

namespace detail {

// b equals a or a plus one box; returns 0 or 1, throws otherwise.
inline int cover_size(const Partition& a, const Partition& b)
{
    if (!is_partition(a) || !is_partition(b) || !contained(a, b) || total(b) - total(a) > 1)
        throw invalid_input("fomin rule: partitions not in covering relation");
    return total(b) - total(a);
}

inline Partition add_box(Partition p, size_t row)
{
    if (row >= p.size()) p.resize(row + 1, 0);
    ++p[row];
    return p;
}

} // namespace detail

// Classical Fomin rule. lambda is the NW corner, mu and nu the two neighbours.
inline Partition fomin_forward(const Partition& lambda0, const Partition& mu0, const Partition& nu0, bool marked)
{
    auto lambda = trim(lambda0), mu = trim(mu0), nu = trim(nu0);
    detail::cover_size(lambda, mu);
    detail::cover_size(lambda, nu);
    if (mu != nu) {
        Partition r(std::max(mu.size(), nu.size()), 0);
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = std::max(i < mu.size() ? mu[i] : 0, i < nu.size() ? nu[i] : 0);
        return r;
    }
    if (lambda != mu) {
        size_t i = 0;
        while (i < lambda.size() && lambda[i] == mu[i]) ++i;
        return detail::add_box(mu, i + 1);
    }
    return marked ? detail::add_box(lambda, 0) : lambda;
}

inline Partition fomin_transpose(const Partition& lambda, const Partition& mu, const Partition& nu, bool marked)
{
    return transpose(fomin_forward(transpose(trim(lambda)), transpose(trim(mu)), transpose(trim(nu)), marked));
}

// nu < lambda < mu with |mu/nu| = 2: the other middle partition, or lambda on a domino.
inline Partition jdt_rule(const Partition& lambda0, const Partition& mu0, const Partition& nu0)
{
    auto lambda = trim(lambda0), mu = trim(mu0), nu = trim(nu0);
    if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu) || !contained(nu, lambda) ||
        !contained(lambda, mu) || total(mu) - total(nu) != 2 || total(lambda) - total(nu) != 1)
        throw invalid_input("jdt_rule: lambda must sit between nu and mu with |mu/nu| = 2");
    std::vector<Partition> mid;
    for (size_t r = 0; r <= nu.size(); ++r) {
        auto p = trim(detail::add_box(nu, r));
        if (is_partition(p) && contained(p, mu)) mid.push_back(p);
    }
    // Domino: only one middle shape exists.
    if (mid.size() == 1) return lambda;
    for (auto& p : mid)
        if (p != lambda) return p;
    throw invalid_input("jdt_rule: no middle partition");
}

} // namespace agd
