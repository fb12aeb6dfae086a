#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace agd {

// Bad input from the caller.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Something that the theory says cannot happen did happen.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A GL_m dominant weight: weakly decreasing, length is the rank m.
// Entries stay tiny (|x| <= n) for everything in scope, plain int is plenty.
using Weight = std::vector<int>;

// Trailing zeros trimmed.
using Partition = std::vector<int>;

struct WeightPair {
    Partition positive;
    Partition negative;
    bool operator==(const WeightPair&) const = default;
};

enum class Kind { fund, dual };

struct MinusculeLabel {
    Kind kind = Kind::fund;
    int j = 1;
    bool operator==(const MinusculeLabel&) const = default;
};

template <class Seq>
Seq sort_desc(Seq v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

template <class Seq>
bool is_dominant(const Seq& v)
{
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

inline int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline Partition trim(Partition p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline bool is_partition(const Partition& p)
{
    return is_dominant(p) && (p.empty() || p.back() >= 0);
}

inline Weight zero_weight(int m) { return Weight(m, 0); }

inline Weight dual(const Weight& w)
{
    Weight r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = -w[w.size() - 1 - i];
    return r;
}

inline MinusculeLabel dual(MinusculeLabel l)
{
    l.kind = l.kind == Kind::fund ? Kind::dual : Kind::fund;
    return l;
}

inline WeightPair split_parts(const Weight& w)
{
    WeightPair p;
    for (int x : w)
        if (x > 0) p.positive.push_back(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (*it < 0) p.negative.push_back(-*it);
    return p;
}

inline Weight join_parts(const WeightPair& p, int m)
{
    auto a = trim(p.positive), b = trim(p.negative);
    if (int(a.size() + b.size()) > m)
        throw invalid_input("join_parts: partitions do not fit in rank " + std::to_string(m));
    Weight w(m, 0);
    std::copy(a.begin(), a.end(), w.begin());
    for (size_t i = 0; i < b.size(); ++i) w[m - 1 - i] = -b[i];
    return w;
}

inline Weight minuscule_vector(MinusculeLabel l, int m)
{
    if (l.j < 1 || l.j > m)
        throw invalid_input("minuscule index " + std::to_string(l.j) + " out of range for m=" + std::to_string(m));
    Weight w(m, 0);
    if (l.kind == Kind::fund)
        std::fill(w.begin(), w.begin() + l.j, 1);
    else
        std::fill(w.end() - l.j, w.end(), -1);
    return w;
}

// Every dominant nu with nu - mu a +-1 pattern of size j.
// Brute force over all C(m,j) supports, no shortcuts.
inline std::vector<Weight> pieri_neighbors(const Weight& mu, MinusculeLabel l)
{
    const int m = int(mu.size());
    if (l.j < 1 || l.j > m) throw invalid_input("pieri_neighbors: bad minuscule index");
    const int s = l.kind == Kind::fund ? 1 : -1;
    std::vector<Weight> out;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + l.j, true);
    do {
        Weight nu = mu;
        for (int i = 0; i < m; ++i)
            if (pick[i]) nu[i] += s;
        if (is_dominant(nu)) out.push_back(nu);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// If b - a is a Weyl translate of a minuscule weight, return that label.
inline bool minuscule_step(const Weight& a, const Weight& b, MinusculeLabel* out = nullptr)
{
    if (a.size() != b.size()) return false;
    int plus = 0, minus = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int d = b[i] - a[i];
        if (d == 1) ++plus;
        else if (d == -1) ++minus;
        else if (d != 0) return false;
    }
    if (plus && minus) return false;
    if (!plus && !minus) return false;
    if (out) *out = plus ? MinusculeLabel{Kind::fund, plus} : MinusculeLabel{Kind::dual, minus};
    return true;
}

inline Partition transpose(const Partition& p)
{
    Partition t;
    if (p.empty()) return t;
    for (int c = 0; c < p[0]; ++c) {
        int h = 0;
        while (h < int(p.size()) && p[h] > c) ++h;
        t.push_back(h);
    }
    return t;
}

inline bool contained(const Partition& a, const Partition& b)
{
    if (a.size() > b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::string label_str(MinusculeLabel l)
{
    return (l.kind == Kind::fund ? "f" : "d") + std::to_string(l.j);
}

inline MinusculeLabel parse_label(const std::string& s)
{
    if (s.size() < 2 || (s[0] != 'f' && s[0] != 'd'))
        throw invalid_input("bad minuscule label '" + s + "'");
    int j = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw invalid_input("bad minuscule label '" + s + "'");
        j = j * 10 + (s[i] - '0');
    }
    if (j < 1) throw invalid_input("bad minuscule label '" + s + "'");
    return {s[0] == 'f' ? Kind::fund : Kind::dual, j};
}

} // namespace agd
