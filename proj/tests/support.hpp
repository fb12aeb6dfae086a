#pragma once
// Shared helpers for the test binaries: data loading and brute-force oracles
// that do not go through the library code they check.

#include <json.hpp>

#include <agd/agd.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "../tools/json_io.hpp"

namespace agd::test {

using json = nlohmann::json;

inline json load(const std::string& name)
{
    std::ifstream f(std::string(AGD_DATA_DIR) + "/" + name);
    if (!f) throw std::runtime_error("missing test data " + name);
    return json::parse(f);
}

inline Diagram load_diagram(const std::string& name) { return io::diagram_from(load(name)); }

inline Weight pad(Partition p, int m)
{
    p.resize(size_t(m), 0);
    return p;
}

// Diagram lines agree on every vertex of lines 1..n+1, whatever the stored length.
inline bool same_lines(const Diagram& a, const Diagram& b)
{
    if (a.n() != b.n()) return false;
    for (int i = 1; i <= a.n() + 1; ++i)
        for (int c = 0; c <= a.n(); ++c)
            if (a.at(i, c) != b.at(i, c)) return false;
    return true;
}

// ---- weights ----

inline Weight naive_sort_rule(const Weight& a, const Weight& b, const Weight& c)
{
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i] - c[i];
    std::sort(r.begin(), r.end(), std::greater<>());
    return r;
}

// all dominant nu with nu - mu in {0,+-1}^m having exactly j nonzero entries
inline std::set<Weight> naive_pieri(const Weight& mu, MinusculeLabel l)
{
    const int m = int(mu.size());
    const int s = l.kind == Kind::fund ? 1 : -1;
    std::set<Weight> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (__builtin_popcount(unsigned(mask)) != l.j) continue;
        Weight v = mu;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) v[i] += s;
        if (std::is_sorted(v.begin(), v.end(), std::greater<>())) out.insert(v);
    }
    return out;
}

inline std::vector<Weight> dominant_weights(int m, int lo, int hi)
{
    std::vector<Weight> out;
    Weight w(size_t(m), 0);
    std::function<void(int, int)> rec = [&](int i, int top) {
        if (i == m) {
            out.push_back(w);
            return;
        }
        for (int x = lo; x <= top; ++x) {
            w[size_t(i)] = x;
            rec(i + 1, x);
        }
    };
    rec(0, hi);
    return out;
}

inline std::vector<Partition> partitions_of(int n, int max_part = 1 << 20)
{
    std::vector<Partition> out;
    Partition p;
    std::function<void(int, int)> rec = [&](int left, int top) {
        if (left == 0) {
            out.push_back(p);
            return;
        }
        for (int x = std::min(left, top); x >= 1; --x) {
            p.push_back(x);
            rec(left - x, x);
            p.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

// ---- tableaux ----

// SSYT count by filling cells in reading order, values 1..k, with row/column checks.
inline long long naive_ssyt_count(const Partition& shape, const std::vector<int>& content)
{
    int size = 0;
    for (int x : shape) size += x;
    int total = 0;
    for (int x : content) total += x;
    if (size != total) return 0;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < int(shape.size()); ++r)
        for (int c = 0; c < shape[size_t(r)]; ++c) cells.push_back({r, c});
    std::vector<std::vector<int>> t(shape.size());
    for (size_t r = 0; r < shape.size(); ++r) t[r].assign(size_t(shape[r]), 0);
    std::vector<int> left = content;
    long long count = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= int(content.size()); ++v) {
            if (!left[size_t(v - 1)]) continue;
            if (c > 0 && t[size_t(r)][size_t(c - 1)] > v) continue;
            if (r > 0 && t[size_t(r - 1)][size_t(c)] >= v) continue;
            --left[size_t(v - 1)];
            t[size_t(r)][size_t(c)] = v;
            rec(k + 1);
            t[size_t(r)][size_t(c)] = 0;
            ++left[size_t(v - 1)];
        }
    };
    rec(0);
    return count;
}

// The invariant count as a Kostka number: l rows of length m, l = number of dual labels,
// content = fundamental j's then m - j for each dual label.
inline long long kostka_oracle(const DiagramType& t)
{
    std::vector<int> content;
    int l = 0;
    for (auto& x : t.labels)
        if (x.kind == Kind::fund) content.push_back(x.j);
    for (auto& x : t.labels)
        if (x.kind == Kind::dual) {
            content.push_back(t.m - x.j);
            ++l;
        }
    Partition shape(size_t(l), t.m);
    return naive_ssyt_count(shape, content);
}

inline std::vector<Tableau> standard_tableaux(const Partition& shape)
{
    int size = 0;
    for (int x : shape) size += x;
    std::vector<Tableau> out;
    Tableau t(shape.size());
    std::function<void(int)> rec = [&](int v) {
        if (v > size) {
            out.push_back(t);
            return;
        }
        for (size_t r = 0; r < shape.size(); ++r) {
            int c = int(t[r].size());
            if (c >= shape[r]) continue;
            if (r > 0 && int(t[r - 1].size()) <= c) continue;
            t[r].push_back(v);
            rec(v + 1);
            t[r].pop_back();
        }
    };
    rec(1);
    return out;
}

// ---- Littlewood-Richardson ----

// c^nu_{lambda,mu} by counting LR fillings of nu/lambda with content mu (reverse reading word is a lattice word).
inline long long lr_tableaux(const Partition& lam, const Partition& mu, const Partition& nu)
{
    auto at = [](const Partition& p, size_t i) { return i < p.size() ? p[i] : 0; };
    int a = 0, b = 0, c = 0;
    for (int x : lam) a += x;
    for (int x : mu) b += x;
    for (int x : nu) c += x;
    if (a + b != c) return 0;
    for (size_t i = 0; i < std::max(lam.size(), nu.size()); ++i)
        if (at(lam, i) > at(nu, i)) return 0;
    // fill rows top to bottom, each row right to left (the reading order)
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < nu.size(); ++r)
        for (int col = nu[r] - 1; col >= at(lam, r); --col) cells.push_back({int(r), col});
    std::map<std::pair<int, int>, int> val;
    std::vector<int> used(mu.size() + 1, 0);
    long long count = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, col] = cells[k];
        for (int v = 1; v <= int(mu.size()); ++v) {
            if (used[size_t(v)] >= mu[size_t(v - 1)]) continue;
            if (v > 1 && used[size_t(v)] + 1 > used[size_t(v - 1)]) continue; // lattice condition
            auto right = val.find({r, col + 1});
            if (right != val.end() && right->second < v) continue; // rows weakly increase
            if (r > 0 && col >= at(lam, size_t(r - 1))) {
                auto up = val.find({r - 1, col});
                if (up != val.end() && up->second >= v) continue; // columns strictly increase
            }
            val[{r, col}] = v;
            ++used[size_t(v)];
            rec(k + 1);
            --used[size_t(v)];
            val.erase({r, col});
        }
    };
    rec(0);
    return count;
}

// dim (V_lam x V_mu x V_nu)^G for GL_m weights, via LR tableaux after shifting to partitions.
inline long long lr_invariants(const Weight& lam, const Weight& mu, const Weight& nu)
{
    const int m = int(lam.size());
    int s = lam.back(), t = mu.back();
    Partition L, M, N;
    for (int x : lam) L.push_back(x - s);
    Weight target = dual(nu); // invariant iff target appears in lam x mu
    for (int x : mu) M.push_back(x - t);
    for (int x : target) N.push_back(x - s - t);
    if (N.back() < 0) return 0;
    int sum = 0;
    for (int i = 0; i < m; ++i) sum += lam[size_t(i)] + mu[size_t(i)] + nu[size_t(i)];
    if (sum != 0) return 0;
    return lr_tableaux(trim(L), trim(M), trim(N));
}

// ---- permutations ----

inline std::vector<Perm> all_perms(int n)
{
    std::vector<Perm> out;
    Perm p(size_t(n), 0);
    std::iota(p.begin(), p.end(), 1);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<Perm> naive_fpf(int n)
{
    std::vector<Perm> out;
    for (auto& p : all_perms(n)) {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && p[size_t(i)] != i + 1 && p[size_t(p[size_t(i)] - 1)] == i + 1;
        if (ok) out.push_back(p);
    }
    return out;
}

inline Perm compose(const Perm& a, const Perm& b) // (a.b)(i) = a(b(i))
{
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[size_t(b[i] - 1)];
    return r;
}

inline Perm longest(int n)
{
    Perm w(size_t(n), 0);
    for (int i = 0; i < n; ++i) w[size_t(i)] = n - i;
    return w;
}

// all length-n sequences of partitions from empty to empty, one box added or removed per step
inline std::vector<OscTableau> naive_osc(int n)
{
    std::vector<OscTableau> out;
    OscTableau t{Partition{}};
    std::function<void()> rec = [&] {
        int k = int(t.size()) - 1;
        Partition cur = t.back();
        int size = 0;
        for (int x : cur) size += x;
        if (size > n - k) return;
        if (k == n) {
            if (size == 0) out.push_back(t);
            return;
        }
        for (size_t r = 0; r <= cur.size(); ++r) {
            Partition up = cur;
            if (r == up.size()) up.push_back(0);
            ++up[r];
            if (is_partition(up)) {
                t.push_back(up);
                rec();
                t.pop_back();
            }
            if (r < cur.size()) {
                Partition down = cur;
                --down[r];
                down = trim(down);
                if (is_partition(down)) {
                    t.push_back(down);
                    rec();
                    t.pop_back();
                }
            }
        }
    };
    rec();
    return out;
}

inline bool is_nat_fpf(const Matrix& M)
{
    try {
        check_nat_fpf(M);
        return true;
    } catch (const invalid_input&) {
        return false;
    }
}

// symmetric, zero diagonal, off-diagonal entries 0..cap, r_i = 0 or c_i = 0
inline std::vector<Matrix> nat_fpf_matrices(int k, int cap)
{
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) slots.push_back({i, j});
    std::vector<Matrix> out;
    Matrix M(size_t(k), std::vector<int>(size_t(k), 0));
    std::function<void(size_t)> rec = [&](size_t s) {
        if (s == slots.size()) {
            if (is_nat_fpf(M)) out.push_back(M);
            return;
        }
        auto [i, j] = slots[s];
        for (int v = 0; v <= cap; ++v) {
            M[size_t(i)][size_t(j)] = M[size_t(j)][size_t(i)] = v;
            rec(s + 1);
        }
        M[size_t(i)][size_t(j)] = M[size_t(j)][size_t(i)] = 0;
    };
    rec(0);
    return out;
}

// ---- Greene ----

// longest chain (increasing in both coordinates) by O(n^2) DP, as a spot oracle for part 1
inline int longest_chain(std::vector<Cell> v)
{
    std::sort(v.begin(), v.end());
    std::vector<int> best(v.size(), 1);
    int top = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (v[j].first < v[i].first && v[j].second < v[i].second) best[i] = std::max(best[i], best[j] + 1);
        top = std::max(top, best[i]);
    }
    return top;
}

inline std::vector<Cell> perm_cells(const Perm& p)
{
    std::vector<Cell> v;
    for (size_t i = 0; i < p.size(); ++i) v.push_back({int(i) + 1, p[i]});
    return v;
}

inline std::vector<Cell> random_marks(std::mt19937& rng, int k, int grid)
{
    std::vector<int> rows(size_t(grid), 0), cols(size_t(grid), 0);
    std::iota(rows.begin(), rows.end(), 1);
    std::iota(cols.begin(), cols.end(), 1);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<Cell> v;
    for (int i = 0; i < k; ++i) v.push_back({rows[size_t(i)], cols[size_t(i)]});
    return v;
}

// ---- types ----

// every type with n labels, rank m and fundamental size at most `cap`;
// with `balanced` only those whose fundamental and dual sizes agree
inline std::vector<DiagramType> all_types(int n, int m, int cap, bool balanced)
{
    std::vector<DiagramType> out;
    DiagramType t;
    t.m = m;
    std::function<void(int, int, int)> rec = [&](int k, int f, int d) {
        if (f > cap || (balanced && d > cap)) return;
        if (k == n) {
            if (f == d || !balanced) out.push_back(t);
            return;
        }
        for (int kind = 0; kind < 2; ++kind)
            for (int j = 1; j <= m; ++j) {
                t.labels.push_back({kind ? Kind::dual : Kind::fund, j});
                rec(k + 1, f + (kind ? 0 : j), d + (kind ? j : 0));
                t.labels.pop_back();
            }
    };
    rec(0, 0, 0);
    return out;
}

} // namespace agd::test
