#pragma once

#include <map>
#include <utility>

#include "weights.hpp"

namespace agd {

// Rows of positive entries. 0 is reserved for a hole while sliding.
using Tableau = std::vector<std::vector<int>>;

inline Partition shape_of(const Tableau& t)
{
    Partition p;
    for (auto& r : t) p.push_back(int(r.size()));
    return trim(p);
}

inline Tableau transpose(const Tableau& t)
{
    Tableau r;
    if (t.empty()) return r;
    for (size_t c = 0; c < t[0].size(); ++c) {
        r.emplace_back();
        for (size_t i = 0; i < t.size() && c < t[i].size(); ++i) r.back().push_back(t[i][c]);
    }
    return r;
}

inline bool is_ssyt(const Tableau& t)
{
    if (!is_partition(shape_of(t)) || shape_of(t).size() != t.size()) return false;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t[i].size(); ++j) {
            if (t[i][j] < 1) return false;
            if (j + 1 < t[i].size() && t[i][j] > t[i][j + 1]) return false;
            if (i + 1 < t.size() && j < t[i + 1].size() && t[i][j] >= t[i + 1][j]) return false;
        }
    return true;
}

inline bool is_standard(const Tableau& t)
{
    if (!is_ssyt(t)) return false;
    std::vector<int> all;
    for (auto& r : t) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] != int(i) + 1) return false;
    return true;
}

// Row-strict tableau from a chain of partitions: entry k marks the boxes of p[k]/p[k-1].
inline Tableau chain_to_tableau(const std::vector<Partition>& chain)
{
    Tableau t;
    for (size_t k = 1; k < chain.size(); ++k) {
        auto& p = chain[k];
        if (!contained(chain[k - 1], p)) throw invalid_input("chain_to_tableau: chain is not increasing");
        for (size_t r = 0; r < p.size(); ++r) {
            if (t.size() <= r) t.emplace_back();
            while (int(t[r].size()) < p[r]) t[r].push_back(int(k));
        }
    }
    return t;
}

inline std::vector<Partition> tableau_to_chain(const Tableau& t, int n)
{
    std::vector<Partition> chain;
    for (int k = 0; k <= n; ++k) {
        Partition p;
        for (auto& r : t) p.push_back(int(std::count_if(r.begin(), r.end(), [&](int x) { return x <= k; })));
        chain.push_back(trim(p));
    }
    return chain;
}

// Forward slide: the hole at (r,c) moves out to an outer corner, which is then dropped.
// Returns the vacated corner.
inline std::pair<int, int> jdt_slide(Tableau& t, int r, int c)
{
    t[r][c] = 0;
    for (;;) {
        bool has_right = c + 1 < int(t[r].size());
        bool has_below = r + 1 < int(t.size()) && c < int(t[r + 1].size());
        if (!has_right && !has_below) break;
        if (has_below && (!has_right || t[r + 1][c] <= t[r][c + 1])) {
            t[r][c] = t[r + 1][c];
            ++r;
        } else {
            t[r][c] = t[r][c + 1];
            ++c;
        }
    }
    t[r].pop_back();
    while (!t.empty() && t.back().empty()) t.pop_back();
    return {r, c};
}

// Reverse slide: a hole just outside the shape at (r,c) moves in to the top-left region.
// Returns the cell where the hole ends (left empty, value 0).
inline std::pair<int, int> jdt_slide_reverse(Tableau& t, int r, int c)
{
    if (r == int(t.size())) t.emplace_back();
    t[r].push_back(0);
    for (;;) {
        bool has_left = c > 0;
        bool has_above = r > 0;
        if (!has_left && !has_above) break;
        int left = has_left ? t[r][c - 1] : 0;
        int above = has_above ? t[r - 1][c] : 0;
        if (left == 0 && above == 0) break;
        if (above >= left) {
            t[r][c] = above;
            --r;
        } else {
            t[r][c] = left;
            --c;
        }
    }
    t[r][c] = 0;
    return {r, c};
}

inline Tableau promotion(const Tableau& t0, int n)
{
    Tableau t = t0;
    auto sh = shape_of(t);
    if (!t.empty()) {
        for (int c = int(t[0].size()) - 1; c >= 0; --c)
            if (t[0][c] == 1) jdt_slide(t, 0, c);
    }
    Tableau out;
    for (size_t r = 0; r < sh.size(); ++r) {
        out.emplace_back(sh[r], n);
        for (size_t c = 0; r < t.size() && c < t[r].size(); ++c) out[r][c] = t[r][c] - 1;
    }
    return out;
}

namespace detail {

// Drop the given (col, row) cells; they are the largest entries so they end their rows.
inline void cut_cells(Tableau& t, const std::vector<std::pair<int, int>>& cells)
{
    for (auto [c, r] : cells) t[r].resize(std::min(t[r].size(), size_t(c)));
    while (!t.empty() && t.back().empty()) t.pop_back();
}

} // namespace detail

inline Tableau dual_promotion(const Tableau& t0, int n)
{
    Tableau t = t0;
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < t.size(); ++r)
        for (size_t c = 0; c < t[r].size(); ++c)
            if (t[r][c] == n) cells.push_back({int(c), int(r)});
    std::sort(cells.begin(), cells.end());
    detail::cut_cells(t, cells);
    for (auto [c, r] : cells) jdt_slide_reverse(t, r, c);
    for (auto& row : t)
        for (auto& x : row) x = x + 1;
    return t;
}

inline Tableau evacuation(const Tableau& t0, int n)
{
    Tableau t = t0;
    Tableau e;
    for (int x : shape_of(t0)) e.emplace_back(x, 0);
    for (int k = 1; k <= n && !t.empty(); ++k) {
        for (int c = int(t[0].size()) - 1; c >= 0; --c)
            if (t[0][c] == k) {
                auto [r, cc] = jdt_slide(t, 0, c);
                e[r][cc] = n + 1 - k;
            }
    }
    return e;
}

inline Tableau dual_evacuation(const Tableau& t0, int n)
{
    Tableau t = t0;
    Tableau e;
    for (int x : shape_of(t0)) e.emplace_back(x, 0);
    for (int k = n; k >= 1; --k) {
        std::vector<std::pair<int, int>> cells;
        for (size_t r = 0; r < t.size(); ++r)
            for (size_t c = 0; c < t[r].size(); ++c)
                if (t[r][c] == k) cells.push_back({int(c), int(r)});
        std::sort(cells.begin(), cells.end());
        detail::cut_cells(t, cells);
        for (auto [c, r] : cells) {
            auto [r2, c2] = jdt_slide_reverse(t, r, c);
            // the hole joins the growing inner shape
            e[r2][c2] = n + 1 - k;
        }
    }
    return e;
}

// Number of SSYT of the given shape and content, by horizontal strips value by value.
inline long long kostka_count(const Partition& shape0, const std::vector<int>& content)
{
    auto shape = trim(shape0);
    int want = total(shape);
    int have = 0;
    for (int x : content) {
        if (x < 0) return 0;
        have += x;
    }
    if (want != have) return 0;
    std::map<std::pair<size_t, Partition>, long long> memo;
    // grow `cur` by a horizontal strip of size content[v] for each v
    auto rec = [&](auto&& self, size_t v, const Partition& cur) -> long long {
        if (v == content.size()) return cur == shape ? 1 : 0;
        auto key = std::make_pair(v, cur);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long cnt = 0;
        Partition nxt(shape.size(), 0);
        std::copy(cur.begin(), cur.end(), nxt.begin());
        auto place = [&](auto&& place_self, size_t r, int left) -> void {
            if (r == shape.size()) {
                if (left == 0) cnt += self(self, v + 1, trim(nxt));
                return;
            }
            int base = r < cur.size() ? cur[r] : 0;
            // horizontal strip: new row r may reach at most the old row r-1
            int cap = std::min(shape[r], r == 0 ? shape[r] : (r - 1 < cur.size() ? cur[r - 1] : 0));
            for (int add = 0; add <= left && base + add <= cap; ++add) {
                nxt[r] = base + add;
                place_self(place_self, r + 1, left - add);
            }
            nxt[r] = base;
        };
        place(place, 0, content[v]);
        memo[key] = cnt;
        return cnt;
    };
    return rec(rec, 0, Partition{});
}

} // namespace agd
