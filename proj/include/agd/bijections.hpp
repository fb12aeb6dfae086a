#pragma once

#include "staircase.hpp"

namespace agd {

using Cell = std::pair<int, int>; // (row, col)

enum class GreeneMode { chains_first, antichains_first };

namespace detail {

inline void check_marks(const std::vector<Cell>& marks)
{
    std::set<int> rows, cols;
    for (auto [r, c] : marks)
        if (!rows.insert(r).second || !cols.insert(c).second)
            throw invalid_input("greene: marks must use distinct rows and columns");
}

} // namespace detail

// Oracle: i_k = max size of a union of k disjoint chains (or antichains), by subset DP.
inline Partition greene_oracle(const std::vector<Cell>& marks, GreeneMode mode)
{
    detail::check_marks(marks);
    const int N = int(marks.size());
    if (N > 20) throw invalid_input("greene_oracle: too many marks for brute force");
    const unsigned full = (1u << N) - 1;
    auto lt = [&](int a, int b) { return marks[a].first < marks[b].first && marks[a].second < marks[b].second; };
    std::vector<char> good(full + 1, 1);
    for (unsigned s = 1; s <= full; ++s) {
        for (int a = 0; a < N && good[s]; ++a)
            for (int b = a + 1; b < N && good[s]; ++b)
                if ((s >> a & 1) && (s >> b & 1)) {
                    bool comparable = lt(a, b) || lt(b, a);
                    if (comparable != (mode == GreeneMode::chains_first)) good[s] = 0;
                }
    }
    // fewest blocks covering s
    std::vector<int> blocks(full + 1, N + 1);
    blocks[0] = 0;
    for (unsigned s = 1; s <= full; ++s) {
        unsigned low = s & (~s + 1);
        for (unsigned sub = s; sub; sub = (sub - 1) & s)
            if ((sub & low) && good[sub]) blocks[s] = std::min(blocks[s], 1 + blocks[s ^ sub]);
    }
    std::vector<int> best(N + 1, 0);
    for (unsigned s = 0; s <= full; ++s) {
        int sz = __builtin_popcount(s);
        for (int k = blocks[s]; k <= N; ++k) best[k] = std::max(best[k], sz);
    }
    Partition p;
    for (int k = 1; k <= N; ++k)
        if (best[k] > best[k - 1]) p.push_back(best[k] - best[k - 1]);
    return p;
}

// Growth over the bounding rectangle; classical rules give chains first, transpose rules antichains first.
inline std::vector<std::vector<Partition>> growth_grid(const std::vector<Cell>& marks, GreeneMode mode,
                                                       int rows, int cols)
{
    std::vector<std::vector<char>> mk(rows + 1, std::vector<char>(cols + 1, 0));
    for (auto [r, c] : marks) mk[r][c] = 1;
    std::vector<std::vector<Partition>> g(rows + 1, std::vector<Partition>(cols + 1));
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            g[r][c] = mode == GreeneMode::chains_first
                          ? fomin_forward(g[r - 1][c - 1], g[r - 1][c], g[r][c - 1], mk[r][c])
                          : fomin_transpose(g[r - 1][c - 1], g[r - 1][c], g[r][c - 1], mk[r][c]);
    return g;
}

inline Partition greene_partition(const std::vector<Cell>& marks, GreeneMode mode)
{
    detail::check_marks(marks);
    // compress to 1..k in each direction
    std::vector<int> rs, cs;
    for (auto [r, c] : marks) {
        rs.push_back(r);
        cs.push_back(c);
    }
    std::sort(rs.begin(), rs.end());
    std::sort(cs.begin(), cs.end());
    std::vector<Cell> z;
    for (auto [r, c] : marks)
        z.push_back({int(std::lower_bound(rs.begin(), rs.end(), r) - rs.begin()) + 1,
                     int(std::lower_bound(cs.begin(), cs.end(), c) - cs.begin()) + 1});
    const int k = int(marks.size());
    return growth_grid(z, mode, k, k)[k][k];
}

// Permutations are 1-based one-line words.
using Perm = std::vector<int>;

inline bool is_permutation(const Perm& p)
{
    std::vector<bool> seen(p.size() + 1, false);
    for (int x : p) {
        if (x < 1 || x > int(p.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

inline bool is_fpf_involution(const Perm& p)
{
    if (!is_permutation(p)) return false;
    for (int i = 1; i <= int(p.size()); ++i)
        if (p[i - 1] == i || p[p[i - 1] - 1] != i) return false;
    return true;
}

inline std::vector<Perm> all_fpf(int n)
{
    std::vector<Perm> out;
    Perm p(n, 0);
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && p[i]) ++i;
        if (i == n) {
            out.push_back(p);
            return;
        }
        for (int j = i + 1; j < n; ++j)
            if (!p[j]) {
                p[i] = j + 1;
                p[j] = i + 1;
                self(self);
                p[i] = p[j] = 0;
            }
    };
    if (n % 2 == 0) rec(rec);
    return out;
}

inline Perm inverse(const Perm& p)
{
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = int(i) + 1;
    return q;
}

struct TableauPair {
    Tableau P, Q;
    bool operator==(const TableauPair&) const = default;
};

inline TableauPair schensted(const Perm& s)
{
    if (!is_permutation(s)) throw invalid_input("schensted: not a permutation");
    TableauPair r;
    for (size_t i = 0; i < s.size(); ++i) {
        int x = s[i];
        size_t row = 0;
        for (;; ++row) {
            if (row == r.P.size()) {
                r.P.push_back({x});
                r.Q.push_back({int(i) + 1});
                break;
            }
            auto& R = r.P[row];
            auto it = std::upper_bound(R.begin(), R.end(), x);
            if (it == R.end()) {
                R.push_back(x);
                r.Q[row].push_back(int(i) + 1);
                break;
            }
            std::swap(*it, x);
        }
    }
    return r;
}

// Marks at (i, s(i)); P read along the bottom row, Q down the right column.
inline TableauPair schensted_growth(const Perm& s, GreeneMode mode = GreeneMode::chains_first)
{
    if (!is_permutation(s)) throw invalid_input("schensted_growth: not a permutation");
    const int n = int(s.size());
    std::vector<Cell> mk;
    for (int i = 1; i <= n; ++i) mk.push_back({i, s[i - 1]});
    auto g = growth_grid(mk, mode, n, n);
    std::vector<Partition> bottom, right;
    for (int c = 0; c <= n; ++c) bottom.push_back(trim(g[n][c]));
    for (int r = 0; r <= n; ++r) right.push_back(trim(g[r][n]));
    return {chain_to_tableau(bottom), chain_to_tableau(right)};
}

inline Perm embed_rs(const Perm& s)
{
    if (!is_permutation(s)) throw invalid_input("embed_rs: not a permutation");
    const int k = int(s.size());
    Perm p(2 * k);
    for (int i = 1; i <= k; ++i) {
        p[s[i - 1] - 1] = 2 * k + 1 - i;
        p[k + i - 1] = s[k - i];
    }
    return p;
}

inline Perm phi(const Diagram& d)
{
    auto w = marks(d);
    const int n = d.n();
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (w[i] - 1) % n + 1;
    if (!is_fpf_involution(p)) throw invariant_error("phi: marks do not reduce to a fixed-point-free involution");
    return p;
}

// Window of the affine permutation attached to an fpf involution.
inline std::vector<int> fpf_window(const Perm& p)
{
    const int n = int(p.size());
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = p[i - 1] > i ? p[i - 1] : p[i - 1] + n;
    return w;
}

// Each vertex: transpose Greene of the marks in its rectangle, split by region.
inline Diagram psi(const Perm& p, int m)
{
    if (!is_fpf_involution(p)) throw invalid_input("psi: not a fixed-point-free involution");
    const int n = int(p.size());
    if (2 * m < n) throw invalid_input("psi: need m >= n/2");
    auto w = fpf_window(p);
    Diagram d;
    d.type.m = m;
    for (int i = 1; i <= n; ++i)
        d.type.labels.push_back({p[i - 1] > i ? Kind::fund : Kind::dual, 1});
    for (int i = 1; i <= n; ++i) {
        d.lines.emplace_back();
        for (int c = 0; c <= n; ++c) {
            const int x = i - 1 + c;
            std::vector<Cell> F, D;
            for (int r = i; r <= x; ++r) {
                int col = affine_apply(w, r);
                if (col < x + 1 || col > i + n - 1) continue;
                int k = (r - 1) / n;
                (col <= (k + 1) * n ? F : D).push_back({r, col});
            }
            auto a = greene_partition(F, GreeneMode::antichains_first);
            auto b = greene_partition(D, GreeneMode::antichains_first);
            d.lines.back().push_back(join_parts({a, b}, m));
        }
    }
    d.marks = mark_multiplicities(d.type, d.lines);
    auto bad = verify(d);
    if (!bad.empty()) throw invariant_error("psi: " + bad.front());
    if (marks(d) != w) throw invariant_error("psi: marks of the result differ from the input");
    return d;
}

using OscTableau = std::vector<Partition>;

inline bool is_osc(const OscTableau& t)
{
    if (t.empty() || !t.front().empty() || !t.back().empty()) return false;
    for (size_t k = 1; k < t.size(); ++k) {
        auto a = trim(t[k - 1]), b = trim(t[k]);
        if (!is_partition(a) || !is_partition(b)) return false;
        if (std::abs(total(a) - total(b)) != 1) return false;
        if (!(contained(a, b) || contained(b, a))) return false;
    }
    return true;
}

inline std::vector<OscTableau> all_osc(int n)
{
    std::vector<OscTableau> out;
    OscTableau cur{Partition{}};
    auto rec = [&](auto&& self) -> void {
        int k = int(cur.size()) - 1;
        auto& p = cur.back();
        if (k == n) {
            if (p.empty()) out.push_back(cur);
            return;
        }
        if (total(p) > n - k) return;
        Partition q = p;
        for (size_t r = 0; r <= q.size(); ++r) {
            Partition a = q;
            if (r == a.size()) a.push_back(0);
            ++a[r];
            if (is_partition(a)) {
                cur.push_back(a);
                self(self);
                cur.pop_back();
            }
        }
        for (size_t r = 0; r < q.size(); ++r) {
            Partition a = q;
            --a[r];
            a = trim(a);
            if (is_partition(a) && total(a) == total(q) - 1 && (r + 1 == q.size() || q[r] > q[r + 1])) {
                cur.push_back(a);
                self(self);
                cur.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

inline Perm osc_to_fpf(const OscTableau& t)
{
    if (!is_osc(t)) throw invalid_input("osc_to_fpf: not an oscillating tableau");
    const int n = int(t.size()) - 1;
    if (n % 2) throw invalid_input("osc_to_fpf: odd length");
    const int m = std::max(1, n / 2);
    DiagramType ty;
    ty.m = m;
    MinusculePath path;
    for (int k = 0; k <= n; ++k) path.push_back(join_parts({trim(t[k]), {}}, m));
    for (int k = 1; k <= n; ++k) ty.labels.push_back({total(t[k]) > total(t[k - 1]) ? Kind::fund : Kind::dual, 1});
    return phi(fill_from_path(path, ty));
}

inline OscTableau fpf_to_osc(const Perm& p)
{
    const int n = int(p.size());
    auto d = psi(p, std::max(1, n / 2));
    OscTableau t;
    for (auto& w : d.lines[0]) {
        auto s = split_parts(w);
        if (!s.negative.empty()) throw invariant_error("fpf_to_osc: first line has a negative part");
        t.push_back(s.positive);
    }
    return t;
}

// Natural-number version.

using Matrix = std::vector<std::vector<int>>;

struct Blocks {
    std::vector<int> start; // 1-based first line of each block
    std::vector<int> size;
};

inline std::vector<int> row_increase(const Matrix& M)
{
    std::vector<int> r(M.size(), 0);
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = i; j < M.size(); ++j) r[i] += M[i][j];
    return r;
}

inline std::vector<int> col_decrease(const Matrix& M)
{
    std::vector<int> c(M.size(), 0);
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j <= i; ++j) c[i] += M[j][i];
    return c;
}

inline void check_nat_fpf(const Matrix& M)
{
    const size_t k = M.size();
    for (auto& row : M)
        if (row.size() != k) throw invalid_input("knuth: matrix must be square");
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (M[i][j] < 0 || M[i][j] != M[j][i]) throw invalid_input("knuth: matrix must be symmetric and nonnegative");
    auto r = row_increase(M), c = col_decrease(M);
    for (size_t i = 0; i < k; ++i)
        if (r[i] && c[i]) throw invalid_input("knuth: row " + std::to_string(i + 1) + " both increases and decreases");
}

inline Blocks block_structure(const Matrix& M)
{
    auto r = row_increase(M), c = col_decrease(M);
    Blocks b;
    int at = 1;
    for (size_t i = 0; i < M.size(); ++i) {
        b.start.push_back(at);
        b.size.push_back(r[i] + c[i]);
        at += r[i] + c[i];
    }
    return b;
}

// Split line i into r_i or c_i lines and lay each entry's X's on a NW-SE diagonal.
inline std::pair<Perm, Blocks> knuth_expand(const Matrix& M)
{
    check_nat_fpf(M);
    auto b = block_structure(M);
    const size_t k = M.size();
    int total_lines = 0;
    for (int s : b.size) total_lines += s;
    Perm p(total_lines, 0);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            int row = b.start[i], col = b.start[j];
            for (size_t jj = i + 1; jj < j; ++jj) row += M[i][jj];
            for (size_t ii = 0; ii < i; ++ii) col += M[ii][j];
            for (int t = 0; t < M[i][j]; ++t) {
                p[row + t - 1] = col + t;
                p[col + t - 1] = row + t;
            }
        }
    return {p, b};
}

inline Matrix knuth_compress(const Perm& p, const Blocks& b)
{
    const size_t k = b.size.size();
    std::vector<int> owner(p.size() + 1, -1);
    for (size_t i = 0; i < k; ++i)
        for (int t = 0; t < b.size[i]; ++t) owner[b.start[i] + t] = int(i);
    Matrix M(k, std::vector<int>(k, 0));
    for (size_t x = 1; x <= p.size(); ++x) ++M[owner[x]][owner[p[x - 1]]];
    return M;
}

inline bool is_vertical_strip(const Partition& small, const Partition& big)
{
    auto a = trim(small), c = trim(big);
    if (!contained(a, c)) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] - (i < a.size() ? a[i] : 0) > 1) return false;
    return true;
}

inline bool is_ss_osc(const OscTableau& t)
{
    if (t.empty() || !trim(t.front()).empty() || !trim(t.back()).empty()) return false;
    for (size_t k = 1; k < t.size(); ++k) {
        auto a = trim(t[k - 1]), b = trim(t[k]);
        if (!is_partition(a) || !is_partition(b)) return false;
        if (!is_vertical_strip(a, b) && !is_vertical_strip(b, a)) return false;
    }
    return true;
}

inline int knuth_rank(const std::vector<int>& sizes)
{
    int s = 0;
    for (int x : sizes) s += x;
    return std::max(1, s / 2);
}

inline OscTableau knuth_bijection(const Matrix& M)
{
    auto [p, b] = knuth_expand(M);
    OscTableau t{Partition{}};
    if (p.empty()) {
        for (size_t i = 0; i < M.size(); ++i) t.push_back({});
        return t;
    }
    auto line = fpf_to_osc(p);
    for (size_t i = 0; i < M.size(); ++i) t.push_back(line[b.start[i] - 1 + b.size[i]]);
    return t;
}

// Break each vertical strip into single boxes (added top first, removed bottom first).
inline std::pair<OscTableau, std::vector<int>> knuth_standardize(const OscTableau& t)
{
    if (!is_ss_osc(t)) throw invalid_input("knuth: not a semistandard oscillating tableau");
    OscTableau s{Partition{}};
    std::vector<int> sizes;
    for (size_t k = 1; k < t.size(); ++k) {
        auto a = trim(t[k - 1]), b = trim(t[k]);
        Partition cur = a;
        bool grow = total(b) >= total(a);
        auto& big = grow ? b : a;
        auto& small = grow ? a : b;
        std::vector<size_t> rows;
        for (size_t r = 0; r < big.size(); ++r)
            if (big[r] != (r < small.size() ? small[r] : 0)) rows.push_back(r);
        if (!grow) std::reverse(rows.begin(), rows.end());
        for (size_t r : rows) {
            if (cur.size() <= r) cur.resize(r + 1, 0);
            cur[r] += grow ? 1 : -1;
            s.push_back(trim(cur));
        }
        sizes.push_back(int(rows.size()));
    }
    return {s, sizes};
}

inline Matrix knuth_bijection_inverse(const OscTableau& t)
{
    auto [s, sizes] = knuth_standardize(t);
    Blocks b;
    int at = 1;
    for (int x : sizes) {
        b.start.push_back(at);
        b.size.push_back(x);
        at += x;
    }
    Perm p = s.size() > 1 ? osc_to_fpf(s) : Perm{};
    return knuth_compress(p, b);
}

} // namespace agd
