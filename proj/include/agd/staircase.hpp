#pragma once

#include <set>
#include <sstream>

#include "local_rules.hpp"
#include "tableaux.hpp"

namespace agd {

struct DiagramType {
    std::vector<MinusculeLabel> labels;
    int m = 1;

    int n() const { return int(labels.size()); }
    // 1-based, any integer; wraps with period n
    MinusculeLabel label(int i) const { return labels[((i - 1) % n() + n()) % n()]; }
    bool operator==(const DiagramType&) const = default;
};

// mu^0 .. mu^n
using MinusculePath = std::vector<Weight>;

struct Mark {
    int row = 0;
    int col = 0;
    int mult = 1;
    auto operator<=>(const Mark&) const = default;
};

// One period of the staircase. lines[i-1] is horizontal line i with vertices 0..n;
// vertex c of line i sits at column i-1+c. Row i holds squares in columns i+1..i+n-1.
struct Diagram {
    DiagramType type;
    std::vector<std::vector<Weight>> lines;
    std::vector<Mark> marks;

    int n() const { return type.n(); }
    int m() const { return type.m; }
    const Weight& at(int line, int c) const { return lines[((line - 1) % n() + n()) % n()][c]; }
    bool operator==(const Diagram& o) const { return type == o.type && lines == o.lines; }
};

inline DiagramType parse_type(const std::string& s, int m)
{
    DiagramType t;
    t.m = m;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) t.labels.push_back(parse_label(tok));
    return t;
}

inline std::string type_str(const DiagramType& t)
{
    std::string s;
    for (auto& l : t.labels) s += (s.empty() ? "" : ",") + label_str(l);
    return s;
}

inline void check_type(const DiagramType& t)
{
    if (t.m < 1) throw invalid_input("rank m must be positive");
    if (t.n() < 2) throw invalid_input("a diagram type needs n >= 2 labels");
    for (auto& l : t.labels)
        if (l.j < 1 || l.j > t.m) throw invalid_input("label " + label_str(l) + " does not fit rank m");
}

inline bool is_path(const MinusculePath& p, const DiagramType& t)
{
    if (int(p.size()) != t.n() + 1) return false;
    for (auto& w : p)
        if (int(w.size()) != t.m || !is_dominant(w)) return false;
    if (p.front() != zero_weight(t.m) || p.back() != zero_weight(t.m)) return false;
    for (int k = 1; k <= t.n(); ++k) {
        auto nb = pieri_neighbors(p[k - 1], t.labels[k - 1]);
        if (std::find(nb.begin(), nb.end(), p[k]) == nb.end()) return false;
    }
    return true;
}

// DFS over Pieri neighbours. Prunes on the size budget only.
inline std::vector<MinusculePath> enumerate_paths(const DiagramType& t)
{
    check_type(t);
    const int n = t.n();
    std::vector<int> rest(n + 1, 0); // signed size still to be added after step k
    for (int k = n - 1; k >= 0; --k)
        rest[k] = rest[k + 1] + (t.labels[k].kind == Kind::fund ? 1 : -1) * t.labels[k].j;
    std::vector<MinusculePath> out;
    if (rest[0] != 0) return out;
    MinusculePath cur{zero_weight(t.m)};
    auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (cur.back() == zero_weight(t.m)) out.push_back(cur);
            return;
        }
        for (auto& nu : pieri_neighbors(cur.back(), t.labels[k])) {
            // every entry must be able to come back to zero in the remaining steps
            int left = n - k - 1;
            if (std::any_of(nu.begin(), nu.end(), [&](int x) { return std::abs(x) > left; })) continue;
            cur.push_back(nu);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

inline long long count_paths(const DiagramType& t) { return (long long)enumerate_paths(t).size(); }

// Invariants of the tensor product as a Kostka number: l rows of length m, l = number of
// dual labels, content = fundamental indices then m - (dual indices).
inline long long count_kostka(const DiagramType& t)
{
    check_type(t);
    int sf = 0, sd = 0, l = 0;
    std::vector<int> content;
    for (auto& x : t.labels)
        if (x.kind == Kind::fund) {
            sf += x.j;
            content.push_back(x.j);
        }
    for (auto& x : t.labels)
        if (x.kind == Kind::dual) {
            sd += x.j;
            ++l;
            content.push_back(t.m - x.j);
        }
    if (sf != sd) return 0;
    return kostka_count(Partition(l, t.m), content);
}

inline int pos_size(const Weight& w)
{
    int s = 0;
    for (int x : w)
        if (x > 0) s += x;
    return s;
}

inline int neg_size(const Weight& w)
{
    int s = 0;
    for (int x : w)
        if (x < 0) s -= x;
    return s;
}

// Marks need room for every added box: m at least the total fundamental size.
inline bool marks_defined(const DiagramType& t)
{
    int f = 0;
    for (auto& l : t.labels)
        if (l.kind == Kind::fund) f += l.j;
    return t.m >= f;
}

// Marks with multiplicity. Vertical edge c of row i runs from vertex c of line i down to
// vertex c-1 of line i+1; a_c counts the boxes it removes from the part that label i edits.
// The square at column i+c gets a_c - a_{c+1}.
inline std::vector<Mark> mark_multiplicities(const DiagramType& t, const std::vector<std::vector<Weight>>& lines)
{
    const int n = t.n();
    std::vector<Mark> out;
    for (int i = 1; i <= n; ++i) {
        auto& top = lines[i - 1];
        auto& bot = lines[i % n];
        bool fund = t.labels[i - 1].kind == Kind::fund;
        std::vector<int> a(n + 2, 0);
        for (int c = 1; c <= n; ++c)
            a[c] = fund ? pos_size(top[c]) - pos_size(bot[c - 1]) : neg_size(top[c]) - neg_size(bot[c - 1]);
        for (int c = 1; c < n; ++c) {
            int d = a[c] - a[c + 1];
            if (d < 0) throw invariant_error("negative mark multiplicity in row " + std::to_string(i));
            if (d > 0) out.push_back({i, i + c, d});
        }
    }
    return out;
}

namespace detail {

inline std::vector<Weight> next_line(const DiagramType& t, const std::vector<Weight>& top)
{
    const int n = t.n();
    std::vector<Weight> bot(n + 1);
    bot[0] = zero_weight(t.m);
    for (int c = 1; c < n; ++c) bot[c] = affine_rule(bot[c - 1], top[c + 1], top[c]);
    bot[n] = zero_weight(t.m);
    return bot;
}

inline std::vector<Weight> prev_line(const DiagramType& t, const std::vector<Weight>& bot)
{
    const int n = t.n();
    std::vector<Weight> top(n + 1);
    top[n] = zero_weight(t.m);
    for (int c = n - 1; c >= 1; --c) top[c] = affine_rule_reverse(bot[c - 1], top[c + 1], bot[c]);
    top[0] = zero_weight(t.m);
    return top;
}

} // namespace detail

inline Diagram fill_from_path(const MinusculePath& path, const DiagramType& t)
{
    check_type(t);
    if (!is_path(path, t)) throw invalid_input("fill_from_path: not a minuscule path of this type");
    Diagram d;
    d.type = t;
    d.lines.push_back(path);
    for (int i = 1; i <= t.n(); ++i) {
        auto nl = detail::next_line(t, d.lines.back());
        if (i < t.n())
            d.lines.push_back(std::move(nl));
        else if (nl != path)
            throw invariant_error("fill_from_path: line n+1 differs from line 1");
    }
    if (marks_defined(t)) d.marks = mark_multiplicities(t, d.lines);
    return d;
}

// Same diagram, built upward from line n+1 = path with the reverse rule.
inline Diagram fill_backward(const MinusculePath& path, const DiagramType& t)
{
    check_type(t);
    if (!is_path(path, t)) throw invalid_input("fill_backward: not a minuscule path of this type");
    const int n = t.n();
    std::vector<std::vector<Weight>> rev{path};
    for (int i = n; i >= 1; --i) rev.push_back(detail::prev_line(t, rev.back()));
    if (rev.back() != path) throw invariant_error("fill_backward: line 1 not reproduced");
    Diagram d;
    d.type = t;
    for (int i = 1; i <= n; ++i) d.lines.push_back(rev[n + 1 - i]);
    if (marks_defined(t)) d.marks = mark_multiplicities(t, d.lines);
    return d;
}

inline std::vector<Diagram> enumerate_diagrams(const DiagramType& t)
{
    std::vector<Diagram> out;
    for (auto& p : enumerate_paths(t)) out.push_back(fill_from_path(p, t));
    return out;
}

// Empty result means the diagram is valid.
inline std::vector<std::string> verify(const Diagram& d)
{
    std::vector<std::string> bad;
    auto& t = d.type;
    try {
        check_type(t);
    } catch (const invalid_input& e) {
        bad.push_back(e.what());
        return bad;
    }
    const int n = t.n(), m = t.m;
    if (int(d.lines.size()) != n) {
        bad.push_back("expected " + std::to_string(n) + " lines");
        return bad;
    }
    for (int i = 1; i <= n; ++i) {
        auto& L = d.lines[i - 1];
        std::string at = "line " + std::to_string(i);
        if (int(L.size()) != n + 1) {
            bad.push_back(at + ": expected n+1 vertices");
            return bad;
        }
        for (auto& w : L)
            if (int(w.size()) != m || !is_dominant(w)) {
                bad.push_back(at + ": vertex is not a dominant weight of rank m");
                return bad;
            }
        if (L[0] != zero_weight(m) || L[n] != zero_weight(m)) bad.push_back(at + ": ends are not zero");
        if (L[1] != minuscule_vector(t.label(i), m)) bad.push_back(at + ": vertex 1 is not the minuscule label");
        for (int c = 1; c <= n; ++c) {
            MinusculeLabel got;
            if (!minuscule_step(L[c - 1], L[c], &got) || got != t.label(i + c - 1))
                bad.push_back(at + ": step " + std::to_string(c) + " is not a translate of " +
                              label_str(t.label(i + c - 1)));
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int c = 1; c < n; ++c) {
            auto& nw = d.at(i, c);
            auto& ne = d.at(i, c + 1);
            auto& sw = d.at(i + 1, c - 1);
            auto& se = d.at(i + 1, c);
            Weight s(m);
            for (int k = 0; k < m; ++k) s[k] = sw[k] + ne[k] - nw[k];
            if (sort_desc(s) != se)
                bad.push_back("square row " + std::to_string(i) + " col " + std::to_string(i + c) +
                              " breaks the local rule");
        }
    if (bad.empty() && marks_defined(t)) {
        try {
            auto mk = mark_multiplicities(t, d.lines);
            if (!d.marks.empty() && mk != d.marks) bad.push_back("stored marks disagree with the diagram");
        } catch (const invariant_error& e) {
            bad.push_back(e.what());
        }
    }
    return bad;
}

inline bool is_valid(const Diagram& d) { return verify(d).empty(); }

// Window [f(1),...,f(n)] of the affine permutation; needs one mark per row.
inline std::vector<int> marks(const Diagram& d)
{
    for (auto& l : d.type.labels)
        if (l.j != 1) throw invalid_input("marks: every label must be f1 or d1");
    if (2 * d.m() < d.n()) throw invalid_input("marks: need m >= n/2");
    auto mk = mark_multiplicities(d.type, d.lines);
    std::vector<int> w(d.n(), 0);
    for (auto& x : mk) {
        if (x.mult != 1 || w[x.row - 1] != 0) throw invariant_error("marks: row without a unique mark");
        w[x.row - 1] = x.col;
    }
    for (int x : w)
        if (x == 0) throw invariant_error("marks: row without a mark");
    return w;
}

inline int affine_apply(const std::vector<int>& window, int x)
{
    const int n = int(window.size());
    int k = (x - 1 >= 0) ? (x - 1) / n : -((n - x) / n);
    return window[x - 1 - k * n] + k * n;
}

inline bool is_affine_permutation(const std::vector<int>& window)
{
    const int n = int(window.size());
    std::vector<bool> seen(n, false);
    for (int x : window) {
        int r = ((x % n) + n) % n;
        if (seen[r]) return false;
        seen[r] = true;
    }
    return true;
}

inline bool squares_to_shift(const std::vector<int>& window)
{
    const int n = int(window.size());
    for (int i = 1; i <= n; ++i)
        if (affine_apply(window, affine_apply(window, i)) != i + n) return false;
    return true;
}

// Transpose about the staircase, shift back by n and dualize every weight.
// Vertex c of line i goes to vertex n-c of line i+c.
inline Diagram dual_transpose(const Diagram& d)
{
    const int n = d.n();
    Diagram r;
    r.type = d.type;
    r.lines.assign(n, std::vector<Weight>(n + 1));
    for (int k = 1; k <= n; ++k)
        for (int c = 0; c <= n; ++c) r.lines[k - 1][c] = dual(d.at(k - n + c, n - c));
    if (marks_defined(r.type)) r.marks = mark_multiplicities(r.type, r.lines);
    return r;
}

// SL_m picture: each vertex shifted by (number of dual labels passed) * (1,...,1).
struct SlDiagram {
    int n = 0, m = 0;
    std::vector<std::vector<Partition>> lines;
};

inline int duals_before(const DiagramType& t, int i, int c)
{
    int k = 0;
    for (int s = 0; s < c; ++s) k += t.label(i + s).kind == Kind::dual;
    return k;
}

inline Partition sl_shift(const Weight& w, int k)
{
    Partition p;
    for (int x : w) p.push_back(x + k);
    if (!is_partition(trim(p))) throw invariant_error("sl_shift: negative entry after shift");
    return trim(p);
}

inline SlDiagram to_sl(const Diagram& d)
{
    SlDiagram s;
    s.n = d.n();
    s.m = d.m();
    for (int i = 1; i <= s.n; ++i) {
        s.lines.emplace_back();
        for (int c = 0; c <= s.n; ++c) s.lines.back().push_back(sl_shift(d.at(i, c), duals_before(d.type, i, c)));
    }
    return s;
}

// Line i of the SL picture as a row-strict tableau.
inline Tableau sl_line_tableau(const SlDiagram& s, int i) { return chain_to_tableau(s.lines[(i - 1) % s.n]); }

// The vertical line under the end of horizontal line i, read upward from the zero vertex.
inline Tableau sl_vertical_tableau(const Diagram& d, int i)
{
    const int n = d.n();
    std::vector<Partition> chain;
    for (int k = 0; k <= n; ++k) {
        int line = i + n - k;
        chain.push_back(sl_shift(d.at(line, k), duals_before(d.type, line, k)));
    }
    return chain_to_tableau(chain);
}

// Promotion on row-strict tableaux is conjugate to the usual one.
inline Tableau row_strict_promotion(const Tableau& t, int n) { return transpose(promotion(transpose(t), n)); }
inline Tableau row_strict_dual_promotion(const Tableau& t, int n) { return transpose(dual_promotion(transpose(t), n)); }
inline Tableau row_strict_evacuation(const Tableau& t, int n) { return transpose(evacuation(transpose(t), n)); }
inline Tableau row_strict_dual_evacuation(const Tableau& t, int n) { return transpose(dual_evacuation(transpose(t), n)); }

} // namespace agd
