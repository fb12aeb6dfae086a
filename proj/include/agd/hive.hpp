#pragma once

#include <array>
#include <memory>
#include <optional>
#include <random>

#include "staircase.hpp"

namespace agd {

// Lattice points of the simplex with n corners and side m, with a dense index.
class Simplex {
public:
    Simplex(int n, int m) : n_(n), m_(m)
    {
        if (n < 2 || m < 0) throw invalid_input("simplex: need n >= 2, m >= 0");
        long long cells = 1;
        for (int i = 0; i < n; ++i) {
            cells *= (m + 1);
            if (cells > 50'000'000) throw invalid_input("simplex too large");
        }
        lookup_.assign(size_t(cells), -1);
        std::vector<int> p(n, 0);
        auto rec = [&](auto&& self, int k, int left) -> void {
            if (k == n - 1) {
                p[k] = left;
                lookup_[code(p)] = int(points_.size());
                points_.push_back(p);
                return;
            }
            for (int v = left; v >= 0; --v) {
                p[k] = v;
                self(self, k + 1, left - v);
            }
        };
        rec(rec, 0, m);
    }

    int n() const { return n_; }
    int m() const { return m_; }
    size_t size() const { return points_.size(); }
    const std::vector<int>& point(int id) const { return points_[id]; }
    const std::vector<std::vector<int>>& points() const { return points_; }

    int index(const std::vector<int>& p) const
    {
        for (int x : p)
            if (x < 0 || x > m_) return -1;
        return lookup_[code(p)];
    }

    // (m-t) e_a + t e_b
    int edge_point(int a, int b, int t) const
    {
        std::vector<int> p(n_, 0);
        p[a] += m_ - t;
        p[b] += t;
        return index(p);
    }

private:
    size_t code(const std::vector<int>& p) const
    {
        size_t c = 0;
        for (int x : p) c = c * (m_ + 1) + size_t(x);
        return c;
    }

    int n_, m_;
    std::vector<std::vector<int>> points_;
    std::vector<int> lookup_;
};

// Partial labelling of a simplex. A 3-hive is the case n = 3.
struct Hive {
    std::shared_ptr<const Simplex> geom;
    std::vector<int> value;
    std::vector<char> known;

    Hive() = default;
    Hive(int n, int m) : geom(std::make_shared<Simplex>(n, m)), value(geom->size(), 0), known(geom->size(), 0) {}
    explicit Hive(std::shared_ptr<const Simplex> g) : geom(std::move(g)), value(geom->size(), 0), known(geom->size(), 0) {}

    int n() const { return geom->n(); }
    int m() const { return geom->m(); }
    bool complete() const { return std::all_of(known.begin(), known.end(), [](char k) { return k; }); }

    int at(const std::vector<int>& p) const
    {
        int id = geom->index(p);
        if (id < 0 || !known[id]) throw invalid_input("hive point not labelled");
        return value[id];
    }
    void set(int id, int v)
    {
        value[id] = v;
        known[id] = 1;
    }

    bool operator==(const Hive& o) const
    {
        return n() == o.n() && m() == o.m() && value == o.value && known == o.known;
    }
};

inline int octahedron_step(int e, int a, int b, int c, int d) { return std::max(a + c, b + d) - e; }

// Rhombus inequalities on the face spanned by corners (p,q,r), in local coordinates (i,j,k).
inline bool face_rhombus_ok(const Hive& h, int p, int q, int r)
{
    const int m = h.m();
    auto f = [&](int i, int j, int k, bool& ok) {
        if (i < 0 || j < 0 || k < 0) {
            ok = false;
            return 0;
        }
        std::vector<int> pt(h.n(), 0);
        pt[p] = i;
        pt[q] = j;
        pt[r] = k;
        int id = h.geom->index(pt);
        if (id < 0 || !h.known[id]) {
            ok = false;
            return 0;
        }
        return h.value[id];
    };
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
            int k = m - i - j;
            bool ok = true;
            int a = f(i, j, k, ok), b = f(i, j + 1, k - 1, ok), c = f(i + 1, j, k - 1, ok), d = f(i - 1, j + 1, k, ok);
            if (ok && a + b < c + d) return false;
            ok = true;
            a = f(i, j, k, ok), b = f(i + 1, j - 1, k, ok), c = f(i + 1, j, k - 1, ok), d = f(i, j - 1, k + 1, ok);
            if (ok && a + b < c + d) return false;
            ok = true;
            a = f(i, j, k, ok), b = f(i + 1, j, k - 1, ok), c = f(i, j + 1, k - 1, ok), d = f(i + 1, j - 1, k, ok);
            if (ok && a + b < c + d) return false;
        }
    return true;
}

inline bool rhombus_ok(const Hive& h)
{
    for (int a = 0; a < h.n(); ++a)
        for (int b = a + 1; b < h.n(); ++b)
            for (int c = b + 1; c < h.n(); ++c)
                if (!face_rhombus_ok(h, a, b, c)) return false;
    return true;
}

// Successive differences along the edge from corner a to corner b.
inline Weight skeleton_weight(const Hive& h, int a, int b)
{
    if (a == b || a < 0 || b < 0 || a >= h.n() || b >= h.n()) throw invalid_input("skeleton_weight: bad corners");
    Weight w;
    for (int t = 0; t < h.m(); ++t) {
        int p = h.geom->edge_point(a, b, t), q = h.geom->edge_point(a, b, t + 1);
        if (!h.known[p] || !h.known[q]) throw invalid_input("skeleton_weight: edge not labelled");
        w.push_back(h.value[q] - h.value[p]);
    }
    if (!is_dominant(w)) throw invariant_error("skeleton_weight: differences are not weakly decreasing");
    return w;
}

// 3-hive boundary: lambda on p->q, mu on q->r, nu on r->p, f(p) = 0.
inline std::optional<Hive> hive3_boundary(const Weight& lambda, const Weight& mu, const Weight& nu)
{
    const int m = int(lambda.size());
    if (int(mu.size()) != m || int(nu.size()) != m) throw invalid_input("hive3: rank mismatch");
    if (total(lambda) + total(mu) + total(nu) != 0) return std::nullopt;
    Hive h(3, m);
    auto walk = [&](int a, int b, const Weight& w, int start) {
        int v = start;
        h.set(h.geom->edge_point(a, b, 0), v);
        for (int t = 0; t < m; ++t) {
            v += w[t];
            h.set(h.geom->edge_point(a, b, t + 1), v);
        }
        return v;
    };
    int v = walk(0, 1, lambda, 0);
    v = walk(1, 2, mu, v);
    walk(2, 0, nu, v);
    return h;
}

// Every labelling of the interior that satisfies the rhombus inequalities.
inline std::vector<Hive> enumerate_hive3(const Weight& lambda, const Weight& mu, const Weight& nu)
{
    std::vector<Hive> out;
    auto b = hive3_boundary(lambda, mu, nu);
    if (!b) return out;
    Hive h = *b;
    if (h.m() == 0) {
        out.push_back(h);
        return out;
    }
    int lo = INT32_MAX, hi = INT32_MIN;
    std::vector<int> inner;
    for (size_t id = 0; id < h.geom->size(); ++id) {
        if (h.known[id]) {
            lo = std::min(lo, h.value[id]);
            hi = std::max(hi, h.value[id]);
        } else {
            inner.push_back(int(id));
        }
    }
    if (!face_rhombus_ok(h, 0, 1, 2)) return out;
    // depth-first with the partial rhombus check as the pruning step
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == inner.size()) {
            out.push_back(h);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            h.set(inner[k], v);
            if (face_rhombus_ok(h, 0, 1, 2)) self(self, k + 1);
        }
        h.known[inner[k]] = 0;
        h.value[inner[k]] = 0;
    };
    rec(rec, 0);
    return out;
}

// The hive on corners (p,q,r) with p->q = l, q->r = lambda and p->r = nu, built
// on the lines parallel to the minuscule edge.
inline std::optional<Hive> solve_hive3_minuscule(const Weight& lambda, MinusculeLabel l, const Weight& nu)
{
    const int m = int(lambda.size());
    if (int(nu.size()) != m) throw invalid_input("solve_hive3_minuscule: rank mismatch");
    auto nb = pieri_neighbors(lambda, l);
    if (std::find(nb.begin(), nb.end(), nu) == nb.end()) return std::nullopt;
    Hive h(3, m);
    const bool fund = l.kind == Kind::fund;
    int nsum = 0, moved = 0; // prefix of nu, and how many of the first s entries changed
    for (int s = 0; s <= m; ++s) {
        if (s > 0) {
            nsum += nu[s - 1];
            moved += nu[s - 1] != lambda[s - 1];
        }
        int d = l.j - moved; // steps of +-1 along this line
        int len = m - s;
        if (d < 0 || d > len) return std::nullopt;
        for (int t = 0; t <= len; ++t) {
            int v = fund ? nsum + std::min(t, d) : nsum - std::max(0, t - (len - d));
            h.set(h.geom->index({m - s - t, t, s}), v);
        }
    }
    if (!rhombus_ok(h)) return std::nullopt;
    if (skeleton_weight(h, 0, 1) != minuscule_vector(l, m) || skeleton_weight(h, 1, 2) != lambda ||
        skeleton_weight(h, 0, 2) != nu)
        return std::nullopt;
    return h;
}

// Copy a 3-hive onto the face (a,b,c) of h, shifted to agree with what is already there.
inline void place_face(Hive& h, int a, int b, int c, const Hive& face)
{
    std::optional<int> shift;
    std::vector<int> pt(h.n());
    for (size_t id = 0; id < face.geom->size(); ++id) {
        auto& q = face.geom->point(int(id));
        std::fill(pt.begin(), pt.end(), 0);
        pt[a] = q[0];
        pt[b] = q[1];
        pt[c] = q[2];
        int hid = h.geom->index(pt);
        if (h.known[hid]) {
            int s = h.value[hid] - face.value[id];
            if (shift && *shift != s) throw invalid_input("place_face: face disagrees with known labels");
            shift = s;
        }
    }
    int s = shift.value_or(0);
    for (size_t id = 0; id < face.geom->size(); ++id) {
        auto& q = face.geom->point(int(id));
        std::fill(pt.begin(), pt.end(), 0);
        pt[a] = q[0];
        pt[b] = q[1];
        pt[c] = q[2];
        h.set(h.geom->index(pt), face.value[id] + s);
    }
}

// Unit octahedra: base point i of side m-2 and corners a<b<c<d.
struct Octahedron {
    std::array<int, 6> id; // ab, ac, ad, bc, bd, cd
};

inline std::vector<Octahedron> octahedra(const Simplex& g)
{
    std::vector<Octahedron> out;
    if (g.m() < 2 || g.n() < 4) return out;
    Simplex base(g.n(), g.m() - 2);
    const int n = g.n();
    for (auto& p : base.points())
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        auto at = [&](int x, int y) {
                            auto q = p;
                            ++q[x];
                            ++q[y];
                            return g.index(q);
                        };
                        out.push_back({{at(a, b), at(a, c), at(a, d), at(b, c), at(b, d), at(c, d)}});
                    }
    return out;
}

// f(ac) + f(bd) = max(f(ab) + f(cd), f(ad) + f(bc)), solved for whichever of ac, bd is missing.
// The order of application is taken from `order` (a permutation of the octahedra) when given.
inline void excavate(Hive& h, const std::vector<size_t>* order = nullptr)
{
    auto oct = octahedra(*h.geom);
    std::vector<size_t> idx(oct.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (order) idx = *order;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t k : idx) {
            auto& o = oct[k].id;
            auto kn = [&](int s) { return h.known[o[s]] != 0; };
            if (!kn(0) || !kn(2) || !kn(3) || !kn(5)) continue;
            int top = std::max(h.value[o[0]] + h.value[o[5]], h.value[o[2]] + h.value[o[3]]);
            if (kn(1) && !kn(4)) {
                h.set(o[4], top - h.value[o[1]]);
                progress = true;
            } else if (!kn(1) && kn(4)) {
                h.set(o[1], top - h.value[o[4]]);
                progress = true;
            }
        }
    }
}

inline bool octahedra_ok(const Hive& h)
{
    for (auto& oc : octahedra(*h.geom)) {
        auto& o = oc.id;
        if (std::any_of(o.begin(), o.end(), [&](int id) { return !h.known[id]; })) continue;
        int lhs = h.value[o[1]] + h.value[o[4]];
        int rhs = std::max(h.value[o[0]] + h.value[o[5]], h.value[o[2]] + h.value[o[3]]);
        if (lhs != rhs) return false;
    }
    return true;
}

inline bool is_hive(const Hive& h) { return h.complete() && rhombus_ok(h) && octahedra_ok(h); }

// Fan disk from the path (edge 0->k carries mu^k), then excavation.
inline Hive build_hive_n(const MinusculePath& path, const DiagramType& t)
{
    check_type(t);
    if (!is_path(path, t)) throw invalid_input("build_hive_n: not a minuscule path of this type");
    const int n = t.n(), m = t.m;
    if (n < 3) throw invalid_input("build_hive_n: needs n >= 3");
    Hive h(n, m);
    for (int k = 1; k <= n - 2; ++k) {
        // face (k, k+1, 0): k->k+1 is the label, (k+1)->0 is dual(mu^{k+1}), k->0 is dual(mu^k)
        auto face = solve_hive3_minuscule(dual(path[k + 1]), t.labels[k], dual(path[k]));
        if (!face) throw invalid_input("build_hive_n: fan face " + std::to_string(k) + " infeasible");
        place_face(h, k, k + 1, 0, *face);
    }
    excavate(h);
    if (!h.complete()) throw invariant_error("build_hive_n: excavation left points unlabelled");
    // normalise f(corner 0) = 0
    int base = h.value[h.geom->edge_point(0, 1, 0)];
    for (auto& v : h.value) v -= base;
    return h;
}

// Polygon corners are 0..n-1; line L vertex c of a diagram is the edge corner L-1 -> corner L-1+c.
inline int corner_of(int n, int line, int c) { return (((line - 1 + c) % n) + n) % n; }

// The hive 1-skeleton as a diagram period: vertex c of line i is the edge weight corner i-1 -> i-1+c.
inline std::vector<std::vector<Weight>> skeleton_lines(const Hive& h)
{
    const int n = h.n();
    std::vector<std::vector<Weight>> lines(n, std::vector<Weight>(n + 1));
    for (int i = 1; i <= n; ++i)
        for (int c = 0; c <= n; ++c)
            lines[i - 1][c] = (c == 0 || c == n) ? zero_weight(h.m())
                                                 : skeleton_weight(h, corner_of(n, i, 0), corner_of(n, i, c));
    return lines;
}

// Extroverted triangulations, code words and their staircase paths.

struct Step {
    int line = 1; // line reached, 1..n
    int c = 1;    // vertex reached on that line
    bool up = false;
};

// "(1R)RLRL" or "1R,RLRL" style: first token is a number plus R|L, then n-2 letters.
struct CodeWord {
    int first = 1;
    bool first_up = false;
    std::string rest;
};

inline CodeWord parse_code(const std::string& s)
{
    CodeWord w;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && (s[i] == '(' || s[i] == ')' || s[i] == ',' || s[i] == ' ')) ++i;
    };
    skip();
    int num = 0;
    bool any = false;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        num = num * 10 + (s[i++] - '0');
        any = true;
    }
    if (!any || i >= s.size() || (s[i] != 'R' && s[i] != 'L')) throw invalid_input("bad code word '" + s + "'");
    w.first = num;
    w.first_up = s[i++] == 'L';
    for (; i < s.size(); ++i) {
        if (s[i] == 'R' || s[i] == 'L') w.rest += s[i];
        else if (s[i] != '(' && s[i] != ')' && s[i] != ',' && s[i] != ' ') throw invalid_input("bad code word '" + s + "'");
    }
    return w;
}

inline std::string code_str(const CodeWord& w)
{
    return "(" + std::to_string(w.first) + (w.first_up ? "L" : "R") + ")" + w.rest;
}

inline std::vector<Step> decode_code(const CodeWord& w, int n)
{
    if (w.first < 1 || w.first > n || int(w.rest.size()) != n - 2) throw invalid_input("code word does not fit n");
    std::vector<Step> st;
    st.push_back({w.first, 1, w.first_up});
    for (char ch : w.rest) {
        Step s = st.back();
        s.c += 1;
        s.up = ch == 'L';
        if (s.up) s.line = (s.line - 2 + n) % n + 1;
        st.push_back(s);
    }
    return st;
}

inline std::vector<CodeWord> all_codes(int n)
{
    std::vector<CodeWord> out;
    for (int i = 1; i <= n; ++i)
        for (int up = 0; up < 2; ++up)
            for (int mask = 0; mask < (1 << (n - 2)); ++mask) {
                CodeWord w{i, up == 1, std::string(n - 2, 'R')};
                for (int b = 0; b < n - 2; ++b)
                    if (mask >> b & 1) w.rest[b] = 'L';
                out.push_back(w);
            }
    return out;
}

using Diagonal = std::pair<int, int>;

// Diagonals (as sorted corner pairs) that a code word's path crosses.
inline std::set<Diagonal> code_diagonals(const CodeWord& w, int n)
{
    std::set<Diagonal> d;
    auto st = decode_code(w, n);
    for (size_t k = 1; k + 1 < st.size(); ++k) {
        int a = corner_of(n, st[k].line, 0), b = corner_of(n, st[k].line, st[k].c);
        d.insert({std::min(a, b), std::max(a, b)});
    }
    return d;
}

using Triangle = std::array<int, 3>;

inline std::vector<std::vector<Triangle>> triangulations(int n)
{
    // polygon chain i..j with the edge (i,j) already present
    auto rec = [&](auto&& self, int i, int j) -> std::vector<std::vector<Triangle>> {
        if (j - i < 2) return {{}};
        std::vector<std::vector<Triangle>> out;
        for (int k = i + 1; k < j; ++k)
            for (auto& l : self(self, i, k))
                for (auto& r : self(self, k, j)) {
                    auto t = l;
                    t.insert(t.end(), r.begin(), r.end());
                    t.push_back({i, k, j});
                    out.push_back(std::move(t));
                }
        return out;
    };
    return rec(rec, 0, n - 1);
}

inline bool is_extroverted(const std::vector<Triangle>& tri, int n)
{
    auto side = [&](int a, int b) { return (b - a + n) % n == 1 || (a - b + n) % n == 1; };
    for (auto& t : tri)
        if (!side(t[0], t[1]) && !side(t[1], t[2]) && !side(t[0], t[2])) return false;
    return true;
}

inline std::set<Diagonal> diagonals_of(const std::vector<Triangle>& tri, int n)
{
    std::set<Diagonal> d;
    auto side = [&](int a, int b) { return (b - a + n) % n == 1 || (a - b + n) % n == 1; };
    for (auto& t : tri)
        for (int x = 0; x < 3; ++x)
            for (int y = x + 1; y < 3; ++y)
                if (!side(t[x], t[y])) d.insert({std::min(t[x], t[y]), std::max(t[x], t[y])});
    return d;
}

inline std::vector<std::set<Diagonal>> enumerate_extroverted(int n)
{
    if (n < 3) throw invalid_input("enumerate_extroverted: n >= 3");
    std::vector<std::set<Diagonal>> out;
    for (auto& t : triangulations(n))
        if (is_extroverted(t, n)) out.push_back(diagonals_of(t, n));
    return out;
}

inline long long count_extroverted(int n) { return (long long)enumerate_extroverted(n).size(); }

struct TriangulationWeights {
    std::vector<Weight> edges;  // oriented as the code word says
    std::vector<Weight> labels; // staircase path labels, duals undone on L steps
};

inline TriangulationWeights triangulation_weights(const Hive& h, const CodeWord& w)
{
    const int n = h.n();
    TriangulationWeights r;
    for (auto& s : decode_code(w, n)) {
        int a = corner_of(n, s.line, 0), b = corner_of(n, s.line, s.c);
        Weight e = s.up ? skeleton_weight(h, b, a) : skeleton_weight(h, a, b);
        r.labels.push_back(s.up ? dual(e) : e);
        r.edges.push_back(std::move(e));
    }
    return r;
}

// Count of n-hives of a type, built from brute-force 3-hives on the fan and excavated.
// Candidate edge weights come from all +-1 patterns, sorted; the hive count decides.
inline long long count_hives(const DiagramType& t)
{
    check_type(t);
    const int n = t.n(), m = t.m;
    // boundary differences telescope around the cycle, so their entries sum to zero
    int around = 0;
    for (auto& l : t.labels) around += total(minuscule_vector(l, m));
    if (around != 0) return 0;
    std::map<std::array<Weight, 3>, std::vector<Hive>> cache;
    auto faces = [&](const Weight& a, const Weight& b, const Weight& c) -> const std::vector<Hive>& {
        std::array<Weight, 3> key{a, b, c};
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, enumerate_hive3(a, b, c)).first;
        return it->second;
    };
    auto geom = std::make_shared<Simplex>(std::max(n, 3), m);
    long long count = 0;
    std::vector<Weight> mu{zero_weight(m)};
    std::vector<const Hive*> chosen;
    auto candidates = [&](const Weight& a, MinusculeLabel l) {
        std::set<Weight> s;
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + l.j, true);
        do {
            Weight b = a;
            for (int i = 0; i < m; ++i)
                if (pick[i]) b[i] += l.kind == Kind::fund ? 1 : -1;
            s.insert(sort_desc(b));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return s;
    };
    if (n == 2) {
        // a single edge: lambda^1 followed by lambda^2 must close up
        auto w1 = minuscule_vector(t.labels[0], m);
        return minuscule_vector(t.labels[1], m) == dual(w1) ? 1 : 0;
    }
    auto finish = [&] {
        Hive h(geom);
        // face (0,1,2) first, with edge 0->1 = lambda^1
        for (int k = 1; k <= n - 2; ++k) place_face(h, 0, k, k + 1, *chosen[k - 1]);
        excavate(h);
        if (is_hive(h)) ++count;
    };
    auto dfs = [&](auto&& self, int k) -> void {
        // have mu^0..mu^k, choose mu^{k+1}
        if (k == n - 1) {
            // last edge: mu^{n-1} -> 0 must be lambda^n
            if (minuscule_vector(t.labels[n - 1], m) == dual(mu.back())) finish();
            return;
        }
        if (k == 0) {
            mu.push_back(minuscule_vector(t.labels[0], m));
            self(self, 1);
            mu.pop_back();
            return;
        }
        for (auto& nxt : candidates(mu.back(), t.labels[k])) {
            // face (0,k,k+1): 0->k = mu^k, k->k+1 = lambda^{k+1}, (k+1)->0 = dual(mu^{k+1})
            auto& hs = faces(mu.back(), minuscule_vector(t.labels[k], m), dual(nxt));
            if (hs.empty()) continue;
            mu.push_back(nxt);
            for (auto& f : hs) {
                chosen.push_back(&f);
                self(self, k + 1);
                chosen.pop_back();
            }
            mu.pop_back();
        }
    };
    dfs(dfs, 0);
    return count;
}

} // namespace agd
