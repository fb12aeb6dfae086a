#pragma once

#include <map>
#include <sstream>

#include "hive.hpp"

namespace agd {

inline std::string parts_str(const Partition& p)
{
    bool wide = std::any_of(p.begin(), p.end(), [](int x) { return x > 9; });
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (wide && i ? "," : "") + std::to_string(p[i]);
    return s;
}

// (alpha|beta), the empty weight prints as a dot
inline std::string weight_str(const Weight& w)
{
    auto s = split_parts(w);
    if (s.positive.empty() && s.negative.empty()) return ".";
    return "(" + parts_str(s.positive) + "|" + parts_str(s.negative) + ")";
}

// Staircase layout: one text row per line, shifted right one cell per line, marks in between.
inline std::string render_ascii(const Diagram& d)
{
    const int n = d.n();
    size_t w = 2;
    for (auto& L : d.lines)
        for (auto& x : L) w = std::max(w, weight_str(x).size() + 1);
    std::map<std::pair<int, int>, int> mk;
    for (auto& m : d.marks) mk[{m.row, m.col}] = m.mult;
    std::ostringstream os;
    auto pad = [&](std::string s) {
        s.resize(w, ' ');
        return s;
    };
    for (int i = 1; i <= n + 1; ++i) {
        std::string row(size_t(i - 1) * w, ' ');
        for (int c = 0; c <= n; ++c) row += pad(weight_str(d.at(i, c)));
        while (!row.empty() && row.back() == ' ') row.pop_back();
        os << row << '\n';
        if (i > n) break;
        std::string between(size_t(i - 1 + n) * w + w, ' ');
        for (int c = 1; c < n; ++c) {
            auto it = mk.find({i, i + c});
            if (it == mk.end()) continue;
            std::string t = it->second == 1 ? "X" : std::to_string(it->second);
            size_t at = size_t(i - 1 + c) * w + w / 2;
            between.replace(at, t.size(), t);
        }
        while (!between.empty() && between.back() == ' ') between.pop_back();
        os << between << '\n';
    }
    return os.str();
}

inline std::string svg_escape(const std::string& s)
{
    std::string r;
    for (char c : s) {
        if (c == '<') r += "&lt;";
        else if (c == '>') r += "&gt;";
        else if (c == '&') r += "&amp;";
        else r += c;
    }
    return r;
}

inline std::string render_svg(const Diagram& d)
{
    const int n = d.n();
    const int cell = 60, margin = 30;
    const int W = 2 * n * cell + 2 * margin, H = (n + 1) * cell + 2 * margin;
    std::map<std::pair<int, int>, int> mk;
    for (auto& m : d.marks) mk[{m.row, m.col}] = m.mult;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<g font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (int i = 1; i <= n; ++i)
        for (int c = 1; c < n; ++c) {
            int x = margin + (i - 1 + c) * cell, y = margin + (i - 1) * cell;
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
               << "\" fill=\"none\" stroke=\"#888\"/>\n";
            auto it = mk.find({i, i + c});
            if (it != mk.end())
                os << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4 << "\" font-size=\"18\">"
                   << (it->second == 1 ? std::string("X") : std::to_string(it->second)) << "</text>\n";
        }
    for (int i = 1; i <= n + 1; ++i)
        for (int c = 0; c <= n; ++c) {
            int x = margin + (i - 1 + c) * cell, y = margin + (i - 1) * cell;
            os << "<text x=\"" << x << "\" y=\"" << y - 3 << "\">" << svg_escape(weight_str(d.at(i, c))) << "</text>\n";
        }
    os << "</g>\n</svg>\n";
    return os.str();
}

// Triangular grid, row k runs over j with i = m - j - k.
inline std::string render_hive3(const Hive& h)
{
    if (h.n() != 3) throw invalid_input("render_hive3: not a 3-hive");
    const int m = h.m();
    std::ostringstream os;
    for (int k = 0; k <= m; ++k) {
        os << std::string(size_t(k) * 2, ' ');
        for (int j = 0; j + k <= m; ++j) {
            int id = h.geom->index({m - j - k, j, k});
            std::string s = h.known[id] ? std::to_string(h.value[id]) : "?";
            os << std::string(s.size() < 4 ? 4 - s.size() : 0, ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace agd
