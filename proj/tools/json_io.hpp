#pragma once

#include <json.hpp>

#include <agd/agd.hpp>

namespace agd::io {

using json = nlohmann::json;

inline json to_json(MinusculeLabel l) { return {{"kind", l.kind == Kind::fund ? "fund" : "dual"}, {"j", l.j}}; }

inline MinusculeLabel label_from(const json& j)
{
    if (j.is_string()) return parse_label(j.get<std::string>());
    auto k = j.at("kind").get<std::string>();
    if (k != "fund" && k != "dual") throw invalid_input("label kind must be fund or dual");
    return {k == "fund" ? Kind::fund : Kind::dual, j.at("j").get<int>()};
}

inline json to_json(const DiagramType& t)
{
    json ls = json::array();
    for (auto& l : t.labels) ls.push_back(to_json(l));
    return {{"m", t.m}, {"labels", ls}};
}

inline DiagramType type_from(const json& j)
{
    DiagramType t;
    t.m = j.at("m").get<int>();
    for (auto& l : j.at("labels")) t.labels.push_back(label_from(l));
    check_type(t);
    return t;
}

inline Weight weight_from(const json& j, int m)
{
    auto w = j.get<Weight>();
    if (int(w.size()) != m || !is_dominant(w)) throw invalid_input("expected a dominant weight of rank " + std::to_string(m));
    return w;
}

inline json marks_json(const std::vector<Mark>& ms)
{
    json a = json::array();
    for (auto& m : ms) a.push_back({m.row, m.col, m.mult});
    return a;
}

inline json to_json(const Diagram& d)
{
    return {{"schema", 1}, {"type", to_json(d.type)}, {"lines", d.lines}, {"marks", marks_json(d.marks)}};
}

inline Diagram diagram_from(const json& j)
{
    Diagram d;
    d.type = type_from(j.at("type"));
    for (auto& L : j.at("lines")) {
        d.lines.emplace_back();
        for (auto& w : L) d.lines.back().push_back(w.get<Weight>());
    }
    if (j.contains("marks"))
        for (auto& m : j.at("marks")) d.marks.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()});
    return d;
}

inline std::pair<DiagramType, MinusculePath> path_from(const json& j)
{
    auto t = type_from(j.at("type"));
    MinusculePath p;
    for (auto& w : j.at("path")) p.push_back(weight_from(w, t.m));
    return {t, p};
}

inline json to_json(const Hive& h)
{
    json vals = json::array();
    for (size_t id = 0; id < h.geom->size(); ++id)
        if (h.known[id]) vals.push_back({h.geom->point(int(id)), h.value[id]});
    return {{"schema", 1}, {"n", h.n()}, {"m", h.m()}, {"values", vals}};
}

inline Hive hive_from(const json& j)
{
    Hive h(j.at("n").get<int>(), j.at("m").get<int>());
    for (auto& e : j.at("values")) {
        int id = h.geom->index(e.at(0).get<std::vector<int>>());
        if (id < 0) throw invalid_input("hive point outside the simplex");
        h.set(id, e.at(1).get<int>());
    }
    return h;
}

} // namespace agd::io
