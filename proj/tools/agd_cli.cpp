// agd: command line front end. JSON on stdin/stdout, exit 0 ok, 1 bad input, 2 broken invariant.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "json_io.hpp"

using namespace agd;
using agd::io::json;

namespace {

std::string in_path;
std::string format = "json";

json read_input()
{
    try {
        if (in_path.empty() || in_path == "-") return json::parse(std::cin);
        std::ifstream f(in_path);
        if (!f) throw invalid_input("cannot open " + in_path);
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

Perm parse_perm(const std::string& s)
{
    Perm p;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw invalid_input("permutation digits must be 1-9, or use commas");
            p.push_back(c - '0');
        }
    }
    if (!is_permutation(p)) throw invalid_input("not a permutation: " + s);
    return p;
}

json tableau_json(const Tableau& t) { return t; }

void emit_diagram(const Diagram& d)
{
    if (format == "ascii") std::cout << render_ascii(d);
    else if (format == "svg") std::cout << render_svg(d);
    else emit(io::to_json(d));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"affine growth diagrams, hives and their bijections"};
    app.require_subcommand(1);
    app.add_option("--in", in_path, "read JSON input from a file instead of stdin");
    app.add_option("--format", format, "json|ascii|svg")->check(CLI::IsMember({"json", "ascii", "svg"}));

    std::string type_s;
    int m = 0;
    std::string method = "all";

    auto* fill = app.add_subcommand("fill", "minuscule path -> diagram");
    auto* ver = app.add_subcommand("verify", "check a diagram");
    auto* en = app.add_subcommand("enumerate", "all diagrams of a type");
    auto* cnt = app.add_subcommand("count", "invariant count by several methods");
    auto* hv = app.add_subcommand("hive", "minuscule path -> n-hive");
    auto* mk = app.add_subcommand("marks", "marks, window and involution of a diagram");
    auto* rs = app.add_subcommand("rs", "Schensted tableaux and the involution embedding");
    auto* osc = app.add_subcommand("osc", "oscillating tableau <-> fixed-point-free involution");
    auto* kn = app.add_subcommand("knuth", "symmetric matrix <-> semistandard oscillating tableau");
    auto* pr = app.add_subcommand("promote", "promotion and evacuation of a tableau");
    auto* rd = app.add_subcommand("render", "draw a diagram or 3-hive");
    for (auto* s : {en, cnt}) {
        s->add_option("--type", type_s, "comma list like f1,f1,d1,d1")->required();
        s->add_option("--m", m, "rank")->required();
    }
    cnt->add_option("--method", method, "paths|hives|kostka|all")
        ->check(CLI::IsMember({"paths", "hives", "kostka", "all"}));
    std::string perm_s;
    rs->add_option("perm", perm_s, "permutation, e.g. 312 or 3,1,2")->required();
    int promote_n = 0;
    bool row_strict = false;
    pr->add_option("--n", promote_n, "largest entry (default: read from input)");
    pr->add_flag("--row-strict", row_strict, "treat the tableau as row strict");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*fill) {
            auto [t, p] = io::path_from(read_input());
            emit_diagram(fill_from_path(p, t));
        } else if (*ver) {
            auto d = io::diagram_from(read_input());
            auto bad = verify(d);
            emit({{"schema", 1}, {"valid", bad.empty()}, {"violations", bad}});
            return bad.empty() ? 0 : 1;
        } else if (*en) {
            auto t = parse_type(type_s, m);
            auto ds = enumerate_diagrams(t);
            json a = json::array();
            for (auto& d : ds) a.push_back(io::to_json(d));
            emit({{"schema", 1}, {"type", io::to_json(t)}, {"count", ds.size()}, {"diagrams", a}});
        } else if (*cnt) {
            auto t = parse_type(type_s, m);
            json c = json::object();
            if (method == "paths" || method == "all") c["paths"] = count_paths(t);
            if (method == "all") c["diagrams"] = (long long)enumerate_diagrams(t).size();
            if (method == "hives" || method == "all") c["hives"] = count_hives(t);
            if (method == "kostka" || method == "all") c["kostka"] = count_kostka(t);
            bool agree = true;
            for (auto& [k, v] : c.items()) agree = agree && v == c.begin().value();
            emit({{"schema", 1}, {"type", io::to_json(t)}, {"counts", c}, {"agreement", agree}});
            return agree ? 0 : 2;
        } else if (*hv) {
            auto [t, p] = io::path_from(read_input());
            auto h = build_hive_n(p, t);
            if (!is_hive(h)) throw invariant_error("excavated hive fails the hive conditions");
            if (format == "ascii" && h.n() == 3) std::cout << render_hive3(h);
            else emit(io::to_json(h));
        } else if (*mk) {
            auto d = io::diagram_from(read_input());
            auto bad = verify(d);
            if (!bad.empty()) throw invalid_input("invalid diagram: " + bad.front());
            if (!marks_defined(d.type)) throw invalid_input("marks need m at least the total fundamental size");
            json out{{"schema", 1}, {"marks", io::marks_json(mark_multiplicities(d.type, d.lines))}};
            bool box_type = std::all_of(d.type.labels.begin(), d.type.labels.end(), [](auto l) { return l.j == 1; });
            if (box_type && 2 * d.m() >= d.n()) {
                auto w = marks(d);
                out["window"] = w;
                out["squares_to_shift"] = squares_to_shift(w);
                out["fpf"] = phi(d);
            }
            emit(out);
        } else if (*rs) {
            auto s = parse_perm(perm_s);
            // an involution already in the image of the embedding stands for the smaller permutation
            bool embedded = false;
            if (s.size() % 2 == 0 && is_fpf_involution(s)) {
                const int k = int(s.size()) / 2;
                Perm sigma(k);
                for (int j = 1; j <= k; ++j) sigma[j - 1] = s[2 * k - j];
                if (is_permutation(sigma) && embed_rs(sigma) == s) {
                    s = sigma;
                    embedded = true;
                }
            }
            auto ins = schensted(s);
            if (!(schensted_growth(s) == ins)) throw invariant_error("insertion and growth disagree");
            auto pi = embed_rs(s);
            auto d = psi(pi, int(s.size()));
            emit({{"schema", 1},
                  {"permutation", s},
                  {"from_involution", embedded},
                  {"P", tableau_json(ins.P)},
                  {"Q", tableau_json(ins.Q)},
                  {"fpf", pi},
                  {"window", marks(d)},
                  {"diagram", io::to_json(d)}});
        } else if (*osc) {
            auto j = read_input();
            if (j.contains("osc")) {
                auto t = j.at("osc").get<OscTableau>();
                emit({{"schema", 1}, {"osc", t}, {"fpf", osc_to_fpf(t)}});
            } else {
                auto p = j.at("fpf").get<Perm>();
                emit({{"schema", 1}, {"fpf", p}, {"osc", fpf_to_osc(p)}});
            }
        } else if (*kn) {
            auto j = read_input();
            if (j.contains("matrix")) {
                auto M = j.at("matrix").get<Matrix>();
                auto [p, b] = knuth_expand(M);
                emit({{"schema", 1}, {"matrix", M}, {"expanded", p}, {"osc", knuth_bijection(M)}});
            } else {
                auto t = j.at("osc").get<OscTableau>();
                emit({{"schema", 1}, {"osc", t}, {"matrix", knuth_bijection_inverse(t)}});
            }
        } else if (*pr) {
            auto j = read_input();
            auto t = j.at("tableau").get<Tableau>();
            int n = promote_n;
            if (j.contains("n")) n = j.at("n").get<int>();
            if (n == 0)
                for (auto& r : t)
                    for (int x : r) n = std::max(n, x);
            auto T = row_strict ? transpose(t) : t;
            if (!is_ssyt(T)) throw invalid_input("promote: not a tableau");
            auto back = [&](const Tableau& x) { return row_strict ? transpose(x) : x; };
            emit({{"schema", 1},
                  {"n", n},
                  {"promotion", back(promotion(T, n))},
                  {"dual_promotion", back(dual_promotion(T, n))},
                  {"evacuation", back(evacuation(T, n))}});
        } else if (*rd) {
            auto j = read_input();
            if (j.contains("values")) {
                auto h = io::hive_from(j);
                std::cout << render_hive3(h);
            } else {
                if (format == "json") format = "ascii";
                emit_diagram(io::diagram_from(j));
            }
        }
    } catch (const invalid_input& e) {
        emit({{"schema", 1}, {"error", e.what()}});
        return 1;
    } catch (const json::exception& e) {
        emit({{"schema", 1}, {"error", std::string("bad input: ") + e.what()}});
        return 1;
    } catch (const invariant_error& e) {
        emit({{"schema", 1}, {"error", e.what()}, {"internal", true}});
        return 2;
    }
    return 0;
}
