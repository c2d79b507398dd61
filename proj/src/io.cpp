#include "sizefn/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace sizefn {

using nlohmann::json;

static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

static bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

IntervalSamples read_interval_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    IntervalSamples ss;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string row = trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string::npos)
            throw parse_error(path + ":" + std::to_string(lineno) + ": expected `t,value`");
        double t, v;
        const bool ok = parse_double(row.substr(0, comma), t) &&
                        parse_double(row.substr(comma + 1), v);
        if (!ok) {
            if (lineno == 1) continue; // header line
            throw parse_error(path + ":" + std::to_string(lineno) + ": not numeric");
        }
        ss.params.push_back(t);
        ss.values.push_back(v);
    }
    if (ss.params.size() < 2)
        throw parse_error(path + ": need at least two sample rows");
    return ss;
}

static json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

DiscreteSizePair read_graph_json(const std::string& path) {
    const json j = load_json(path);
    try {
        std::map<long long, double> by_id;
        for (const auto& v : j.at("vertices")) {
            const long long id = v.at("id").get<long long>();
            if (!by_id.emplace(id, v.at("value").get<double>()).second)
                throw parse_error(path + ": duplicate vertex id " + std::to_string(id));
        }
        std::map<long long, int> index;
        std::vector<double> values;
        for (const auto& [id, val] : by_id) {
            index[id] = static_cast<int>(values.size());
            values.push_back(val);
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw parse_error(path + ": edge must be a pair of vertex ids");
            const auto u = index.find(e[0].get<long long>());
            const auto v = index.find(e[1].get<long long>());
            if (u == index.end() || v == index.end())
                throw parse_error(path + ": edge references unknown vertex id");
            edges.emplace_back(u->second, v->second);
        }
        return from_graph(values, edges);
    } catch (const json::exception& e) {
        throw parse_error(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(path + ": " + e.what());
    }
}

json graph_to_json(const DiscreteSizePair& p) {
    json verts = json::array();
    for (int i = 0; i < p.vertex_count(); ++i)
        verts.push_back({{"id", i}, {"value", p.values[i]}});
    json edges = json::array();
    for (auto [u, v] : p.edges) edges.push_back({u, v});
    return {{"vertices", verts}, {"edges", edges}};
}

SizeFunctionDiagram diagram_from_json(const json& j) {
    try {
        SizeFunctionDiagram d;
        for (const auto& k : j.at("infinity")) d.at_infinity.push_back(k.get<double>());
        for (const auto& pt : j.at("points")) {
            CornerPoint c{pt.at("x").get<double>(), pt.at("y").get<double>(),
                          pt.at("mult").get<int>()};
            if (!(c.x < c.y) || c.multiplicity <= 0)
                throw parse_error("diagram point needs x < y and positive mult");
            d.proper.push_back(c);
        }
        std::sort(d.at_infinity.begin(), d.at_infinity.end());
        std::sort(d.proper.begin(), d.proper.end(),
                  [](const CornerPoint& a, const CornerPoint& b) {
                      return a.x != b.x ? a.x < b.x : a.y < b.y;
                  });
        return d;
    } catch (const json::exception& e) {
        throw parse_error(std::string("diagram: ") + e.what());
    }
}

SizeFunctionDiagram read_diagram_json(const std::string& path) {
    const json j = load_json(path);
    try {
        return diagram_from_json(j);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

json diagram_to_json(const SizeFunctionDiagram& d) {
    json inf = json::array();
    for (double k : d.at_infinity) inf.push_back(k);
    json pts = json::array();
    for (const auto& c : d.proper)
        pts.push_back({{"x", c.x}, {"y", c.y}, {"mult", c.multiplicity}});
    return {{"infinity", inf}, {"points", pts}};
}

static json extended_to_json(ExtendedReal v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

static json point_to_json(const DiagramPoint& p) {
    return {{"x", p.x}, {"y", extended_to_json(p.y)}};
}

json matching_to_json(const MatchingResult& m) {
    json pairs = json::array();
    for (const auto& pr : m.pairs)
        pairs.push_back({{"from", point_to_json(pr.from)},
                         {"to", point_to_json(pr.to)},
                         {"cost", extended_to_json(pr.cost)}});
    return pairs;
}

json bound_report_to_json(const BoundReport& rep) {
    return {{"kind", rep.kind == BoundKind::natural_lower ? "natural-lower" : "lambda-lower"},
            {"value", extended_to_json(rep.value)},
            {"comparable", rep.comparable},
            {"provenance", rep.provenance},
            {"left_diagram", diagram_to_json(rep.left)},
            {"right_diagram", diagram_to_json(rep.right)},
            {"matching", matching_to_json(rep.matching)}};
}

json estimate_to_json(const Estimate& est) {
    json steps = json::array();
    for (auto [i, j] : est.witness.steps) steps.push_back({i, j});
    return {{"value", est.value},
            {"seminorm", seminorm_name(est.seminorm)},
            {"n", est.n},
            {"m", est.m},
            {"coarse", est.coarse},
            {"witness",
             {{"orientation",
               est.witness.orientation == MonotonePath::Orientation::forward ? "forward"
                                                                             : "reversed"},
              {"steps", steps}}}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw parse_error("write failed for '" + path + "'");
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_extended(ExtendedReal v) {
    if (v.is_infinite()) return "inf";
    return format_number(v.value());
}

} // namespace sizefn
