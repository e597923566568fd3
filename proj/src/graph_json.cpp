#include "rgh/graph_json.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rgh {

nlohmann::ordered_json graph_to_json_obj(const RibbonGraph& g) {
    nlohmann::ordered_json j;
    j["sigma"] = vertex_cycles(g);
    std::vector<std::array<int, 2>> alpha;
    for (int x = 0; x < g.half_edges(); ++x)
        if (g.mate[x] > x) alpha.push_back({x, g.mate[x]});
    std::sort(alpha.begin(), alpha.end());
    j["alpha"] = alpha;
    j["tails"] = g.tails;
    j["marks"] = g.marks;
    return j;
}

std::string graph_to_json(const RibbonGraph& g, bool pretty) {
    return graph_to_json_obj(g).dump(pretty ? 2 : -1);
}

RibbonGraph graph_from_json_obj(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("sigma") || !j.contains("alpha") ||
        !j.contains("tails") || !j.contains("marks"))
        throw std::invalid_argument("graph object needs sigma, alpha, tails, marks");

    const auto& sigma = j.at("sigma");
    if (!sigma.is_array()) throw std::invalid_argument("sigma must be an array of cycles");
    int n = 0;
    for (const auto& cyc : sigma) {
        if (!cyc.is_array() || cyc.empty())
            throw std::invalid_argument("sigma cycles must be nonempty arrays");
        n += static_cast<int>(cyc.size());
    }

    RibbonGraph g;
    g.next.assign(n, -1);
    auto as_index = [&](const nlohmann::json& v) {
        if (!v.is_number_integer())
            throw std::invalid_argument("half-edges must be integers");
        const long long x = v.get<long long>();
        if (x < 0 || x >= n) throw std::invalid_argument("half-edge out of range");
        return static_cast<int>(x);
    };
    for (const auto& cyc : sigma) {
        std::vector<int> c;
        for (const auto& v : cyc) c.push_back(as_index(v));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (g.next[c[i]] != -1)
                throw std::invalid_argument("half-edge appears in two sigma cycles");
            g.next[c[i]] = c[(i + 1) % c.size()];
        }
    }

    g.mate.resize(n);
    for (int x = 0; x < n; ++x) g.mate[x] = x;
    const auto& alpha = j.at("alpha");
    if (!alpha.is_array()) throw std::invalid_argument("alpha must be an array of pairs");
    for (const auto& pair : alpha) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("alpha entries must be pairs");
        const int a = as_index(pair[0]), b = as_index(pair[1]);
        if (a == b || g.mate[a] != a || g.mate[b] != b)
            throw std::invalid_argument("alpha pairs must be disjoint");
        g.mate[a] = b;
        g.mate[b] = a;
    }

    const auto& tails = j.at("tails");
    if (!tails.is_array()) throw std::invalid_argument("tails must be an array");
    for (const auto& t : tails) g.tails.push_back(as_index(t));

    const auto& marks = j.at("marks");
    if (!marks.is_array()) throw std::invalid_argument("marks must be an array");
    for (const auto& m : marks) {
        if (!m.is_number_integer())
            throw std::invalid_argument("marks must be vertex indices");
        g.marks.push_back(m.get<int>());
    }
    return g;
}

RibbonGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
    return graph_from_json_obj(j);
}

std::string graph_to_dot(const RibbonGraph& g) {
    const auto verts = vertex_cycles(g);
    std::vector<int> mark_of(verts.size(), 0);
    for (std::size_t j = 0; j < g.marks.size(); ++j)
        mark_of[g.marks[j]] = static_cast<int>(j) + 1;
    const auto vidx = vertex_index_of(g);

    std::string out = "graph ribbon {\n";
    for (std::size_t v = 0; v < verts.size(); ++v) {
        out += "  v" + std::to_string(v);
        if (mark_of[v])
            out += " [shape=doublecircle label=\"v" + std::to_string(v) + " m" +
                   std::to_string(mark_of[v]) + "\"]";
        else
            out += " [shape=circle label=\"v" + std::to_string(v) + "\"]";
        out += ";  // rotation:";
        for (int x : verts[v]) out += " " + std::to_string(x);
        out += "\n";
    }
    for (std::size_t j = 0; j < g.tails.size(); ++j) {
        out += "  t" + std::to_string(j + 1) + " [shape=none label=\"" +
               std::to_string(j + 1) + "\"];\n";
        out += "  v" + std::to_string(vidx[g.tails[j]]) + " -- t" +
               std::to_string(j + 1) + ";\n";
    }
    for (int x = 0; x < g.half_edges(); ++x)
        if (g.mate[x] > x)
            out += "  v" + std::to_string(vidx[x]) + " -- v" +
                   std::to_string(vidx[g.mate[x]]) + ";\n";
    out += "}\n";
    return out;
}

} // namespace rgh
