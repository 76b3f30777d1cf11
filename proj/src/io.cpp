#include "dcdkit/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dcdkit/error.hpp"

namespace dcdkit {

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    if (g.has_coloring()) {
        out << "c";
        for (int c : g.colors()) out << " " << c;
        out << "\n";
    }
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph graph_from_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::vector<int> colors;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (n < 0) {
            std::string kw;
            if (first != "p" || !(fields >> kw >> n >> m) || kw != "graph" || n < 0) {
                throw Error(ErrorKind::ParseError, where + ": expected header 'p graph <n> <m>'");
            }
            continue;
        }
        if (first == "c") {
            int c;
            while (fields >> c) colors.push_back(c);
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, where + ": expected 'u v'");
        }
        std::string extra;
        if (!(fields >> v) || (fields >> extra)) throw Error(ErrorKind::ParseError, where + ": expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error(ErrorKind::ParseError, where + ": bad edge");
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (n < 0) throw Error(ErrorKind::ParseError, "missing header");
    if (edges.size() != m) throw Error(ErrorKind::ParseError, "header announces " + std::to_string(m) + " edges");
    if (!colors.empty() && static_cast<int>(colors.size()) != n) throw Error(ErrorKind::ParseError, "one color per vertex required");
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error(ErrorKind::ParseError, "duplicate edge");
    return Graph(n, std::move(edges), std::move(colors));
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json j = {{"vertices", g.vertex_count()}, {"edges", edges}};
    if (g.has_coloring()) j["colors"] = g.colors();
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("vertices").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error(ErrorKind::ParseError, "bad edge");
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::vector<int> colors;
        if (j.contains("colors")) colors = j.at("colors").get<std::vector<int>>();
        return Graph(n, std::move(edges), std::move(colors));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

namespace {

std::vector<int> order_by_label(const std::vector<std::string>& labels) {
    std::vector<int> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    return order;
}

}  // namespace

nlohmann::json to_json(const IncidenceStructure& s) {
    const auto po = order_by_label(s.point_labels());
    const auto bo = order_by_label(s.block_labels());
    std::vector<int> prank(po.size()), brank(bo.size());
    nlohmann::json points = nlohmann::json::array(), blocks = nlohmann::json::array();
    for (std::size_t i = 0; i < po.size(); ++i) {
        prank[po[i]] = static_cast<int>(i);
        points.push_back(s.point_labels()[po[i]]);
    }
    for (std::size_t i = 0; i < bo.size(); ++i) {
        brank[bo[i]] = static_cast<int>(i);
        blocks.push_back(s.block_labels()[bo[i]]);
    }
    std::vector<Flag> flags;
    for (const auto& [p, b] : s.incidences()) flags.emplace_back(prank[p], brank[b]);
    std::sort(flags.begin(), flags.end());
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& [p, b] : flags) inc.push_back({p, b});
    return {{"points", points}, {"blocks", blocks}, {"incidence", inc}};
}

IncidenceStructure incidence_from_json(const nlohmann::json& j) {
    try {
        auto points = j.at("points").get<std::vector<std::string>>();
        auto blocks = j.at("blocks").get<std::vector<std::string>>();
        std::vector<Flag> flags;
        for (const auto& f : j.at("incidence")) flags.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
        return IncidenceStructure(std::move(points), std::move(blocks), std::move(flags));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace dcdkit
