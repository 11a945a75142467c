#include "slocc/hierarchy.hpp"

#include <fstream>
#include <json.hpp>
#include <queue>
#include <sstream>

namespace slocc {

HierarchyGraph hierarchy_from_table(const OverlapTable& table) {
    HierarchyGraph g;
    for (const StateId& id : table.ids) g.nodes.push_back(id.str());
    const int n = static_cast<int>(table.ids.size());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i != j && table.at(j, i).saturated) g.edges.insert({j, i});
    return g;
}

namespace {

HierarchyGraph from_saturation(std::vector<std::string> nodes,
                               const std::vector<std::vector<bool>>& sat) {
    HierarchyGraph g;
    g.nodes = std::move(nodes);
    const int n = static_cast<int>(g.nodes.size());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i != j && sat[j][i]) g.edges.insert({j, i});
    return g;
}

HierarchyGraph parse_json_table(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("ids") || !j.contains("cells"))
        throw ValidationError("table json lacks ids/cells");
    std::vector<std::string> nodes = j["ids"].get<std::vector<std::string>>();
    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<bool>> sat(n, std::vector<bool>(n, false));
    const auto& cells = j["cells"];
    if (static_cast<int>(cells.size()) != n) throw ValidationError("table json is ragged");
    for (int row = 0; row < n; ++row) {
        if (static_cast<int>(cells[row].size()) != n) throw ValidationError("table json is ragged");
        for (int col = 0; col < n; ++col)
            sat[row][col] = cells[row][col].value("saturated", false);
    }
    return from_saturation(std::move(nodes), sat);
}

HierarchyGraph parse_csv_table(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("empty table file");
    std::vector<std::string> nodes;
    {
        std::istringstream header(line);
        std::string cell;
        bool first = true;
        while (std::getline(header, cell, ',')) {
            if (first) {
                first = false;
                continue;
            }
            nodes.push_back(cell);
        }
    }
    const int n = static_cast<int>(nodes.size());
    if (n == 0) throw ValidationError("table header has no ids");
    std::vector<std::vector<bool>> sat(n, std::vector<bool>(n, false));
    int row = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (row >= n) throw ValidationError("table has too many rows");
        std::istringstream cells(line);
        std::string cell;
        int col = -1;  // first cell is the row label
        while (std::getline(cells, cell, ',')) {
            if (col >= n) throw ValidationError("table row has too many cells");
            if (col >= 0) sat[row][col] = (cell == "1*");
            ++col;
        }
        if (col != n) throw ValidationError("table row has too few cells");
        ++row;
    }
    if (row != n) throw ValidationError("table has too few rows");
    return from_saturation(std::move(nodes), sat);
}

} // namespace

HierarchyGraph hierarchy_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open table file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto firstNonSpace = text.find_first_not_of(" \t\r\n");
    if (firstNonSpace == std::string::npos) throw ValidationError("empty table file");
    if (text[firstNonSpace] == '{') return parse_json_table(text);
    return parse_csv_table(text);
}

namespace {

std::vector<std::vector<bool>> reachability(const HierarchyGraph& g) {
    const int n = static_cast<int>(g.nodes.size());
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) adj[e.first].push_back(e.second);
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    q.push(w);
                }
        }
    }
    return reach;
}

} // namespace

HierarchyGraph transitive_reduction(const HierarchyGraph& g) {
    // keep edge (a,b) only if no intermediate c with a->c and c ->* b
    auto reach = reachability(g);
    HierarchyGraph out;
    out.nodes = g.nodes;
    out.transitiveReduced = true;
    for (const auto& e : g.edges) {
        bool redundant = false;
        for (const auto& mid : g.edges) {
            if (mid.first != e.first || mid.second == e.second) continue;
            if (mid.second == e.first) continue;  // ignore 2-cycles
            if (reach[mid.second][e.second] || mid.second == e.second) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.edges.insert(e);
    }
    return out;
}

bool reaches_all(const HierarchyGraph& g, int from) {
    auto reach = reachability(g);
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
        if (v != from && !reach[from][v]) return false;
    return true;
}

std::string hierarchy_to_dot(const HierarchyGraph& g) {
    std::ostringstream os;
    os << "digraph slocc_hierarchy {\n";
    os << "  // edge j -> i: mixed states of class i are contained in class j\n";
    os << "  rankdir=TB;\n";
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        os << "  n" << v << " [label=\"" << g.nodes[v] << "\"];";
        if (g.nodes[v] == "psi6") os << "  // GHZ-like class";
        if (g.nodes[v] == "psi7") os << "  // W-like class";
        os << '\n';
    }
    for (const auto& e : g.edges) os << "  n" << e.first << " -> n" << e.second << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace slocc
