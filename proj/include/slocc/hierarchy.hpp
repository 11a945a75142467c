#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slocc/overlap.hpp"

namespace slocc {

/// Directed inclusion graph of mixed-state classes: edge j -> i when the
/// orbit of node j approximates node i arbitrarily well (saturated table
/// entry).
struct HierarchyGraph {
    std::vector<std::string> nodes;
    std::set<std::pair<int, int>> edges;  // (from j, to i), no self-edges
    bool transitiveReduced = false;
};

HierarchyGraph hierarchy_from_table(const OverlapTable& table);

/// Reads a table written by table_to_csv or table_to_json (sniffed by
/// content) and derives the graph.
HierarchyGraph hierarchy_from_file(const std::string& path);

HierarchyGraph transitive_reduction(const HierarchyGraph& g);

/// True when `from` reaches every other node through directed edges.
bool reaches_all(const HierarchyGraph& g, int from);

std::string hierarchy_to_dot(const HierarchyGraph& g);

} // namespace slocc
