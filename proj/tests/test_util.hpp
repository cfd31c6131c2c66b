#pragma once

#include <string>
#include <vector>

#include "nci/graph.hpp"

namespace nci::testutil {

inline Graph make_graph(std::vector<VertexId> verts, std::vector<Edge> edges) {
    return Graph(std::move(verts), std::move(edges));
}

// seven-vertex fixture shared across suites: edges fd, fg, gd, db, bc, ba, de
inline Graph example_graph() {
    return make_graph({}, {{"f", "d"},
                           {"f", "g"},
                           {"g", "d"},
                           {"d", "b"},
                           {"b", "c"},
                           {"b", "a"},
                           {"d", "e"}});
}

inline Graph path(int n, const std::string& prefix = "x") {
    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) verts.push_back(prefix + std::to_string(i));
    for (int i = 1; i < n; ++i)
        edges.push_back({prefix + std::to_string(i), prefix + std::to_string(i + 1)});
    return Graph(std::move(verts), std::move(edges));
}

inline Graph cycle(int n, const std::string& prefix = "x") {
    Graph p = path(n, prefix);
    std::vector<Edge> edges = p.edges();
    edges.push_back({prefix + "1", prefix + std::to_string(n)});
    return Graph(p.vertices(), std::move(edges));
}

inline Graph complete(int n, const std::string& prefix = "x") {
    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) verts.push_back(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({verts[i], verts[j]});
    return Graph(std::move(verts), std::move(edges));
}

// one center and n leaves
inline Graph star(int n) {
    std::vector<VertexId> verts{"c"};
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        verts.push_back("l" + std::to_string(i));
        edges.push_back({"c", "l" + std::to_string(i)});
    }
    return Graph(std::move(verts), std::move(edges));
}

// the 5-vertex tree with edges t1t2, t2t3, t3t4, t3t5
inline Graph tree_t() {
    return make_graph({}, {{"t1", "t2"}, {"t2", "t3"}, {"t3", "t4"}, {"t3", "t5"}});
}

// every labeled graph on vertices v1..vn, by edge-subset mask
inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<Edge> all_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_edges.push_back({verts[i], verts[j]});
    std::vector<Graph> out;
    out.reserve(1u << all_edges.size());
    for (std::uint32_t mask = 0; mask < (1u << all_edges.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < all_edges.size(); ++k)
            if (mask & (1u << k)) edges.push_back(all_edges[k]);
        out.push_back(Graph(verts, std::move(edges)));
    }
    return out;
}

}  // namespace nci::testutil
