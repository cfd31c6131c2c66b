#include "nci/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nci {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CI: return "CI";
        case Verdict::NCI: return "NCI";
        case Verdict::Neither: return "NEITHER";
    }
    return "?";
}

std::string to_string(Method m) {
    return m == Method::Definitional ? "definitional" : "structural";
}

std::string to_string(TreeShape s) { return s == TreeShape::P5 ? "P5" : "T"; }

namespace {

std::map<VertexId, int> tree_degrees(const std::vector<Edge>& tree) {
    std::map<VertexId, int> deg;
    for (const auto& [a, b] : tree) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

// P5 has tree degrees {1,1,2,2,2}; T has {1,1,1,2,3}.
std::optional<TreeShape> shape_of(const std::map<VertexId, int>& deg) {
    std::vector<int> ds;
    ds.reserve(deg.size());
    for (const auto& [v, d] : deg) ds.push_back(d);
    std::sort(ds.begin(), ds.end());
    if (ds == std::vector<int>{1, 1, 2, 2, 2}) return TreeShape::P5;
    if (ds == std::vector<int>{1, 1, 1, 2, 3}) return TreeShape::T;
    return std::nullopt;
}

// The tree qualifies for the given leaf when the leaf's unique tree
// neighbor has tree-degree 2. The leaf has degree 1 in the induced
// subgraph, so every spanning tree contains exactly its one edge.
bool neighbor_has_tree_degree_two(const std::vector<Edge>& tree,
                                  const std::map<VertexId, int>& deg,
                                  const VertexId& leaf) {
    for (const auto& [a, b] : tree) {
        if (a == leaf) return deg.at(b) == 2;
        if (b == leaf) return deg.at(a) == 2;
    }
    return false;
}

}  // namespace

namespace detail {

bool has_qualifying_tree(const Graph& h, const VertexId& leaf) {
    for (const auto& tree : spanning_trees(h)) {
        auto deg = tree_degrees(tree);
        if (!shape_of(deg)) continue;
        if (neighbor_has_tree_degree_two(tree, deg, leaf)) return true;
    }
    return false;
}

bool has_qualifying_tree_shortcut(const Graph& h, const VertexId& leaf) {
    for (const auto& tree : spanning_trees(h)) {
        auto deg = tree_degrees(tree);
        if (neighbor_has_tree_degree_two(tree, deg, leaf)) return true;
    }
    return false;
}

}  // namespace detail

bool obstruction_valid(const Graph& g, const Obstruction& w) {
    for (const auto& v : w.vertices)
        if (!g.has_vertex(v)) return false;

    std::vector<VertexId> subset(w.vertices.begin(), w.vertices.end());
    std::sort(subset.begin(), subset.end());
    if (std::unique(subset.begin(), subset.end()) != subset.end()) return false;

    Graph h = g.induced_subgraph(subset);
    const VertexId& v1 = w.vertices[0];
    if (h.degree(v1) != 1) return false;

    // tree edges must be induced edges and form a spanning tree
    for (const auto& e : w.tree_edges)
        if (!h.has_edge(e.first, e.second)) return false;
    if (w.tree_edges.size() != 4) return false;
    Graph tree(subset, w.tree_edges);
    if (tree.vertex_count() != 5 || !tree.is_connected()) return false;

    auto deg = tree_degrees(w.tree_edges);
    auto shape = shape_of(deg);
    if (!shape || *shape != w.tree_type) return false;
    if (deg.count(v1) == 0 || deg.at(v1) != 1) return false;
    return neighbor_has_tree_degree_two(w.tree_edges, deg, v1);
}

ClassificationReport is_nci_definitional(const Graph& g) {
    ClassificationReport report;
    report.method = Method::Definitional;
    if (g.is_ci()) {
        report.verdict = Verdict::CI;
        return report;
    }
    for (const auto& v : g.vertices()) {  // sorted: first failure is deterministic
        if (!g.invert_vertex(v).is_ci()) {
            report.verdict = Verdict::Neither;
            report.evidence = FailingVertex{v};
            return report;
        }
    }
    report.verdict = Verdict::NCI;
    return report;
}

std::optional<Obstruction> find_obstruction(const Graph& g) {
    const auto& verts = g.vertices();
    const std::size_t n = verts.size();
    if (n < 5)
        throw std::invalid_argument("find_obstruction requires at least 5 vertices");

    std::array<std::size_t, 5> pick{0, 1, 2, 3, 4};
    while (true) {
        std::vector<VertexId> subset;
        subset.reserve(5);
        for (std::size_t i : pick) subset.push_back(verts[i]);

        Graph h = g.induced_subgraph(subset);
        for (const auto& v1 : subset) {
            if (h.degree(v1) != 1) continue;
            for (const auto& tree : spanning_trees(h)) {
                auto deg = tree_degrees(tree);
                auto shape = shape_of(deg);
                if (!shape) continue;
                if (!neighbor_has_tree_degree_two(tree, deg, v1)) continue;

                Obstruction w;
                w.vertices[0] = v1;
                std::size_t k = 1;
                for (const auto& v : subset)
                    if (v != v1) w.vertices[k++] = v;
                w.tree_type = *shape;
                w.tree_edges = tree;
                return w;
            }
        }

        // next lexicographic 5-combination
        std::size_t pos = 5;
        while (pos > 0 && pick[pos - 1] == n - 5 + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t j = pos; j < 5; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

ClassificationReport classify(const Graph& g) {
    ClassificationReport report;
    report.method = Method::Structural;
    if (g.is_ci()) {
        report.verdict = Verdict::CI;
        report.evidence = Rule{"complete-intersection"};
        return report;
    }
    if (!g.is_connected()) {
        report.verdict = Verdict::Neither;
        report.evidence = Rule{"disconnected"};
        return report;
    }
    // connected and not CI forces at least 3 vertices
    if (g.vertex_count() <= 4) {
        report.verdict = Verdict::NCI;
        report.evidence = Rule{"small-graph"};
        return report;
    }
    if (auto w = find_obstruction(g)) {
        report.verdict = Verdict::Neither;
        report.evidence = std::move(*w);
        return report;
    }
    report.verdict = Verdict::NCI;
    report.evidence = Rule{"no-obstruction"};
    return report;
}

}  // namespace nci
