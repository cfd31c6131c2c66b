#include "nci/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nci {

namespace {

bool valid_name(const VertexId& v) {
    if (v.empty()) return false;
    return std::all_of(v.begin(), v.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

Edge make_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("loop edge at vertex '" + u + "'");
    if (v < u) std::swap(u, v);
    return {std::move(u), std::move(v)};
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    std::set<VertexId> vset(std::make_move_iterator(vertices.begin()),
                            std::make_move_iterator(vertices.end()));
    std::set<Edge> eset;
    for (auto& e : edges) {
        Edge norm = make_edge(std::move(e.first), std::move(e.second));
        vset.insert(norm.first);
        vset.insert(norm.second);
        eset.insert(std::move(norm));
    }
    for (const auto& v : vset) {
        if (!valid_name(v))
            throw std::invalid_argument("invalid vertex name '" + v + "'");
    }
    verts_.assign(vset.begin(), vset.end());
    edges_.assign(eset.begin(), eset.end());
}

int Graph::index_of(const VertexId& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

bool Graph::has_vertex(const VertexId& v) const { return index_of(v) >= 0; }

bool Graph::has_edge(const VertexId& u, const VertexId& v) const {
    if (u == v) return false;
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(const VertexId& v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("unknown vertex '" + v + "'");
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<VertexId> Graph::neighbors(const VertexId& v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("unknown vertex '" + v + "'");
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::induced_subgraph(std::span<const VertexId> sub) const {
    std::set<VertexId> keep;
    for (const auto& v : sub) {
        if (!has_vertex(v))
            throw std::invalid_argument("unknown vertex '" + v + "'");
        keep.insert(v);
    }
    std::vector<Edge> kept;
    for (const auto& e : edges_)
        if (keep.count(e.first) && keep.count(e.second)) kept.push_back(e);
    return Graph(std::vector<VertexId>(keep.begin(), keep.end()), std::move(kept));
}

Graph Graph::induced_subgraph(const std::vector<VertexId>& sub) const {
    return induced_subgraph(std::span<const VertexId>(sub));
}

Graph Graph::invert_vertex(const VertexId& v) const {
    auto nbrs = neighbors(v);  // throws on unknown vertex
    std::set<VertexId> non_neighbors(verts_.begin(), verts_.end());
    non_neighbors.erase(v);
    std::vector<VertexId> rest(non_neighbors.begin(), non_neighbors.end());
    for (const auto& u : nbrs) non_neighbors.erase(u);

    std::vector<Edge> kept;
    for (const auto& e : edges_)
        if (non_neighbors.count(e.first) && non_neighbors.count(e.second))
            kept.push_back(e);
    return Graph(std::move(rest), std::move(kept));
}

bool Graph::is_ci() const {
    std::vector<int> deg(verts_.size(), 0);
    for (const auto& [a, b] : edges_) {
        if (++deg[index_of(a)] > 1) return false;
        if (++deg[index_of(b)] > 1) return false;
    }
    return true;
}

bool Graph::is_connected() const {
    const std::size_t n = verts_.size();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges_) {
        int i = index_of(a), j = index_of(b);
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

std::vector<std::vector<Edge>> spanning_trees(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("spanning_trees: graph has more than 8 vertices");
    if (n <= 1) return {{}};

    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    const std::size_t k = n - 1;
    if (m < k) return {};

    // vertex index per edge endpoint, against sorted vertex order
    const auto& verts = g.vertices();
    auto vidx = [&](const VertexId& v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                verts.begin());
    };
    std::vector<std::pair<int, int>> ie(m);
    for (std::size_t i = 0; i < m; ++i)
        ie[i] = {vidx(edges[i].first), vidx(edges[i].second)};

    std::vector<std::vector<Edge>> trees;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);

    std::vector<int> parent(n);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // lexicographic combinations of k edge indices out of m
    while (true) {
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        for (std::size_t i : pick) {
            int a = find(ie[i].first), b = find(ie[i].second);
            if (a == b) {
                acyclic = false;
                break;
            }
            parent[a] = b;
        }
        if (acyclic) {  // n-1 edges and no cycle => spanning tree
            std::vector<Edge> tree;
            tree.reserve(k);
            for (std::size_t i : pick) tree.push_back(edges[i]);
            trees.push_back(std::move(tree));
        }
        // advance combination
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == m - k + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return trees;
}

}  // namespace nci
