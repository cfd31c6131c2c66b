#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nci {

/// Vertices are identified by name; a name is a nonempty token of
/// alphanumerics and underscores, unique within one graph.
using VertexId = std::string;

/// Unordered edge, stored normalized with first < second.
using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId u, VertexId v);

/// A finite simple graph with named vertices. Loops and multi-edges are
/// rejected; singletons (vertices with no incident edge) are first-class
/// members of the vertex set. Immutable after construction, so values can
/// be shared freely between threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from a vertex list and an edge list. Edge endpoints
    /// are added to the vertex set implicitly; duplicate vertices and
    /// duplicate edges collapse (set semantics). Throws std::invalid_argument
    /// on loops or invalid vertex names.
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    /// Vertex names in sorted order.
    const std::vector<VertexId>& vertices() const { return verts_; }

    /// Normalized edges in sorted order.
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const VertexId& v) const;
    bool has_edge(const VertexId& u, const VertexId& v) const;

    int degree(const VertexId& v) const;

    /// Vertices sharing an edge with v, sorted. Throws if v is unknown.
    std::vector<VertexId> neighbors(const VertexId& v) const;

    /// Subgraph on S with every edge of this graph whose endpoints both
    /// lie in S. Throws if S contains an unknown vertex.
    Graph induced_subgraph(std::span<const VertexId> sub) const;
    Graph induced_subgraph(const std::vector<VertexId>& sub) const;

    /// Inversion at v: drop v, keep all other vertices, and retain only
    /// the edges of the subgraph induced on the non-neighbors of v. The
    /// neighbors of v survive as isolated vertices.
    Graph invert_vertex(const VertexId& v) const;

    /// True iff every vertex has degree <= 1, i.e. the graph is a disjoint
    /// union of edges and singletons.
    bool is_ci() const;

    /// True iff the graph has exactly one connected component. The empty
    /// graph counts as connected.
    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexId> verts_;  // sorted, unique
    std::vector<Edge> edges_;      // sorted, normalized u < v

    int index_of(const VertexId& v) const;  // -1 if absent
};

/// All spanning trees of g, each as a sorted edge set, enumerated in a
/// deterministic order (lexicographic combinations over the sorted edge
/// list). Empty result iff g is disconnected. Graphs on zero or one
/// vertices have exactly one (empty) spanning tree. Throws if g has more
/// than 8 vertices.
std::vector<std::vector<Edge>> spanning_trees(const Graph& g);

}  // namespace nci
