#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nci/graph.hpp"

namespace nci {

enum class Verdict { CI, NCI, Neither };
enum class Method { Definitional, Structural };
enum class TreeShape { P5, T };

std::string to_string(Verdict v);
std::string to_string(Method m);
std::string to_string(TreeShape s);

/// A 5-vertex witness that a connected graph is not an NCI: v1 is a leaf of
/// the induced subgraph on the five vertices, and tree_edges form a spanning
/// tree of that subgraph shaped like the path P5 (degrees 1,1,2,2,2) or the
/// tree T (degrees 1,1,1,2,3) in which v1's unique neighbor has degree 2.
struct Obstruction {
    std::array<VertexId, 5> vertices;  // v1 first, remaining four sorted
    TreeShape tree_type;
    std::vector<Edge> tree_edges;  // 4 edges, sorted

    bool operator==(const Obstruction&) const = default;
};

/// Checks all Obstruction invariants against g, independently of how the
/// witness was found.
bool obstruction_valid(const Graph& g, const Obstruction& w);

struct FailingVertex {
    VertexId name;
    bool operator==(const FailingVertex&) const = default;
};

struct Rule {
    std::string name;
    bool operator==(const Rule&) const = default;
};

using Evidence = std::variant<std::monostate, FailingVertex, Obstruction, Rule>;

struct ClassificationReport {
    Verdict verdict = Verdict::CI;
    Method method = Method::Structural;
    Evidence evidence;

    bool operator==(const ClassificationReport&) const = default;
};

/// Definitional decider: CI if g is a complete intersection; NCI if every
/// vertex inversion is a complete intersection; otherwise Neither, with the
/// first failing vertex (in sorted order) as evidence.
ClassificationReport is_nci_definitional(const Graph& g);

/// Scans 5-subsets in lexicographic order (by sorted vertex names) and
/// returns the first obstruction witness, or nullopt if none exists.
/// Requires at least 5 vertices.
std::optional<Obstruction> find_obstruction(const Graph& g);

/// Structural decider: CI graphs are CI; disconnected non-CI graphs are
/// Neither; connected graphs on 3 or 4 vertices are NCI; larger connected
/// graphs are NCI exactly when no obstruction exists.
ClassificationReport classify(const Graph& g);

namespace detail {

/// Direct formulation used by find_obstruction: some spanning tree of h is
/// shaped P5 or T with leaf's unique neighbor of tree-degree 2. leaf must
/// have degree 1 in h.
bool has_qualifying_tree(const Graph& h, const VertexId& leaf);

/// Shortcut formulation: some spanning tree of h gives the leaf's unique
/// neighbor tree-degree 2 (the star shape is then excluded automatically).
bool has_qualifying_tree_shortcut(const Graph& h, const VertexId& leaf);

}  // namespace detail

}  // namespace nci
