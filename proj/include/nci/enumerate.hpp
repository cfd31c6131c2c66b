#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nci/classify.hpp"
#include "nci/graph.hpp"
#include "nci/ideal.hpp"

namespace nci {

/// Canonical form of a graph on n <= 8 vertices: the upper-triangle
/// adjacency bitstring (row-major, earlier pairs more significant),
/// minimized exactly over all n! vertex permutations. Two graphs are
/// isomorphic iff their canonical forms are equal.
struct CanonicalGraph {
    int n = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalGraph&) const = default;
};

CanonicalGraph canonical_form(const Graph& g);

/// The graph a canonical form stands for, with vertices named v1..vn.
Graph graph_from_canonical(const CanonicalGraph& cg);

/// Exactly one representative per isomorphism class of connected simple
/// graphs on n vertices, in ascending canonical order, vertices named
/// v1..vn. Requires 1 <= n <= 8. Exhaustiveness comes from extending each
/// connected (n-1)-vertex class by one vertex attached to every nonempty
/// neighbor subset.
std::vector<Graph> generate_connected_graphs(int n);

/// Same, but all isomorphism classes (connected or not).
std::vector<Graph> generate_graphs(int n);

/// One graph where the two deciders disagreed, reported in graph6 and
/// edge-list form.
struct Mismatch {
    std::string graph6;
    std::string edge_list;
    Verdict definitional;
    Verdict structural;
};

struct CrossValidation {
    long long checked = 0;
    std::vector<Mismatch> mismatches;
};

/// Runs both deciders on every connected isomorphism class on n vertices
/// and records every disagreement. Requires 1 <= n <= 8.
CrossValidation cross_validate(int n);

struct CensusRow {
    int n = 0;
    long long connected_count = 0;
    long long nci_count = 0;
    long long neither_count = 0;
    long long ci_count = 0;
};

/// Verdict counts over connected isomorphism classes for n = 1..n_max.
/// Requires 1 <= n_max <= 8.
std::vector<CensusRow> nci_census(int n_max);

struct HypergraphSearchParams {
    int max_vars = 7;
    int max_gens = 10;
    int max_degree = 3;
    long long sample_count = 200;
    std::uint64_t seed = 0;
};

/// Bounded search for NCI ideals with a generator of degree >= 3. Covers
/// the structured family built from two disjoint supports A, B coned over
/// an apex g (generators: the products of A and of B, plus x*g for every
/// x in A union B), for all part sizes fitting max_vars, plus sample_count
/// seeded pseudo-random antichains. Requires max_vars <= 10 and
/// max_degree >= 3. Deterministic for fixed parameters.
std::vector<MonomialIdeal> hypergraph_nci_search(const HypergraphSearchParams& params);

}  // namespace nci
