#include "nci/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "nci/io.hpp"

namespace nci {

namespace {

// adjacency as one bitmask row per vertex, for n <= 8
using AdjRows = std::array<std::uint8_t, 8>;

int triangle_bits(int n) { return n * (n - 1) / 2; }

// upper-triangle bits row-major, pair (0,1) most significant
std::uint64_t bits_under_identity(const AdjRows& adj, int n) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bits = (bits << 1) | ((adj[i] >> j) & 1u);
    return bits;
}

// bitstring of adj under perm, updating best when strictly smaller; the
// comparison runs bit by bit and bails out as soon as perm is worse
bool try_improve(const AdjRows& adj, int n, const std::array<int, 8>& perm,
                 std::uint64_t& best) {
    std::uint64_t value = 0;
    int remaining = triangle_bits(n);
    bool smaller = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            --remaining;
            std::uint64_t bit = (adj[perm[i]] >> perm[j]) & 1u;
            if (!smaller) {
                std::uint64_t best_bit = (best >> remaining) & 1u;
                if (bit > best_bit) return false;
                if (bit < best_bit) smaller = true;
            }
            value = (value << 1) | bit;
        }
    if (smaller) best = value;
    return smaller;
}

// exact minimum over all n! vertex permutations
std::uint64_t canonical_bits(const AdjRows& adj, int n) {
    if (n <= 1) return 0;
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = bits_under_identity(adj, n);
    while (std::next_permutation(perm.begin(), perm.begin() + n))
        try_improve(adj, n, perm, best);
    return best;
}

AdjRows adj_from_bits(std::uint64_t bits, int n) {
    AdjRows adj{};
    int shift = triangle_bits(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            --shift;
            if ((bits >> shift) & 1u) {
                adj[i] |= std::uint8_t(1u << j);
                adj[j] |= std::uint8_t(1u << i);
            }
        }
    return adj;
}

// every class on n vertices arises by attaching a new vertex to some class
// on n-1 vertices; for connected graphs a nonempty attachment suffices
// because every connected graph has a non-cut vertex
std::vector<std::uint64_t> classes(int n, bool connected_only) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("graph enumeration supports 1 <= n <= 8");
    std::vector<std::uint64_t> level{0};  // single vertex
    for (int k = 1; k < n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t bits : level) {
            AdjRows adj = adj_from_bits(bits, k);
            const std::uint32_t lo = connected_only ? 1u : 0u;
            for (std::uint32_t sub = lo; sub < (1u << k); ++sub) {
                AdjRows ext = adj;
                ext[k] = std::uint8_t(sub);
                for (int v = 0; v < k; ++v)
                    if (sub & (1u << v)) ext[v] |= std::uint8_t(1u << k);
                next.insert(canonical_bits(ext, k + 1));
            }
        }
        level.assign(next.begin(), next.end());
    }
    return level;  // ascending canonical order (set-sorted)
}

std::vector<Graph> graphs_from(const std::vector<std::uint64_t>& bits, int n) {
    std::vector<Graph> out;
    out.reserve(bits.size());
    for (std::uint64_t b : bits) out.push_back(graph_from_canonical({n, b}));
    return out;
}

}  // namespace

CanonicalGraph canonical_form(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > 8)
        throw std::invalid_argument("canonical_form supports at most 8 vertices");
    const auto& verts = g.vertices();
    AdjRows adj{};
    for (const auto& [u, v] : g.edges()) {
        int i = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) -
                                 verts.begin());
        int j = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                 verts.begin());
        adj[i] |= std::uint8_t(1u << j);
        adj[j] |= std::uint8_t(1u << i);
    }
    return {n, canonical_bits(adj, n)};
}

Graph graph_from_canonical(const CanonicalGraph& cg) {
    AdjRows adj = adj_from_bits(cg.bits, cg.n);
    std::vector<VertexId> verts;
    verts.reserve(cg.n);
    for (int i = 0; i < cg.n; ++i) verts.push_back("v" + std::to_string(i + 1));
    std::vector<Edge> edges;
    for (int i = 0; i < cg.n; ++i)
        for (int j = i + 1; j < cg.n; ++j)
            if (adj[i] & (1u << j)) edges.push_back({verts[i], verts[j]});
    return Graph(std::move(verts), std::move(edges));
}

std::vector<Graph> generate_connected_graphs(int n) {
    return graphs_from(classes(n, true), n);
}

std::vector<Graph> generate_graphs(int n) {
    return graphs_from(classes(n, false), n);
}

CrossValidation cross_validate(int n) {
    CrossValidation cv;
    for (const Graph& g : generate_connected_graphs(n)) {
        ++cv.checked;
        Verdict deft = is_nci_definitional(g).verdict;
        Verdict strt = classify(g).verdict;
        if (deft != strt)
            cv.mismatches.push_back(
                {graph6_encode(g), render_edge_list(g), deft, strt});
    }
    return cv;
}

std::vector<CensusRow> nci_census(int n_max) {
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument("nci_census supports 1 <= n_max <= 8");
    std::vector<CensusRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        CensusRow row;
        row.n = n;
        for (const Graph& g : generate_connected_graphs(n)) {
            ++row.connected_count;
            switch (classify(g).verdict) {
                case Verdict::CI: ++row.ci_count; break;
                case Verdict::NCI: ++row.nci_count; break;
                case Verdict::Neither: ++row.neither_count; break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

// platform-independent uniform draw from [0, n)
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

std::string ideal_key(const MonomialIdeal& ideal) {
    std::string key;
    for (const auto& m : ideal.generators()) {
        key += m.str();
        key += ',';
    }
    key += '|';
    for (const auto& v : ideal.universe()) {
        key += v;
        key += ' ';
    }
    return key;
}

bool has_degree_three_generator(const MonomialIdeal& ideal) {
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [](const Monomial& m) { return m.degree() >= 3; });
}

}  // namespace

std::vector<MonomialIdeal> hypergraph_nci_search(const HypergraphSearchParams& params) {
    if (params.max_vars < 1 || params.max_vars > 10)
        throw std::invalid_argument("hypergraph search requires 1 <= max_vars <= 10");
    if (params.max_degree < 3)
        throw std::invalid_argument("hypergraph search requires max_degree >= 3");
    if (params.max_gens < 1)
        throw std::invalid_argument("hypergraph search requires max_gens >= 1");
    if (params.sample_count < 0)
        throw std::invalid_argument("hypergraph search requires sample_count >= 0");

    static const char* kNames = "abcdefghij";
    std::vector<Variable> vars;
    vars.reserve(params.max_vars);
    for (int i = 0; i < params.max_vars; ++i) vars.emplace_back(1, kNames[i]);

    std::vector<MonomialIdeal> found;
    std::set<std::string> seen;
    auto consider = [&](const MonomialIdeal& ideal) {
        if (!has_degree_three_generator(ideal)) return;
        if (!ideal.is_nci()) return;
        if (seen.insert(ideal_key(ideal)).second) found.push_back(ideal);
    };

    // structured family: disjoint supports A and B coned over an apex
    for (int a = 1; a + 2 <= params.max_vars; ++a) {
        for (int b = 1; a + b + 1 <= params.max_vars; ++b) {
            if (a > params.max_degree || b > params.max_degree) continue;
            if (2 + a + b > params.max_gens) continue;
            const Variable apex = vars[a + b];
            std::map<Variable, int> prod_a, prod_b;
            for (int i = 0; i < a; ++i) prod_a[vars[i]] = 1;
            for (int i = 0; i < b; ++i) prod_b[vars[a + i]] = 1;
            std::vector<Monomial> gens{Monomial(prod_a), Monomial(prod_b)};
            for (int i = 0; i < a + b; ++i) gens.push_back(Monomial::of({vars[i], apex}));
            consider(MonomialIdeal(std::move(gens)));
        }
    }

    // seeded random antichains
    std::mt19937_64 rng(params.seed);
    const int max_support = std::min(params.max_degree, params.max_vars);
    for (long long t = 0; t < params.sample_count; ++t) {
        if (params.max_gens < 2 || max_support < 2) break;
        int gen_count = 2 + static_cast<int>(below(rng, params.max_gens - 1));
        std::vector<Monomial> gens;
        for (int k = 0; k < gen_count; ++k) {
            int size = 2 + static_cast<int>(below(rng, max_support - 1));
            std::vector<int> idx(params.max_vars);
            std::iota(idx.begin(), idx.end(), 0);
            std::map<Variable, int> exp;
            for (int i = 0; i < size; ++i) {
                std::swap(idx[i], idx[i + below(rng, params.max_vars - i)]);
                exp[vars[idx[i]]] = 1;
            }
            gens.push_back(Monomial(std::move(exp)));
        }
        consider(MonomialIdeal(std::move(gens)));
    }
    return found;
}

}  // namespace nci
