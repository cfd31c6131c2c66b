// Standalone property suites: the definitional/structural bridges between
// graphs and ideals, minimalize laws on random inputs, strand-level Euler
// consistency, and canonicalization exhaustiveness.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nci/betti.hpp"
#include "nci/classify.hpp"
#include "nci/enumerate.hpp"
#include "nci/ideal.hpp"
#include "test_util.hpp"

using namespace nci;
using namespace nci::testutil;

namespace {

std::vector<Monomial> random_monomials(std::mt19937_64& rng, int count, int vars,
                                       int max_exp) {
    std::vector<Monomial> out;
    for (int k = 0; k < count; ++k) {
        std::map<Variable, int> exps;
        for (int v = 0; v < vars; ++v) {
            int e = static_cast<int>(rng() % (max_exp + 1));
            if (e > 0) exps[Variable(1, char('a' + v))] = e;
        }
        if (exps.empty()) exps["a"] = 1;
        out.push_back(Monomial(std::move(exps)));
    }
    return out;
}

}  // namespace

TEST_CASE("property: inversion bridge") {
    // CI status of I(x=1) agrees with the CI status of the inverted graph,
    // for every non-isolated vertex (isolated vertices are degree-1
    // generators, where substitution is rejected as the unit ideal)
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : all_labeled_graphs(n)) {
            MonomialIdeal I = edge_ideal(g);
            for (const auto& v : g.vertices()) {
                if (g.degree(v) == 0) continue;
                CHECK(I.substitute_one(v).is_complete_intersection() ==
                      g.invert_vertex(v).is_ci());
            }
        }
    }
}

TEST_CASE("property: correspondence bridge") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_labeled_graphs(n))
            CHECK(g.is_ci() == edge_ideal(g).is_complete_intersection());
}

TEST_CASE("property: ideal-level and graph-level NCI formulations agree") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_labeled_graphs(n)) {
            bool by_graph = !g.is_ci();
            if (by_graph)
                for (const auto& v : g.vertices())
                    if (!g.invert_vertex(v).is_ci()) {
                        by_graph = false;
                        break;
                    }
            CHECK(edge_ideal(g).is_nci() == by_graph);
        }
    }
}

TEST_CASE("property: minimalize is idempotent and order-independent") {
    std::mt19937_64 rng(20240809);
    for (int round = 0; round < 200; ++round) {
        auto gens = random_monomials(rng, 1 + int(rng() % 8), 4, 3);
        auto once = minimalize(gens);
        CHECK(minimalize(once) == once);

        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(minimalize(gens) == once);

        // every dropped generator is divisible by a kept one
        for (const auto& m : gens) {
            bool covered = std::any_of(once.begin(), once.end(),
                                       [&](const Monomial& k) { return k.divides(m); });
            CHECK(covered);
        }
    }
}

TEST_CASE("property: Euler characteristic of every strand") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        auto gens = random_monomials(rng, 2 + int(rng() % 5), 4, 2);
        MonomialIdeal I(gens);
        if (I.is_zero()) continue;
        for (const auto& strand : taylor_strands(I)) {
            long long chi_basis = 0, chi_homology = 0;
            for (const auto& [i, size] : strand.basis_sizes)
                chi_basis += (i % 2 == 0) ? size : -size;
            for (const auto& [i, h] : strand.homology)
                chi_homology += (i % 2 == 0) ? h : -h;
            CHECK(chi_basis == chi_homology);
        }
    }
}

TEST_CASE("property: canonicalization is exhaustive for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::uint64_t> emitted;
        for (const Graph& g : generate_connected_graphs(n))
            CHECK(emitted.insert(canonical_form(g).bits).second);

        std::set<std::uint64_t> labeled;
        for (const Graph& g : all_labeled_graphs(n))
            if (g.is_connected()) labeled.insert(canonical_form(g).bits);
        CHECK(labeled == emitted);

        // the same holds without the connectivity restriction
        std::set<std::uint64_t> all_emitted;
        for (const Graph& g : generate_graphs(n))
            CHECK(all_emitted.insert(canonical_form(g).bits).second);
        std::set<std::uint64_t> all_labeled;
        for (const Graph& g : all_labeled_graphs(n))
            all_labeled.insert(canonical_form(g).bits);
        CHECK(all_labeled == all_emitted);
    }
}

TEST_CASE("property: NCI graphs are connected") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : generate_graphs(n))
            if (is_nci_definitional(g).verdict == Verdict::NCI)
                CHECK(g.is_connected());
}

TEST_CASE("property: deciders agree on disconnected graphs too") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : generate_graphs(n))
            CHECK(is_nci_definitional(g).verdict == classify(g).verdict);
}

TEST_CASE("property: deciders agree on random eight-vertex graphs") {
    std::mt19937_64 rng(81);
    std::vector<VertexId> verts;
    for (int i = 1; i <= 8; ++i) verts.push_back("v" + std::to_string(i));
    for (int round = 0; round < 200; ++round) {
        std::vector<Edge> edges;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (rng() % 3 == 0) edges.push_back({verts[i], verts[j]});
        Graph g(verts, std::move(edges));
        CHECK(is_nci_definitional(g).verdict == classify(g).verdict);
    }
}
