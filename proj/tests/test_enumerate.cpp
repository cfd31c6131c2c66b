#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "nci/enumerate.hpp"
#include "nci/io.hpp"
#include "test_util.hpp"

using namespace nci;
using namespace nci::testutil;

TEST_CASE("canonical form identifies isomorphic graphs") {
    Graph a({}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    Graph b({}, {{"p", "q"}, {"q", "r"}, {"r", "s"}});  // P4 relabeled
    Graph c({}, {{"p", "q"}, {"p", "r"}, {"p", "s"}});  // star
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));
    CHECK(canonical_form(a).n == 4);

    CHECK(canonical_form(Graph()) == CanonicalGraph{0, 0});
    CHECK_THROWS_AS(canonical_form(complete(9)), std::invalid_argument);

    // canonical representative round-trips
    for (const Graph& g : generate_connected_graphs(5)) {
        CanonicalGraph cg = canonical_form(g);
        CHECK(graph_from_canonical(cg) == g);
    }
}

TEST_CASE("connected class counts") {
    CHECK(generate_connected_graphs(1).size() == 1);
    CHECK(generate_connected_graphs(2).size() == 1);
    CHECK(generate_connected_graphs(3).size() == 2);
    CHECK(generate_connected_graphs(4).size() == 6);
    CHECK(generate_connected_graphs(5).size() == 21);
    CHECK(generate_connected_graphs(6).size() == 112);
    CHECK_THROWS_AS(generate_connected_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(generate_connected_graphs(9), std::invalid_argument);
}

TEST_CASE("all-class counts") {
    CHECK(generate_graphs(1).size() == 1);
    CHECK(generate_graphs(2).size() == 2);
    CHECK(generate_graphs(3).size() == 4);
    CHECK(generate_graphs(4).size() == 11);
    CHECK(generate_graphs(5).size() == 34);
    CHECK(generate_graphs(6).size() == 156);
}

TEST_CASE("generated classes are pairwise non-isomorphic and exhaustive") {
    for (int n = 1; n <= 5; ++n) {
        auto graphs = generate_connected_graphs(n);

        std::set<std::uint64_t> emitted;
        for (const Graph& g : graphs) {
            CHECK(g.is_connected());
            CHECK(emitted.insert(canonical_form(g).bits).second);  // no repeats
        }

        // recount by canonicalizing every labeled connected graph
        std::set<std::uint64_t> labeled;
        for (const Graph& g : all_labeled_graphs(n))
            if (g.is_connected()) labeled.insert(canonical_form(g).bits);
        CHECK(labeled == emitted);
    }
}

TEST_CASE("n = 3 representatives are P3 and K3") {
    auto graphs = generate_connected_graphs(3);
    REQUIRE(graphs.size() == 2);
    std::multiset<std::size_t> edge_counts{graphs[0].edge_count(),
                                           graphs[1].edge_count()};
    CHECK(edge_counts == std::multiset<std::size_t>{2, 3});
}

TEST_CASE("cross validation finds no mismatches") {
    CrossValidation five = cross_validate(5);
    CHECK(five.checked == 21);
    CHECK(five.mismatches.empty());

    CrossValidation six = cross_validate(6);
    CHECK(six.checked == 112);
    CHECK(six.mismatches.empty());
}

TEST_CASE("census of small graphs") {
    auto rows = nci_census(4);
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].n == 1);
    CHECK(rows[0].connected_count == 1);
    CHECK(rows[0].ci_count == 1);
    CHECK(rows[0].nci_count == 0);

    CHECK(rows[1].connected_count == 1);  // the single edge is CI
    CHECK(rows[1].nci_count == 0);
    CHECK(rows[1].ci_count == 1);

    CHECK(rows[2].connected_count == 2);
    CHECK(rows[2].nci_count == 2);

    CHECK(rows[3].connected_count == 6);
    CHECK(rows[3].nci_count == 6);

    for (const auto& r : rows)
        CHECK(r.connected_count == r.nci_count + r.neither_count + r.ci_count);
}

TEST_CASE("census counts at 5..7 vertices") {
    // frozen after cross-validation of the two deciders; NCI stays rare
    auto rows = nci_census(7);
    CHECK(rows[4].connected_count == 21);
    CHECK(rows[4].nci_count == 13);
    CHECK(rows[5].connected_count == 112);
    CHECK(rows[5].nci_count == 26);
    CHECK(rows[6].connected_count == 853);
    CHECK(rows[6].nci_count == 47);
    for (const auto& r : rows) {
        CHECK(r.connected_count == r.nci_count + r.neither_count + r.ci_count);
        if (r.n >= 3) CHECK(r.ci_count == 0);  // connected on >= 3 vertices is never CI
    }
}

TEST_CASE("hypergraph search rediscovers the coned-pair ideal") {
    HypergraphSearchParams params;
    params.max_vars = 7;
    params.max_gens = 8;
    params.max_degree = 3;
    params.sample_count = 0;

    auto found = hypergraph_nci_search(params);
    MonomialIdeal coned_pair({Monomial::of({"a", "b", "c"}), Monomial::of({"d", "e", "f"}),
                               Monomial::of({"a", "g"}), Monomial::of({"b", "g"}),
                               Monomial::of({"c", "g"}), Monomial::of({"d", "g"}),
                               Monomial::of({"e", "g"}), Monomial::of({"f", "g"})});
    CHECK(std::find(found.begin(), found.end(), coned_pair) != found.end());

    // every reported ideal re-checks as NCI with a degree-3 generator
    for (const auto& I : found) {
        CHECK(I.is_nci());
        CHECK(std::any_of(I.generators().begin(), I.generators().end(),
                          [](const Monomial& m) { return m.degree() >= 3; }));
    }
}

TEST_CASE("degree-2 members of the structured family are excluded") {
    // parts of size (2,2) give (ab, cd, ag, bg, cg, dg): an NCI, but without
    // a degree-3 generator
    MonomialIdeal flat({Monomial::of({"a", "b"}), Monomial::of({"c", "d"}),
                        Monomial::of({"a", "g"}), Monomial::of({"b", "g"}),
                        Monomial::of({"c", "g"}), Monomial::of({"d", "g"})});
    CHECK(flat.is_nci());

    HypergraphSearchParams params;
    params.max_vars = 5;
    params.sample_count = 0;
    auto found = hypergraph_nci_search(params);
    CHECK(std::find(found.begin(), found.end(), flat) == found.end());
}

TEST_CASE("tiny variable budgets yield nothing") {
    HypergraphSearchParams params;
    params.max_vars = 2;
    params.sample_count = 50;
    CHECK(hypergraph_nci_search(params).empty());
}

TEST_CASE("search parameter bounds") {
    HypergraphSearchParams params;
    params.max_vars = 11;
    CHECK_THROWS_AS(hypergraph_nci_search(params), std::invalid_argument);
    params.max_vars = 7;
    params.max_degree = 2;
    CHECK_THROWS_AS(hypergraph_nci_search(params), std::invalid_argument);
    params.max_degree = 3;
    params.sample_count = -1;
    CHECK_THROWS_AS(hypergraph_nci_search(params), std::invalid_argument);
}

TEST_CASE("search is reproducible for a fixed seed") {
    HypergraphSearchParams params;
    params.max_vars = 6;
    params.max_gens = 6;
    params.max_degree = 4;
    params.sample_count = 300;
    params.seed = 42;
    auto a = hypergraph_nci_search(params);
    auto b = hypergraph_nci_search(params);
    CHECK(a == b);
}
