#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nci/classify.hpp"
#include "nci/enumerate.hpp"
#include "test_util.hpp"

using namespace nci;
using namespace nci::testutil;

TEST_CASE("definitional verdicts") {
    CHECK(is_nci_definitional(cycle(4)).verdict == Verdict::NCI);
    CHECK(is_nci_definitional(cycle(6)).verdict == Verdict::Neither);
    CHECK(is_nci_definitional(star(7)).verdict == Verdict::NCI);
    CHECK(is_nci_definitional(Graph({}, {{"a", "b"}})).verdict == Verdict::CI);
    CHECK(is_nci_definitional(Graph()).verdict == Verdict::CI);

    ClassificationReport report = is_nci_definitional(example_graph());
    CHECK(report.verdict == Verdict::Neither);
    CHECK(report.method == Method::Definitional);
    const auto* fv = std::get_if<FailingVertex>(&report.evidence);
    REQUIRE(fv != nullptr);
    // the witness must actually fail, and the sorted scan makes it 'a'
    CHECK_FALSE(example_graph().invert_vertex(fv->name).is_ci());
    CHECK(fv->name == "a");

    // NCI verdicts carry no evidence from the definitional decider
    CHECK(std::holds_alternative<std::monostate>(
        is_nci_definitional(cycle(4)).evidence));
}

TEST_CASE("find_obstruction on the worked example") {
    auto w = find_obstruction(example_graph());
    REQUIRE(w.has_value());
    CHECK(w->tree_type == TreeShape::T);
    CHECK(obstruction_valid(example_graph(), *w));

    // deterministic: the scan returns the same witness every time
    CHECK(*w == *find_obstruction(example_graph()));
}

TEST_CASE("find_obstruction on paths and complete graphs") {
    auto w = find_obstruction(path(5));
    REQUIRE(w.has_value());
    CHECK(w->tree_type == TreeShape::P5);
    CHECK(w->vertices[0] == "x1");
    CHECK(obstruction_valid(path(5), *w));

    CHECK_FALSE(find_obstruction(complete(5)).has_value());
    CHECK_THROWS_AS(find_obstruction(cycle(4)), std::invalid_argument);
}

TEST_CASE("obstruction_valid rejects broken witnesses") {
    auto w = find_obstruction(path(5));
    REQUIRE(w.has_value());

    Obstruction wrong_type = *w;
    wrong_type.tree_type = TreeShape::T;
    CHECK_FALSE(obstruction_valid(path(5), wrong_type));

    Obstruction wrong_leaf = *w;  // x2 has degree 2, so it cannot be v1
    std::swap(wrong_leaf.vertices[0], wrong_leaf.vertices[1]);
    CHECK_FALSE(obstruction_valid(path(5), wrong_leaf));

    Obstruction missing_edge = *w;
    missing_edge.tree_edges.pop_back();
    CHECK_FALSE(obstruction_valid(path(5), missing_edge));

    Obstruction foreign_edge = *w;
    foreign_edge.tree_edges.back() = {"x1", "x5"};  // not an edge of P5
    CHECK_FALSE(obstruction_valid(path(5), foreign_edge));
}

TEST_CASE("structural classify") {
    CHECK(classify(complete(5)).verdict == Verdict::NCI);

    ClassificationReport p6 = classify(path(6));
    CHECK(p6.verdict == Verdict::Neither);
    const auto* w = std::get_if<Obstruction>(&p6.evidence);
    REQUIRE(w != nullptr);
    CHECK(w->tree_type == TreeShape::P5);
    CHECK(obstruction_valid(path(6), *w));

    CHECK(classify(Graph({"a"}, {})).verdict == Verdict::CI);
    CHECK(classify(path(4)).verdict == Verdict::NCI);

    ClassificationReport example = classify(example_graph());
    CHECK(example.verdict == Verdict::Neither);
    const auto* we = std::get_if<Obstruction>(&example.evidence);
    REQUIRE(we != nullptr);
    CHECK(we->tree_type == TreeShape::T);
    CHECK(obstruction_valid(example_graph(), *we));

    // disconnected non-CI graphs fall to the connectivity rule
    ClassificationReport disc = classify(Graph({"z"}, {{"a", "b"}, {"a", "c"}}));
    CHECK(disc.verdict == Verdict::Neither);
    const auto* rule = std::get_if<Rule>(&disc.evidence);
    REQUIRE(rule != nullptr);
    CHECK(rule->name == "disconnected");

    // ...but disconnected CI graphs are still CI
    CHECK(classify(Graph({}, {{"a", "b"}, {"c", "d"}})).verdict == Verdict::CI);
}

TEST_CASE("family laws") {
    for (int n = 3; n <= 7; ++n) {
        CHECK(classify(complete(n)).verdict == Verdict::NCI);
        CHECK(is_nci_definitional(complete(n)).verdict == Verdict::NCI);
    }
    for (int n = 1; n <= 7; ++n) {
        Verdict expected = (n >= 3 && n <= 4) ? Verdict::NCI
                           : (n <= 2)         ? Verdict::CI
                                              : Verdict::Neither;
        CHECK(classify(path(n)).verdict == expected);
        CHECK(is_nci_definitional(path(n)).verdict == expected);
    }
    for (int n = 3; n <= 7; ++n) {
        Verdict expected = n <= 5 ? Verdict::NCI : Verdict::Neither;
        CHECK(classify(cycle(n)).verdict == expected);
        CHECK(is_nci_definitional(cycle(n)).verdict == expected);
    }
    for (int n = 2; n <= 7; ++n) {
        CHECK(classify(star(n)).verdict == Verdict::NCI);
        CHECK(is_nci_definitional(star(n)).verdict == Verdict::NCI);
    }
}

TEST_CASE("qualifying-tree shortcut agrees with the direct shape test") {
    for (const Graph& h : generate_connected_graphs(5)) {
        for (const auto& leaf : h.vertices()) {
            if (h.degree(leaf) != 1) continue;
            CHECK(detail::has_qualifying_tree(h, leaf) ==
                  detail::has_qualifying_tree_shortcut(h, leaf));
        }
    }
}

TEST_CASE("witness soundness across six-vertex classes") {
    for (const Graph& g : generate_connected_graphs(6)) {
        ClassificationReport report = classify(g);
        if (const auto* w = std::get_if<Obstruction>(&report.evidence)) {
            CHECK(report.verdict == Verdict::Neither);
            CHECK(obstruction_valid(g, *w));
        }
    }
}
