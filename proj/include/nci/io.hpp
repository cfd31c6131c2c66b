#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nci/betti.hpp"
#include "nci/classify.hpp"
#include "nci/enumerate.hpp"
#include "nci/graph.hpp"
#include "nci/ideal.hpp"

namespace nci {

struct parse_error : std::runtime_error {
    parse_error(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

/// Edge-list text: one record per line; "u v" declares an edge, a single
/// token declares a vertex; '#' comments and blank lines are ignored.
/// Endpoints implicitly declare their vertices. Loops and duplicate edges
/// are parse errors. A single non-blank line that contains no whitespace
/// and decodes as a complete graph6 record is read as graph6 instead.
Graph parse_graph_input(const std::string& text);

/// Monomial-list text: one generator per line as '*'-separated factors,
/// each a variable token optionally followed by '^' and a positive integer.
/// An optional header "vars: a b c" fixes the universe. Non-antichain input
/// is minimalized; when that drops generators a note is appended to
/// *warnings (if given).
MonomialIdeal parse_ideal_input(const std::string& text,
                                std::vector<std::string>* warnings = nullptr);

/// Inverse of parse_graph_input's edge-list branch: sorted "u v" lines
/// followed by one line per isolated vertex.
std::string render_edge_list(const Graph& g);

/// Inverse of parse_ideal_input: one generator per line; a "vars:" header
/// is included when the universe exceeds the support.
std::string render_monomial_list(const MonomialIdeal& ideal);

/// graph6 encoding for graphs on at most 62 vertices. Encoding follows the
/// vertex order of g.vertices(); decoding names vertices v1..vn.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

/// DOT rendering; when an obstruction is given, its vertices carry
/// obstruction="v1".."v5" and its tree edges carry tree="true".
std::string to_dot(const Graph& g, const Obstruction* witness = nullptr);

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const TotalRankCheck& check);
nlohmann::json to_json(const CrossValidation& cv);
nlohmann::json to_json(const std::vector<CensusRow>& rows);
nlohmann::json to_json(const MonomialIdeal& ideal);

std::string render_report_text(const ClassificationReport& report);
std::string render_betti_text(const BettiTable& table);
std::string render_total_rank_text(const TotalRankCheck& check);
std::string render_cross_validation_text(const CrossValidation& cv);
std::string render_census_text(const std::vector<CensusRow>& rows);

}  // namespace nci
