#include "nci/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace nci {

namespace {

bool is_token_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_token(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_token_char);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct NumberedLine {
    int number;
    std::string text;
};

// content lines with '#' comments and blank lines stripped
std::vector<NumberedLine> content_lines(const std::string& text) {
    std::vector<NumberedLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        out.push_back({number, line.substr(first, last - first + 1)});
    }
    return out;
}

bool looks_like_graph6(const std::string& line) {
    if (line.empty() || line[0] == '~') return false;
    for (char c : line)
        if (c < 63 || c > 126) return false;
    int n = line[0] - 63;
    std::size_t need = static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6);
    return line.size() == 1 + need;
}

}  // namespace

Graph graph6_decode(const std::string& line) {
    if (line.empty())
        throw std::invalid_argument("empty graph6 record");
    if (line[0] == '~')
        throw std::invalid_argument("graph6 records with more than 62 vertices are not supported");
    if (line[0] < 63 || line[0] > 125)
        throw std::invalid_argument("invalid graph6 header byte");
    const int n = line[0] - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != 1 + need)
        throw std::invalid_argument("graph6 record has wrong length");

    std::vector<VertexId> verts;
    verts.reserve(n);
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i + 1));

    std::vector<Edge> edges;
    int t = 0;  // pair index in column-major order: (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t) {
            char c = line[1 + t / 6];
            if (c < 63 || c > 126)
                throw std::invalid_argument("invalid graph6 data byte");
            if ((static_cast<unsigned>(c - 63) >> (5 - t % 6)) & 1u)
                edges.push_back({verts[i], verts[j]});
        }
    return Graph(std::move(verts), std::move(edges));
}

std::string graph6_encode(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n > 62)
        throw std::invalid_argument("graph6 encoding supports at most 62 vertices");
    const auto& verts = g.vertices();
    std::string out(1, static_cast<char>(n + 63));
    int t = 0;
    unsigned group = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t) {
            group = (group << 1) | (g.has_edge(verts[i], verts[j]) ? 1u : 0u);
            if (t % 6 == 5) {
                out += static_cast<char>(group + 63);
                group = 0;
            }
        }
    if (t % 6 != 0) out += static_cast<char>((group << (6 - t % 6)) + 63);
    return out;
}

Graph parse_graph_input(const std::string& text) {
    auto lines = content_lines(text);

    if (lines.size() == 1 &&
        lines[0].text.find_first_of(" \t") == std::string::npos &&
        looks_like_graph6(lines[0].text)) {
        try {
            return graph6_decode(lines[0].text);
        } catch (const std::invalid_argument& e) {
            throw parse_error(lines[0].number, e.what());
        }
    }

    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (const auto& [number, line] : lines) {
        auto tokens = split_ws(line);
        for (const auto& tok : tokens)
            if (!is_token(tok))
                throw parse_error(number, "malformed token '" + tok + "'");
        if (tokens.size() == 1) {
            verts.push_back(tokens[0]);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1])
                throw parse_error(number, "loop edge at vertex '" + tokens[0] + "'");
            Edge e = make_edge(tokens[0], tokens[1]);
            if (!seen.insert(e).second)
                throw parse_error(number, "duplicate edge '" + e.first + " " + e.second + "'");
            edges.push_back(std::move(e));
        } else {
            throw parse_error(number, "expected one or two tokens, got " +
                                          std::to_string(tokens.size()));
        }
    }
    return Graph(std::move(verts), std::move(edges));
}

namespace {

Monomial parse_monomial(int number, const std::string& text) {
    std::map<Variable, int> exps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t star = text.find('*', pos);
        std::string factor =
            text.substr(pos, star == std::string::npos ? star : star - pos);
        std::string var = factor;
        int exponent = 1;
        if (std::size_t caret = factor.find('^'); caret != std::string::npos) {
            var = factor.substr(0, caret);
            std::string digits = factor.substr(caret + 1);
            if (digits.empty() ||
                !std::all_of(digits.begin(), digits.end(),
                             [](unsigned char c) { return std::isdigit(c); }) ||
                digits.size() > 6)
                throw parse_error(number, "malformed exponent in factor '" + factor + "'");
            exponent = std::stoi(digits);
            if (exponent <= 0)
                throw parse_error(number, "exponent must be positive in factor '" +
                                              factor + "'");
        }
        if (var == "1")
            throw parse_error(number, "the constant 1 cannot be a generator factor");
        if (!is_token(var) ||
            std::all_of(var.begin(), var.end(),
                        [](unsigned char c) { return std::isdigit(c); }))
            throw parse_error(number, "malformed factor '" + factor + "'");
        exps[var] += exponent;
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    if (exps.empty())
        throw parse_error(number, "empty generator");
    return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parse_ideal_input(const std::string& text,
                                std::vector<std::string>* warnings) {
    auto lines = content_lines(text);
    std::set<Variable> declared;
    bool have_header = false;
    std::vector<Monomial> gens;

    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& [number, line] = lines[k];
        if (k == 0 && line.rfind("vars:", 0) == 0) {
            have_header = true;
            for (const auto& tok : split_ws(line.substr(5))) {
                if (!is_token(tok))
                    throw parse_error(number, "malformed variable '" + tok + "'");
                declared.insert(tok);
            }
            continue;
        }
        // a generator line is a single '*'-separated term
        if (line.find_first_of(" \t") != std::string::npos)
            throw parse_error(number, "unexpected whitespace inside generator");
        if (line == "1")
            throw parse_error(number, "the constant 1 cannot be a generator");
        gens.push_back(parse_monomial(number, line));
    }

    const std::size_t before = [&] {
        std::vector<Monomial> sorted = gens;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        return sorted.size();
    }();

    MonomialIdeal ideal;
    try {
        if (have_header)
            ideal = MonomialIdeal(std::move(gens), std::move(declared));
        else
            ideal = MonomialIdeal(std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw parse_error(lines.empty() ? 0 : lines[0].number, e.what());
    }

    if (warnings && ideal.generators().size() < before)
        warnings->push_back("minimalized input: dropped " +
                            std::to_string(before - ideal.generators().size()) +
                            " non-minimal generator(s)");
    return ideal;
}

std::string render_edge_list(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) out += u + " " + v + "\n";
    for (const auto& v : g.vertices())
        if (g.degree(v) == 0) out += v + "\n";
    return out;
}

std::string render_monomial_list(const MonomialIdeal& ideal) {
    std::string out;
    auto supp = ideal.support();
    if (std::set<Variable>(supp.begin(), supp.end()) != ideal.universe()) {
        out += "vars:";
        for (const auto& v : ideal.universe()) out += " " + v;
        out += "\n";
    }
    for (const auto& m : ideal.generators()) out += m.str() + "\n";
    return out;
}

std::string to_dot(const Graph& g, const Obstruction* witness) {
    std::string out = "graph G {\n";
    for (const auto& v : g.vertices()) {
        out += "  \"" + v + "\"";
        if (witness) {
            for (std::size_t k = 0; k < 5; ++k)
                if (witness->vertices[k] == v) {
                    out += " [obstruction=\"v" + std::to_string(k + 1) + "\"]";
                    break;
                }
        }
        out += ";\n";
    }
    for (const auto& e : g.edges()) {
        out += "  \"" + e.first + "\" -- \"" + e.second + "\"";
        if (witness &&
            std::find(witness->tree_edges.begin(), witness->tree_edges.end(), e) !=
                witness->tree_edges.end())
            out += " [tree=\"true\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

nlohmann::json to_json(const ClassificationReport& report) {
    nlohmann::json evidence;
    if (const auto* fv = std::get_if<FailingVertex>(&report.evidence)) {
        evidence = {{"failing_vertex", fv->name}};
    } else if (const auto* w = std::get_if<Obstruction>(&report.evidence)) {
        nlohmann::json tree_edges = nlohmann::json::array();
        for (const auto& [u, v] : w->tree_edges) tree_edges.push_back({u, v});
        evidence = {{"vertices", w->vertices},
                    {"tree_type", to_string(w->tree_type)},
                    {"tree_edges", tree_edges}};
    } else if (const auto* rule = std::get_if<Rule>(&report.evidence)) {
        evidence = {{"rule", rule->name}};
    }
    return {{"verdict", to_string(report.verdict)},
            {"method", to_string(report.method)},
            {"evidence", evidence}};
}

nlohmann::json to_json(const BettiTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    int current_i = -1;
    for (const auto& [ij, rank] : table.entries) {
        if (ij.first != current_i) {
            current_i = ij.first;
            rows.push_back({{"i", current_i}, {"entries", nlohmann::json::object()}});
        }
        rows.back()["entries"][std::to_string(ij.second)] = rank;
    }
    return {{"height", table.ideal_height},
            {"rows", rows},
            {"sequence", betti_sequence(table)},
            {"total", total_betti(table)}};
}

nlohmann::json to_json(const TotalRankCheck& check) {
    return {{"total", check.total},
            {"height", check.height},
            {"bound", check.bound},
            {"meets_bound", check.meets_bound},
            {"equality", check.equality}};
}

nlohmann::json to_json(const CrossValidation& cv) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : cv.mismatches)
        mismatches.push_back({{"graph6", m.graph6},
                              {"edge_list", m.edge_list},
                              {"definitional", to_string(m.definitional)},
                              {"structural", to_string(m.structural)}});
    return {{"checked", cv.checked}, {"mismatches", mismatches}};
}

nlohmann::json to_json(const std::vector<CensusRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back({{"n", r.n},
                       {"connected_count", r.connected_count},
                       {"nci_count", r.nci_count},
                       {"neither_count", r.neither_count},
                       {"ci_count", r.ci_count}});
    return out;
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& m : ideal.generators()) gens.push_back(m.str());
    return {{"generators", gens}, {"universe", ideal.universe()}};
}

std::string render_report_text(const ClassificationReport& report) {
    std::string out = "verdict: " + to_string(report.verdict) + "\n" +
                      "method: " + to_string(report.method) + "\n";
    if (const auto* fv = std::get_if<FailingVertex>(&report.evidence)) {
        out += "failing vertex: " + fv->name + "\n";
    } else if (const auto* w = std::get_if<Obstruction>(&report.evidence)) {
        out += "obstruction vertices:";
        for (const auto& v : w->vertices) out += " " + v;
        out += "\nobstruction tree: " + to_string(w->tree_type) + "\n";
        out += "obstruction tree edges:";
        for (const auto& [u, v] : w->tree_edges) out += " " + u + "-" + v;
        out += "\n";
    } else if (const auto* rule = std::get_if<Rule>(&report.evidence)) {
        out += "rule: " + rule->name + "\n";
    }
    return out;
}

std::string render_betti_text(const BettiTable& table) {
    std::string out = "height: " + std::to_string(table.ideal_height) + "\n";
    out += "total: " + std::to_string(total_betti(table)) + "\n";
    out += "sequence:";
    for (long long b : betti_sequence(table)) out += " " + std::to_string(b);
    out += "\n";
    for (const auto& [ij, rank] : table.entries)
        out += "beta[" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
               "] = " + std::to_string(rank) + "\n";
    return out;
}

std::string render_total_rank_text(const TotalRankCheck& check) {
    std::string out = "total: " + std::to_string(check.total) + "\n";
    out += "height: " + std::to_string(check.height) + "\n";
    out += "bound: " + std::to_string(check.bound) + "\n";
    out += std::string("meets_bound: ") + (check.meets_bound ? "true" : "false") + "\n";
    out += std::string("equality: ") + (check.equality ? "true" : "false") + "\n";
    return out;
}

std::string render_cross_validation_text(const CrossValidation& cv) {
    std::string out = "checked: " + std::to_string(cv.checked) + "\n";
    out += "mismatches: " + std::to_string(cv.mismatches.size()) + "\n";
    for (const auto& m : cv.mismatches)
        out += m.graph6 + "  definitional=" + to_string(m.definitional) +
               " structural=" + to_string(m.structural) + "\n";
    return out;
}

std::string render_census_text(const std::vector<CensusRow>& rows) {
    std::string out = "n connected nci neither ci\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + " " + std::to_string(r.connected_count) + " " +
               std::to_string(r.nci_count) + " " + std::to_string(r.neither_count) +
               " " + std::to_string(r.ci_count) + "\n";
    return out;
}

}  // namespace nci
