// Command-line interface: classification, inversion, Betti tables, and the
// enumeration harness, over edge-list/graph6/monomial-list inputs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nci/io.hpp"

namespace {

using namespace nci;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct InputOptions {
    std::string path;
    std::string inline_text;
    std::string kind = "auto";  // auto | graph | ideal
};

struct OutputOptions {
    std::string format = "text";  // text | json
    std::string path;             // empty: stdout
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* pos = cmd->add_option("input", in.path,
                                "input file ('-' reads standard input)");
    auto* inl = cmd->add_option("--inline", in.inline_text,
                                "inline input; ';' separates lines");
    pos->excludes(inl);
    cmd->add_option("--as", in.kind, "input kind override")
        ->check(CLI::IsMember({"auto", "graph", "ideal"}));
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", out.path, "write output to a file");
}

std::string read_input(const InputOptions& in) {
    if (!in.inline_text.empty()) {
        std::string text = in.inline_text;
        std::replace(text.begin(), text.end(), ';', '\n');
        return text;
    }
    if (in.path.empty() || in.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(in.path);
    if (!file)
        throw std::invalid_argument("cannot open input file '" + in.path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

bool looks_like_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.find('*') != std::string::npos ||
            line.find('^') != std::string::npos ||
            line.compare(first, 5, "vars:") == 0)
            return true;
    }
    return false;
}

Graph load_graph(const InputOptions& in) {
    std::string text = read_input(in);
    if (in.kind == "ideal" || (in.kind == "auto" && looks_like_ideal(text))) {
        std::vector<std::string> warnings;
        MonomialIdeal ideal = parse_ideal_input(text, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        return graph_of(ideal);
    }
    return parse_graph_input(text);
}

MonomialIdeal load_ideal(const InputOptions& in) {
    std::string text = read_input(in);
    if (in.kind == "graph" || (in.kind == "auto" && !looks_like_ideal(text)))
        return edge_ideal(parse_graph_input(text));
    std::vector<std::string> warnings;
    MonomialIdeal ideal = parse_ideal_input(text, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return ideal;
}

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + out.path + "'");
    file << text;
}

void emit(const OutputOptions& out, const std::string& text,
          const nlohmann::json& json) {
    if (out.format == "json")
        emit(out, json.dump(2) + "\n");
    else
        emit(out, text);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    file << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nearly complete intersection toolkit for edge ideals"};
    app.require_subcommand(1);

    InputOptions in;
    OutputOptions out;
    std::string method = "structural";
    std::string dot_path;
    std::string vertex;
    int n = 0;
    int n_max = 0;
    HypergraphSearchParams params;

    auto* classify_cmd = app.add_subcommand("classify", "classify a graph as CI / NCI / neither");
    add_input_options(classify_cmd, in);
    add_output_options(classify_cmd, out);
    classify_cmd->add_option("--method", method, "decision procedure")
        ->check(CLI::IsMember({"structural", "definitional"}));
    classify_cmd->add_option("--dot", dot_path, "also write the graph as DOT, marking any obstruction");

    auto* invert_cmd = app.add_subcommand("invert", "invert a vertex and print the resulting graph");
    add_input_options(invert_cmd, in);
    add_output_options(invert_cmd, out);
    invert_cmd->add_option("--vertex", vertex, "vertex to invert")->required();
    invert_cmd->add_option("--dot", dot_path, "also write the result as DOT");

    auto* ci_cmd = app.add_subcommand("ci-check", "complete intersection test");
    add_input_options(ci_cmd, in);
    add_output_options(ci_cmd, out);

    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of R/I");
    add_input_options(betti_cmd, in);
    add_output_options(betti_cmd, out);

    auto* rank_cmd = app.add_subcommand("total-rank", "total Betti rank versus the 2^c + 2^(c-1) bound");
    add_input_options(rank_cmd, in);
    add_output_options(rank_cmd, out);

    auto* enum_cmd = app.add_subcommand("enumerate", "connected graphs up to isomorphism, as graph6");
    enum_cmd->add_option("--n", n, "vertex count (1..8)")->required();
    add_output_options(enum_cmd, out);

    auto* cross_cmd = app.add_subcommand("cross-validate", "compare definitional and structural verdicts on all connected graphs");
    cross_cmd->add_option("--n", n, "vertex count (1..8)")->required();
    add_output_options(cross_cmd, out);

    auto* census_cmd = app.add_subcommand("census", "verdict counts over connected graphs");
    census_cmd->add_option("--n-max", n_max, "largest vertex count (1..8)")->required();
    add_output_options(census_cmd, out);

    auto* search_cmd = app.add_subcommand("hypergraph-search", "search for NCI ideals with a degree >= 3 generator");
    search_cmd->add_option("--max-vars", params.max_vars, "variable budget (<= 10)");
    search_cmd->add_option("--max-gens", params.max_gens, "generator budget");
    search_cmd->add_option("--max-degree", params.max_degree, "largest generator degree (>= 3)");
    search_cmd->add_option("--samples", params.sample_count, "random antichain samples");
    search_cmd->add_option("--seed", params.seed, "random seed");
    add_output_options(search_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (classify_cmd->parsed()) {
            Graph g = load_graph(in);
            ClassificationReport report = method == "definitional"
                                              ? is_nci_definitional(g)
                                              : classify(g);
            emit(out, render_report_text(report), to_json(report));
            if (!dot_path.empty())
                write_file(dot_path,
                           to_dot(g, std::get_if<Obstruction>(&report.evidence)));
        } else if (invert_cmd->parsed()) {
            Graph result = load_graph(in).invert_vertex(vertex);
            emit(out, render_edge_list(result), to_json(result));
            if (!dot_path.empty()) write_file(dot_path, to_dot(result));
        } else if (ci_cmd->parsed()) {
            std::string text = read_input(in);
            bool ideal_input = in.kind == "ideal" ||
                               (in.kind == "auto" && looks_like_ideal(text));
            bool ci;
            if (ideal_input) {
                std::vector<std::string> warnings;
                ci = parse_ideal_input(text, &warnings).is_complete_intersection();
                for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            } else {
                ci = parse_graph_input(text).is_ci();
            }
            emit(out, std::string("ci: ") + (ci ? "true" : "false") + "\n",
                 nlohmann::json{{"ci", ci}, {"kind", ideal_input ? "ideal" : "graph"}});
        } else if (betti_cmd->parsed()) {
            BettiTable table = betti_table(load_ideal(in));
            emit(out, render_betti_text(table), to_json(table));
        } else if (rank_cmd->parsed()) {
            TotalRankCheck check = total_rank_check(load_ideal(in));
            emit(out, render_total_rank_text(check), to_json(check));
        } else if (enum_cmd->parsed()) {
            auto graphs = generate_connected_graphs(n);
            std::string text;
            nlohmann::json json = nlohmann::json::array();
            for (const auto& g : graphs) {
                std::string g6 = graph6_encode(g);
                text += g6 + "\n";
                json.push_back({{"graph6", g6}, {"graph", to_json(g)}});
            }
            emit(out, text, json);
        } else if (cross_cmd->parsed()) {
            CrossValidation cv = cross_validate(n);
            emit(out, render_cross_validation_text(cv), to_json(cv));
        } else if (census_cmd->parsed()) {
            auto rows = nci_census(n_max);
            emit(out, render_census_text(rows), to_json(rows));
        } else if (search_cmd->parsed()) {
            auto ideals = hypergraph_nci_search(params);
            std::string text;
            nlohmann::json json = nlohmann::json::array();
            for (const auto& ideal : ideals) {
                std::string line;
                for (const auto& m : ideal.generators()) {
                    if (!line.empty()) line += ", ";
                    line += m.str();
                }
                text += line + "\n";
                json.push_back(to_json(ideal));
            }
            emit(out, text, json);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
