#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "edgenormal/decomposition.hpp"
#include "edgenormal/graph6.hpp"
#include "edgenormal/named_graphs.hpp"
#include "edgenormal/oracle.hpp"
#include "edgenormal/witness.hpp"
#include "json.hpp"

namespace {

using namespace edgenormal;

// Exit codes: 0 ok/decided, 1 verification failure, 2 parse error,
// 3 precondition violation, 4 internal verification failure, 5 undecided.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;
constexpr int kExitUnknown = 5;

struct GraphInput {
    std::string name;
    int k = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::string path;
    std::string format = "graph6";

    void add_flags(CLI::App& cmd) {
        cmd.add_option("--name", name,
                       "Named graph (k4, k33, prism, cube, petersen, tietze, triangle, "
                       "c<k>, p<k>, flower_snark<k>, gadget_completion_pair, random)");
        cmd.add_option("--k", k, "Parameter for parameterized names (e.g. flower_snark)");
        cmd.add_option("--n", n, "Vertex count for --name random");
        cmd.add_option("--seed", seed, "Seed for --name random");
        cmd.add_option("--in", path, "Read the graph from a file (\"-\" for stdin)");
        cmd.add_option("--format", format, "Input format: graph6 or edgelist")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
    }

    Graph resolve() const {
        if (!name.empty() && !path.empty())
            throw ParseError("give either --name or --in, not both");
        if (!name.empty()) {
            std::string id = name;
            std::transform(id.begin(), id.end(), id.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            if (id.rfind("flower_snark", 0) == 0) id = "flower" + id.substr(12);
            if (id == "random") {
                if (n == 0) throw ParseError("--name random needs --n");
                return random_cubic(n, seed);
            }
            if (k > 0) id += std::to_string(k);
            try {
                return named_graph(id);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        if (path.empty()) throw ParseError("no graph given: use --name or --in");
        std::string bytes;
        if (path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            bytes = ss.str();
        } else {
            std::ifstream in(path);
            if (!in) throw ParseError("cannot open " + path);
            std::ostringstream ss;
            ss << in.rdbuf();
            bytes = ss.str();
        }
        return parse_graph(bytes, format == "graph6" ? GraphFormat::graph6
                                                     : GraphFormat::edgelist);
    }
};

struct CoverInput {
    std::string list;
    std::string path;

    void add_flags(CLI::App& cmd) {
        cmd.add_option("--cover", list, "Cover vertices as a comma-separated list");
        cmd.add_option("--cover-file", path, "File with whitespace-separated cover vertices");
    }

    VertexSet resolve() const {
        if (list.empty() == path.empty())
            throw ParseError("give exactly one of --cover or --cover-file");
        std::vector<int> ids;
        if (!list.empty()) {
            std::stringstream ss(list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t used = 0;
                    ids.push_back(std::stoi(item, &used));
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::exception&) {
                    throw ParseError("bad cover entry \"" + item + "\"");
                }
            }
        } else {
            std::ifstream in(path);
            if (!in) throw ParseError("cannot open " + path);
            int v;
            while (in >> v) ids.push_back(v);
            if (!in.eof()) throw ParseError("bad cover file " + path);
        }
        return sorted_unique(std::move(ids));
    }
};

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty() || out_path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << data;
}

int cmd_witness(const GraphInput& input, const std::string& out_path) {
    Graph g = input.resolve();
    NormalityCertificate cert;
    try {
        cert = build_certificate(g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    VerifyResult check = verify_certificate(cert);
    if (!check) {
        std::cerr << "internal verification failure: " << check.report << "\n";
        return kExitInternal;
    }
    write_output(out_path, certificate_to_json_string(cert));
    std::cerr << "witness: n=" << g.n() << " m=" << g.m() << " cover=" << cert.cover.size()
              << " stables=" << cert.witness.stables.size() << " verified\n";
    return kExitOk;
}

int cmd_verify(const GraphInput& input, const std::string& cert_path) {
    std::ifstream in(cert_path);
    if (!in) throw ParseError("cannot open " + cert_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    NormalityCertificate cert = certificate_from_json_string(ss.str());
    if (!input.name.empty() || !input.path.empty()) cert.graph = input.resolve();
    VerifyResult check = verify_certificate(cert);
    if (!check) {
        std::cerr << "verification failed: " << check.report << "\n";
        return kExitVerifyFail;
    }
    std::cerr << "certificate verified: n=" << cert.graph.n() << " m=" << cert.graph.m()
              << " cover=" << cert.cover.size() << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& check, const GraphInput& input, const CoverInput& cover_input,
               const SearchBudget& budget) {
    Graph g = input.resolve();
    Tristate result = Tristate::unknown;
    if (check == "normal") {
        result = brute_normal(g, budget);
    } else if (check == "edge-normal") {
        result = brute_edge_normal(g, budget);
    } else if (check == "strong") {
        result = brute_strongly_edge_normal(g, budget);
    } else {
        VertexSet cover = cover_input.resolve();
        try {
            result = brute_good(g, cover) ? Tristate::yes : Tristate::no;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitPrecondition;
        }
    }
    std::cout << to_string(result) << "\n";
    return result == Tristate::unknown ? kExitUnknown : kExitOk;
}

int cmd_decompose(const GraphInput& input, bool json) {
    Graph g = input.resolve();
    DecompositionTree tree;
    try {
        tree = decompose(g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["pieces"] = nlohmann::ordered_json::array();
        for (std::size_t p = 0; p < tree.pieces.size(); ++p) {
            nlohmann::ordered_json jp;
            jp["body"] = tree.pieces[p].body.size();
            jp["arms"] = tree.pieces[p].arms.size();
            jp["to_host"] = tree.to_host[p];
            j["pieces"].push_back(std::move(jp));
        }
        j["links"] = nlohmann::ordered_json::array();
        for (const PieceLink& link : tree.links)
            j["links"].push_back({{"piece_a", link.piece_a},
                                  {"arm_a", link.arm_a},
                                  {"piece_b", link.piece_b},
                                  {"arm_b", link.arm_b},
                                  {"bridge", {link.bridge.u, link.bridge.v}}});
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "pieces: " << tree.pieces.size() << "\n";
    for (std::size_t p = 0; p < tree.pieces.size(); ++p)
        std::cout << "piece " << p << ": body " << tree.pieces[p].body.size() << ", arms "
                  << tree.pieces[p].arms.size() << "\n";
    std::cout << "links: " << tree.links.size() << "\n";
    for (std::size_t i = 0; i < tree.links.size(); ++i) {
        const PieceLink& link = tree.links[i];
        std::cout << "link " << i << ": piece " << link.piece_a << " arm " << link.arm_a
                  << " -- piece " << link.piece_b << " arm " << link.arm_b << " (bridge {"
                  << link.bridge.u << ", " << link.bridge.v << "})\n";
    }
    return kExitOk;
}

const char* type_name(WrongSetType t) {
    switch (t) {
        case WrongSetType::type1: return "1";
        case WrongSetType::type2a: return "2a";
        case WrongSetType::type2b: return "2b";
    }
    return "?";
}

int cmd_diagnose(const GraphInput& input, const CoverInput& cover_input, bool json) {
    Graph g = input.resolve();
    VertexSet cover = cover_input.resolve();
    std::optional<WrongSet> ws;
    try {
        ws = find_wrong_set(g, cover);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["good"] = !ws.has_value();
        if (ws) {
            j["failing_edge"] = {ws->failing_edge.u, ws->failing_edge.v};
            j["type"] = type_name(ws->type);
            j["w_set"] = ws->w_set;
            j["z_set"] = ws->z_set;
            j["y_set"] = ws->y_set;
            j["cut_edge"] = {ws->cut_edge.u, ws->cut_edge.v};
            j["w_vertex"] = ws->w_vertex;
            j["stats"] = {{"x_count", ws->x_count},
                          {"delta", ws->delta_sum},
                          {"epsilon", ws->epsilon_sum},
                          {"doubles", ws->double_count},
                          {"triples", ws->triple_count}};
            j["exclusions_violated"] = check_technical_exclusions(g, cover, *ws);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (!ws) {
        std::cout << "good\n";
        return kExitOk;
    }
    auto print_set = [](const char* label, const VertexSet& s) {
        std::cout << label << ":";
        for (int v : s) std::cout << " " << v;
        std::cout << "\n";
    };
    std::cout << "wrong set at edge {" << ws->failing_edge.u << ", " << ws->failing_edge.v
              << "}\n"
              << "type: " << type_name(ws->type) << "\n";
    print_set("W", ws->w_set);
    print_set("Z", ws->z_set);
    print_set("Y", ws->y_set);
    std::cout << "U: " << ws->failing_edge.u << " " << ws->failing_edge.v << "\n"
              << "cut edge: {" << ws->cut_edge.u << ", " << ws->cut_edge.v
              << "}, w = " << ws->w_vertex << "\n"
              << "x_count=" << ws->x_count << " delta=" << ws->delta_sum
              << " epsilon=" << ws->epsilon_sum << " doubles=" << ws->double_count
              << " triples=" << ws->triple_count << "\n";
    std::vector<int> violated = check_technical_exclusions(g, cover, *ws);
    std::cout << "exclusions violated:";
    if (violated.empty()) std::cout << " none";
    for (int c : violated) std::cout << " " << c;
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Good vertex covers and line-graph normality witnesses for cubic graphs"};
    app.require_subcommand(1);

    GraphInput input;
    CoverInput cover_input;
    SearchBudget budget;
    std::string out_path, cert_path, oracle_check;
    bool json = false;

    CLI::App* witness = app.add_subcommand("witness", "Build and emit a verified certificate");
    input.add_flags(*witness);
    witness->add_option("--out", out_path, "Write the certificate here (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Re-verify a certificate file");
    input.add_flags(*verify);
    verify->add_option("--cert", cert_path, "Certificate file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force deciders");
    oracle->add_option("check", oracle_check, "One of: normal, edge-normal, strong, good")
        ->required()
        ->check(CLI::IsMember({"normal", "edge-normal", "strong", "good"}));
    input.add_flags(*oracle);
    cover_input.add_flags(*oracle);
    oracle->add_option("--budget-ms", budget.max_millis, "Time budget in milliseconds");
    oracle->add_option("--max-vertices", budget.max_vertices, "Vertex-count cap");
    oracle->add_option("--node-limit", budget.node_limit, "Search-node cap");

    CLI::App* decomp = app.add_subcommand("decompose", "Print the bridge decomposition");
    input.add_flags(*decomp);
    decomp->add_flag("--json", json, "Machine-readable output");

    CLI::App* diagnose = app.add_subcommand("diagnose", "Check a cover; print any wrong set");
    input.add_flags(*diagnose);
    cover_input.add_flags(*diagnose);
    diagnose->add_flag("--json", json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (witness->parsed()) return cmd_witness(input, out_path);
        if (verify->parsed()) return cmd_verify(input, cert_path);
        if (oracle->parsed()) return cmd_oracle(oracle_check, input, cover_input, budget);
        if (decomp->parsed()) return cmd_decompose(input, json);
        if (diagnose->parsed()) return cmd_diagnose(input, cover_input, json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitParse;
}
