#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "edgenormal/graph6.hpp"
#include "edgenormal/named_graphs.hpp"
#include "edgenormal/witness.hpp"

using namespace edgenormal;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string work_path(const std::string& name) {
    return std::string(EDGENORMAL_WORK_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    static int counter = 0;
    std::string tag = std::to_string(counter++);
    std::string out_file = work_path("cli_out_" + tag);
    std::string err_file = work_path("cli_err_" + tag);
    std::string cmd = std::string(EDGENORMAL_CLI_PATH) + " " + args;
    if (!stdin_text.empty()) {
        std::string in_file = work_path("cli_in_" + tag);
        spit(in_file, stdin_text);
        cmd += " < " + in_file;
    } else {
        cmd += " < /dev/null";
    }
    cmd += " > " + out_file + " 2> " + err_file;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

}  // namespace

TEST_CASE("witness then verify round trip") {
    std::string cert_path = work_path("petersen.cert.json");
    RunResult w = run_cli("witness --name petersen --out " + cert_path);
    CHECK(w.exit_code == 0);
    CHECK(w.err.find("verified") != std::string::npos);

    NormalityCertificate cert = certificate_from_json_string(slurp(cert_path));
    CHECK(cert.graph.n() == 10);
    CHECK(cert.matchings.size() == 15);
    CHECK(verify_certificate(cert).ok);

    RunResult v = run_cli("verify --cert " + cert_path);
    CHECK(v.exit_code == 0);
}

TEST_CASE("witness then verify succeeds for every named cubic graph") {
    for (const std::string& name : named_graph_names()) {
        if (!named_graph(name).is_cubic()) continue;  // triangle
        std::string cert_path = work_path(name + ".cert.json");
        CHECK(run_cli("witness --name " + name + " --out " + cert_path).exit_code == 0);
        CHECK(run_cli("verify --cert " + cert_path).exit_code == 0);
    }
}

TEST_CASE("witness writes to stdout without --out") {
    RunResult r = run_cli("witness --name k4");
    CHECK(r.exit_code == 0);
    NormalityCertificate cert = certificate_from_json_string(r.out);
    CHECK(cert.graph.n() == 4);
}

TEST_CASE("witness rejects non-cubic and unknown graphs") {
    CHECK(run_cli("witness --name triangle").exit_code == 3);
    CHECK(run_cli("witness --name nosuch").exit_code == 2);
    CHECK(run_cli("witness --name c5").exit_code == 3);
}

TEST_CASE("witness accepts parametrized and file inputs") {
    CHECK(run_cli("witness --name flower_snark --k 5").exit_code == 0);
    CHECK(run_cli("witness --name flower --k 3").exit_code == 0);

    std::string g6 = work_path("k4.g6");
    spit(g6, to_graph6(named_graph("k4")) + "\n");
    CHECK(run_cli("witness --in " + g6).exit_code == 0);

    std::string el = work_path("p2.el");
    spit(el, "2 1\n0 1\n");
    CHECK(run_cli("witness --in " + el + " --format edgelist").exit_code == 0);

    // "-" reads the graph from stdin.
    CHECK(run_cli("witness --in -", to_graph6(named_graph("cube")) + "\n").exit_code == 0);
}

TEST_CASE("verify catches tampering and mismatches") {
    std::string cert_path = work_path("k4.cert.json");
    REQUIRE(run_cli("witness --name k4 --out " + cert_path).exit_code == 0);

    // Overlapping edges injected into a matching.
    NormalityCertificate bad = certificate_from_json_string(slurp(cert_path));
    bad.matchings[0] = Matching{{Edge(0, 1), Edge(1, 2)}};
    std::string bad_path = work_path("k4.tampered.json");
    spit(bad_path, certificate_to_json_string(bad));
    RunResult r = run_cli("verify --cert " + bad_path);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("disjointness") != std::string::npos);

    // The certificate checked against a different graph fails coverage.
    RunResult wrong = run_cli("verify --cert " + cert_path + " --name petersen");
    CHECK(wrong.exit_code == 1);

    CHECK(run_cli("verify --cert " + work_path("does_not_exist.json")).exit_code == 2);

    std::string junk_path = work_path("junk.json");
    spit(junk_path, "{\"graph\": 3}");
    CHECK(run_cli("verify --cert " + junk_path).exit_code == 2);
}

TEST_CASE("oracle answers and exit codes") {
    RunResult c5 = run_cli("oracle normal --name C5");
    CHECK(c5.exit_code == 0);
    CHECK(c5.out == "false\n");

    RunResult k3 = run_cli("oracle normal --name triangle");
    CHECK(k3.exit_code == 0);
    CHECK(k3.out == "true\n");

    RunResult strong = run_cli("oracle strong --name triangle");
    CHECK(strong.exit_code == 0);
    CHECK(strong.out == "false\n");

    RunResult edge = run_cli("oracle edge-normal --name triangle");
    CHECK(edge.exit_code == 0);
    CHECK(edge.out == "true\n");

    RunResult unknown = run_cli("oracle normal --name c5 --max-vertices 4");
    CHECK(unknown.exit_code == 5);
    CHECK(unknown.out == "unknown\n");

    RunResult good = run_cli("oracle good --name k4 --cover 1,2,3");
    CHECK(good.exit_code == 0);
    CHECK(good.out == "true\n");

    RunResult not_good = run_cli("oracle good --name triangle --cover 0,1");
    CHECK(not_good.exit_code == 0);
    CHECK(not_good.out == "false\n");

    CHECK(run_cli("oracle good --name k4 --cover 0,1").exit_code == 3);
    CHECK(run_cli("oracle nosuchcheck --name k4").exit_code == 2);
}

TEST_CASE("decompose output") {
    RunResult pet = run_cli("decompose --name petersen");
    CHECK(pet.exit_code == 0);
    CHECK(pet.out.find("pieces: 1") != std::string::npos);
    CHECK(pet.out.find("links: 0") != std::string::npos);

    RunResult pair = run_cli("decompose --name gadget_completion_pair");
    CHECK(pair.exit_code == 0);
    CHECK(pair.out.find("pieces: 2") != std::string::npos);
    CHECK(pair.out.find("links: 1") != std::string::npos);
    CHECK(pair.out.find("bridge {4, 9}") != std::string::npos);

    RunResult js = run_cli("decompose --name gadget_completion_pair --json");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"pieces\"") != std::string::npos);
    CHECK(js.out.find("\"bridge\"") != std::string::npos);

    CHECK(run_cli("decompose --name triangle").exit_code == 3);
}

TEST_CASE("diagnose output") {
    RunResult good = run_cli("diagnose --name gadget_completion_pair --cover 0,1,4,5,6,9");
    CHECK(good.exit_code == 0);
    CHECK(good.out == "good\n");

    RunResult bad = run_cli("diagnose --name gadget_completion_pair --cover 0,1,4,5,7,8");
    CHECK(bad.exit_code == 0);
    CHECK(bad.out.find("wrong set at edge {5, 6}") != std::string::npos);
    CHECK(bad.out.find("type: 2a") != std::string::npos);
    CHECK(bad.out.find("cut edge: {4, 9}") != std::string::npos);
    CHECK(bad.out.find("exclusions violated: none") != std::string::npos);

    RunResult js = run_cli("diagnose --name gadget_completion_pair --cover 0,1,4,5,7,8 --json");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"good\": false") != std::string::npos);
    CHECK(js.out.find("\"type\": \"2a\"") != std::string::npos);

    // Cover from a file instead of the flag.
    std::string cover_path = work_path("pair.cover");
    spit(cover_path, "0 1 4\n5 6 9\n");
    RunResult from_file =
        run_cli("diagnose --name gadget_completion_pair --cover-file " + cover_path);
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == "good\n");

    CHECK(run_cli("diagnose --name gadget_completion_pair --cover 0,1,2,3,4,5,6,7,8,9")
              .exit_code == 3);
    CHECK(run_cli("diagnose --name k4 --cover 0,1").exit_code == 3);
}

TEST_CASE("random graphs are reproducible from the command line") {
    std::string a = work_path("rand_a.json");
    std::string b = work_path("rand_b.json");
    REQUIRE(run_cli("witness --name random --n 12 --seed 7 --out " + a).exit_code == 0);
    REQUIRE(run_cli("witness --name random --n 12 --seed 7 --out " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());

    std::string c = work_path("rand_c.json");
    REQUIRE(run_cli("witness --name random --n 12 --seed 8 --out " + c).exit_code == 0);
    CHECK(slurp(a) != slurp(c));

    CHECK(run_cli("witness --name random --seed 7").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("witness --name k4 --in somefile").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("witness --help").exit_code == 0);
}
