// chordweave: exact computations with chord-diagram weight systems and
// skein polynomial invariants.
//
// Subcommands: enumerate, weights, graph-reduce, knot, verify, chi.
// All numeric output is exact (rationals and polynomials); there is no
// floating point anywhere in the tool. With --json, the report is a
// deterministic function of the inputs; timings go to stderr in text mode.

#include <CLI11.hpp>
#include <json.hpp>

#include <chordweave/chordweave.hpp>
#include <chordweave/verify.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace chordweave;
using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json = false;
    unsigned jobs = 1;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}

    double ms() const
    {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void emit(const GlobalOpts& g, const json& payload,
          const std::function<void()>& text_form, const Timer& timer)
{
    if (g.json) {
        std::cout << payload.dump(2) << "\n";
    } else {
        text_form();
        std::cerr << "done in " << timer.ms() << " ms\n";
    }
}

int cmd_enumerate(const GlobalOpts& g, int degree)
{
    Timer timer;
    auto diagrams = enumerate_diagrams(degree);
    json payload = {{"command", "enumerate"},
                    {"degree", degree},
                    {"count", diagrams.size()}};
    json words = json::array();
    for (const ChordDiagram& d : diagrams)
        words.push_back(d.word());
    payload["diagrams"] = words;
    emit(g, payload,
         [&]() {
             for (const ChordDiagram& d : diagrams)
                 std::cout << d.word() << "\n";
             std::cout << "count: " << diagrams.size() << "\n";
         },
         timer);
    return 0;
}

int cmd_weights(const GlobalOpts& g, const std::string& word,
                std::vector<std::string> systems, int r)
{
    Timer timer;
    ChordDiagram d = ChordDiagram::from_word(word);
    if (systems.empty())
        systems = {"gl", "so", "chrom", "wrx", "w21"};
    json results;
    for (const std::string& sys : systems) {
        if (sys == "gl") {
            results["gl"] = w_gl(d).render();
        } else if (sys == "so") {
            results["so"] = w_so(d).render();
        } else if (sys == "chrom") {
            results["chrom"] = gamma_bar(d).render();
        } else if (sys == "wrx") {
            if (r < 1)
                throw Error("wrx needs --r >= 1");
            results["wrx"] = w_rx(d, r).render();
        } else if (sys == "w21") {
            results["w21"] = to_string(w21_embeddings(d));
        } else {
            throw Error("unknown weight system: " + sys);
        }
    }
    json payload = {{"command", "weights"},
                    {"diagram", d.canonical().word()},
                    {"results", results}};
    emit(g, payload,
         [&]() {
             for (const auto& [key, value] : results.items())
                 std::cout << key << ": " << value.get<std::string>() << "\n";
         },
         timer);
    return 0;
}

int cmd_graph_reduce(const GlobalOpts& g, const std::string& path)
{
    Timer timer;
    WeightedGraph graph = graph_from_json(json::parse(read_file(path)));
    ChromaticReducer reducer(FileCache::from_env());
    MPoly value = reducer.reduce(graph);
    json payload = {{"command", "graph-reduce"},
                    {"file", path},
                    {"value", value.render()}};
    emit(g, payload, [&]() { std::cout << value.render() << "\n"; }, timer);
    return 0;
}

int cmd_knot(const GlobalOpts& g, const std::string& path,
             const std::string& invariant, int diagonal)
{
    Timer timer;
    LinkDiagram k = parse_pd(read_file(path));
    MPoly value;
    if (invariant == "upsilon")
        value = upsilon(k);
    else if (invariant == "homfly")
        value = homfly(k);
    else if (invariant == "kauffman")
        value = kauffman(k);
    else
        throw Error("unknown invariant: " + invariant);

    json payload = {{"invariant", invariant}, {"value", value.render()}};
    bool diag_pass = true;
    if (diagonal >= 0) {
        if (invariant == "upsilon")
            throw Error("--diagonal applies to homfly or kauffman");
        HSeries diag = invariant == "homfly" ? homfly_diagonal(k, diagonal)
                                             : kauffman_diagonal(k, diagonal);
        HSeries target = upsilon_series(k, diagonal);
        diag_pass = diag == target;
        payload["diagonal"] = diag.render();
        payload["upsilon_series"] = target.render();
        payload["diagonal_matches_upsilon"] = diag_pass;
    }
    emit(g, payload,
         [&]() {
             std::cout << invariant << ": " << value.render() << "\n";
             if (diagonal >= 0) {
                 std::cout << "diagonal: "
                           << payload["diagonal"].get<std::string>() << "\n"
                           << "upsilon series: "
                           << payload["upsilon_series"].get<std::string>()
                           << "\n"
                           << (diag_pass ? "PASS" : "FAIL")
                           << " diagonal matches upsilon series\n";
             }
         },
         timer);
    return diag_pass ? 0 : 1;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite,
               VerifyBounds bounds)
{
    Timer timer;
    bounds.jobs = g.jobs;
    SuiteReport report = run_suite(suite, bounds);
    json checks = json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back(
            {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json payload = {{"command", "verify"},
                    {"suite", report.suite},
                    {"pass", report.all_pass()},
                    {"checks", checks}};
    emit(g, payload,
         [&]() {
             for (const CheckResult& c : report.checks)
                 std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                           << (c.detail.empty() ? "" : " (" + c.detail + ")")
                           << "\n";
             std::cout << (report.all_pass() ? "suite passed" : "suite FAILED")
                       << "\n";
         },
         timer);
    return report.all_pass() ? 0 : 1;
}

int cmd_chi(const GlobalOpts& g, const std::string& expr,
            const std::string& algebra)
{
    Timer timer;
    ChiAlgebra which;
    if (algebra == "G3")
        which = ChiAlgebra::G3;
    else if (algebra == "F4")
        which = ChiAlgebra::F4;
    else
        throw Error("algebra must be G3 or F4");
    MPoly value = chi_eval(MPoly::parse(expr), which);
    json payload = {{"command", "chi"},
                    {"expr", expr},
                    {"algebra", algebra},
                    {"value", value.render()}};
    emit(g, payload, [&]() { std::cout << value.render() << "\n"; }, timer);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact chord-diagram weight systems and skein polynomials"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_flag("--json", global.json, "machine-readable output");
    app.add_option("--jobs", global.jobs, "worker threads for verify suites")
        ->check(CLI::Range(1u, 256u));

    int degree = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list canonical chord "
                                                      "diagrams of a degree");
    enumerate->add_option("--degree", degree, "diagram degree (<= 6)")
        ->required();

    std::string word;
    std::vector<std::string> systems;
    int r = -1;
    auto* weights =
        app.add_subcommand("weights", "evaluate weight systems on a diagram");
    weights->add_option("--diagram", word, "double-occurrence word, e.g. 1212")
        ->required();
    weights->add_option("--systems", systems,
                        "subset of gl,so,chrom,wrx,w21 (comma separated)")
        ->delimiter(',');
    weights->add_option("--r", r, "color count for wrx");

    std::string graph_path;
    auto* graph_reduce = app.add_subcommand(
        "graph-reduce", "reduce a weighted graph to Q[s1,s2,...]");
    graph_reduce->add_option("--file", graph_path, "graph JSON file")
        ->required();

    std::string pd_path, invariant = "upsilon";
    int diagonal = -1;
    auto* knot = app.add_subcommand("knot", "evaluate a knot/link invariant "
                                            "from a PD file");
    knot->add_option("--pd", pd_path, "PD code file")->required();
    knot->add_option("--invariant", invariant, "upsilon | homfly | kauffman");
    knot->add_option("--diagonal", diagonal,
                     "also extract the h-series diagonal to this order and "
                     "compare with the upsilon series");

    std::string suite;
    VerifyBounds bounds;
    auto* verify =
        app.add_subcommand("verify", "run a property-verification suite");
    verify
        ->add_option("--suite", suite,
                     "fourT | oracle | triangle | chromrel | skein | chi")
        ->required();
    verify->add_option("--max-degree", bounds.max_degree, "degree bound");
    verify->add_option("--n", bounds.ns, "matrix sizes for the oracle")
        ->delimiter(',');
    verify->add_option("--r", bounds.r, "color bound");
    verify->add_option("--seed", bounds.seed, "seed for randomized suites");

    std::string expr, algebra;
    auto* chi = app.add_subcommand("chi", "evaluate an exceptional character");
    chi->add_option("--expr", expr, "polynomial in t and odd x_n, n >= 3")
        ->required();
    chi->add_option("--algebra", algebra, "G3 | F4")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed())
            return cmd_enumerate(global, degree);
        if (weights->parsed())
            return cmd_weights(global, word, systems, r);
        if (graph_reduce->parsed())
            return cmd_graph_reduce(global, graph_path);
        if (knot->parsed())
            return cmd_knot(global, pd_path, invariant, diagonal);
        if (verify->parsed())
            return cmd_verify(global, suite, bounds);
        if (chi->parsed())
            return cmd_chi(global, expr, algebra);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
