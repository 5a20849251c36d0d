// naeflow command-line front end. Prints one JSON run report on stdout for
// every invocation; witnesses and gadgets go to the file named by -o.
// Exit codes: 0 found/true, 1 none/false, 2 error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "naeflow/cycles.hpp"
#include "naeflow/decomposition.hpp"
#include "naeflow/edge_coloring.hpp"
#include "naeflow/enumerate.hpp"
#include "naeflow/flows.hpp"
#include "naeflow/formula.hpp"
#include "naeflow/graph_io.hpp"
#include "naeflow/matching.hpp"
#include "naeflow/planarity.hpp"
#include "naeflow/reductions.hpp"
#include "naeflow/witness_io.hpp"

using namespace naeflow;

namespace {

enum class Status { found, none, infeasible, error };

const char* to_string(Status s)
{
    switch (s) {
    case Status::found:
        return "found";
    case Status::none:
        return "none";
    case Status::infeasible:
        return "infeasible";
    default:
        return "error";
    }
}

int exit_code(Status s) { return s == Status::found ? 0 : s == Status::error ? 2 : 1; }

struct Options {
    std::string what;
    std::string input;
    std::string output;
    std::string witness;
    std::string format = "json";
    std::int64_t k = 3;
    bool k_given = false;
    int r = -1;
    std::uint64_t seed = 1;
    double time_limit = 0;
    std::vector<std::int64_t> a;
    int max_n = 10;
    std::uint64_t cycle_cap = default_cycle_cap;
    std::string dot;
};

struct Run {
    Status status = Status::error;
    std::optional<std::string> witness;  // written witness file
    std::optional<std::string> evidence; // counter-evidence file for false predicates
    json detail = json::object();
    std::string message;
    SolverStats stats;
};

std::string fnv1a(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

std::string require_input(const Options& o)
{
    if (o.input.empty())
        throw format_error("no input file given");
    return read_text_file(o.input);
}

GraphFile input_graph(const Options& o)
{
    std::string text = require_input(o);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return graph_from_json(parse_json_text(text));
    return graph_from_edge_list(text);
}

SearchControl control(const Options& o, Run& run) { return SearchControl{0, o.time_limit, &run.stats}; }

// json arrays flattened to one whitespace-separated line per top-level entry
std::string as_text(const json& j)
{
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << it.key() << ':';
        if (it->is_array())
            for (const auto& x : *it)
                os << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
        else
            os << ' ' << it->dump();
        os << '\n';
    }
    return os.str();
}

// writes a witness or evidence file in the requested format when -o is set
std::optional<std::string> emit(const Options& o, const Graph& g, const json& body, const DotStyle& style)
{
    if (o.output.empty())
        return std::nullopt;
    if (o.format == "dot")
        write_text_file(o.output, graph_to_dot(g, style));
    else if (o.format == "text")
        write_text_file(o.output, as_text(body));
    else
        write_text_file(o.output, body.dump(2) + "\n");
    return o.output;
}

DotStyle paint(const Graph& g, const Decomposition& d)
{
    DotStyle s;
    s.vertex_in_a = d.indicator(g.order());
    return s;
}

DotStyle paint_edges(const Graph& g, const std::vector<int>& ids, const std::string& color)
{
    DotStyle s;
    s.edge_colors.assign(static_cast<std::size_t>(g.size()), "");
    for (int id : ids)
        s.edge_colors[static_cast<std::size_t>(id)] = color;
    return s;
}

DotStyle label_edges(const Graph& g, const EdgeLabeling& lab)
{
    DotStyle s;
    for (int id = 0; id < g.size(); ++id)
        s.edge_labels.push_back(std::to_string(lab[static_cast<std::size_t>(id)]));
    return s;
}

DotStyle label_vertices(const VertexLabeling& lab)
{
    DotStyle s;
    for (auto x : lab)
        s.vertex_labels.push_back(std::to_string(x));
    return s;
}

DotStyle color_edges(const TwoEdgeColoring& c)
{
    DotStyle s;
    for (auto x : c)
        s.edge_colors.emplace_back(to_string(x));
    return s;
}

std::vector<std::pair<int, int>> endpoints(const Graph& g, const std::vector<int>& ids)
{
    std::vector<std::pair<int, int>> out;
    for (int id : ids)
        out.emplace_back(g.edge(id).u, g.edge(id).v);
    return out;
}

// constructive coloring per component; components must all be colorable
std::optional<TwoEdgeColoring> color_components(const Graph& g)
{
    TwoEdgeColoring c(static_cast<std::size_t>(g.size()), EdgeColor::red);
    for (const auto& comp : connected_components(g)) {
        Graph h = induced_subgraph(g, comp);
        auto hc = nae_edge_coloring(h);
        if (!hc)
            return std::nullopt;
        for (int id = 0; id < h.size(); ++id) {
            const Edge& e = h.edge(id);
            auto orig = g.edge_id(comp[static_cast<std::size_t>(e.u)], comp[static_cast<std::size_t>(e.v)]);
            c[static_cast<std::size_t>(*orig)] = (*hc)[static_cast<std::size_t>(id)];
        }
    }
    return c;
}

int flow_k(const Options& o) { return static_cast<int>(o.k); }

void cmd_solve(const Options& o, Run& run)
{
    auto gf = input_graph(o);
    const Graph& g = gf.graph;
    auto ctl = control(o, run);
    run.detail["n"] = g.order();
    run.detail["m"] = g.size();
    auto found_decomp = [&](const std::optional<Decomposition>& d) {
        run.status = d ? Status::found : Status::none;
        if (d) {
            run.detail["size_a"] = d->a.size();
            run.witness = emit(o, g, decomposition_to_json(*d), paint(g, *d));
        }
    };
    const std::string& p = o.what;
    if (p == "nae") {
        found_decomp(solve_nae(g, ctl));
    } else if (p == "one-in-degree") {
        found_decomp(solve_one_in_degree(g, ctl));
    } else if (p == "one-in-degree-weighted") {
        found_decomp(solve_one_in_degree_weighted(gf.weighted(), ctl));
    } else if (p == "zero-sum-flow") {
        run.detail["k"] = o.k;
        auto lab = solve_zero_sum(g, flow_k(o), ctl);
        run.status = lab ? Status::found : Status::none;
        if (lab)
            run.witness = emit(o, g, labels_to_json(*lab), label_edges(g, *lab));
    } else if (p == "vertex-flow") {
        run.detail["k"] = o.k;
        auto lab = solve_vertex_zero_sum(g, flow_k(o), ctl);
        run.status = lab ? Status::found : Status::none;
        if (lab)
            run.witness = emit(o, g, labels_to_json(*lab), label_vertices(*lab));
    } else if (p == "nae-edge") {
        if (g.order() == 0 || degree_profile(g).min_degree < 2) {
            run.status = Status::infeasible;
            run.message = "a vertex of degree below 2 cannot see both colors";
            return;
        }
        auto c = color_components(g);
        run.status = c ? Status::found : Status::none;
        if (c)
            run.witness = emit(o, g, coloring_to_json(*c), color_edges(*c));
        else
            run.message = "a component is an odd cycle";
    } else if (p == "perfect-matching") {
        if (g.order() % 2) {
            run.status = Status::infeasible;
            run.message = "odd number of vertices";
            return;
        }
        auto m = one_in_degree_edge(g);
        run.status = m ? Status::found : Status::none;
        if (m)
            run.witness = emit(o, g, matching_to_json(*m), paint_edges(g, *m, "red"));
    } else if (p == "min-edge-deletion") {
        auto res = min_edge_deletion_bipartition(g);
        run.status = Status::found;
        run.detail["count"] = res.count;
        json body = {{"deleted", res.edges}, {"side", res.side}};
        Decomposition side;
        for (int v = 0; v < g.order(); ++v)
            if (res.side[static_cast<std::size_t>(v)])
                side.a.push_back(v);
        DotStyle style = paint_edges(g, res.edges, "red");
        style.vertex_in_a = side.indicator(g.order());
        run.witness = emit(o, g, body, style);
    } else {
        throw format_error("unknown problem: " + p);
    }
}

void cmd_check(const Options& o, Run& run)
{
    auto gf = input_graph(o);
    const Graph& g = gf.graph;
    run.detail["n"] = g.order();
    run.detail["m"] = g.size();
    const std::string& p = o.what;
    auto verdict = [&](bool yes, const json& body, const DotStyle& style) {
        run.status = yes ? Status::found : Status::none;
        auto path = emit(o, g, body, style);
        (yes ? run.witness : run.evidence) = path;
    };
    if (p == "bipartite") {
        if (auto b = is_bipartite(g)) {
            verdict(true, {{"left", b->left}, {"right", b->right}}, paint(g, Decomposition(b->left)));
        } else {
            auto c = *odd_cycle(g);
            run.detail["odd_cycle_length"] = c.size();
            std::vector<int> ids;
            for (std::size_t i = 0; i < c.size(); ++i)
                ids.push_back(*g.edge_id(c[i], c[(i + 1) % c.size()]));
            verdict(false, {{"odd_cycle", c}}, paint_edges(g, ids, "red"));
        }
    } else if (p == "regular" || p == "semiregular") {
        if (g.order() == 0)
            throw precondition_error("empty graph");
        auto prof = degree_profile(g);
        run.detail["min_degree"] = prof.min_degree;
        run.detail["max_degree"] = prof.max_degree;
        const auto d = p == "regular" ? prof.regular : prof.semiregular;
        const bool yes = d && (o.r < 0 || *d == o.r);
        // evidence: a vertex whose degree is out of range
        json body = json::object();
        const int lo = o.r >= 0 ? o.r : prof.min_degree;
        const int hi = p == "regular" ? lo : lo + 1;
        for (int v = 0; v < g.order() && !yes; ++v)
            if (g.degree(v) < lo || g.degree(v) > hi) {
                body = {{"vertex", v}, {"degree", g.degree(v)}};
                break;
            }
        if (yes)
            body = {{"degree", *d}};
        verdict(yes, body, {});
    } else if (p == "planar") {
        auto pr = planarity(g, true);
        if (pr.planar) {
            verdict(true, {{"rotation", *pr.embedding}}, {});
        } else {
            auto ids = *kuratowski_edges(g);
            run.detail["kuratowski_edges"] = ids.size();
            verdict(false, {{"kuratowski_edges", endpoints(g, ids)}}, paint_edges(g, ids, "red"));
        }
    } else if (p == "cycle-mod4") {
        auto rep = has_cycle_2_mod_4(g, o.cycle_cap);
        run.detail["cycles_enumerated"] = rep.cycles_enumerated;
        if (!rep.has_bad_cycle && !rep.exhausted)
            throw search_limit_exceeded("cycle cap reached before every cycle was seen");
        if (rep.has_bad_cycle) {
            const auto& c = *rep.witness;
            std::vector<int> ids;
            for (std::size_t i = 0; i < c.size(); ++i)
                ids.push_back(*g.edge_id(c[i], c[(i + 1) % c.size()]));
            verdict(true, {{"cycle", c}}, paint_edges(g, ids, "red"));
        } else {
            run.status = Status::none;
        }
    } else {
        throw format_error("unknown predicate: " + p);
    }
}

PositiveFormula input_formula(const Options& o) { return load_formula_text(require_input(o)); }

void write_gadget(const Options& o, Run& run, const GadgetInstance& gi, const std::string& stem)
{
    std::string path = o.output;
    if (path.empty())
        path = stem + (o.format == "dot" ? ".dot" : o.format == "text" ? ".txt" : ".json");
    if (o.format == "dot")
        write_text_file(path, graph_to_dot(gi.graph));
    else if (o.format == "text")
        write_text_file(path, graph_to_edge_list(gi.graph, gi.weights ? &*gi.weights : nullptr));
    else
        write_text_file(path, gadget_to_json(gi).dump(2) + "\n");
    if (!o.dot.empty())
        write_text_file(o.dot, graph_to_dot(gi.graph));
    run.status = Status::found;
    run.witness = path;
    run.detail["n"] = gi.graph.order();
    run.detail["m"] = gi.graph.size();
}

void cmd_gen(const Options& o, Run& run)
{
    const std::string& p = o.what;
    if (p == "tree-like") {
        auto t = make_tree_like(input_formula(o));
        std::string path = o.output.empty() ? "tree-like.json" : o.output;
        if (o.format == "dot")
            write_text_file(path, graph_to_dot(t.combined_graph()));
        else
            write_text_file(path, tree_like_to_json(t).dump(2) + "\n");
        run.status = Status::found;
        run.witness = path;
        run.detail["clause_tree_edges"] = t.clause_tree_edges.size();
    } else if (p == "zero-sum") {
        std::string text = require_input(o);
        auto pos = text.find_first_not_of(" \t\r\n");
        TreeLikeInstance t;
        json j;
        if (pos != std::string::npos && text[pos] == '{' && (j = parse_json_text(text)).contains("clause_tree_edges"))
            t = tree_like_from_json(j);
        else
            t = make_tree_like(load_formula_text(text));
        auto gz = gen_zero_sum_instance(t);
        write_gadget(o, run, gz.instance, "zero-sum");
        int deg4 = 0;
        for (int v = 0; v < gz.instance.graph.order(); ++v)
            deg4 += gz.instance.graph.degree(v) == 4;
        run.detail["degree4_vertices"] = deg4;
        run.detail["clauses"] = t.formula.num_clauses();
    } else if (p == "regular-bipartite") {
        const int r = o.r < 0 ? 3 : o.r;
        auto f = input_formula(o);
        bool ready = f.num_clauses() > 0;
        for (const auto& cl : f.clauses())
            ready = ready && static_cast<int>(cl.size()) == r;
        for (int c : f.occurrences())
            ready = ready && c == r;
        auto fp = ready ? f : pad_formula(f, r);
        auto gr = gen_regular_bipartite(fp, r);
        write_gadget(o, run, gr.instance, "regular-bipartite");
        run.detail["r"] = r;
        run.detail["padded"] = !ready;
    } else if (p == "three-partition") {
        if (!o.k_given)
            throw precondition_error("three-partition needs --k");
        auto gt = gen_three_partition_graph(o.a, o.k);
        write_gadget(o, run, gt.instance, "three-partition");
    } else if (p == "bipartition") {
        auto gb = gen_bipartition_instance(input_formula(o));
        write_gadget(o, run, gb.instance, "bipartition");
    } else {
        throw format_error("unknown reduction: " + p);
    }
}

void cmd_verify(const Options& o, Run& run)
{
    auto gf = input_graph(o);
    const Graph& g = gf.graph;
    if (o.witness.empty())
        throw format_error("no witness file given");
    auto w = parse_json_text(read_text_file(o.witness));
    run.witness = o.witness;
    const std::string& p = o.what;
    bool ok = false;
    // a well-formed file whose contents do not fit the graph is an invalid witness
    auto guarded = [&](auto&& check) {
        try {
            ok = check();
        } catch (const precondition_error& e) {
            run.message = e.what();
            ok = false;
        }
    };
    if (p == "one-in-degree") {
        auto d = decomposition_from_json(w);
        guarded([&] { return verify_one_in_degree(g, d); });
    } else if (p == "one-in-degree-weighted") {
        auto d = decomposition_from_json(w);
        auto wg = gf.weighted();
        guarded([&] { return verify_one_in_degree_weighted(wg, d); });
    } else if (p == "nae") {
        auto d = decomposition_from_json(w);
        guarded([&] { return verify_nae(g, d); });
    } else if (p == "zero-sum-flow") {
        auto lab = labels_from_json(w);
        guarded([&] { return verify_zero_sum(g, lab, flow_k(o)); });
    } else if (p == "vertex-flow") {
        auto lab = labels_from_json(w);
        guarded([&] { return verify_vertex_zero_sum(g, lab, flow_k(o)); });
    } else if (p == "nae-edge") {
        auto c = coloring_from_json(w);
        guarded([&] { return verify_nae_edge(g, c); });
    } else if (p == "perfect-matching") {
        auto m = matching_from_json(w);
        guarded([&] {
            for (int id : m)
                if (id < 0 || id >= g.size())
                    throw precondition_error("edge id " + std::to_string(id) + " out of range");
            return is_perfect_matching(g, m);
        });
    } else {
        throw format_error("unknown witness kind: " + p);
    }
    run.status = ok ? Status::found : Status::none;
    if (!ok)
        run.witness.reset(), run.evidence = o.witness;
}

void cmd_sweep(const Options& o, Run& run)
{
    if (o.what != "cubic-bipartite-nae")
        throw format_error("unknown sweep family: " + o.what);
    if (o.max_n < 1 || o.max_n > max_enumeration_order)
        throw precondition_error("--max-n must be in 1.." + std::to_string(max_enumeration_order));
    json per_n = json::array();
    json counterexamples = json::array();
    for (int n = 2; n <= o.max_n; n += 2) {
        EnumerateOptions opt;
        opt.n = n;
        opt.connected = true;
        opt.bipartite = true;
        opt.min_degree = 3;
        opt.max_degree = 3;
        std::uint64_t without = 0;
        auto graphs = enumerate_graphs(opt, [&](const Graph& g) {
            if (!solve_nae(g, control(o, run))) {
                ++without;
                counterexamples.push_back(graph_to_json(g));
            }
        });
        per_n.push_back({{"n", n}, {"graphs", graphs}, {"without_nae", without}});
    }
    run.detail["per_n"] = per_n;
    run.detail["counterexamples"] = counterexamples.size();
    run.status = Status::found;
    if (!o.output.empty()) {
        write_text_file(o.output, json{{"counterexamples", counterexamples}}.dump(2) + "\n");
        run.witness = o.output;
    }
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    std::string command;
    for (int i = 0; i < argc; ++i)
        command += (i ? " " : "") + std::string(argv[i]);

    CLI::App app{"Solvers, checks and reduction gadgets for NAE and 1-in-Degree decompositions and zero-sum flows"};
    app.require_subcommand(1);
    app.add_option("-i,--input", o.input, "instance file (graph JSON or edge list; formula JSON or mcnf)");
    app.add_option("-o,--output", o.output, "witness, evidence or gadget output file");
    auto* kopt = app.add_option("--k", o.k, "flow bound k (labels in +-1..+-(k-1)), or 3-partition target");
    app.add_option("--r", o.r, "degree for check regular/semiregular and gen regular-bipartite");
    app.add_option("--seed", o.seed, "seed for randomized steps");
    app.add_option("--time-limit", o.time_limit, "search time limit in seconds (0: none)");
    app.add_option("--format", o.format, "output file format")->check(CLI::IsMember({"json", "dot", "text"}));

    auto* solve = app.add_subcommand("solve", "search for a witness");
    solve->add_option("problem", o.what)
        ->required()
        ->check(CLI::IsMember({"nae", "one-in-degree", "one-in-degree-weighted", "zero-sum-flow", "vertex-flow",
                               "nae-edge", "perfect-matching", "min-edge-deletion"}));
    solve->add_option("input", o.input, "instance file");

    auto* check = app.add_subcommand("check", "test a structural predicate");
    check->add_option("predicate", o.what)
        ->required()
        ->check(CLI::IsMember({"bipartite", "regular", "semiregular", "planar", "cycle-mod4"}));
    check->add_option("input", o.input, "graph file");
    check->add_option("--cycle-cap", o.cycle_cap, "cycle enumeration cap for cycle-mod4 (0: none)");

    auto* gen = app.add_subcommand("gen", "generate a reduction gadget");
    gen->add_option("reduction", o.what)
        ->required()
        ->check(CLI::IsMember({"tree-like", "zero-sum", "regular-bipartite", "three-partition", "bipartition"}));
    gen->add_option("input", o.input, "source formula file");
    gen->add_option("--dot", o.dot, "also write the gadget as DOT to this file");
    gen->add_option("--a", o.a, "3-partition elements, comma separated")->delimiter(',');

    auto* verify = app.add_subcommand("verify", "check a witness against an instance");
    verify->add_option("kind", o.what)
        ->required()
        ->check(CLI::IsMember({"one-in-degree", "one-in-degree-weighted", "nae", "zero-sum-flow", "vertex-flow",
                               "nae-edge", "perfect-matching"}));
    verify->add_option("input", o.input, "instance file");
    verify->add_option("witness-file", o.witness, "witness file");
    verify->add_option("-w,--witness", o.witness, "witness file");

    auto* sweep = app.add_subcommand("sweep", "search small graphs for counterexamples");
    sweep->add_option("family", o.what)->required()->check(CLI::IsMember({"cubic-bipartite-nae"}));
    sweep->add_option("--max-n", o.max_n, "largest order to enumerate");

    for (auto* sub : {solve, check, gen, verify, sweep})
        sub->fallthrough();

    Run run;
    const auto t0 = std::chrono::steady_clock::now();
    std::string digest;
    try {
        app.parse(argc, argv);
        o.k_given = kopt->count() > 0;
        if (!o.input.empty())
            digest = fnv1a(read_text_file(o.input));
        if (o.k < 2 && o.k_given && app.got_subcommand(gen) == false)
            throw precondition_error("--k must be at least 2");
        if (app.got_subcommand(solve))
            cmd_solve(o, run);
        else if (app.got_subcommand(check))
            cmd_check(o, run);
        else if (app.got_subcommand(gen))
            cmd_gen(o, run);
        else if (app.got_subcommand(verify))
            cmd_verify(o, run);
        else
            cmd_sweep(o, run);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        run = Run{};
        run.message = e.what();
    } catch (const std::exception& e) {
        run.status = Status::error;
        run.witness.reset();
        run.evidence.reset();
        run.message = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json report;
    report["command"] = command;
    report["input_digest"] = digest.empty() ? json(nullptr) : json(digest);
    report["status"] = to_string(run.status);
    report["witness"] = run.witness ? json(*run.witness) : json(nullptr);
    if (run.evidence)
        report["evidence"] = *run.evidence;
    report["wall_time_s"] = secs;
    report["stats"] = {{"nodes", run.stats.nodes}, {"propagations", run.stats.propagations}};
    report["seed"] = o.seed;
    report["detail"] = run.detail;
    if (!run.message.empty())
        report["message"] = run.message;
    std::cout << report.dump(2) << "\n";
    return exit_code(run.status);
}
