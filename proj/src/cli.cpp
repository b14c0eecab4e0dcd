#include "tcg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcg/completion.hpp"
#include "tcg/fpt_editor.hpp"
#include "tcg/oracle.hpp"
#include "tcg/path_dp.hpp"
#include "tcg/saturation.hpp"
#include "tcg/tg_format.hpp"

namespace tcg::cli {

namespace {

using nlohmann::json;

json mods_to_json(const TemporalGraph& g, const ModificationSet& mods) {
    json arr = json::array();
    for (const Modification& m : mods) {
        arr.push_back({{"op", m.op == ModOp::Add ? "add" : "delete"},
                       {"u", g.label(m.te.e.u)},
                       {"v", g.label(m.te.e.v)},
                       {"t", m.te.t}});
    }
    return arr;
}

json vertex_labels(const TemporalGraph& g, const std::vector<VertexId>& vs) {
    std::vector<std::string> labels;
    labels.reserve(vs.size());
    for (VertexId v : vs) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    return json(labels);
}

void write_optional_file(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

struct SharedFlags {
    int d1 = 0;
    int d2 = 0;
    long long budget = -1;
    bool has_budget = false;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string caps;
    std::string file;
    std::string out_file;
};

OracleCaps parse_caps(const std::string& s) {
    OracleCaps caps;
    if (s.empty()) return caps;
    int n = 0, t = 0, k = 0;
    char comma1 = 0, comma2 = 0;
    std::istringstream in(s);
    if (!(in >> n >> comma1 >> t >> comma2 >> k) || comma1 != ',' || comma2 != ',')
        throw std::runtime_error("bad --caps, expected n,T,k");
    caps.max_vertices = n;
    caps.max_lifetime = t;
    caps.max_budget = k;
    return caps;
}

int emit_decision(std::ostream& out, json doc, bool yes) {
    doc["answer"] = yes ? "yes" : "no";
    out << doc.dump() << "\n";
    return yes ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"temporal cluster graph toolkit"};
    app.require_subcommand(1);

    SharedFlags fl;
    std::string algo = "fpt";
    std::string model = "random";
    int gen_n = 6, gen_T = 5, perturb = 0, tm_delta = 2, tm_k = 0;
    double edge_prob = 0.5, time_prob = 0.3;

    auto add_graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("file", fl.file, "input .tg file")->required();
    };
    auto add_params = [&](CLI::App* cmd, bool need_d1 = true) {
        if (need_d1) cmd->add_option("--d1", fl.d1, "density window")->required();
        cmd->add_option("--d2", fl.d2, "independence gap")->required();
    };

    CLI::App* rec = app.add_subcommand("recognize", "is the input a cluster temporal graph?");
    add_params(rec);
    rec->add_option("--threads", fl.threads, "subset-scan threads");
    add_graph_arg(rec);

    CLI::App* part = app.add_subcommand("partition", "saturated partition of the time-edges");
    part->add_option("--d2", fl.d2, "independence gap")->required();
    add_graph_arg(part);

    CLI::App* comp = app.add_subcommand("complete", "minimum additions to a cluster temporal graph");
    add_params(comp);
    comp->add_option("--budget", fl.budget, "decision budget")->each([&](const std::string&) {
        fl.has_budget = true;
    });
    add_graph_arg(comp);

    CLI::App* edit = app.add_subcommand("edit", "minimum edits to a cluster temporal graph");
    add_params(edit);
    edit->add_option("--algo", algo, "path-dp | fpt | oracle")
        ->check(CLI::IsMember({"path-dp", "fpt", "oracle"}));
    edit->add_option("--budget", fl.budget, "decision budget")->each([&](const std::string&) {
        fl.has_budget = true;
    });
    edit->add_option("--caps", fl.caps, "oracle caps n,T,k");
    edit->add_option("--threads", fl.threads, "reserved; solvers run single-threaded");
    add_graph_arg(edit);

    CLI::App* red = app.add_subcommand("reduce-tm", "temporal matching -> editing reduction");
    red->add_option("--delta", tm_delta, "matching independence gap (construction targets 2)");
    red->add_option("--k", tm_k, "target matching size")->required();
    red->add_option("--out", fl.out_file, "also write the reduced graph to a file");
    add_graph_arg(red);

    CLI::App* gen = app.add_subcommand("gen", "instance generators");
    gen->add_option("--model", model, "random | planted")
        ->check(CLI::IsMember({"random", "planted"}));
    gen->add_option("--n", gen_n, "vertices");
    gen->add_option("--T", gen_T, "lifetime");
    gen->add_option("--edge-prob", edge_prob, "static edge probability (random)");
    gen->add_option("--time-prob", time_prob, "per-timestep probability (random)");
    gen->add_option("--d1", fl.d1, "density window (planted)");
    gen->add_option("--d2", fl.d2, "independence gap (planted)");
    gen->add_option("--perturb", perturb, "random toggles after planting");
    gen->add_option("--seed", fl.seed, "rng seed");
    gen->add_option("--out", fl.out_file, "also write the graph to a file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (rec->parsed()) {
            TemporalGraph g = load_tg_file(fl.file);
            Params p(fl.d1, fl.d2);
            json doc;
            if (is_cluster_temporal_graph(g, p)) return emit_decision(out, doc, true);
            SubsetCheckResult chk = subset_characterisation_check(g, p, fl.threads);
            if (chk.violator) doc["violating_subset"] = vertex_labels(g, *chk.violator);
            return emit_decision(out, doc, false);
        }

        if (part->parsed()) {
            TemporalGraph g = load_tg_file(fl.file);
            if (fl.d2 < 1) throw std::runtime_error("--d2 must be positive");
            SaturatedPartition sp = saturated_partition(g, fl.d2);
            json blocks = json::array();
            for (const SaturatedBlock& b : sp.blocks) {
                json edges = json::array();
                for (const TimeEdge& te : b.edges)
                    edges.push_back({{"u", g.label(te.e.u)}, {"v", g.label(te.e.v)}, {"t", te.t}});
                blocks.push_back({{"vertices", vertex_labels(g, b.tmpl.vertices)},
                                  {"interval", {b.tmpl.span.a, b.tmpl.span.b}},
                                  {"time_edges", edges}});
            }
            out << json{{"blocks", blocks}}.dump() << "\n";
            return 0;
        }

        if (comp->parsed()) {
            TemporalGraph g = load_tg_file(fl.file);
            Params p(fl.d1, fl.d2);
            CompletionResult res = complete(g, p);
            json doc{{"min_additions", res.min_additions},
                     {"modifications", mods_to_json(g, res.additions)}};
            if (fl.has_budget) return emit_decision(out, doc, res.decision(fl.budget));
            out << doc.dump() << "\n";
            return 0;
        }

        if (edit->parsed()) {
            TemporalGraph g = load_tg_file(fl.file);
            Params p(fl.d1, fl.d2);
            json doc;
            if (algo == "path-dp") {
                long long budget = fl.has_budget ? fl.budget
                                                 : std::numeric_limits<long long>::max();
                PathDpResult res = solve_path(g, p, budget);
                doc["min_cost"] = res.min_cost;
                doc["modifications"] = mods_to_json(g, res.witness);
                if (!fl.has_budget) {
                    doc["answer"] = "yes";
                    out << doc.dump() << "\n";
                    return 0;
                }
                return emit_decision(out, doc, res.decision);
            }
            if (!fl.has_budget) throw std::runtime_error("edit --algo " + algo +
                                                         " requires --budget");
            if (algo == "fpt") {
                std::optional<int> best = min_edit_distance(g, p, static_cast<int>(fl.budget));
                if (!best) return emit_decision(out, doc, false);
                FptResult res = fpt_solve(g, p, *best);
                doc["min_cost"] = *best;
                doc["modifications"] = mods_to_json(g, *res.witness);
                return emit_decision(out, doc, true);
            }
            EtcOracleResult res = etc_bruteforce(g, p, static_cast<int>(fl.budget),
                                                 parse_caps(fl.caps));
            if (!res.decision) return emit_decision(out, doc, false);
            doc["min_cost"] = res.witness->size();
            doc["modifications"] = mods_to_json(g, *res.witness);
            return emit_decision(out, doc, true);
        }

        if (red->parsed()) {
            TmInstance inst{load_tg_file(fl.file), tm_delta, tm_k};
            PathInstance::from_graph(inst.graph, Params(1, 5));  // validates path shape
            ReducedEtc r = reduce_tm_to_etc(inst);
            if (r.nonstandard_delta)
                err << "warning: construction is calibrated for delta = 2, got "
                    << tm_delta << "\n";
            std::string text = serialise_tg(r.graph);
            write_optional_file(fl.out_file, text);
            out << json{{"tgraph", text},
                        {"d1", r.params.delta1},
                        {"d2", r.params.delta2},
                        {"budget", r.budget}}
                       .dump()
                << "\n";
            return 0;
        }

        if (gen->parsed()) {
            TemporalGraph g;
            if (model == "random") {
                g = gen_random(gen_n, gen_T, edge_prob, time_prob, fl.seed);
            } else {
                if (fl.d1 == 0 || fl.d2 == 0)
                    throw std::runtime_error("gen --model planted requires --d1 and --d2");
                g = gen_planted(gen_n, gen_T, Params(fl.d1, fl.d2), fl.seed, perturb);
            }
            std::string text = serialise_tg(g);
            write_optional_file(fl.out_file, text);
            out << json{{"tgraph", text}}.dump() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace tcg::cli
