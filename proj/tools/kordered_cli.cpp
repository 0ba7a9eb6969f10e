#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "kordered/constructions.hpp"
#include "kordered/errors.hpp"
#include "kordered/experiments.hpp"
#include "kordered/extremal.hpp"
#include "kordered/graph6.hpp"
#include "kordered/ham_solver.hpp"
#include "kordered/regularity.hpp"

using namespace kord;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInfeasible = 3;

struct Common {
    std::string format = "json";
    std::uint64_t seed = 1;
    int threads = 0;
    std::size_t exact_cap = 24;
    bool timings = false;
    std::string output; // empty: stdout
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--format", c.format, "report format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", c.threads, "OpenMP threads (0 keeps the runtime default)");
    cmd->add_option("--exact-cap", c.exact_cap, "largest order handed to the exact solver");
    cmd->add_flag("--timings", c.timings, "include wall-clock columns (output is then not reproducible)");
    cmd->add_option("-o,--output", c.output, "write the report to a file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + c.output);
    }
    out << text;
}

// Flat object: header line of keys, one line of values.
std::string flat_csv(const json& obj) {
    std::string head;
    std::string body;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        head += (head.empty() ? "" : ",") + it.key();
        std::string cell;
        if (it->is_array()) {
            for (std::size_t i = 0; i < it->size(); ++i) {
                cell += (i ? " " : "") + (*it)[i].dump();
            }
        } else if (it->is_string()) {
            cell = it->get<std::string>();
        } else if (!it->is_null()) {
            cell = it->dump();
        }
        body += (it == obj.begin() ? "" : ",") + cell;
    }
    return head + "\n" + body + "\n";
}

void emit_object(const Common& c, const json& obj) { emit(c, c.format == "csv" ? flat_csv(obj) : obj.dump(2) + "\n"); }

void emit_report(const Common& c, const ExperimentReport& r) {
    emit(c, c.format == "csv" ? to_csv(r, c.timings) : to_json(r, c.timings).dump(2) + "\n");
}

Graph load_graph(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw std::runtime_error("cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return decode_graph6(text);
}

std::vector<Vertex> parse_vertices(const std::string& text) {
    std::vector<Vertex> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            continue;
        }
        std::size_t used = 0;
        const unsigned long v = std::stoul(token, &used);
        if (used != token.size()) {
            throw PreconditionError("bad vertex '" + token + "'");
        }
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

VertexSet to_set(std::size_t n, const std::vector<Vertex>& vs) { return VertexSet(n, std::span<const Vertex>(vs)); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-ordered Hamiltonicity experiments"};
    app.require_subcommand(1);

    Common common;

    auto* sharp = app.add_subcommand("sharpness", "check the sharpness construction for a range of n");
    std::size_t n_lo = 8;
    std::size_t n_hi = 16;
    sharp->add_option("--n-lo", n_lo, "smallest n");
    sharp->add_option("--n-hi", n_hi, "largest n");
    std::size_t sharp_n = 0;
    sharp->add_option("--n", sharp_n, "single n (overrides the range)");
    add_common(sharp, common);

    auto* scan = app.add_subcommand("scan", "k-ordered fraction of random graphs around the degree bound");
    ScanOptions scan_opts;
    scan->add_option("--n", scan_opts.n, "order");
    scan->add_option("--k", scan_opts.k, "sequence length");
    scan->add_option("--trials", scan_opts.trials, "graphs per minimum-degree target");
    scan->add_option("--deltas", scan_opts.deltas, "minimum-degree targets")->delimiter(',');
    add_common(scan, common);

    std::string graph_path;
    std::size_t k = 4;

    auto* ordered = app.add_subcommand("ordered", "decide k-orderedness of a graph6 graph");
    ordered->add_option("--graph", graph_path, "graph6 file (stdin when omitted)");
    ordered->add_option("--k", k, "sequence length");
    add_common(ordered, common);

    auto* scycle = app.add_subcommand("scycle", "find a Hamiltonian cycle through a vertex sequence");
    std::string seq_text;
    scycle->add_option("--graph", graph_path, "graph6 file (stdin when omitted)");
    scycle->add_option("--seq", seq_text, "comma-separated vertices v1,...,vk")->required();
    add_common(scycle, common);

    auto* extremal = app.add_subcommand("extremal", "run the extremal solvers on generated instances");
    DemoOptions demo;
    std::string kind = "sparse";
    std::size_t imbalance = 0;
    extremal->add_option("--kind", kind, "instance family")->check(CLI::IsMember({"sparse", "dense"}));
    extremal->add_option("--n", demo.n, "order");
    extremal->add_option("--k", demo.k, "sequence length");
    extremal->add_option("--trials", demo.instances, "number of instances");
    auto* imb_opt = extremal->add_option("--imbalance", imbalance, "|A| - |B| for dense instances");
    add_common(extremal, common);

    auto* regular = app.add_subcommand("regular", "check epsilon-regularity of a vertex pair");
    std::string a_text;
    std::string b_text;
    std::string eps_text = "1/10";
    std::string delta_text;
    std::string mode = "exact";
    RegularityOptions reg_opts;
    regular->add_option("--graph", graph_path, "graph6 file (stdin when omitted)");
    regular->add_option("--a", a_text, "comma-separated side A")->required();
    regular->add_option("--b", b_text, "comma-separated side B")->required();
    regular->add_option("--eps", eps_text, "epsilon, as p/q or decimal");
    regular->add_option("--delta", delta_text, "also require super-regularity with this degree fraction");
    regular->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    regular->add_option("--samples", reg_opts.samples, "sampled-mode draws");
    add_common(regular, common);

    auto* gen = app.add_subcommand("gen", "write a generated graph as graph6");
    std::string type = "sharpness";
    std::size_t gen_n = 10;
    std::size_t gen_k = 4;
    std::string p_text = "1/2";
    std::size_t gen_delta = 0;
    std::size_t gen_imbalance = 0;
    std::string sidecar;
    gen->add_option("--type", type, "graph family")
        ->check(CLI::IsMember({"sharpness", "sparse", "dense", "random", "mindeg"}));
    gen->add_option("--n", gen_n, "order");
    gen->add_option("--k", gen_k, "sequence length");
    gen->add_option("--p", p_text, "edge probability for random graphs");
    gen->add_option("--delta", gen_delta, "minimum degree for mindeg graphs");
    gen->add_option("--imbalance", gen_imbalance, "|A| - |B| for dense instances");
    gen->add_option("--sidecar", sidecar, "JSON file describing the instance");
    add_common(gen, common);

    CLI11_PARSE(app, argc, argv);

    if (common.threads > 0) {
        omp_set_num_threads(common.threads);
    }

    try {
        if (sharp->parsed()) {
            if (sharp_n) {
                n_lo = n_hi = sharp_n;
            }
            const auto r = sharpness_sweep(n_lo, n_hi, common.exact_cap);
            emit_report(common, r);
            return r.violation ? kExitViolation : kExitOk;
        }
        if (scan->parsed()) {
            scan_opts.seed = common.seed;
            scan_opts.exact_cap = common.exact_cap;
            emit_report(common, threshold_scan(scan_opts));
            return kExitOk;
        }
        if (extremal->parsed()) {
            demo.kind = kind == "dense" ? ExtremalKind::Dense : ExtremalKind::Sparse;
            demo.seed = common.seed;
            demo.timings = common.timings;
            if (imb_opt->count()) {
                demo.imbalance = imbalance;
            }
            const auto r = extremal_demo(demo);
            emit_report(common, r);
            return r.violation ? kExitViolation : kExitOk;
        }
        if (ordered->parsed()) {
            const Graph g = load_graph(graph_path);
            json out{{"n", g.order()}, {"k", k}};
            try {
                const auto r = is_k_ordered(g, k, KOrderedOptions{common.exact_cap, true, 512});
                out["hamiltonian"] = true;
                out["ordered"] = r.ordered;
                out["witness"] = r.witness ? json(r.witness->vertices) : json();
                out["sequences_checked"] = r.sequences_checked;
            } catch (const NotHamiltonianError&) {
                out["hamiltonian"] = false;
                out["ordered"] = false;
                out["witness"] = json();
                out["sequences_checked"] = 0;
            }
            emit_object(common, out);
            return kExitOk;
        }
        if (scycle->parsed()) {
            const Graph g = load_graph(graph_path);
            const OrderedSequence s{parse_vertices(seq_text)};
            const auto c = find_s_cycle(g, s, ExactOptions{common.exact_cap, DpKernel::Auto});
            json out{{"n", g.order()}, {"sequence", s.vertices}, {"found", c.has_value()},
                     {"cycle", c ? json(c->order) : json()}};
            emit_object(common, out);
            return kExitOk;
        }
        if (regular->parsed()) {
            const Graph g = load_graph(graph_path);
            const VertexSet a = to_set(g.order(), parse_vertices(a_text));
            const VertexSet b = to_set(g.order(), parse_vertices(b_text));
            const Rational eps = Rational::parse(eps_text);
            reg_opts.mode = mode == "exact" ? RegularityMode::Exact : RegularityMode::Sampled;
            reg_opts.seed = common.seed;
            const RegularityVerdict v = delta_text.empty()
                                            ? is_epsilon_regular(g, a, b, eps, reg_opts)
                                            : is_super_regular(g, a, b, eps, Rational::parse(delta_text), reg_opts);
            json out{{"regular", v.regular},
                     {"mode", std::string(to_string(v.mode))},
                     {"downgraded", v.downgraded},
                     {"x", v.witness ? json(v.witness->x) : json()},
                     {"y", v.witness ? json(v.witness->y) : json()},
                     {"deviation", v.witness ? json(v.witness->deviation.to_string()) : json()},
                     {"failing_vertex", v.failing_vertex ? json(*v.failing_vertex) : json()}};
            emit_object(common, out);
            return kExitOk;
        }
        if (gen->parsed()) {
            Graph g = Graph::empty(0);
            json side{{"type", type}, {"n", gen_n}, {"seed", common.seed}};
            if (type == "sharpness") {
                const auto sg = build_sharpness_graph(gen_n, gen_k);
                g = sg.graph;
                side["k"] = gen_k;
                side["u"] = sg.u.to_vector();
                side["w"] = sg.w.to_vector();
                side["witness"] = sg.witness.vertices;
            } else if (type == "sparse" || type == "dense") {
                const auto inst = type == "dense"
                                      ? build_dense_bipartite_instance(gen_n, gen_k, gen_imbalance, common.seed)
                                      : build_sparse_cut_instance(
                                            gen_n, gen_k, ordered_degree_bound(gen_n, gen_k) - (gen_n + 1) / 2 + 1,
                                            common.seed);
                g = inst.graph;
                side["k"] = gen_k;
                side["a"] = inst.a.to_vector();
                side["b"] = inst.b.to_vector();
                side["min_degree"] = inst.min_degree;
                side["cross_density"] = inst.cross_density.to_string();
            } else if (type == "random") {
                const Rational p = Rational::parse(p_text);
                if (p < Rational(0) || p > Rational(1)) {
                    throw PreconditionError("--p must lie in [0, 1]");
                }
                g = random_graph(gen_n, static_cast<std::uint64_t>(p.num()), static_cast<std::uint64_t>(p.den()),
                                 common.seed);
                side["p"] = p.to_string();
            } else {
                g = random_graph_min_degree(gen_n, gen_delta, common.seed);
                side["target_min_degree"] = gen_delta;
            }
            side["graph6"] = encode_graph6(g);
            emit(common, encode_graph6(g) + "\n");
            if (!sidecar.empty()) {
                std::ofstream out(sidecar, std::ios::binary);
                if (!out) {
                    throw std::runtime_error("cannot open " + sidecar);
                }
                out << side.dump(2) << '\n';
            }
            return kExitOk;
        }
    } catch (const PreconditionError& e) {
        std::cerr << "infeasible parameters: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ConstructionError& e) {
        std::cerr << "infeasible parameters: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const DomainError& e) {
        std::cerr << "infeasible parameters: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}
