#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gontd/divisor.hpp"
#include "gontd/errors.hpp"
#include "gontd/generate.hpp"
#include "gontd/gonality.hpp"
#include "gontd/harmonic_morphism.hpp"
#include "gontd/io.hpp"
#include "gontd/search_strategy.hpp"
#include "gontd/tree_decomposition.hpp"

namespace gontd {
namespace {

struct Options {
    std::string input;
    std::string divisor;
    std::string q;
    std::int64_t max_degree = 0;
    std::string format;
    bool trace = false;
    std::uint64_t seed = 1;
    std::string out;
    std::string tree;
    std::string morphism;
    std::string original;
    std::string refinement;
    std::string td;
    std::size_t vertices = 8;
    std::size_t extra_edges = 4;
    std::int64_t max_multiplicity = 1;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

class Session {
public:
    Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    void info() {
        const auto doc = document();
        const auto& g = doc.graph;
        std::int64_t max_mult = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (const auto& nb : g.neighbors(v)) max_mult = std::max(max_mult, nb.multiplicity);
        std::ostringstream os;
        os << "vertices: " << g.vertex_count() << '\n'
           << "edges: " << g.edge_count() << '\n'
           << "max-multiplicity: " << max_mult << '\n'
           << "connected: " << (is_connected(g) ? "true" : "false") << '\n';
        if (doc.divisor) os << "divisor: " << io::format_divisor(g, *doc.divisor) << '\n';
        if (doc.tree) os << "tree-vertices: " << doc.tree->vertex_count() << '\n';
        emit(os.str());
    }

    void reduce() {
        const auto doc = document();
        const auto d = divisor(doc);
        const auto q = vertex(doc.graph, opt_.q, "--q");
        ReduceObserver observer;
        if (opt_.trace)
            observer = [&](const Divisor& current, const VertexSet& fired) {
                err_ << "fire " << format_set(doc.graph, fired) << " -> " << format_divisor_sum(doc.graph, current) << '\n';
            };
        const auto reduced = q_reduce(doc.graph, d, q, observer);
        emit(io::format_divisor(doc.graph, reduced.divisor) + '\n');
    }

    void dhar_set() {
        const auto doc = document();
        const auto d = divisor(doc);
        const auto q = vertex(doc.graph, opt_.q, "--q");
        if (!d.is_effective()) throw DomainError("dhar: divisor is not effective");
        if (!is_connected(doc.graph)) throw DomainError("dhar: graph is not connected");
        const auto fired = dhar(doc.graph, d, q);
        std::string line = "fireable:";
        for (VertexId v : fired) line += ' ' + doc.graph.name(v);
        emit(line + '\n');
    }

    void rank() {
        const auto doc = document();
        emit(std::string("positive-rank: ") + (has_positive_rank(doc.graph, divisor(doc)) ? "true" : "false") + '\n');
    }

    void gonality() {
        const auto doc = document();
        if (opt_.max_degree < 1) throw UsageError("gonality requires --max-degree >= 1");
        const auto result = dgon_bruteforce(doc.graph, opt_.max_degree);
        if (!result) {
            emit("dgon: >" + std::to_string(opt_.max_degree) + '\n');
            return;
        }
        emit("dgon: " + std::to_string(result->value) + "\nwitness: " + io::format_divisor(doc.graph, result->witness) + '\n');
    }

    void mss() {
        const auto doc = document();
        const auto t = strategy(doc);
        const auto fmt = format_or("structured-text");
        if (fmt == "dot")
            emit(mss_to_dot(doc.graph, t));
        else if (fmt == "structured-text")
            emit(io::mss_to_json(doc.graph, t).dump(2) + '\n');
        else
            throw UsageError("mss output has no pace format; use structured-text or dot");
    }

    void treedec() {
        const auto doc = document();
        const auto td = mss_to_treedec(doc.graph, strategy(doc));
        checked_emit(doc.graph, td);
    }

    void morphism_td() {
        auto doc = document();
        MultiGraph tree;
        FiniteMorphism f;
        if (!opt_.tree.empty()) {
            auto in = open_input(opt_.tree);
            tree = io::read_gr(in);
        } else if (doc.tree) {
            tree = *doc.tree;
        } else {
            throw UsageError("morphism-td needs --tree or a document with a tree");
        }
        if (!opt_.morphism.empty()) {
            auto in = open_input(opt_.morphism);
            f = io::read_morphism(in, doc.graph, tree);
        } else if (doc.morphism && opt_.tree.empty()) {
            f = *doc.morphism;
        } else {
            throw UsageError("morphism-td needs --morphism or a document with a morphism");
        }
        MorphismTdStats stats;
        TreeDecomposition td;
        const MultiGraph* target = &doc.graph;
        MultiGraph original;
        if (!opt_.original.empty() || !opt_.refinement.empty()) {
            if (opt_.original.empty() || opt_.refinement.empty())
                throw UsageError("--original and --refinement must be given together");
            original = io::load_graph(opt_.original);
            auto in = open_input(opt_.refinement);
            const auto map = io::read_refinement(in, original, doc.graph);
            td = stable_treedec(original, doc.graph, map, tree, f, &stats);
            target = &original;
        } else {
            td = stable_treedec(doc.graph, doc.graph, RefinementMap::identity(doc.graph.vertex_count()), tree, f, &stats);
        }
        if (opt_.trace) err_ << "bag-insertions: " << stats.bag_insertions << '\n';
        checked_emit(*target, td);
    }

    void verify_td() {
        const auto doc = document();
        if (opt_.td.empty()) throw UsageError("verify-td requires --td");
        auto in = open_input(opt_.td);
        const auto file = io::read_td(in);
        if (file.vertex_count != doc.graph.vertex_count())
            throw DomainError("verify-td: decomposition is for " + std::to_string(file.vertex_count) + " vertices, graph has " +
                              std::to_string(doc.graph.vertex_count()));
        const auto rep = validate_treedec(doc.graph, file.td);
        if (!rep) throw DomainError("verify-td: " + rep.status.violation);
        emit("valid: width " + std::to_string(rep.width) + '\n');
    }

    void random_graph() {
        if (opt_.vertices < 1) throw UsageError("--vertices must be positive");
        std::mt19937_64 rng(opt_.seed);
        const auto g = random_connected_multigraph(opt_.vertices, opt_.extra_edges, opt_.max_multiplicity, rng);
        const auto fmt = format_or("pace");
        std::ostringstream os;
        if (fmt == "pace")
            io::write_gr(os, g);
        else if (fmt == "structured-text")
            io::write_document(os, io::Document{g, std::nullopt, std::nullopt, std::nullopt});
        else
            throw UsageError("random-graph has no dot format");
        emit(os.str());
    }

private:
    io::Document document() const {
        if (opt_.input.empty()) throw UsageError("--input is required");
        return io::load_document(opt_.input);
    }

    Divisor divisor(const io::Document& doc) const {
        if (!opt_.divisor.empty()) return io::parse_divisor(doc.graph, opt_.divisor);
        if (doc.divisor) return *doc.divisor;
        throw UsageError("--divisor is required (the input document has none)");
    }

    static VertexId vertex(const MultiGraph& g, const std::string& name, const char* flag) {
        if (name.empty()) throw UsageError(std::string(flag) + " is required");
        if (auto v = g.find(name)) return *v;
        throw ParseError("unknown vertex '" + name + "' for " + flag);
    }

    std::string format_or(const char* fallback) const { return opt_.format.empty() ? fallback : opt_.format; }

    MssTree strategy(const io::Document& doc) const {
        const auto d = divisor(doc);
        BuildObserver observer;
        if (opt_.trace)
            observer.on_fire = [&](const FiringEvent& ev) {
                err_ << "node " << ev.node << " [" << format_position(doc.graph, ev.position) << "] "
                     << (ev.preparatory ? "prepare " : "fire ") << format_set(doc.graph, ev.fired) << ": "
                     << format_divisor_sum(doc.graph, ev.before) << " -> " << format_divisor_sum(doc.graph, ev.after) << '\n';
            };
        auto t = build_mss(doc.graph, d, observer);
        if (opt_.trace)
            for (std::size_t i = 0; i < t.size(); ++i) {
                const auto& node = t.nodes[i];
                err_ << "position " << i << ' ' << (node.step == Step::None ? "-" : to_string(node.step)) << ' '
                     << to_string(node.move) << ": "
                     << format_position(doc.graph, node.position) << '\n';
            }
        return t;
    }

    void checked_emit(const MultiGraph& g, const TreeDecomposition& td) {
        if (auto rep = validate_treedec(g, td); !rep) throw InternalError("produced decomposition is invalid: " + rep.status.violation);
        const auto fmt = format_or("pace");
        std::ostringstream os;
        if (fmt == "pace")
            io::write_td(os, td, g.vertex_count());
        else if (fmt == "dot")
            os << io::treedec_to_dot(g, td);
        else
            os << io::treedec_to_json(g, td).dump(2) << '\n';
        emit(os.str());
    }

    void emit(const std::string& text) {
        if (opt_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(opt_.out, std::ios::binary);
        if (!(file << text)) throw ResourceError("cannot write '" + opt_.out + "'", 0);
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Chip-firing, gonality and tree decompositions", "gontd"};
    app.require_subcommand(1);

    auto input = [&](CLI::App* sub) { sub->add_option("--input,-i", opt.input, "graph (.gr) or JSON document"); };
    auto divisor = [&](CLI::App* sub) {
        sub->add_option("--divisor,-d", opt.divisor, "divisor text, e.g. 'a:3 c:1'");
    };
    auto output = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format,-f", opt.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out,-o", opt.out, "write output to a file instead of stdout");
    };
    auto trace = [&](CLI::App* sub) { sub->add_flag("--trace", opt.trace, "log construction steps to stderr"); };

    auto* info = app.add_subcommand("info", "summarize a graph or document");
    input(info);
    output(info, {"structured-text"});

    auto* reduce = app.add_subcommand("reduce", "q-reduced form of a divisor");
    input(reduce);
    divisor(reduce);
    reduce->add_option("--q", opt.q, "vertex to reduce towards");
    output(reduce, {"structured-text"});
    trace(reduce);

    auto* dhar_cmd = app.add_subcommand("dhar", "maximal fireable set avoiding q (empty when q-reduced)");
    input(dhar_cmd);
    divisor(dhar_cmd);
    dhar_cmd->add_option("--q", opt.q, "burning source");
    output(dhar_cmd, {"structured-text"});

    auto* rank_cmd = app.add_subcommand("rank", "positive-rank test");
    input(rank_cmd);
    divisor(rank_cmd);
    output(rank_cmd, {"structured-text"});

    auto* gon = app.add_subcommand("gonality", "divisorial gonality by exhaustive search");
    input(gon);
    gon->add_option("--max-degree", opt.max_degree, "largest degree to try");
    output(gon, {"structured-text"});

    auto* mss_cmd = app.add_subcommand("mss", "monotone search strategy from a positive-rank divisor");
    input(mss_cmd);
    divisor(mss_cmd);
    output(mss_cmd, {"structured-text", "dot"});
    trace(mss_cmd);

    auto* td_cmd = app.add_subcommand("treedec", "tree decomposition of width <= deg(D)");
    input(td_cmd);
    divisor(td_cmd);
    output(td_cmd, {"pace", "structured-text", "dot"});
    trace(td_cmd);

    auto* mtd = app.add_subcommand("morphism-td", "tree decomposition from a harmonic morphism to a tree");
    input(mtd);
    mtd->add_option("--tree", opt.tree, "target tree (.gr)");
    mtd->add_option("--morphism", opt.morphism, "morphism text file");
    mtd->add_option("--original", opt.original, "original graph when --input is a refinement");
    mtd->add_option("--refinement", opt.refinement, "refinement map text file");
    output(mtd, {"pace", "structured-text", "dot"});
    trace(mtd);

    auto* verify = app.add_subcommand("verify-td", "validate a .td file against a graph");
    input(verify);
    verify->add_option("--td", opt.td, "decomposition (.td)");

    auto* rnd = app.add_subcommand("random-graph", "seeded random connected multigraph");
    rnd->add_option("--seed", opt.seed, "random seed");
    rnd->add_option("--vertices,-n", opt.vertices, "vertex count");
    rnd->add_option("--extra-edges", opt.extra_edges, "edges beyond a spanning tree");
    rnd->add_option("--max-multiplicity", opt.max_multiplicity, "parallel edge cap")->check(CLI::PositiveNumber);
    output(rnd, {"pace", "structured-text"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    Session session(opt, out, err);
    try {
        if (*info) session.info();
        else if (*reduce) session.reduce();
        else if (*dhar_cmd) session.dhar_set();
        else if (*rank_cmd) session.rank();
        else if (*gon) session.gonality();
        else if (*mss_cmd) session.mss();
        else if (*td_cmd) session.treedec();
        else if (*mtd) session.morphism_td();
        else if (*verify) session.verify_td();
        else if (*rnd) session.random_graph();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const ParseError& e) {
        err << "parse: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const DomainError& e) {
        err << "domain: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ResourceError& e) {
        err << "resource: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::overflow_error& e) {
        err << "overflow: " << e.what() << '\n';
        return kExitFailure;
    } catch (const InternalError& e) {
        err << "internal: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace gontd
