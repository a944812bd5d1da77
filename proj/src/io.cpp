#include "gontd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "gontd/errors.hpp"

namespace gontd::io {

using nlohmann::json;

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
    return out;
}

template <class Int>
Int parse_int(const std::string& tok, std::size_t line, const char* what) {
    Int v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line);
    return v;
}

VertexId one_based(const std::string& tok, std::size_t n, std::size_t line) {
    const auto v = parse_int<std::size_t>(tok, line, "vertex number");
    if (v < 1 || v > n) throw ParseError("vertex " + tok + " out of range 1.." + std::to_string(n), line);
    return static_cast<VertexId>(v - 1);
}

VertexId resolve(const MultiGraph& g, const std::string& name, std::size_t line, const char* which) {
    auto v = g.find(name);
    if (!v) throw ParseError(std::string("unknown ") + which + " vertex '" + name + "'", line);
    return *v;
}

// Calls f(tokens, line number) for every non-blank, non-comment line.
template <class F>
void for_each_line(std::istream& in, F&& f) {
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        f(tok, no);
    }
}

MultiGraph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                      std::vector<std::string> labels) {
    try {
        return MultiGraph(n, edges, std::move(labels));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

MultiGraph read_gr(std::istream& in) {
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for_each_line(in, [&](const std::vector<std::string>& tok, std::size_t no) {
        if (!header) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tw") throw ParseError("expected header 'p tw <n> <m>'", no);
            header.emplace(parse_int<std::size_t>(tok[2], no, "vertex count"),
                           parse_int<std::size_t>(tok[3], no, "edge count"));
            edges.reserve(header->second);
            return;
        }
        if (tok.size() != 2) throw ParseError("expected an edge line '<u> <v>'", no);
        const auto u = one_based(tok[0], header->first, no);
        const auto v = one_based(tok[1], header->first, no);
        if (u == v) throw ParseError("loop at vertex " + tok[0] + " (loops are not allowed)", no);
        edges.emplace_back(u, v);
    });
    if (!header) throw ParseError("missing 'p tw' header");
    if (edges.size() != header->second)
        throw ParseError("header declares " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
    return make_graph(header->first, edges, {});
}

void write_gr(std::ostream& out, const MultiGraph& g) {
    out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

TdFile read_td(std::istream& in) {
    struct Header {
        std::size_t bags, max_bag, n;
    };
    std::optional<Header> header;
    TdFile file;
    std::vector<char> seen;
    for_each_line(in, [&](const std::vector<std::string>& tok, std::size_t no) {
        if (!header) {
            if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td")
                throw ParseError("expected header 's td <bags> <max bag size> <n>'", no);
            header = Header{parse_int<std::size_t>(tok[2], no, "bag count"), parse_int<std::size_t>(tok[3], no, "bag size"),
                            parse_int<std::size_t>(tok[4], no, "vertex count")};
            file.vertex_count = header->n;
            file.td.bags.assign(header->bags, VertexSet(header->n));
            seen.assign(header->bags, 0);
            return;
        }
        if (tok[0] == "b") {
            if (tok.size() < 2) throw ParseError("bag line without an id", no);
            const auto id = parse_int<std::size_t>(tok[1], no, "bag id");
            if (id < 1 || id > header->bags) throw ParseError("bag id " + tok[1] + " out of range", no);
            if (seen[id - 1]) throw ParseError("bag " + tok[1] + " defined twice", no);
            seen[id - 1] = 1;
            for (std::size_t i = 2; i < tok.size(); ++i) file.td.bags[id - 1].insert(one_based(tok[i], header->n, no));
            return;
        }
        if (tok.size() != 2) throw ParseError("expected a tree edge '<i> <j>'", no);
        const auto a = parse_int<std::size_t>(tok[0], no, "bag id");
        const auto b = parse_int<std::size_t>(tok[1], no, "bag id");
        if (a < 1 || a > header->bags || b < 1 || b > header->bags) throw ParseError("tree edge refers to a missing bag", no);
        file.td.edges.emplace_back(a - 1, b - 1);
    });
    if (!header) throw ParseError("missing 's td' header");
    if (auto it = std::find(seen.begin(), seen.end(), 0); it != seen.end())
        throw ParseError("bag " + std::to_string(it - seen.begin() + 1) + " is never defined");
    const auto largest = static_cast<std::size_t>(file.td.width() + 1);
    if (largest != header->max_bag)
        throw ParseError("header declares max bag size " + std::to_string(header->max_bag) + " but the largest bag has " +
                         std::to_string(largest));
    return file;
}

void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t vertex_count) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertex_count << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (VertexId v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

Divisor parse_divisor(const MultiGraph& g, const std::string& text) {
    Divisor d(g.vertex_count());
    VertexSet given(g.vertex_count());
    for (const auto& tok : tokens(text)) {
        const auto colon = tok.rfind(':');
        if (colon == std::string::npos || colon == 0) throw ParseError("divisor token '" + tok + "' is not <vertex>:<chips>");
        const auto v = resolve(g, tok.substr(0, colon), 0, "divisor");
        if (given.contains(v)) throw ParseError("vertex '" + g.name(v) + "' appears twice in the divisor");
        given.insert(v);
        d[v] = parse_int<std::int64_t>(tok.substr(colon + 1), 0, "chip count");
    }
    return d;
}

std::string format_divisor(const MultiGraph& g, const Divisor& d) {
    std::string out;
    for (VertexId v = 0; v < d.size(); ++v) {
        if (d[v] == 0) continue;
        if (!out.empty()) out += ' ';
        out += g.name(v) + ':' + std::to_string(d[v]);
    }
    return out;
}

FiniteMorphism read_morphism(std::istream& in, const MultiGraph& g, const MultiGraph& t) {
    FiniteMorphism f;
    f.vertex_map.assign(g.vertex_count(), 0);
    f.edge_map.assign(g.edge_count(), 0);
    f.index.assign(g.edge_count(), 0);
    std::vector<char> have_v(g.vertex_count(), 0), have_e(g.edge_count(), 0);
    for_each_line(in, [&](const std::vector<std::string>& tok, std::size_t no) {
        if (tok[0] == "v" && tok.size() == 3) {
            const auto v = resolve(g, tok[1], no, "graph");
            if (have_v[v]++) throw ParseError("vertex " + tok[1] + " mapped twice", no);
            f.vertex_map[v] = resolve(t, tok[2], no, "tree");
        } else if (tok[0] == "e" && tok.size() == 4) {
            const auto e = parse_int<std::size_t>(tok[1], no, "edge id");
            const auto te = parse_int<std::size_t>(tok[2], no, "tree edge id");
            if (e < 1 || e > g.edge_count()) throw ParseError("edge id " + tok[1] + " out of range", no);
            if (te < 1 || te > t.edge_count()) throw ParseError("tree edge id " + tok[2] + " out of range", no);
            if (have_e[e - 1]++) throw ParseError("edge " + tok[1] + " mapped twice", no);
            f.edge_map[e - 1] = static_cast<EdgeId>(te - 1);
            f.index[e - 1] = parse_int<std::int64_t>(tok[3], no, "index");
        } else {
            throw ParseError("expected 'v <g-vertex> <t-vertex>' or 'e <edge> <tree-edge> <index>'", no);
        }
    });
    if (auto it = std::find(have_v.begin(), have_v.end(), 0); it != have_v.end())
        throw ParseError("vertex " + g.name(static_cast<VertexId>(it - have_v.begin())) + " is not mapped");
    if (auto it = std::find(have_e.begin(), have_e.end(), 0); it != have_e.end())
        throw ParseError("edge " + std::to_string(it - have_e.begin() + 1) + " is not mapped");
    return f;
}

void write_morphism(std::ostream& out, const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "v " << g.name(v) << ' ' << t.name(f.vertex_map[v]) << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << "e " << e + 1 << ' ' << f.edge_map[e] + 1 << ' ' << f.index[e] << '\n';
}

RefinementMap read_refinement(std::istream& in, const MultiGraph& original, const MultiGraph& refined) {
    RefinementMap map{original.vertex_count(), std::vector<RefinementRole>(refined.vertex_count())};
    std::vector<char> have(refined.vertex_count(), 0);
    for_each_line(in, [&](const std::vector<std::string>& tok, std::size_t no) {
        if (tok.size() < 3) throw ParseError("refinement line too short", no);
        const auto v = resolve(refined, tok[1], no, "refined");
        if (have[v]++) throw ParseError("refined vertex " + tok[1] + " classified twice", no);
        if (tok[0] == "o" && tok.size() == 3) {
            map.roles[v] = OriginalVertex{resolve(original, tok[2], no, "original")};
        } else if (tok[0] == "s" && tok.size() == 5) {
            const auto e = parse_int<std::size_t>(tok[2], no, "edge id");
            if (e < 1 || e > original.edge_count()) throw ParseError("edge id " + tok[2] + " out of range", no);
            const auto& edge = original.edge(static_cast<EdgeId>(e - 1));
            const auto from = resolve(original, tok[3], no, "original");
            if (from != edge.u && from != edge.v) throw ParseError("vertex " + tok[3] + " is not an endpoint of the edge", no);
            map.roles[v] = SubdivisionVertex{static_cast<EdgeId>(e - 1), from, from == edge.u ? edge.v : edge.u,
                                             parse_int<std::size_t>(tok[4], no, "position")};
        } else if (tok[0] == "l" && tok.size() == 3) {
            map.roles[v] = AddedLeaf{resolve(refined, tok[2], no, "refined")};
        } else {
            throw ParseError("expected an 'o', 's' or 'l' line", no);
        }
    });
    if (auto it = std::find(have.begin(), have.end(), 0); it != have.end())
        throw ParseError("refined vertex " + refined.name(static_cast<VertexId>(it - have.begin())) + " is not classified");
    return map;
}

void write_refinement(std::ostream& out, const MultiGraph& original, const MultiGraph& refined, const RefinementMap& map) {
    for (VertexId v = 0; v < map.roles.size(); ++v) {
        const auto& role = map.roles[v];
        if (const auto* o = std::get_if<OriginalVertex>(&role))
            out << "o " << refined.name(v) << ' ' << original.name(o->vertex) << '\n';
        else if (const auto* s = std::get_if<SubdivisionVertex>(&role))
            out << "s " << refined.name(v) << ' ' << s->edge + 1 << ' ' << original.name(s->from) << ' ' << s->position << '\n';
        else
            out << "l " << refined.name(v) << ' ' << refined.name(std::get<AddedLeaf>(role).anchor) << '\n';
    }
}

json graph_to_json(const MultiGraph& g) {
    json j;
    if (g.has_labels())
        j["vertices"] = g.labels();
    else
        j["vertices"] = g.vertex_count();
    json edges = json::array();
    for (const auto& e : g.edges()) {
        if (g.has_labels())
            edges.push_back({g.name(e.u), g.name(e.v)});
        else
            edges.push_back({e.u + 1, e.v + 1});
    }
    j["edges"] = std::move(edges);
    return j;
}

MultiGraph graph_from_json(const json& j) {
    try {
        std::size_t n = 0;
        std::vector<std::string> labels;
        const auto& vs = j.at("vertices");
        if (vs.is_number_unsigned()) {
            n = vs.get<std::size_t>();
        } else {
            labels = vs.get<std::vector<std::string>>();
            n = labels.size();
        }
        const MultiGraph names(n, {}, labels);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("graph edges must be two-element arrays");
            auto end = [&](const json& x) {
                return x.is_string() ? resolve(names, x.get<std::string>(), 0, "graph")
                                     : resolve(names, std::to_string(x.get<std::size_t>()), 0, "graph");
            };
            edges.emplace_back(end(e[0]), end(e[1]));
        }
        return make_graph(n, edges, std::move(labels));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph document: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Document read_document(std::istream& in) {
    try {
        const json j = json::parse(in);
        if (j.value("version", 0) != Document::kVersion)
            throw ParseError("unsupported document version (expected " + std::to_string(Document::kVersion) + ")");
        Document doc;
        doc.graph = graph_from_json(j.at("graph"));
        if (j.contains("divisor")) {
            const auto& d = j["divisor"];
            if (d.is_string()) {
                doc.divisor = parse_divisor(doc.graph, d.get<std::string>());
            } else {
                auto chips = d.get<std::vector<std::int64_t>>();
                if (chips.size() != doc.graph.vertex_count()) throw ParseError("dense divisor has the wrong length");
                doc.divisor = Divisor(std::move(chips));
            }
        }
        if (j.contains("tree")) doc.tree = graph_from_json(j["tree"]);
        if (j.contains("morphism")) {
            if (!doc.tree) throw ParseError("morphism given without a tree");
            const auto& m = j["morphism"];
            FiniteMorphism f;
            for (const auto& name : m.at("vertex_map").get<std::vector<std::string>>())
                f.vertex_map.push_back(resolve(*doc.tree, name, 0, "tree"));
            for (auto id : m.at("edge_map").get<std::vector<std::size_t>>()) {
                if (id < 1 || id > doc.tree->edge_count()) throw ParseError("tree edge id out of range");
                f.edge_map.push_back(static_cast<EdgeId>(id - 1));
            }
            f.index = m.at("index").get<std::vector<std::int64_t>>();
            doc.morphism = std::move(f);
        }
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

void write_document(std::ostream& out, const Document& doc) {
    json j;
    j["format"] = "gontd";
    j["version"] = Document::kVersion;
    j["graph"] = graph_to_json(doc.graph);
    if (doc.divisor) j["divisor"] = std::vector<std::int64_t>(doc.divisor->chips().begin(), doc.divisor->chips().end());
    if (doc.tree) j["tree"] = graph_to_json(*doc.tree);
    if (doc.morphism && doc.tree) {
        json m;
        std::vector<std::string> vm;
        for (auto w : doc.morphism->vertex_map) vm.push_back(doc.tree->name(w));
        std::vector<std::size_t> em;
        for (auto e : doc.morphism->edge_map) em.push_back(e + 1);
        m["vertex_map"] = vm;
        m["edge_map"] = em;
        m["index"] = doc.morphism->index;
        j["morphism"] = std::move(m);
    }
    out << j.dump(2) << '\n';
}

namespace {

json names_of(const MultiGraph& g, const VertexSet& s) {
    json a = json::array();
    for (VertexId v : s) a.push_back(g.name(v));
    return a;
}

VertexSet set_from(const MultiGraph& g, const json& a) {
    VertexSet s(g.vertex_count());
    for (const auto& name : a) s.insert(resolve(g, name.get<std::string>(), 0, "strategy"));
    return s;
}

Move move_from(const std::string& s) {
    if (s == "root") return Move::Root;
    if (s == "shrink") return Move::Shrink;
    if (s == "grow") return Move::Grow;
    if (s == "split") return Move::Split;
    throw ParseError("unknown move '" + s + "'");
}

Step step_from(const std::string& s) {
    if (s.empty()) return Step::None;
    if (s == "init") return Step::Init;
    if (s == "I") return Step::I;
    if (s == "II") return Step::II;
    if (s == "III") return Step::III;
    throw ParseError("unknown construction step '" + s + "'");
}

}  // namespace

json mss_to_json(const MultiGraph& g, const MssTree& t) {
    json nodes = json::array();
    for (const auto& node : t.nodes) {
        json n;
        n["x"] = names_of(g, node.position.x);
        n["r"] = names_of(g, node.position.r);
        n["parent"] = node.parent ? json(*node.parent) : json(nullptr);
        n["move"] = to_string(node.move);
        if (node.step != Step::None) n["step"] = to_string(node.step);
        nodes.push_back(std::move(n));
    }
    return {{"root", t.root}, {"nodes", std::move(nodes)}};
}

MssTree mss_from_json(const MultiGraph& g, const json& j) {
    try {
        MssTree t;
        t.root = j.value("root", std::size_t{0});
        const auto& nodes = j.at("nodes");
        t.nodes.resize(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            auto& node = t.nodes[i];
            node.position = {set_from(g, n.at("x")), set_from(g, n.at("r"))};
            if (!n.at("parent").is_null()) {
                const auto p = n["parent"].get<std::size_t>();
                if (p >= nodes.size()) throw ParseError("node " + std::to_string(i) + " has an out-of-range parent");
                node.parent = p;
            }
            node.move = move_from(n.value("move", std::string(node.parent ? "grow" : "root")));
            node.step = step_from(n.value("step", std::string()));
        }
        for (std::size_t i = 0; i < t.nodes.size(); ++i)
            if (t.nodes[i].parent) t.nodes[*t.nodes[i].parent].children.push_back(i);
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed strategy: ") + e.what());
    }
}

json treedec_to_json(const MultiGraph& g, const TreeDecomposition& td) {
    json bags = json::array();
    for (const auto& b : td.bags) bags.push_back(names_of(g, b));
    json edges = json::array();
    for (auto [a, b] : td.edges) edges.push_back({a + 1, b + 1});
    return {{"vertex_count", g.vertex_count()}, {"width", td.width()}, {"bags", std::move(bags)}, {"edges", std::move(edges)}};
}

std::string treedec_to_dot(const MultiGraph& g, const TreeDecomposition& td) {
    std::ostringstream os;
    os << "graph td {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) os << "  b" << i + 1 << " [label=\"" << format_set(g, td.bags[i]) << "\"];\n";
    for (auto [a, b] : td.edges) os << "  b" << a + 1 << " -- b" << b + 1 << ";\n";
    os << "}\n";
    return os.str();
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".gr") == 0) {
        Document doc;
        doc.graph = read_gr(in);
        return doc;
    }
    return read_document(in);
}

MultiGraph load_graph(const std::string& path) { return load_document(path).graph; }

}  // namespace gontd::io
